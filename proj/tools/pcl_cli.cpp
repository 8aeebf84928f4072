#include "CLI11.hpp"
#include "pcl/expr.hpp"
#include "pcl/verify.hpp"

#include <fstream>
#include <iostream>

using namespace pcl;

static std::string oneline(const Perm& p) {
    std::string s = "[";
    for (int i = 1; i <= p.size(); ++i) s += (i > 1 ? " " : "") + std::to_string(p(i));
    return s + "]";
}

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the classical operad, lambda-bracket "
                 "structures, and the differential Harrison complex"};
    app.require_subcommand(1);

    int n = 0, k = 0, m = 0;
    auto* mono = app.add_subcommand("monotone", "list monotone permutations starting at k");
    mono->add_option("n", n, "number of letters")->required();
    mono->add_option("k", k, "start value")->required();

    auto* shuf = app.add_subcommand("shuffles", "list (m,n)-shuffles");
    shuf->add_option("m", m, "first block size")->required();
    shuf->add_option("n", n, "second block size")->required();

    std::string literal;
    auto* red = app.add_subcommand("reduce", "reduce a graph vector to the line basis");
    red->add_option("vector", literal, "graph vector literal")->required();

    std::string graph;
    std::vector<int> sizes;
    auto* coc = app.add_subcommand("cocompose", "split a graph into blocks and a collapsed graph");
    coc->add_option("graph", graph, "digraph literal")->required();
    coc->add_option("sizes", sizes, "block sizes")->required();

    RunConfig cfg;
    std::string lhs, rhs;
    auto* bra = app.add_subcommand("bracket", "evaluate a lambda-bracket");
    bra->add_option("a", lhs, "left entry")->required();
    bra->add_option("b", rhs, "right entry")->required();
    bra->add_option("--structure", cfg.structure, "structure name or descriptor file");

    std::string suite, out_path;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name")->required();
    ver->add_option("--structure", cfg.structure, "structure name or descriptor file");
    ver->add_option("--seed", cfg.seed, "sampling seed");
    ver->add_option("--max-degree", cfg.max_degree, "sample monomial degree bound");
    ver->add_option("--max-order", cfg.max_order, "sample derivative order bound");
    ver->add_option("--max-arity", cfg.max_arity, "arity bound");
    ver->add_option("--out", out_path, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*mono) {
            for (auto& p : enumerate_monotone(n, k)) {
                std::cout << oneline(p.perm) << " drops={";
                for (size_t i = 0; i < p.drops.size(); ++i)
                    std::cout << (i ? "," : "") << p.drops[i];
                std::cout << "} dr=" << p.dr() << " sign=" << (p.drop_sign() > 0 ? "+1" : "-1")
                          << "\n";
            }
        } else if (*shuf) {
            for (auto& s : enumerate_shuffles(m, n)) std::cout << oneline(s) << "\n";
        } else if (*red) {
            GraphVector v = reduce_to_lines(parse_graphvector(literal));
            if (v.is_zero()) std::cout << "0\n";
            for (auto& [g, c] : v.terms()) std::cout << c << " x [" << g.str() << "]\n";
        } else if (*coc) {
            auto co = cocompose(parse_digraph(graph), sizes);
            std::cout << "collapsed: " << co.collapsed.str() << "\n";
            for (size_t i = 0; i < co.blocks.size(); ++i)
                std::cout << "block " << i + 1 << ": " << co.blocks[i].str() << "\n";
        } else if (*bra) {
            PVAStructure P = resolve_structure(cfg.structure);
            LamPoly b = lambda_bracket(P, parse_diffpoly(lhs, P.ngens),
                                       parse_diffpoly(rhs, P.ngens));
            std::cout << b.str({"l"}) << "\n";
        } else if (*ver) {
            SuiteResult res = run_suite(suite, cfg);
            std::cout << res.report;
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
                out << res.report;
            }
            return res.pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
