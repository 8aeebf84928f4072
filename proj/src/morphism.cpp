#include "pcl/morphism.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcl {

HCochain phi(const WElement& Y) {
    int n = Y.cochain.arity();
    ClCochain Z = Y.cochain;
    return HCochain(n, [Z, n](const Tensor& v) {
        return as_diffpoly(evaluate(Z, standard_line(n), v));
    });
}

// the lifting formula, without the Harrison precondition
static WElement lift_raw(const HCochain& F) {
    int n = F.arity();
    return WElement{ClCochain(n, [F, n](const LineGraph& line, const Tensor& v) {
        if (line.components.size() != 1) return LamPoly(n);
        auto& seq = line.components[0];
        Tensor w(n);
        for (int i = 0; i < n; ++i) w[i] = v[seq[i] - 1];
        LamPoly r = lift(n, F(w));
        if (Perm(seq).sign() < 0) r *= Rat(-1);
        return r;
    })};
}

WElement lift_top(const HCochain& F, const std::vector<Tensor>& samples) {
    if (!is_harrison(F, samples).pass())
        throw std::invalid_argument("cochain is not Harrison on the given samples");
    return lift_raw(F);
}

bool check_symmetry_trace(const HCochain& F, const std::vector<Tensor>& samples) {
    int n = F.arity();
    WElement Y = lift_raw(F);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        Perm sigma(p);
        ClCochain acted = act_cochain(Y.cochain, sigma);
        for (auto& line : enumerate_lines(n)) {
            if (line.components.size() != 1) continue;
            Perm tau(line.components[0]);
            int k = tau.inverse()(sigma.inverse()(1));
            HCochain LkF = (k == 1) ? F : harrison_L(k, F);
            for (auto& v : samples) {
                Tensor w(n);
                for (int i = 1; i <= n; ++i) w[i - 1] = v[tau(i) - 1];
                DiffPoly rhs = LkF(w);
                if (tau.sign() < 0) rhs *= Rat(-1);
                if (as_diffpoly(evaluate(acted, line.to_digraph(n), v)) != rhs) return false;
            }
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return true;
}

ChainMapReport check_chain_map(const WElement& X, const WElement& Y,
                               const std::vector<Tensor>& samples) {
    ChainMapReport rep;
    int n = Y.cochain.arity();
    WElement br = bracket(X, Y);
    HCochain rhs = hochschild_d(phi(Y));
    Rat sgn = (n & 1) ? Rat(1) : Rat(-1); // (-1)^(n+1)
    for (auto& v : samples) {
        DiffPoly left = as_diffpoly(evaluate(br.cochain, standard_line(n + 1), v));
        if (left != rhs(v) * sgn) {
            rep.holds = false;
            rep.counterexample = "tensor (";
            for (size_t i = 0; i < v.size(); ++i)
                rep.counterexample += (i ? ", " : "") + v[i].str();
            rep.counterexample += ")";
            return rep;
        }
    }
    return rep;
}

std::string ChainMapReport::str() const {
    std::string s = holds ? "chain map identity: pass\n" : "chain map identity: FAIL\n";
    if (!counterexample.empty()) s += "first failure at " + counterexample + "\n";
    return s;
}

DiagramReport check_diagram(const WElement& X, const HCochain& F,
                            const std::vector<Tensor>& nsamples,
                            const std::vector<Tensor>& n1samples) {
    DiagramReport rep;
    int n = F.arity();
    rep.harrison = is_harrison(F, nsamples).pass();
    if (!rep.harrison) return rep;
    WElement Y = lift_top(F, nsamples);
    rep.round_trip = hcochains_agree(phi(Y), F, nsamples);
    rep.top_bijective = cochains_agree(lift_top(phi(Y), nsamples).cochain, Y.cochain, nsamples);
    rep.graded = true;
    for (int r = 0; r <= n - 1 && rep.graded; ++r) {
        if (r == n - 1) continue;
        for (auto& line : enumerate_lines(n))
            for (auto& v : nsamples)
                if (!grade_component(Y.cochain, r).on_line(line, v).is_zero()) rep.graded = false;
    }
    rep.chain_map = check_chain_map(X, Y, n1samples).pass();
    return rep;
}

std::string DiagramReport::str() const {
    auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
    std::ostringstream os;
    os << "Harrison condition:   " << mark(harrison) << "\n"
       << "lift round trip:      " << mark(round_trip) << "\n"
       << "top-grade bijection:  " << mark(top_bijective) << "\n"
       << "grade support:        " << mark(graded) << "\n"
       << "chain map:            " << mark(chain_map) << "\n";
    return os.str();
}

} // namespace pcl
