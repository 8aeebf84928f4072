#include "pcl/pva.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace pcl {

static PVAStructure one_gen(std::string name, LamPoly entry) {
    return PVAStructure{std::move(name), 1, {{std::move(entry)}}};
}

PVAStructure pva_gfz() { return one_gen("gfz", LamPoly::lam(1, 0)); }

PVAStructure pva_affine() {
    return one_gen("affine", LamPoly::lam(1, 0) + LamPoly::constant(1, DiffPoly::one()));
}

PVAStructure pva_zero() { return one_gen("zero", LamPoly(1)); }

PVAStructure pva_virasoro() {
    DiffPoly u = DiffPoly::u(0, 0);
    return one_gen("virasoro",
                   LamPoly::constant(1, DiffPoly::u(0, 1)) + LamPoly::lam(1, 0, 1, u * Rat(2)));
}

PVAStructure pva_broken_skew() { return one_gen("broken-skew", LamPoly::lam(1, 0, 2)); }

PVAStructure pva_broken_jacobi() {
    // [u l u] = l u' + u''/2: skewsymmetric but not Jacobi
    return one_gen("broken-jacobi", LamPoly::lam(1, 0, 1, DiffPoly::u(0, 1)) +
                                        LamPoly::constant(1, DiffPoly::u(0, 2) * (Rat(1) / 2)));
}

PVAStructure pva_by_name(const std::string& name) {
    if (name == "gfz") return pva_gfz();
    if (name == "affine") return pva_affine();
    if (name == "zero") return pva_zero();
    if (name == "virasoro") return pva_virasoro();
    if (name == "broken-skew") return pva_broken_skew();
    if (name == "broken-jacobi") return pva_broken_jacobi();
    throw std::invalid_argument("unknown structure: " + name);
}

LamPoly lambda_bracket(const PVAStructure& P, const DiffPoly& a, const DiffPoly& b) {
    LamPoly out(1);
    for (int i = 0; i < P.ngens; ++i) {
        // sum_m (-l-d)^m da/du_i^(m)
        LamPoly inner(1);
        for (int m = 0; m <= a.max_order(); ++m) {
            DiffPoly pa = partial(a, {i, m});
            if (!pa.is_zero()) inner += op_pow({Rat(-1)}, Rat(-1), m, lift(1, pa));
        }
        if (inner.is_zero()) continue;
        for (int j = 0; j < P.ngens; ++j) {
            // the table entry as an operator at l+d, applied to inner
            LamPoly mid(1);
            for (auto& [k, c] : P.table[i][j].terms())
                mid += op_pow({Rat(1)}, Rat(1), k[0], inner) * c;
            if (mid.is_zero()) continue;
            for (int n = 0; n <= b.max_order(); ++n) {
                DiffPoly pb = partial(b, {j, n});
                if (!pb.is_zero()) out += op_pow({Rat(1)}, Rat(1), n, mid) * pb;
            }
        }
    }
    return out;
}

std::vector<DiffPoly> sample_monomials(int ngens, int max_degree, int max_order) {
    std::vector<DiffPoly> vars;
    for (int a = 0; a < ngens; ++a)
        for (int m = 0; m <= max_order; ++m) vars.push_back(DiffPoly::u(a, m));
    std::vector<DiffPoly> out;
    std::function<void(size_t, int, const DiffPoly&)> rec = [&](size_t start, int deg,
                                                                const DiffPoly& m) {
        if (deg > 0) out.push_back(m);
        if (deg == max_degree) return;
        for (size_t i = start; i < vars.size(); ++i) rec(i, deg + 1, m * vars[i]);
    };
    rec(0, 0, DiffPoly::one());
    return out;
}

// [b_{-l-d} a], with d acting on the whole coefficient from the left
static LamPoly bracket_at_minus(const PVAStructure& P, const DiffPoly& b, const DiffPoly& a) {
    LamPoly B = lambda_bracket(P, b, a);
    LamPoly out(1);
    for (auto& [k, c] : B.terms()) out += op_pow({Rat(-1)}, Rat(-1), k[0], lift(1, c));
    return out;
}

// [x_{l_vx} [y_{l_vy} z]] as a polynomial in two independent variables
static LamPoly nested(const PVAStructure& P, const DiffPoly& x, int vx, const DiffPoly& y, int vy,
                      const DiffPoly& z) {
    LamPoly inner = lambda_bracket(P, y, z);
    LamPoly out(2);
    for (auto& [k, c] : inner.terms())
        out += map_vars(lambda_bracket(P, x, c), 2, {vx}) * LamPoly::lam(2, vy, k[0]);
    return out;
}

// [[a_l b]_{l+mu} c]: scalars in l pull out of the left slot, the outer
// variable is substituted by l + mu
static LamPoly outer_nested(const PVAStructure& P, const DiffPoly& a, const DiffPoly& b,
                            const DiffPoly& c) {
    LamPoly ab = lambda_bracket(P, a, b);
    LamPoly sum = LamPoly::lam(2, 0) + LamPoly::lam(2, 1);
    LamPoly out(2);
    for (auto& [k, coef] : ab.terms()) {
        LamPoly oc = lambda_bracket(P, coef, c);
        LamPoly sub(2);
        for (auto& [k2, c2] : oc.terms()) {
            LamPoly t = LamPoly::constant(2, c2);
            for (int e = 0; e < k2[0]; ++e) t *= sum;
            sub += t;
        }
        out += sub * LamPoly::lam(2, 0, k[0]);
    }
    return out;
}

AxiomReport check_axioms(const PVAStructure& P, const std::vector<DiffPoly>& pool) {
    AxiomReport rep;
    auto record = [&rep](bool& flag, const std::string& what) {
        flag = false;
        if (rep.counterexample.empty()) rep.counterexample = what;
    };
    for (auto& a : pool)
        for (auto& b : pool) {
            std::string ab = "a = " + a.str() + ", b = " + b.str();
            LamPoly br = lambda_bracket(P, a, b);
            if (rep.sesquilinear) {
                bool left = lambda_bracket(P, derive(a), b) == -(LamPoly::lam(1, 0) * br);
                bool right = lambda_bracket(P, a, derive(b)) == op_pow({Rat(1)}, Rat(1), 1, br);
                if (!left || !right) record(rep.sesquilinear, "sesquilinearity at " + ab);
            }
            if (rep.skew && br != -bracket_at_minus(P, b, a))
                record(rep.skew, "skewsymmetry at " + ab);
            for (auto& c : pool) {
                std::string abc = "a = " + a.str() + ", b = " + b.str() + ", c = " + c.str();
                if (rep.leibniz &&
                    lambda_bracket(P, a, b * c) !=
                        lambda_bracket(P, a, b) * c + lambda_bracket(P, a, c) * b)
                    record(rep.leibniz, "left Leibniz at " + abc);
                if (rep.jacobi &&
                    nested(P, a, 0, b, 1, c) - nested(P, b, 1, a, 0, c) != outer_nested(P, a, b, c))
                    record(rep.jacobi, "Jacobi at " + abc);
            }
        }
    return rep;
}

std::string AxiomReport::str() const {
    auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
    std::ostringstream os;
    os << "sesquilinearity: " << mark(sesquilinear) << "\n"
       << "skewsymmetry:    " << mark(skew) << "\n"
       << "left Leibniz:    " << mark(leibniz) << "\n"
       << "Jacobi:          " << mark(jacobi) << "\n";
    if (!counterexample.empty()) os << "first failure: " << counterexample << "\n";
    return os.str();
}

WElement build_master(const PVAStructure& P) {
    return WElement{ClCochain(2, [P](const LineGraph& line, const Tensor& v) {
        if (line.components.size() == 1) return lift(2, v[0] * v[1]);
        return map_vars(lambda_bracket(P, v[0], v[1]), 2, {0});
    })};
}

MasterSquareReport check_master_square(const WElement& X, const std::vector<Tensor>& samples) {
    MasterSquareReport rep;
    std::vector<Tensor> pairs;
    for (auto& v : samples) pairs.push_back({v[0], v[1]});
    rep.symmetric = is_symmetric(X.cochain, pairs);
    ClCochain sq = box(X, X);
    for (auto& line : enumerate_lines(3)) {
        bool ok = true;
        for (auto& v : samples)
            if (!normalize(sq.on_line(line, v)).is_zero()) {
                ok = false;
                break;
            }
        rep.graphs.emplace_back(line.str(), ok);
    }
    return rep;
}

bool MasterSquareReport::pass() const {
    if (!symmetric) return false;
    for (auto& [name, ok] : graphs)
        if (!ok) return false;
    return true;
}

std::string MasterSquareReport::str() const {
    std::ostringstream os;
    os << "symmetric: " << (symmetric ? "pass" : "FAIL") << "\n";
    for (auto& [name, ok] : graphs)
        os << "X box X on " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    return os.str();
}

} // namespace pcl
