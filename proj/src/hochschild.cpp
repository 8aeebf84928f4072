#include "pcl/hochschild.hpp"

#include <sstream>
#include <stdexcept>

namespace pcl {

HCochain HCochain::zero(int arity) {
    return HCochain(arity, [](const Tensor&) { return DiffPoly(); });
}

HCochain HCochain::constant(DiffPoly m) {
    return HCochain(0, [m](const Tensor&) { return m; });
}

DiffPoly HCochain::operator()(const Tensor& v) const {
    if (!rule_) throw std::logic_error("empty cochain rule");
    if ((int)v.size() != arity_) throw std::invalid_argument("arity mismatch");
    return rule_(v);
}

HCochain operator+(const HCochain& a, const HCochain& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    return HCochain(a.arity(), [a, b](const Tensor& v) { return a(v) + b(v); });
}

HCochain operator-(const HCochain& a, const HCochain& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    return HCochain(a.arity(), [a, b](const Tensor& v) { return a(v) - b(v); });
}

HCochain operator*(const Rat& c, const HCochain& a) {
    return HCochain(a.arity(), [c, a](const Tensor& v) { return a(v) * c; });
}

HCochain hochschild_d(const HCochain& F) {
    int n = F.arity();
    return HCochain(n + 1, [F, n](const Tensor& v) {
        DiffPoly out = v[0] * F(Tensor(v.begin() + 1, v.end()));
        int sgn = -1;
        for (int i = 1; i <= n; ++i) {
            Tensor w(v.begin(), v.begin() + i - 1);
            w.push_back(v[i - 1] * v[i]);
            w.insert(w.end(), v.begin() + i + 1, v.end());
            out += F(w) * Rat(sgn);
            sgn = -sgn;
        }
        out += F(Tensor(v.begin(), v.end() - 1)) * v[n] * Rat(sgn);
        return out;
    });
}

HCochain harrison_L(int k, const HCochain& F) {
    int n = F.arity();
    if (k < 2 || k > n) throw std::invalid_argument("k out of range");
    return HCochain(n, [k, n, F](const Tensor& v) {
        DiffPoly out;
        for (auto& mp : enumerate_monotone(n, k)) {
            Tensor w(n);
            for (int i = 1; i <= n; ++i) w[i - 1] = v[mp.perm(i) - 1];
            out += F(w) * Rat(mp.drop_sign());
        }
        return out;
    });
}

bool hcochains_agree(const HCochain& a, const HCochain& b, const std::vector<Tensor>& samples) {
    if (a.arity() != b.arity()) return false;
    for (auto& v : samples)
        if (a(v) != b(v)) return false;
    return true;
}

bool is_dlinear(const HCochain& F, const std::vector<Tensor>& samples) {
    for (auto& v : samples) {
        DiffPoly lhs;
        for (size_t i = 0; i < v.size(); ++i) {
            Tensor w = v;
            w[i] = derive(w[i]);
            lhs += F(w);
        }
        if (lhs != derive(F(v))) return false;
    }
    return true;
}

HarrisonReport is_harrison(const HCochain& F, const std::vector<Tensor>& samples) {
    HarrisonReport rep;
    rep.dlinear = is_dlinear(F, samples);
    for (int k = 2; k <= F.arity(); ++k)
        rep.relations.emplace_back(k, hcochains_agree(harrison_L(k, F), F, samples));
    return rep;
}

bool HarrisonReport::pass() const {
    if (!dlinear) return false;
    for (auto& [k, ok] : relations)
        if (!ok) return false;
    return true;
}

std::string HarrisonReport::str() const {
    std::ostringstream os;
    os << "d-linear: " << (dlinear ? "pass" : "FAIL") << "\n";
    for (auto& [k, ok] : relations)
        os << "L_" << k << " F = F: " << (ok ? "pass" : "FAIL") << "\n";
    return os.str();
}

} // namespace pcl
