#include "pcl/lampoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace pcl {

LamPoly LamPoly::constant(int nvars, DiffPoly c) {
    LamPoly p(nvars);
    p.add_term(Key(nvars, 0), c);
    return p;
}

LamPoly LamPoly::lam(int nvars, int i, int pow, DiffPoly c) {
    assert(0 <= i && i < nvars);
    Key k(nvars, 0);
    k[i] = pow;
    return term(std::move(k), std::move(c));
}

LamPoly LamPoly::term(Key k, DiffPoly c) {
    LamPoly p((int)k.size());
    p.add_term(k, c);
    return p;
}

int LamPoly::degree_in(int i) const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k[i]);
    return d;
}

int LamPoly::total_degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) {
        int t = 0;
        for (int e : k) t += e;
        d = std::max(d, t);
    }
    return d;
}

void LamPoly::add_term(const Key& k, const DiffPoly& c) {
    assert((int)k.size() == nvars_);
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LamPoly& LamPoly::operator+=(const LamPoly& o) {
    assert(nvars_ == o.nvars_);
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LamPoly& LamPoly::operator-=(const LamPoly& o) {
    assert(nvars_ == o.nvars_);
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LamPoly& LamPoly::operator*=(const LamPoly& o) {
    assert(nvars_ == o.nvars_);
    LamPoly r(nvars_);
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_) {
            Key k(nvars_);
            for (int i = 0; i < nvars_; ++i) k[i] = ka[i] + kb[i];
            r.add_term(k, ca * cb);
        }
    *this = std::move(r);
    return *this;
}

LamPoly& LamPoly::operator*=(const DiffPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<Key, DiffPoly> r;
    for (auto& [k, coef] : terms_) {
        DiffPoly p = coef * c;
        if (!p.is_zero()) r[k] = std::move(p);
    }
    terms_ = std::move(r);
    return *this;
}

LamPoly& LamPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [k, coef] : terms_) coef *= c;
    }
    return *this;
}

std::string LamPoly::str(const std::vector<std::string>& lam_names,
                         const std::vector<std::string>& gen_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str(gen_names);
        bool multi = c.terms().size() > 1;
        if (multi) os << "(";
        os << cs;
        if (multi) os << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (k[i] == 0) continue;
            os << "*";
            if (i < (int)lam_names.size())
                os << lam_names[i];
            else
                os << "l" << (i + 1);
            if (k[i] > 1) os << "^" << k[i];
        }
    }
    return os.str();
}

LamPoly apply_op(const std::vector<Rat>& coeffs, const Rat& dcoef, const LamPoly& p) {
    assert((int)coeffs.size() == p.nvars());
    LamPoly r(p.nvars());
    for (auto& [k, c] : p.terms()) {
        for (int j = 0; j < p.nvars(); ++j) {
            if (coeffs[j] == 0) continue;
            LamPoly::Key k2 = k;
            ++k2[j];
            r.add_term(k2, c * coeffs[j]);
        }
        if (dcoef != 0) r.add_term(k, derive(c) * dcoef);
    }
    return r;
}

LamPoly op_pow(const std::vector<Rat>& coeffs, const Rat& dcoef, int e, const LamPoly& p) {
    LamPoly r = p;
    for (int i = 0; i < e; ++i) r = apply_op(coeffs, dcoef, r);
    return r;
}

LamPoly subst_op(const LamPoly& p, int i, const std::vector<Rat>& coeffs, const Rat& dcoef) {
    assert(coeffs[i] == 0);
    LamPoly r(p.nvars());
    for (auto& [k, c] : p.terms()) {
        int e = k[i];
        LamPoly::Key k2 = k;
        k2[i] = 0;
        r += op_pow(coeffs, dcoef, e, LamPoly::term(k2, c));
    }
    return r;
}

LamPoly subst_var(const LamPoly& p, int i, const LamPoly& q) {
    assert(q.nvars() == p.nvars());
    LamPoly r(p.nvars());
    std::vector<LamPoly> pows = {LamPoly::constant(p.nvars(), DiffPoly::one())};
    for (auto& [k, c] : p.terms()) {
        int e = k[i];
        while ((int)pows.size() <= e) pows.push_back(pows.back() * q);
        LamPoly::Key k2 = k;
        k2[i] = 0;
        r += LamPoly::term(k2, c) * pows[e];
    }
    return r;
}

LamPoly normalize(const LamPoly& p) {
    int n = p.nvars();
    if (n == 0) return p;
    std::vector<Rat> coeffs(n, Rat(-1));
    coeffs[n - 1] = 0;
    return subst_op(p, n - 1, coeffs, Rat(-1));
}

LamPoly map_vars(const LamPoly& p, int new_nvars, const std::vector<int>& mapping) {
    assert((int)mapping.size() == p.nvars());
    LamPoly r(new_nvars);
    for (auto& [k, c] : p.terms()) {
        LamPoly::Key k2(new_nvars, 0);
        for (int i = 0; i < p.nvars(); ++i) {
            assert(k[i] == 0 || (0 <= mapping[i] && mapping[i] < new_nvars));
            if (k[i]) k2[mapping[i]] += k[i];
        }
        r.add_term(k2, c);
    }
    return r;
}

LamPoly dlam(const LamPoly& p, int i) {
    LamPoly r(p.nvars());
    for (auto& [k, c] : p.terms()) {
        if (k[i] == 0) continue;
        LamPoly::Key k2 = k;
        --k2[i];
        r.add_term(k2, c * Rat(k[i]));
    }
    return r;
}

LamPoly coeff_of(const LamPoly& p, int i, int e) {
    LamPoly r(p.nvars());
    for (auto& [k, c] : p.terms()) {
        if (k[i] != e) continue;
        LamPoly::Key k2 = k;
        k2[i] = 0;
        r.add_term(k2, c);
    }
    return r;
}

DiffPoly as_diffpoly(const LamPoly& p) {
    DiffPoly r;
    for (auto& [k, c] : p.terms()) {
        bool pure = std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
        assert(pure && "LamPoly still depends on a lambda variable");
        if (pure) r += c;
    }
    return r;
}

LamPoly lift(int nvars, const DiffPoly& c) { return LamPoly::constant(nvars, c); }

} // namespace pcl
