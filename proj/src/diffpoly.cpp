#include "pcl/diffpoly.hpp"

#include <algorithm>
#include <sstream>

namespace pcl {

int DiffMonomial::degree() const {
    int d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
}

int DiffMonomial::max_order() const {
    int m = 0;
    for (auto& [v, e] : factors) m = std::max(m, v.ord);
    return m;
}

DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b) {
    DiffMonomial r;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
            r.factors.push_back(*ia++);
        } else if (ia == a.factors.end() || ib->first < ia->first) {
            r.factors.push_back(*ib++);
        } else {
            r.factors.push_back({ia->first, ia->second + ib->second});
            ++ia, ++ib;
        }
    }
    return r;
}

DiffMonomial mono(DiffVar v, int exp) {
    DiffMonomial m;
    if (exp != 0) m.factors.push_back({v, exp});
    return m;
}

DiffPoly::DiffPoly(Rat c) {
    if (c != 0) terms_[DiffMonomial{}] = std::move(c);
}

DiffPoly DiffPoly::u(int gen, int ord) { return term(Rat(1), mono({gen, ord})); }

DiffPoly DiffPoly::term(Rat c, DiffMonomial m) {
    DiffPoly p;
    if (c != 0) p.terms_[std::move(m)] = std::move(c);
    return p;
}

bool DiffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat DiffPoly::constant_term() const {
    auto it = terms_.find(DiffMonomial{});
    return it == terms_.end() ? Rat(0) : it->second;
}

int DiffPoly::degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int DiffPoly::max_order() const {
    int m = 0;
    for (auto& [mn, c] : terms_) m = std::max(m, mn.max_order());
    return m;
}

void DiffPoly::add_term(const DiffMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& o) {
    DiffPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    *this = std::move(r);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, coef] : terms_) coef *= c;
    }
    return *this;
}

DiffPoly derive(const DiffPoly& p) {
    DiffPoly r;
    for (auto& [m, c] : p.terms_) {
        for (size_t i = 0; i < m.factors.size(); ++i) {
            auto [v, e] = m.factors[i];
            DiffMonomial rest;
            rest.factors = m.factors;
            if (e == 1)
                rest.factors.erase(rest.factors.begin() + i);
            else
                rest.factors[i].second = e - 1;
            r += DiffPoly::term(c * e, rest * mono({v.gen, v.ord + 1}));
        }
    }
    return r;
}

DiffPoly derive(DiffPoly p, int times) {
    for (int i = 0; i < times; ++i) p = derive(p);
    return p;
}

DiffPoly partial(const DiffPoly& p, DiffVar v) {
    DiffPoly r;
    for (auto& [m, c] : p.terms_) {
        for (size_t i = 0; i < m.factors.size(); ++i) {
            if (m.factors[i].first != v) continue;
            int e = m.factors[i].second;
            DiffMonomial rest;
            rest.factors = m.factors;
            if (e == 1)
                rest.factors.erase(rest.factors.begin() + i);
            else
                rest.factors[i].second = e - 1;
            r += DiffPoly::term(c * e, rest);
        }
    }
    return r;
}

std::vector<DiffVar> variables_of(const DiffPoly& p) {
    std::vector<DiffVar> vs;
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.factors) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::string var_name(DiffVar v, const std::vector<std::string>& names) {
    std::ostringstream os;
    if (v.gen < (int)names.size())
        os << names[v.gen];
    else
        os << "u" << v.gen;
    if (v.ord <= 3) {
        for (int i = 0; i < v.ord; ++i) os << '\'';
    } else {
        os << "^(" << v.ord << ")";
    }
    return os.str();
}

std::string DiffPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool need_coeff = (a != 1) || m.is_one();
        if (need_coeff) os << a.str();
        bool need_star = need_coeff;
        for (auto& [v, e] : m.factors) {
            if (need_star) os << "*";
            need_star = true;
            os << var_name(v, names);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace pcl
