#pragma once

#include "pcl/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace pcl {

// A variable of the differential polynomial algebra: the m-th derivative
// u_a^{(m)} of generator a.
struct DiffVar {
    int gen = 0;
    int ord = 0;

    friend auto operator<=>(const DiffVar&, const DiffVar&) = default;
};

// Product of powers of DiffVars, kept sorted by (gen, ord) with positive
// exponents. The empty monomial is 1.
struct DiffMonomial {
    std::vector<std::pair<DiffVar, int>> factors;

    bool is_one() const { return factors.empty(); }
    int degree() const;
    int max_order() const;

    friend DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b);
    friend auto operator<=>(const DiffMonomial&, const DiffMonomial&) = default;
};

DiffMonomial mono(DiffVar v, int exp = 1);

// Element of V = F[u_a^{(m)}]: finite sum of rational multiples of
// monomials, in canonical form (no zero coefficients, sorted keys).
class DiffPoly {
  public:
    DiffPoly() = default;
    explicit DiffPoly(Rat c);

    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly one() { return DiffPoly(Rat(1)); }
    // The generator derivative u_gen^{(ord)}.
    static DiffPoly u(int gen, int ord = 0);
    static DiffPoly term(Rat c, DiffMonomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    const std::map<DiffMonomial, Rat>& terms() const { return terms_; }

    int degree() const;
    int max_order() const;

    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const DiffPoly& o);
    DiffPoly& operator*=(const Rat& c);

    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(DiffPoly a, const DiffPoly& b) { return a *= b; }
    friend DiffPoly operator*(DiffPoly a, const Rat& c) { return a *= c; }
    friend DiffPoly operator*(const Rat& c, DiffPoly a) { return a *= c; }
    friend DiffPoly operator-(const DiffPoly& a) { return a * Rat(-1); }

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;
    friend bool operator<(const DiffPoly& a, const DiffPoly& b) { return a.terms_ < b.terms_; }

    // Names indexed by generator; generators beyond the table print as u<k>.
    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    void add_term(const DiffMonomial& m, const Rat& c);
    std::map<DiffMonomial, Rat> terms_;

    friend DiffPoly derive(const DiffPoly&);
    friend DiffPoly partial(const DiffPoly&, DiffVar);
};

// The derivation: derive(u_a^{(m)}) = u_a^{(m+1)}, extended by Leibniz.
DiffPoly derive(const DiffPoly& p);
DiffPoly derive(DiffPoly p, int times);

// Partial derivative with respect to a single DiffVar.
DiffPoly partial(const DiffPoly& p, DiffVar v);

// All DiffVars occurring in p.
std::vector<DiffVar> variables_of(const DiffPoly& p);

std::string var_name(DiffVar v, const std::vector<std::string>& names);

} // namespace pcl
