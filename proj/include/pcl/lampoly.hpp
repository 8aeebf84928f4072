#pragma once

#include "pcl/diffpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace pcl {

// Polynomial in commuting even variables l_0..l_{nvars-1} with DiffPoly
// coefficients. Used both for representatives of V_n = V[l_1..l_n]/(d+l_1+
// ...+l_n) (after normalize, the last variable is eliminated) and for the
// auxiliary multi-variable expressions arising in operad composition.
class LamPoly {
  public:
    using Key = std::vector<int>; // exponent vector, length nvars

    explicit LamPoly(int nvars = 0) : nvars_(nvars) {}

    static LamPoly zero(int nvars) { return LamPoly(nvars); }
    static LamPoly constant(int nvars, DiffPoly c);
    // The variable l_i (0-based), raised to pow, times coefficient c.
    static LamPoly lam(int nvars, int i, int pow = 1, DiffPoly c = DiffPoly::one());
    static LamPoly term(Key k, DiffPoly c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, DiffPoly>& terms() const { return terms_; }

    // Degree in variable i; -1 for the zero polynomial.
    int degree_in(int i) const;
    int total_degree() const;

    void add_term(const Key& k, const DiffPoly& c);

    LamPoly& operator+=(const LamPoly& o);
    LamPoly& operator-=(const LamPoly& o);
    LamPoly& operator*=(const LamPoly& o);
    LamPoly& operator*=(const DiffPoly& c);
    LamPoly& operator*=(const Rat& c);

    friend LamPoly operator+(LamPoly a, const LamPoly& b) { return a += b; }
    friend LamPoly operator-(LamPoly a, const LamPoly& b) { return a -= b; }
    friend LamPoly operator*(LamPoly a, const LamPoly& b) { return a *= b; }
    friend LamPoly operator*(LamPoly a, const DiffPoly& c) { return a *= c; }
    friend LamPoly operator*(const DiffPoly& c, LamPoly a) { return a *= c; }
    friend LamPoly operator*(LamPoly a, const Rat& c) { return a *= c; }
    friend LamPoly operator*(const Rat& c, LamPoly a) { return a *= c; }
    friend LamPoly operator-(const LamPoly& a) { return a * Rat(-1); }

    friend bool operator==(const LamPoly&, const LamPoly&) = default;

    std::string str(const std::vector<std::string>& lam_names = {},
                    const std::vector<std::string>& gen_names = {}) const;

  private:
    int nvars_;
    std::map<Key, DiffPoly> terms_;
};

// Apply the first-order operator  sum_j coeffs[j]*l_j  +  dcoef * d  once,
// where d acts by derive() on the DiffPoly coefficients and the l_j act by
// multiplication. These two kinds of operators commute.
LamPoly apply_op(const std::vector<Rat>& coeffs, const Rat& dcoef, const LamPoly& p);

// (sum_j coeffs[j]*l_j + dcoef*d)^e applied to p.
LamPoly op_pow(const std::vector<Rat>& coeffs, const Rat& dcoef, int e, const LamPoly& p);

// Substitute l_i by the operator (sum_j coeffs[j]*l_j + dcoef*d): each l_i^e
// is removed and the operator applied e times to the remaining term.
// Requires coeffs[i] == 0. Valid because multiplication by l_j and d commute.
LamPoly subst_op(const LamPoly& p, int i, const std::vector<Rat>& coeffs, const Rat& dcoef);

// Substitute l_i by the polynomial q (which may itself involve l_i): each
// term's power l_i^e is stripped and replaced by q^e.
LamPoly subst_var(const LamPoly& p, int i, const LamPoly& q);

// Canonical representative mod (d + l_0 + ... + l_{nvars-1}): eliminates the
// last variable via l_{n-1} -> -l_0 - ... - l_{n-2} - d. Idempotent, linear.
LamPoly normalize(const LamPoly& p);

// Remap variables: result has new_nvars variables and l_i -> l_{mapping[i]}.
LamPoly map_vars(const LamPoly& p, int new_nvars, const std::vector<int>& mapping);

// Partial derivative with respect to l_i (coefficients untouched).
LamPoly dlam(const LamPoly& p, int i);

// Coefficient of l_i^e, as a polynomial in the same variable set (with
// degree 0 in l_i).
LamPoly coeff_of(const LamPoly& p, int i, int e);

// Requires p free of all variables; returns the constant coefficient.
DiffPoly as_diffpoly(const LamPoly& p);

// Lift a DiffPoly into a LamPoly with the given number of variables.
LamPoly lift(int nvars, const DiffPoly& c);

} // namespace pcl
