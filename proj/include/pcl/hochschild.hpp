#pragma once

#include "pcl/cochain.hpp"
#include "pcl/perm.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pcl {

// A Hochschild cochain of the differential algebra V with coefficients in V
// itself: an evaluable multilinear rule V^{tensor n} -> V. Membership in the
// differential subcomplex (commuting with the total derivation) is a sampled
// property, checked by is_dlinear.
class HCochain {
  public:
    using Rule = std::function<DiffPoly(const Tensor&)>;

    HCochain() = default;
    HCochain(int arity, Rule rule) : arity_(arity), rule_(std::move(rule)) {}

    static HCochain zero(int arity);
    // The arity-0 cochain with constant value m.
    static HCochain constant(DiffPoly m);

    int arity() const { return arity_; }
    DiffPoly operator()(const Tensor& v) const;

    friend HCochain operator+(const HCochain& a, const HCochain& b);
    friend HCochain operator-(const HCochain& a, const HCochain& b);
    friend HCochain operator*(const Rat& c, const HCochain& a);

  private:
    int arity_ = 0;
    Rule rule_;
};

// The Hochschild differential for the bimodule V acting by multiplication.
HCochain hochschild_d(const HCochain& F);

// Harrison's operator: the sum over monotone permutations starting at k of
// the permuted evaluations with drop signs. Requires 2 <= k <= arity.
HCochain harrison_L(int k, const HCochain& F);

bool hcochains_agree(const HCochain& a, const HCochain& b, const std::vector<Tensor>& samples);

// F commutes with the derivation: F applied to the total-derivative tuple
// sum equals the derivative of F's value.
bool is_dlinear(const HCochain& F, const std::vector<Tensor>& samples);

struct HarrisonReport {
    bool dlinear = true;
    // one entry per k in 2..n: does L_k F = F hold on the samples
    std::vector<std::pair<int, bool>> relations;

    bool pass() const;
    std::string str() const;
};

HarrisonReport is_harrison(const HCochain& F, const std::vector<Tensor>& samples);

} // namespace pcl
