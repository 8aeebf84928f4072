#pragma once

#include "pcl/graphvec.hpp"
#include "pcl/lampoly.hpp"

#include <functional>
#include <vector>

namespace pcl {

using Tensor = std::vector<DiffPoly>;

// An arity-n element of the classical operad with purely odd input slots: a
// multilinear map sending a graph and an input tuple to a representative of
// V_n = V[l_0..l_{n-1}]/(d + l_0 + ... + l_{n-1}). Values are stored as a
// rule on the line basis; every other graph evaluates through the cycle
// relations (reduce_to_lines), so those relations hold by construction.
class ClCochain {
  public:
    using Rule = std::function<LamPoly(const LineGraph&, const Tensor&)>;

    ClCochain() = default;
    ClCochain(int arity, Rule rule) : arity_(arity), rule_(std::move(rule)) {}

    static ClCochain zero(int arity);
    // The operad unit: the identity map on the one-vertex graph.
    static ClCochain unit();

    int arity() const { return arity_; }
    // Parity in the odd-slot convention: arity - 1 mod 2.
    int parity() const { return (arity_ - 1) & 1; }

    // Raw rule value on a line-basis graph (an arbitrary representative).
    LamPoly on_line(const LineGraph& line, const Tensor& v) const;

    friend ClCochain operator+(const ClCochain& a, const ClCochain& b);
    friend ClCochain operator-(const ClCochain& a, const ClCochain& b);
    friend ClCochain operator*(const Rat& c, const ClCochain& a);

  private:
    int arity_ = 0;
    Rule rule_;
};

// Normalized value on an arbitrary digraph; zero on cyclic or non-simple
// ones.
LamPoly evaluate(const ClCochain& f, const Digraph& g, const Tensor& v);

// The right action f^sigma: evaluate f on the relabeled graph, permuted
// lambda-tuple and permuted inputs, with the Koszul sign of sigma (all slots
// odd).
ClCochain act_cochain(const ClCochain& f, const Perm& sigma);

// Operadic composition f(g_1,...,g_n) evaluated on a graph with
// sum(arity(g_i)) vertices. The auxiliary variable x_k of block k, with the
// exponent collected from all shifted lambda-arguments, acts on block k's
// own coefficient as (Lambda_k + d)^e.
LamPoly compose(const ClCochain& f, const std::vector<ClCochain>& gs, const Digraph& g,
                const Tensor& v);

ClCochain compose_cochain(const ClCochain& f, const std::vector<ClCochain>& gs);

// Insertion product: g placed in slot i of f, units elsewhere.
ClCochain circ(const ClCochain& f, const ClCochain& g, int i);

// A symmetric cochain, graded by degree = arity - 1.
struct WElement {
    ClCochain cochain;

    int degree() const { return cochain.arity() - 1; }
    int parity() const { return cochain.parity(); }
};

// Sum over (m+1,n)-shuffles of inverse-acted insertion products, where
// n = deg f and m = deg g.
ClCochain box(const WElement& f, const WElement& g);

// [f,g] = f box g - (-1)^{p(f)p(g)} g box f; symmetric again.
WElement bracket(const WElement& f, const WElement& g);

// Group average (1/n!) sum_sigma z^sigma.
WElement symmetrize(const ClCochain& z);

// Restriction to graphs with exactly r edges.
ClCochain grade_component(const ClCochain& f, int r);

// Equality of normalized values on every line graph, for each sample tuple.
bool cochains_agree(const ClCochain& a, const ClCochain& b, const std::vector<Tensor>& samples);

bool is_symmetric(const ClCochain& f, const std::vector<Tensor>& samples);

// Both sesquilinearity laws on every line graph, for each sample tuple:
// within a connected component the lambda-derivatives of the value agree,
// and applying d to the component's inputs multiplies the value by minus the
// component's total lambda.
bool check_sesquilinearity(const ClCochain& f, const std::vector<Tensor>& samples);

} // namespace pcl
