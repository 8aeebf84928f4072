#pragma once

#include "pcl/digraph.hpp"
#include "pcl/rat.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace pcl {

// Formal rational linear combination of digraphs of a fixed vertex count.
class GraphVector {
  public:
    explicit GraphVector(int n = 0) : n_(n) {}
    static GraphVector single(const Digraph& g, Rat c = Rat(1));

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Digraph, Rat>& terms() const { return terms_; }

    void add(const Digraph& g, const Rat& c);

    GraphVector& operator+=(const GraphVector& o);
    GraphVector& operator-=(const GraphVector& o);
    GraphVector& operator*=(const Rat& c);
    friend GraphVector operator+(GraphVector a, const GraphVector& b) { return a += b; }
    friend GraphVector operator-(GraphVector a, const GraphVector& b) { return a -= b; }
    friend GraphVector operator*(GraphVector a, const Rat& c) { return a *= c; }
    friend GraphVector operator*(const Rat& c, GraphVector a) { return a *= c; }
    friend bool operator==(const GraphVector&, const GraphVector&) = default;

    std::string str() const;

  private:
    int n_;
    std::map<Digraph, Rat> terms_;
};

// Parse "[n=3; edges: 1>2] - 1/2 [n=3; edges: 2>1]" style literals.
GraphVector parse_graphvector(const std::string& text);

// Express v modulo the cycle relations in the line basis: the result is
// supported on normalized line graphs. Works for any arity whose tree
// components have at most reduce_component_limit() vertices.
GraphVector reduce_to_lines(const GraphVector& v);

// Coordinates of v in the basis enumerate_lines(n) (reduces first).
std::vector<Rat> line_coordinates(const GraphVector& v);

// Largest supported undirected component size of the reduction engine.
int reduce_component_limit();

// Brute-force model of the quotient space F G(n) / R(n): enumerates every
// simple digraph on n vertices, spans the relations, and reduces vectors by
// exact row reduction. Feasible for n <= 4.
class LineOracle {
  public:
    explicit LineOracle(int n);

    int quotient_dim() const { return quotient_dim_; }
    int acyclic_count() const { return acyclic_count_; }
    int relation_rank() const { return relation_rank_; }
    // True if every non-line acyclic digraph is a pivot (the lines are a
    // free basis of the quotient).
    bool lines_are_basis() const { return lines_are_basis_; }

    GraphVector reduce(const GraphVector& v) const;

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    int quotient_dim_ = 0, acyclic_count_ = 0, relation_rank_ = 0;
    bool lines_are_basis_ = false;
};

} // namespace pcl
