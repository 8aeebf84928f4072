#pragma once

#include "pcl/perm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcl {

// Labeled directed graph on vertices {1..n} without tadpoles. The edge list
// is kept sorted; duplicate ordered pairs are allowed so that collapsed
// cocomposition quotients can be represented, but most of the library works
// with simple graphs (is_simple()).
class Digraph {
  public:
    using Edge = std::pair<int, int>; // (tail, head), tail != head

    Digraph() = default;
    Digraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_simple() const;

    friend auto operator<=>(const Digraph&, const Digraph&) = default;

    std::string str() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Parse the text form "n=4; edges: 1>2, 2>3" (whitespace-insensitive;
// "edges:" may be omitted together with the edge list for the edgeless
// graph).
Digraph parse_digraph(const std::string& text);

// Relabel: edge i->j becomes sigma(i)->sigma(j).
Digraph act_graph(const Perm& sigma, const Digraph& g);

// True if the graph has no directed cycle (a 2-cycle {i->j, j->i} and a
// duplicated ordered pair both count as cycles here: a duplicated pair is
// killed by the same relations).
bool is_acyclic(const Digraph& g);

// All directed simple cycles, each as the cyclic vertex sequence starting
// from its smallest vertex. Duplicate ordered pairs are ignored.
std::vector<std::vector<int>> oriented_cycles(const Digraph& g);

// The standard line 1 -> 2 -> ... -> n.
Digraph standard_line(int n);

// Result of splitting a graph on M = m_1+...+m_n vertices into n blocks.
struct Cocomposition {
    Digraph collapsed;            // quotient graph on the n blocks (may have duplicate pairs)
    std::vector<Digraph> blocks;  // induced subgraph of block i, relabeled to 1..m_i
    // For each edge of the input graph, in input edge-list order: whether it
    // landed in the collapsed graph (block_index == 0, position indexes
    // collapsed.edges()) or inside block block_index >= 1 (position indexes
    // blocks[block_index-1].edges()).
    struct EdgeImage {
        int block_index;
        int position;
    };
    std::vector<EdgeImage> edge_images;
};

Cocomposition cocompose(const Digraph& g, const std::vector<int>& sizes);

// Block of a vertex (1-based) under the given block sizes.
int block_of(int vertex, const std::vector<int>& sizes);

// The set of blocks j externally connected to vertex k: j appears iff some
// edge of g incident to k maps to a collapsed edge e incident to block(k)
// whose other end stays connected to block j in the collapsed graph with
// one copy of e removed (undirected connectivity).
std::vector<int> externally_connected(const Digraph& g, const std::vector<int>& sizes, int k);

// Oracle for externally_connected: j qualifies iff the collapsed graph has
// an undirected trail (edge-disjoint walk) from block(k) to j starting with
// the image of an edge of g incident to k.
std::vector<int> externally_connected_oracle(const Digraph& g, const std::vector<int>& sizes,
                                             int k);

// A disjoint union of directed paths, each starting at its minimal vertex,
// components ordered by (size, first vertex).
struct LineGraph {
    std::vector<std::vector<int>> components; // vertex sequences

    Digraph to_digraph(int n) const;
    friend auto operator<=>(const LineGraph&, const LineGraph&) = default;
    std::string str() const;
};

// All line graphs on n vertices, sorted; index order is the basis order used
// throughout.
const std::vector<LineGraph>& enumerate_lines(int n);

// Index of a line graph (as a Digraph) in enumerate_lines(n); nullopt if the
// graph is not a normalized line.
std::optional<int> line_index(const Digraph& g);

// Connected components of the underlying undirected graph, each a sorted
// vertex list, ordered by smallest vertex.
std::vector<std::vector<int>> undirected_components(const Digraph& g);

} // namespace pcl
