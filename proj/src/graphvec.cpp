#include "pcl/graphvec.hpp"

#include "pcl/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pcl {

GraphVector GraphVector::single(const Digraph& g, Rat c) {
    GraphVector v(g.n());
    v.add(g, c);
    return v;
}

void GraphVector::add(const Digraph& g, const Rat& c) {
    if (g.n() != n_) throw std::invalid_argument("arity mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GraphVector& GraphVector::operator+=(const GraphVector& o) {
    for (auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

GraphVector& GraphVector::operator-=(const GraphVector& o) {
    for (auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

GraphVector& GraphVector::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [g, coef] : terms_) coef *= c;
    }
    return *this;
}

std::string GraphVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [g, c] : terms_) {
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
        if (a != 1) os << a.str() << " ";
        os << "[" << g.str() << "]";
    }
    return os.str();
}

GraphVector parse_graphvector(const std::string& text) {
    GraphVector out(0);
    size_t i = 0;
    bool started = false;
    auto skip_ws = [&] {
        while (i < text.size() && isspace((unsigned char)text[i])) ++i;
    };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        Rat sign(1);
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        Rat coeff(1);
        size_t start = i;
        while (i < text.size() && (isdigit((unsigned char)text[i]) || text[i] == '/')) ++i;
        if (i > start) coeff = Rat(text.substr(start, i - start));
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        if (i >= text.size() || text[i] != '[') throw std::invalid_argument("expected [graph]");
        size_t close = text.find(']', i);
        if (close == std::string::npos) throw std::invalid_argument("unterminated graph literal");
        Digraph g = parse_digraph(text.substr(i + 1, close - i - 1));
        i = close + 1;
        if (!started) {
            out = GraphVector(g.n());
            started = true;
        }
        out.add(g, sign * coeff);
    }
    if (!started) throw std::invalid_argument("empty graph vector");
    return out;
}

// ---------------------------------------------------------------------------
// Tree reduction tables.
//
// Modulo the cycle relations, a digraph with a directed cycle is zero, an
// edge reversal changes the sign, and any graph whose underlying undirected
// graph has a cycle is therefore zero as well. Nonzero classes are carried
// by forests; fixing the canonical orientation (every edge low -> high) the
// remaining relations live inside each tree component. For each component
// size k we precompute, by exact row reduction of the cycle relations, the
// expansion of every labeled undirected tree on {1..k} in the basis of
// paths with endpoint 1.

namespace {

using UEdge = std::pair<int, int>; // a < b
using UTree = std::vector<UEdge>;  // sorted

UTree prufer_decode(int k, const std::vector<int>& seq) {
    std::vector<int> deg(k + 1, 1);
    for (int x : seq) ++deg[x];
    UTree t;
    std::set<int> leaves;
    for (int v = 1; v <= k; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<int> s = seq;
    for (int x : s) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        t.push_back({std::min(leaf, x), std::max(leaf, x)});
        if (--deg[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    t.push_back({std::min(a, b), std::max(a, b)});
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<UTree> all_trees(int k) {
    if (k == 1) return {UTree{}};
    std::vector<UTree> out;
    std::vector<int> seq(k - 2, 1);
    while (true) {
        out.push_back(prufer_decode(k, seq));
        int i = k - 3;
        while (i >= 0 && seq[i] == k) --i;
        if (i < 0) break;
        ++seq[i];
        for (int j = i + 1; j < k - 2; ++j) seq[j] = 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// If t is a path with endpoint 1, its vertex sequence from 1; else empty.
std::vector<int> path_sequence(int k, const UTree& t) {
    if (k == 1) return {1};
    std::vector<std::vector<int>> adj(k + 1);
    for (auto& [a, b] : t) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (adj[1].size() != 1) return {};
    for (int v = 1; v <= k; ++v)
        if (adj[v].size() > 2) return {};
    std::vector<int> seq = {1};
    int prev = 0, cur = 1;
    while ((int)seq.size() < k) {
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        if (next < 0) return {};
        seq.push_back(next);
        prev = cur;
        cur = next;
    }
    return seq;
}

int descents(const std::vector<int>& seq) {
    int d = 0;
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] > seq[i + 1]) ++d;
    return d;
}

struct TreeTable {
    int k;
    // tree -> expansion as sum of (path vertex sequence, coefficient) on
    // canonically oriented path classes
    std::map<UTree, std::vector<std::pair<std::vector<int>, Rat>>> expand;
};

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

TreeTable build_tree_table(int k) {
    TreeTable table;
    table.k = k;
    std::vector<UTree> trees = all_trees(k);
    std::vector<std::vector<int>> seqs(trees.size());
    std::vector<int> col(trees.size());
    std::map<UTree, int> tree_id;
    for (size_t i = 0; i < trees.size(); ++i) {
        tree_id[trees[i]] = (int)i;
        seqs[i] = path_sequence(k, trees[i]);
    }
    // columns: non-paths first so that row reduction pivots on them
    int next = 0;
    for (size_t i = 0; i < trees.size(); ++i)
        if (seqs[i].empty()) col[i] = next++;
    int first_path_col = next;
    for (size_t i = 0; i < trees.size(); ++i)
        if (!seqs[i].empty()) col[i] = next++;

    RowSpace rs;
    for (auto& t : trees) {
        std::set<UEdge> in_tree(t.begin(), t.end());
        std::vector<std::vector<int>> adj(k + 1);
        for (auto& [a, b] : t) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                if (in_tree.count({a, b})) continue;
                // tree path a..b, giving the unique cycle of t + {a,b}
                std::vector<int> par(k + 1, 0);
                std::function<void(int, int)> dfs = [&](int v, int p) {
                    par[v] = p;
                    for (int w : adj[v])
                        if (w != p) dfs(w, v);
                };
                dfs(a, -1);
                std::vector<int> path;
                for (int v = b; v != -1; v = par[v]) path.push_back(v);
                std::reverse(path.begin(), path.end()); // a ... b
                // orient the cycle a -> ... -> b -> a
                std::vector<std::pair<int, int>> cyc;
                for (size_t i2 = 0; i2 + 1 < path.size(); ++i2)
                    cyc.push_back({path[i2], path[i2 + 1]});
                cyc.push_back({b, a});
                RowSpace::Row row;
                for (size_t drop = 0; drop < cyc.size(); ++drop) {
                    UTree result;
                    int sign = 1;
                    for (size_t i2 = 0; i2 < cyc.size(); ++i2) {
                        if (i2 == drop) continue;
                        auto [x, y] = cyc[i2];
                        if (x > y) {
                            sign = -sign;
                            std::swap(x, y);
                        }
                        result.push_back({x, y});
                    }
                    for (auto& e : t)
                        if (!std::count(cyc.begin(), cyc.end(),
                                        std::pair<int, int>{e.first, e.second}) &&
                            !std::count(cyc.begin(), cyc.end(),
                                        std::pair<int, int>{e.second, e.first}))
                            result.push_back(e);
                    std::sort(result.begin(), result.end());
                    int id = tree_id.at(result);
                    auto [it, fresh] = row.try_emplace(col[id], 0);
                    it->second += sign;
                    if (it->second == 0) row.erase(it);
                }
                rs.add_row(std::move(row));
            }
    }
    if (rs.rank() != (int)trees.size() - (int)factorial(k - 1))
        throw std::logic_error("tree relation rank mismatch");
    for (int c = 0; c < first_path_col; ++c)
        if (!rs.has_pivot(c)) throw std::logic_error("non-path tree is not a pivot");

    std::vector<std::vector<int>> seq_by_col(trees.size());
    for (size_t i = 0; i < trees.size(); ++i) seq_by_col[col[i]] = seqs[i];
    for (size_t i = 0; i < trees.size(); ++i) {
        RowSpace::Row unit = {{col[i], Rat(1)}};
        RowSpace::Row res = rs.reduce(unit);
        std::vector<std::pair<std::vector<int>, Rat>> exp;
        for (auto& [c, v] : res) {
            assert(c >= first_path_col);
            exp.push_back({seq_by_col[c], v});
        }
        table.expand[trees[i]] = std::move(exp);
    }
    return table;
}

const TreeTable& tree_table(int k) {
    static std::mutex mu;
    static std::map<int, TreeTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_tree_table(k)).first;
    return it->second;
}

} // namespace

int reduce_component_limit() { return 6; }

GraphVector reduce_to_lines(const GraphVector& v) {
    GraphVector out(v.n());
    for (auto& [g, c] : v.terms()) {
        if (!g.is_simple() || !is_acyclic(g)) continue;
        // canonical orientation: every edge low -> high, one sign per flip
        int sign = 1;
        std::vector<UEdge> uedges;
        for (auto& [a, b] : g.edges()) {
            if (a > b) sign = -sign;
            uedges.push_back({std::min(a, b), std::max(a, b)});
        }
        // undirected cycle => zero class
        std::vector<int> root(g.n() + 1);
        std::iota(root.begin(), root.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return root[x] == x ? x : root[x] = find(root[x]);
        };
        bool cyclic = false;
        for (auto& [a, b] : uedges) {
            if (find(a) == find(b)) {
                cyclic = true;
                break;
            }
            root[find(a)] = find(b);
        }
        if (cyclic) continue;

        auto comps = undirected_components(g);
        // expand component by component
        std::vector<std::pair<std::vector<Digraph::Edge>, Rat>> partial = {
            {{}, c * Rat(sign)}};
        for (auto& verts : comps) {
            int k = (int)verts.size();
            if (k == 1) continue;
            if (k > reduce_component_limit())
                throw std::invalid_argument("component too large for reduction engine");
            std::map<int, int> to_local;
            for (int i = 0; i < k; ++i) to_local[verts[i]] = i + 1;
            UTree local;
            for (auto& [a, b] : uedges)
                if (to_local.count(a) && to_local.count(b))
                    local.push_back({to_local[a], to_local[b]});
            std::sort(local.begin(), local.end());
            auto& exp = tree_table(k).expand.at(local);
            std::vector<std::pair<std::vector<Digraph::Edge>, Rat>> grown;
            for (auto& [edges, coeff] : partial)
                for (auto& [seq, pc] : exp) {
                    std::vector<Digraph::Edge> e2 = edges;
                    std::vector<int> glob(seq.size());
                    for (size_t i = 0; i < seq.size(); ++i) glob[i] = verts[seq[i] - 1];
                    for (size_t i = 0; i + 1 < glob.size(); ++i)
                        e2.push_back({glob[i], glob[i + 1]});
                    // canonical class -> directed line basis element
                    int s2 = descents(glob) % 2 ? -1 : 1;
                    grown.push_back({std::move(e2), coeff * pc * s2});
                }
            partial = std::move(grown);
        }
        for (auto& [edges, coeff] : partial) out.add(Digraph(v.n(), edges), coeff);
    }
    return out;
}

std::vector<Rat> line_coordinates(const GraphVector& v) {
    GraphVector red = reduce_to_lines(v);
    auto& lines = enumerate_lines(v.n());
    std::vector<Rat> coords(lines.size(), Rat(0));
    for (auto& [g, c] : red.terms()) {
        auto idx = line_index(g);
        if (!idx) throw std::logic_error("reduction produced a non-line graph");
        coords[*idx] = c;
    }
    return coords;
}

// ---------------------------------------------------------------------------
// Brute-force oracle.

struct LineOracle::Impl {
    int n;
    RowSpace rs;
    std::map<Digraph, int> col;      // acyclic digraph -> column
    std::vector<Digraph> by_col;
    int first_line_col = 0;
};

LineOracle::LineOracle(int n) : impl_(std::make_shared<Impl>()) {
    impl_->n = n;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
    int np = (int)pairs.size();
    long long total = 1;
    for (int i = 0; i < np; ++i) total *= 4;
    std::vector<Digraph> all;
    std::vector<Digraph> acyclic;
    for (long long mask = 0; mask < total; ++mask) {
        std::vector<Digraph::Edge> edges;
        long long m = mask;
        for (int i = 0; i < np; ++i, m /= 4) {
            int state = (int)(m % 4);
            auto [a, b] = pairs[i];
            if (state == 1 || state == 3) edges.push_back({a, b});
            if (state == 2 || state == 3) edges.push_back({b, a});
        }
        Digraph g(n, std::move(edges));
        all.push_back(g);
        if (is_acyclic(g)) acyclic.push_back(g);
    }
    acyclic_count_ = (int)acyclic.size();
    // non-line columns first
    int next = 0;
    for (auto& g : acyclic)
        if (!line_index(g)) impl_->col[g] = next++;
    impl_->first_line_col = next;
    for (auto& g : acyclic)
        if (line_index(g)) impl_->col[g] = next++;
    impl_->by_col.resize(acyclic.size(), Digraph(n, {}));
    for (auto& [g, c] : impl_->col) impl_->by_col[c] = g;

    for (auto& g : all) {
        for (auto& cyc : oriented_cycles(g)) {
            std::vector<Digraph::Edge> cedges;
            for (size_t i = 0; i < cyc.size(); ++i)
                cedges.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
            RowSpace::Row row;
            for (auto& e : cedges) {
                std::vector<Digraph::Edge> rest;
                bool dropped = false;
                for (auto& f : g.edges()) {
                    if (!dropped && f == e) {
                        dropped = true;
                        continue;
                    }
                    rest.push_back(f);
                }
                Digraph h(n, std::move(rest));
                if (!is_acyclic(h)) continue;
                auto [it, fresh] = row.try_emplace(impl_->col.at(h), 0);
                it->second += 1;
                if (it->second == 0) row.erase(it);
            }
            if (!row.empty()) impl_->rs.add_row(std::move(row));
        }
    }
    relation_rank_ = impl_->rs.rank();
    quotient_dim_ = acyclic_count_ - relation_rank_;
    lines_are_basis_ = true;
    for (int c = 0; c < impl_->first_line_col; ++c)
        if (!impl_->rs.has_pivot(c)) lines_are_basis_ = false;
}

GraphVector LineOracle::reduce(const GraphVector& v) const {
    RowSpace::Row row;
    for (auto& [g, c] : v.terms()) {
        if (!g.is_simple() || !is_acyclic(g)) continue;
        auto [it, fresh] = row.try_emplace(impl_->col.at(g), 0);
        it->second += c;
        if (it->second == 0) row.erase(it);
    }
    RowSpace::Row res = impl_->rs.reduce(std::move(row));
    GraphVector out(impl_->n);
    for (auto& [c, val] : res) out.add(impl_->by_col[c], val);
    return out;
}

} // namespace pcl
