#include "pcl/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pcl {

Digraph::Digraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [a, b] : edges_)
        if (a < 1 || a > n_ || b < 1 || b > n_ || a == b)
            throw std::invalid_argument("bad edge");
    std::sort(edges_.begin(), edges_.end());
}

bool Digraph::is_simple() const {
    return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

std::string Digraph::str() const {
    std::ostringstream os;
    os << "n=" << n_;
    if (!edges_.empty()) {
        os << "; edges: ";
        for (size_t i = 0; i < edges_.size(); ++i) {
            if (i) os << ", ";
            os << edges_[i].first << ">" << edges_[i].second;
        }
    }
    return os.str();
}

Digraph parse_digraph(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace((unsigned char)c)) t += c;
    auto semi = t.find(';');
    std::string head = t.substr(0, semi);
    if (head.rfind("n=", 0) != 0) throw std::invalid_argument("expected n=<count>");
    int n = std::stoi(head.substr(2));
    std::vector<Digraph::Edge> edges;
    if (semi != std::string::npos) {
        std::string rest = t.substr(semi + 1);
        if (rest.rfind("edges:", 0) == 0) rest = rest.substr(6);
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) continue;
            auto gt = item.find('>');
            if (gt == std::string::npos) throw std::invalid_argument("expected a>b");
            edges.push_back({std::stoi(item.substr(0, gt)), std::stoi(item.substr(gt + 1))});
        }
    }
    return Digraph(n, std::move(edges));
}

Digraph act_graph(const Perm& sigma, const Digraph& g) {
    if (sigma.size() != g.n()) throw std::invalid_argument("arity mismatch");
    std::vector<Digraph::Edge> edges;
    edges.reserve(g.edges().size());
    for (auto& [a, b] : g.edges()) edges.push_back({sigma(a), sigma(b)});
    return Digraph(g.n(), std::move(edges));
}

bool is_acyclic(const Digraph& g) {
    if (!g.is_simple()) return false;
    std::vector<std::vector<int>> adj(g.n() + 1);
    for (auto& [a, b] : g.edges()) adj[a].push_back(b);
    std::vector<int> state(g.n() + 1, 0); // 0 new, 1 active, 2 done
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int w : adj[v]) {
            if (state[w] == 1) return false;
            if (state[w] == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v = 1; v <= g.n(); ++v)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

std::vector<std::vector<int>> oriented_cycles(const Digraph& g) {
    std::set<Digraph::Edge> eset(g.edges().begin(), g.edges().end());
    std::vector<std::vector<int>> adj(g.n() + 1);
    for (auto& [a, b] : eset) adj[a].push_back(b);
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> onpath(g.n() + 1, 0);
    int start = 0;
    std::function<void(int)> dfs = [&](int v) {
        path.push_back(v);
        onpath[v] = 1;
        for (int w : adj[v]) {
            if (w == start)
                out.push_back(path);
            else if (w > start && !onpath[w])
                dfs(w);
        }
        onpath[v] = 0;
        path.pop_back();
    };
    for (start = 1; start <= g.n(); ++start) dfs(start);
    return out;
}

Digraph standard_line(int n) {
    std::vector<Digraph::Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Digraph(n, std::move(edges));
}

int block_of(int vertex, const std::vector<int>& sizes) {
    int acc = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        acc += sizes[i];
        if (vertex <= acc) return (int)i + 1;
    }
    throw std::invalid_argument("vertex outside blocks");
}

Cocomposition cocompose(const Digraph& g, const std::vector<int>& sizes) {
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total != g.n()) throw std::invalid_argument("block sizes do not sum to n");
    for (int m : sizes)
        if (m < 1) throw std::invalid_argument("empty block");
    int n = (int)sizes.size();
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + sizes[i];

    // target list index: 0 for collapsed, i for block i
    std::vector<std::vector<std::pair<Digraph::Edge, int>>> buckets(n + 1);
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [a, b] = g.edges()[e];
        int ba = block_of(a, sizes), bb = block_of(b, sizes);
        if (ba == bb)
            buckets[ba].push_back({{a - offset[ba - 1], b - offset[ba - 1]}, (int)e});
        else
            buckets[0].push_back({{ba, bb}, (int)e});
    }
    Cocomposition out;
    out.edge_images.resize(g.edges().size());
    for (int t = 0; t <= n; ++t) {
        std::stable_sort(buckets[t].begin(), buckets[t].end(),
                         [](auto& x, auto& y) { return x.first < y.first; });
        std::vector<Digraph::Edge> edges;
        for (size_t pos = 0; pos < buckets[t].size(); ++pos) {
            edges.push_back(buckets[t][pos].first);
            out.edge_images[buckets[t][pos].second] = {t, (int)pos};
        }
        if (t == 0)
            out.collapsed = Digraph(n, std::move(edges));
        else
            out.blocks.push_back(Digraph(sizes[t - 1], std::move(edges)));
    }
    return out;
}

std::vector<int> externally_connected(const Digraph& g, const std::vector<int>& sizes, int k) {
    if (k < 1 || k > g.n()) throw std::invalid_argument("vertex out of range");
    Cocomposition co = cocompose(g, sizes);
    int i = block_of(k, sizes);
    std::set<int> result;
    // collapsed-edge positions that are images of edges incident to k
    std::set<int> qualifying;
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [a, b] = g.edges()[e];
        if ((a == k || b == k) && co.edge_images[e].block_index == 0)
            qualifying.insert(co.edge_images[e].position);
    }
    int n = (int)sizes.size();
    for (int pos : qualifying) {
        auto [a, b] = co.collapsed.edges()[pos];
        int w = (a == i) ? b : a;
        // undirected connectivity in collapsed minus this one edge copy
        std::vector<std::set<int>> comp(1);
        std::vector<int> root(n + 1);
        std::iota(root.begin(), root.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return root[x] == x ? x : root[x] = find(root[x]);
        };
        for (size_t e2 = 0; e2 < co.collapsed.edges().size(); ++e2) {
            if ((int)e2 == pos) continue;
            auto [x, y] = co.collapsed.edges()[e2];
            root[find(x)] = find(y);
        }
        for (int j = 1; j <= n; ++j)
            if (find(j) == find(w)) result.insert(j);
    }
    return std::vector<int>(result.begin(), result.end());
}

std::vector<int> externally_connected_oracle(const Digraph& g, const std::vector<int>& sizes,
                                             int k) {
    Cocomposition co = cocompose(g, sizes);
    int i = block_of(k, sizes);
    std::set<int> qualifying;
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [a, b] = g.edges()[e];
        if ((a == k || b == k) && co.edge_images[e].block_index == 0)
            qualifying.insert(co.edge_images[e].position);
    }
    auto& edges = co.collapsed.edges();
    std::set<int> result;
    std::vector<char> used(edges.size(), 0);
    int n = (int)sizes.size();
    std::function<void(int)> walk = [&](int v) {
        result.insert(v);
        if ((int)result.size() == n) return;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (used[e]) continue;
            auto [a, b] = edges[e];
            int w = a == v ? b : b == v ? a : 0;
            if (!w) continue;
            used[e] = 1;
            walk(w);
            used[e] = 0;
            if ((int)result.size() == n) return;
        }
    };
    for (int pos : qualifying) {
        auto [a, b] = edges[pos];
        int w = (a == i) ? b : a;
        used[pos] = 1;
        walk(w);
        used[pos] = 0;
    }
    return std::vector<int>(result.begin(), result.end());
}

Digraph LineGraph::to_digraph(int n) const {
    std::vector<Digraph::Edge> edges;
    for (auto& comp : components)
        for (size_t i = 0; i + 1 < comp.size(); ++i) edges.push_back({comp[i], comp[i + 1]});
    return Digraph(n, std::move(edges));
}

std::string LineGraph::str() const {
    std::ostringstream os;
    for (size_t c = 0; c < components.size(); ++c) {
        if (c) os << " | ";
        for (size_t i = 0; i < components[c].size(); ++i) {
            if (i) os << ">";
            os << components[c][i];
        }
    }
    return os.str();
}

static void lines_on(std::vector<int> verts, std::vector<std::vector<int>>& partial,
                     std::vector<LineGraph>& out) {
    if (verts.empty()) {
        LineGraph lg;
        lg.components = partial;
        std::sort(lg.components.begin(), lg.components.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a[0] < b[0];
                  });
        out.push_back(std::move(lg));
        return;
    }
    // the smallest remaining vertex starts a new component; choose the rest
    // of its component (ordered) from the remaining vertices
    int head = verts[0];
    std::vector<int> rest(verts.begin() + 1, verts.end());
    int r = (int)rest.size();
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> chosen, left;
        for (int i = 0; i < r; ++i)
            ((mask >> i) & 1 ? chosen : left).push_back(rest[i]);
        std::sort(chosen.begin(), chosen.end());
        do {
            std::vector<int> comp = {head};
            comp.insert(comp.end(), chosen.begin(), chosen.end());
            partial.push_back(std::move(comp));
            lines_on(left, partial, out);
            partial.pop_back();
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
}

const std::vector<LineGraph>& enumerate_lines(int n) {
    static std::map<int, std::vector<LineGraph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::vector<LineGraph> out;
    std::vector<std::vector<int>> partial;
    lines_on(verts, partial, out);
    std::sort(out.begin(), out.end());
    return cache[n] = std::move(out);
}

std::vector<std::vector<int>> undirected_components(const Digraph& g) {
    std::vector<int> root(g.n() + 1);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (auto& [a, b] : g.edges()) root[find(a)] = find(b);
    std::map<int, std::vector<int>> comps;
    for (int v = 1; v <= g.n(); ++v) comps[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    std::map<int, std::vector<int>> by_min;
    for (auto& [r, vs] : comps) by_min[vs[0]] = vs;
    for (auto& [m, vs] : by_min) out.push_back(vs);
    return out;
}

std::optional<int> line_index(const Digraph& g) {
    // rebuild the LineGraph structure and validate
    std::map<int, int> succ;
    std::set<int> heads, tails;
    for (auto& [a, b] : g.edges()) {
        if (succ.count(a)) return std::nullopt; // out-degree 2
        succ[a] = b;
        if (tails.count(b)) return std::nullopt; // in-degree 2
        tails.insert(b);
    }
    LineGraph lg;
    std::vector<char> seen(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v) {
        if (seen[v] || tails.count(v)) continue;
        std::vector<int> comp;
        int w = v;
        while (true) {
            if (seen[w]) return std::nullopt;
            seen[w] = 1;
            comp.push_back(w);
            auto itr = succ.find(w);
            if (itr == succ.end()) break;
            w = itr->second;
        }
        if (comp[0] != *std::min_element(comp.begin(), comp.end())) return std::nullopt;
        lg.components.push_back(std::move(comp));
    }
    for (int v = 1; v <= g.n(); ++v)
        if (!seen[v]) return std::nullopt; // part of a cycle
    std::sort(lg.components.begin(), lg.components.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a[0] < b[0];
              });
    auto& all = enumerate_lines(g.n());
    auto pos = std::lower_bound(all.begin(), all.end(), lg);
    if (pos == all.end() || !(*pos == lg)) return std::nullopt;
    return (int)(pos - all.begin());
}

} // namespace pcl
