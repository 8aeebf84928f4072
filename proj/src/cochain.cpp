#include "pcl/cochain.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pcl {

ClCochain ClCochain::zero(int arity) {
    return ClCochain(arity, [arity](const LineGraph&, const Tensor&) { return LamPoly(arity); });
}

ClCochain ClCochain::unit() {
    return ClCochain(1, [](const LineGraph&, const Tensor& v) { return lift(1, v[0]); });
}

LamPoly ClCochain::on_line(const LineGraph& line, const Tensor& v) const {
    if (!rule_) throw std::logic_error("empty cochain rule");
    if ((int)v.size() != arity_) throw std::invalid_argument("arity mismatch");
    LamPoly r = rule_(line, v);
    if (r.nvars() != arity_) throw std::logic_error("cochain rule returned wrong variable count");
    return r;
}

ClCochain operator+(const ClCochain& a, const ClCochain& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    return ClCochain(a.arity(), [a, b](const LineGraph& line, const Tensor& v) {
        return a.on_line(line, v) + b.on_line(line, v);
    });
}

ClCochain operator-(const ClCochain& a, const ClCochain& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    return ClCochain(a.arity(), [a, b](const LineGraph& line, const Tensor& v) {
        return a.on_line(line, v) - b.on_line(line, v);
    });
}

ClCochain operator*(const Rat& c, const ClCochain& a) {
    return ClCochain(a.arity(),
                     [c, a](const LineGraph& line, const Tensor& v) { return a.on_line(line, v) * c; });
}

LamPoly evaluate(const ClCochain& f, const Digraph& g, const Tensor& v) {
    int n = f.arity();
    if (g.n() != n || (int)v.size() != n) throw std::invalid_argument("arity mismatch");
    auto& lines = enumerate_lines(n);
    LamPoly out(n);
    GraphVector red = reduce_to_lines(GraphVector::single(g));
    for (auto& [h, c] : red.terms()) {
        auto idx = line_index(h);
        if (!idx) throw std::logic_error("reduction produced a non-line graph");
        out += f.on_line(lines[*idx], v) * c;
    }
    return normalize(out);
}

ClCochain act_cochain(const ClCochain& f, const Perm& sigma) {
    int n = f.arity();
    if (sigma.size() != n) throw std::invalid_argument("arity mismatch");
    Perm inv = sigma.inverse();
    int eps = koszul_sign(sigma, std::vector<int>(n, 1));
    std::vector<int> mp(n);
    for (int i = 1; i <= n; ++i) mp[i - 1] = inv(i) - 1;
    return ClCochain(n, [f, sigma, inv, eps, mp, n](const LineGraph& line, const Tensor& v) {
        Tensor vp(n);
        for (int i = 1; i <= n; ++i) vp[i - 1] = v[inv(i) - 1];
        LamPoly r = evaluate(f, act_graph(sigma, line.to_digraph(n)), vp);
        r = map_vars(r, n, mp);
        if (eps < 0) r *= Rat(-1);
        return r;
    });
}

LamPoly compose(const ClCochain& f, const std::vector<ClCochain>& gs, const Digraph& gamma,
                const Tensor& v) {
    int n = (int)gs.size();
    if (f.arity() != n) throw std::invalid_argument("arity mismatch");
    std::vector<int> sizes;
    std::vector<int> offset = {0};
    for (auto& gi : gs) {
        sizes.push_back(gi.arity());
        offset.push_back(offset.back() + gi.arity());
    }
    int big = offset.back();
    if (gamma.n() != big || (int)v.size() != big) throw std::invalid_argument("arity mismatch");

    auto co = cocompose(gamma, sizes);

    // sign from moving the inner maps past the odd inputs
    int sgn = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sgn += gs[j].parity() * (sizes[i] & 1);

    // inner values, lifted to big lambda-variables plus n x-variables, with
    // lambda_k shifted by the sum of x_j over externally connected blocks j
    int nv = big + n;
    std::vector<LamPoly> w(n);
    for (int i = 0; i < n; ++i) {
        Tensor slice(v.begin() + offset[i], v.begin() + offset[i + 1]);
        std::vector<int> mp(sizes[i]);
        std::iota(mp.begin(), mp.end(), offset[i]);
        LamPoly wl = map_vars(evaluate(gs[i], co.blocks[i], slice), nv, mp);
        for (int r = 0; r < sizes[i]; ++r) {
            int gv = offset[i] + r;
            auto ext = externally_connected(gamma, sizes, gv + 1);
            if (ext.empty()) continue;
            LamPoly lin = LamPoly::lam(nv, gv);
            for (int j : ext) lin += LamPoly::lam(nv, big + j - 1);
            wl = subst_var(wl, gv, lin);
        }
        w[i] = wl;
    }

    // expand the tensor product, keeping one coefficient factor per block so
    // that the x-operators can still act on the right factor
    struct Piece {
        LamPoly::Key key;
        std::vector<DiffPoly> parts;
    };
    std::vector<Piece> pieces = {{LamPoly::Key(nv, 0), {}}};
    for (int i = 0; i < n; ++i) {
        std::vector<Piece> next;
        for (auto& p : pieces)
            for (auto& [k, c] : w[i].terms()) {
                Piece q = p;
                for (int t = 0; t < nv; ++t) q.key[t] += k[t];
                q.parts.push_back(c);
                next.push_back(std::move(q));
            }
        pieces = std::move(next);
    }

    LamPoly acc(big);
    for (auto& p : pieces) {
        LamPoly::Key lamkey(p.key.begin(), p.key.begin() + big);
        // eliminate x_k: it acts on factor k as Lambda_k + d
        std::vector<LamPoly> acted(n);
        for (int k = 0; k < n; ++k) {
            std::vector<Rat> coeffs(big, Rat(0));
            for (int j = offset[k]; j < offset[k + 1]; ++j) coeffs[j] = Rat(1);
            acted[k] = op_pow(coeffs, Rat(1), p.key[big + k],
                              LamPoly::constant(big, p.parts[k]));
        }
        // scalar lambda-monomials commute out of the outer map
        struct Combo {
            LamPoly::Key key;
            Tensor args;
        };
        std::vector<Combo> combos = {{lamkey, {}}};
        for (int k = 0; k < n; ++k) {
            std::vector<Combo> next;
            for (auto& cmb : combos)
                for (auto& [kk, cc] : acted[k].terms()) {
                    Combo q = cmb;
                    for (int t = 0; t < big; ++t) q.key[t] += kk[t];
                    q.args.push_back(cc);
                    next.push_back(std::move(q));
                }
            combos = std::move(next);
        }
        for (auto& cmb : combos) {
            LamPoly outer = evaluate(f, co.collapsed, cmb.args);
            // outer variable k becomes Lambda_k, the block's total lambda
            LamPoly mapped(big);
            for (auto& [rk, rc] : outer.terms()) {
                LamPoly t = LamPoly::constant(big, rc);
                for (int k = 0; k < n; ++k)
                    for (int e = 0; e < rk[k]; ++e) {
                        LamPoly blk(big);
                        for (int j = offset[k]; j < offset[k + 1]; ++j)
                            blk += LamPoly::lam(big, j);
                        t *= blk;
                    }
                mapped += t;
            }
            acc += LamPoly::term(cmb.key, DiffPoly::one()) * mapped;
        }
    }
    if (sgn & 1) acc *= Rat(-1);
    return normalize(acc);
}

ClCochain compose_cochain(const ClCochain& f, const std::vector<ClCochain>& gs) {
    if (f.arity() != (int)gs.size()) throw std::invalid_argument("arity mismatch");
    int big = 0;
    for (auto& gi : gs) big += gi.arity();
    return ClCochain(big, [f, gs, big](const LineGraph& line, const Tensor& v) {
        return compose(f, gs, line.to_digraph(big), v);
    });
}

ClCochain circ(const ClCochain& f, const ClCochain& g, int i) {
    if (i < 1 || i > f.arity()) throw std::invalid_argument("position out of range");
    std::vector<ClCochain> gs(f.arity(), ClCochain::unit());
    gs[i - 1] = g;
    return compose_cochain(f, gs);
}

ClCochain box(const WElement& f, const WElement& g) {
    ClCochain fg = circ(f.cochain, g.cochain, 1);
    ClCochain out = ClCochain::zero(fg.arity());
    for (auto& s : enumerate_shuffles(g.cochain.arity(), f.degree()))
        out = out + act_cochain(fg, s.inverse());
    return out;
}

WElement bracket(const WElement& f, const WElement& g) {
    ClCochain a = box(f, g), b = box(g, f);
    return WElement{(f.parity() && g.parity()) ? a + b : a - b};
}

WElement symmetrize(const ClCochain& z) {
    int n = z.arity();
    ClCochain out = ClCochain::zero(n);
    Rat count(0);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        out = out + act_cochain(z, Perm(p));
        count += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return WElement{(Rat(1) / count) * out};
}

ClCochain grade_component(const ClCochain& f, int r) {
    return ClCochain(f.arity(), [f, r](const LineGraph& line, const Tensor& v) {
        int edges = 0;
        for (auto& c : line.components) edges += (int)c.size() - 1;
        if (edges != r) return LamPoly(f.arity());
        return f.on_line(line, v);
    });
}

bool cochains_agree(const ClCochain& a, const ClCochain& b, const std::vector<Tensor>& samples) {
    if (a.arity() != b.arity()) return false;
    for (auto& line : enumerate_lines(a.arity()))
        for (auto& v : samples)
            if (normalize(a.on_line(line, v)) != normalize(b.on_line(line, v))) return false;
    return true;
}

bool is_symmetric(const ClCochain& f, const std::vector<Tensor>& samples) {
    int n = f.arity();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        if (!cochains_agree(f, act_cochain(f, Perm(p)), samples)) return false;
    } while (std::next_permutation(p.begin(), p.end()));
    return true;
}

bool check_sesquilinearity(const ClCochain& f, const std::vector<Tensor>& samples) {
    int n = f.arity();
    for (auto& line : enumerate_lines(n)) {
        Digraph g = line.to_digraph(n);
        for (auto& v : samples) {
            LamPoly value = evaluate(f, g, v);
            for (auto& comp : line.components) {
                std::vector<int> sorted = comp;
                std::sort(sorted.begin(), sorted.end());
                bool has_last = sorted.back() == n;
                // lambda-derivatives agree within the component; the
                // eliminated variable has derivative zero on the
                // representative, so a component containing it forces the
                // other derivatives to vanish
                if (has_last) {
                    for (int x : sorted)
                        if (x != n && !normalize(dlam(value, x - 1)).is_zero()) return false;
                } else {
                    for (size_t t = 1; t < sorted.size(); ++t)
                        if (!normalize(dlam(value, sorted[0] - 1) - dlam(value, sorted[t] - 1))
                                 .is_zero())
                            return false;
                }
                // d applied across the component multiplies the value by
                // minus the component's total lambda
                LamPoly lhs(n);
                for (int x : comp) {
                    Tensor vd = v;
                    vd[x - 1] = derive(vd[x - 1]);
                    lhs += evaluate(f, g, vd);
                }
                LamPoly total(n);
                for (int x : comp) total += LamPoly::lam(n, x - 1);
                if (!normalize(lhs + total * value).is_zero()) return false;
            }
        }
    }
    return true;
}

} // namespace pcl
