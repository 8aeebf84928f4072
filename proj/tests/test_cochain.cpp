#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcl/cochain.hpp"

#include <vector>

using namespace pcl;

static std::vector<Tensor> samples(int n) {
    DiffPoly u = DiffPoly::u(0, 0), up = DiffPoly::u(0, 1);
    std::vector<DiffPoly> pool = {u, up, u * u, u + derive(up)};
    std::vector<Tensor> out;
    for (int s = 0; s < 3; ++s) {
        Tensor t;
        for (int i = 0; i < n; ++i) t.push_back(pool[(s + i) % pool.size()]);
        out.push_back(t);
    }
    return out;
}

// top-degree cochain: supported on connected lines, value a product of
// derivatives of the inputs in path order, with line-dependent exponents
static ClCochain top_cochain(int n, int variant) {
    return ClCochain(n, [n, variant](const LineGraph& line, const Tensor& v) {
        if ((int)line.components.size() != 1) return LamPoly(n);
        auto& seq = line.components[0];
        DiffPoly prod = DiffPoly::one();
        for (int i = 0; i < n; ++i) prod *= derive(v[seq[i] - 1], (variant + i * seq[i]) % 2);
        return lift(n, prod) * Rat(1 + (variant + seq[0]) % 3);
    });
}

// the bracket [a_l b] of the structure [u_l u] = l on one generator,
// extended by sesquilinearity and Leibniz
static LamPoly gfz_bracket(const DiffPoly& a, const DiffPoly& b) {
    LamPoly inner(1);
    for (int i = 0; i <= a.max_order(); ++i)
        inner += op_pow({Rat(-1)}, Rat(-1), i, lift(1, partial(a, {0, i})));
    LamPoly out(1);
    for (int j = 0; j <= b.max_order(); ++j)
        out += op_pow({Rat(1)}, Rat(1), j + 1, inner) * partial(b, {0, j});
    return out;
}

// arity-2 cochain: the product on the one-edge line, the bracket above on
// the edgeless graph
static ClCochain product_bracket() {
    return ClCochain(2, [](const LineGraph& line, const Tensor& v) {
        if (line.components.size() == 1) return lift(2, v[0] * v[1]);
        return map_vars(gfz_bracket(v[0], v[1]), 2, {0});
    });
}

TEST_CASE("bracket helper") {
    DiffPoly u = DiffPoly::u(0, 0), up = DiffPoly::u(0, 1);
    CHECK(gfz_bracket(u, u) == LamPoly::lam(1, 0));
    CHECK(gfz_bracket(u, up) == LamPoly::lam(1, 0, 2));
    CHECK(gfz_bracket(up, u) == -LamPoly::lam(1, 0, 2));
    // Leibniz: [u_l u^2] = 2u l
    CHECK(gfz_bracket(u, u * u) == LamPoly::lam(1, 0, 1, u * Rat(2)));
}

TEST_CASE("unit and evaluation basics") {
    ClCochain one = ClCochain::unit();
    DiffPoly u = DiffPoly::u(0, 0);
    CHECK(evaluate(one, parse_digraph("n=1"), {u * u}) == lift(1, u * u));

    ClCochain f = product_bracket();
    CHECK(evaluate(f, parse_digraph("n=2; edges: 1>2, 2>1"), {u, u}).is_zero());

    // edge reversal changes the sign
    auto& lines = enumerate_lines(2);
    int idx = line_index(parse_digraph("n=2; edges: 1>2")).value();
    Tensor v = {u, u * u};
    LamPoly direct = normalize(f.on_line(lines[idx], v));
    CHECK(evaluate(f, parse_digraph("n=2; edges: 2>1"), v) == -direct);

    CHECK_THROWS(evaluate(f, parse_digraph("n=3"), {u, u}));
    CHECK_THROWS(evaluate(f, parse_digraph("n=2"), {u}));
}

TEST_CASE("sesquilinearity") {
    for (int n = 1; n <= 3; ++n)
        for (int variant = 0; variant < 2; ++variant)
            CHECK(check_sesquilinearity(top_cochain(n, variant), samples(n)));
    CHECK(check_sesquilinearity(ClCochain::unit(), samples(1)));
    CHECK(check_sesquilinearity(product_bracket(), samples(2)));

    // preserved by composition, the group action, and symmetrization
    ClCochain comp = circ(product_bracket(), product_bracket(), 1);
    CHECK(check_sesquilinearity(comp, samples(3)));
    CHECK(check_sesquilinearity(act_cochain(comp, parse_perm("[2 3 1]")), samples(3)));
    CHECK(check_sesquilinearity(symmetrize(product_bracket()).cochain, samples(2)));

    // connected graphs give classes with no residual lambda-dependence
    for (auto& line : enumerate_lines(3)) {
        if (line.components.size() != 1) continue;
        for (auto& v : samples(3))
            CHECK(evaluate(comp, line.to_digraph(3), v).total_degree() <= 0);
    }
}

TEST_CASE("total derivative rule") {
    for (ClCochain f : {product_bracket(), circ(product_bracket(), product_bracket(), 2)}) {
        int n = f.arity();
        LamPoly total(n);
        for (int i = 0; i < n; ++i) total += LamPoly::lam(n, i);
        for (auto& line : enumerate_lines(n))
            for (auto& v : samples(n)) {
                LamPoly value = evaluate(f, line.to_digraph(n), v);
                LamPoly sum(n);
                for (int i = 0; i < n; ++i) {
                    Tensor vd = v;
                    vd[i] = derive(vd[i]);
                    sum += evaluate(f, line.to_digraph(n), vd);
                }
                CHECK(normalize(sum + total * value).is_zero());
            }
    }
}

TEST_CASE("symmetric group action") {
    ClCochain f = circ(product_bracket(), product_bracket(), 1);
    auto smp = samples(3);
    CHECK(cochains_agree(act_cochain(f, Perm::identity(3)), f, smp));
    Perm s = parse_perm("[2 3 1]"), t = parse_perm("[2 1 3]");
    CHECK(cochains_agree(act_cochain(act_cochain(f, s), t), act_cochain(f, s * t), smp));
    CHECK(cochains_agree(act_cochain(act_cochain(f, t), s), act_cochain(f, t * s), smp));

    // the product-plus-bracket cochain is already symmetric (commutative
    // product, skewsymmetric bracket, odd slots)
    CHECK(is_symmetric(product_bracket(), samples(2)));
    CHECK(is_symmetric(symmetrize(f).cochain, smp));
    ClCochain skew(2, [](const LineGraph& line, const Tensor& v) {
        if (line.components.size() != 1) return LamPoly(2);
        auto& seq = line.components[0];
        return lift(2, v[seq[0] - 1] * derive(v[seq[1] - 1]));
    });
    CHECK_FALSE(is_symmetric(skew, samples(2)));
}

TEST_CASE("operad unit axioms") {
    ClCochain f = product_bracket();
    auto smp = samples(2);
    CHECK(cochains_agree(compose_cochain(f, {ClCochain::unit(), ClCochain::unit()}), f, smp));
    CHECK(cochains_agree(circ(ClCochain::unit(), f, 1), f, smp));
    ClCochain g = top_cochain(3, 1);
    CHECK(cochains_agree(circ(g, ClCochain::unit(), 2), g, samples(3)));
}

// Koszul sign produced when the tensor product of the g's is applied to the
// h's, block by block.
static int assoc_sign(const std::vector<ClCochain>& gs, const std::vector<ClCochain>& hs) {
    std::vector<int> blockpar(gs.size(), 0);
    size_t pos = 0;
    for (size_t i = 0; i < gs.size(); ++i)
        for (int r = 0; r < gs[i].arity(); ++r) blockpar[i] += hs[pos++].parity();
    int sgn = 0;
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j) sgn += gs[j].parity() * blockpar[i];
    return sgn & 1;
}

static void check_assoc(const ClCochain& f, const std::vector<ClCochain>& gs,
                        const std::vector<ClCochain>& hs) {
    ClCochain rhs = compose_cochain(compose_cochain(f, gs), hs);
    std::vector<ClCochain> mid;
    size_t pos = 0;
    for (auto& gi : gs) {
        std::vector<ClCochain> slice(hs.begin() + pos, hs.begin() + pos + gi.arity());
        pos += gi.arity();
        mid.push_back(compose_cochain(gi, slice));
    }
    ClCochain lhs = compose_cochain(f, mid);
    if (assoc_sign(gs, hs)) lhs = Rat(-1) * lhs;
    CHECK(cochains_agree(lhs, rhs, samples(rhs.arity())));
}

TEST_CASE("operad associativity") {
    ClCochain m = product_bracket(), one = ClCochain::unit();
    check_assoc(m, {one, one}, {m, one});
    check_assoc(m, {one, one}, {one, m});
    check_assoc(m, {m, one}, {one, one, one});
    check_assoc(one, {m}, {one, m});
    check_assoc(m, {m, one}, {one, one, m});
    check_assoc(m, {one, m}, {top_cochain(2, 0), one, one});
}

TEST_CASE("operad equivariance") {
    ClCochain m = product_bracket();
    std::vector<ClCochain> gs = {m, ClCochain::unit()};
    std::vector<int> gpar = {gs[0].parity(), gs[1].parity()};
    auto smp = samples(3);
    for (auto& sigma : {parse_perm("[1 2]"), parse_perm("[2 1]")})
        for (auto& tau1 : {parse_perm("[1 2]"), parse_perm("[2 1]")}) {
            Perm tau2 = Perm::identity(1);
            ClCochain lhs = compose_cochain(act_cochain(m, sigma),
                                            {act_cochain(gs[0], tau1), act_cochain(gs[1], tau2)});
            ClCochain rhs = act_cochain(compose_cochain(m, act_on_tuple(sigma, gs)),
                                        block_compose(sigma, {tau1, tau2}));
            if (koszul_sign(sigma, gpar) < 0) rhs = Rat(-1) * rhs;
            CHECK(cochains_agree(lhs, rhs, smp));
        }
}

TEST_CASE("composition respects the cycle relations") {
    // direct formula on a non-line graph versus line-basis extension
    ClCochain m = product_bracket();
    std::vector<ClCochain> gs = {m, ClCochain::unit()};
    ClCochain comp = compose_cochain(m, gs);
    for (auto& g : {parse_digraph("n=3; edges: 2>1"), parse_digraph("n=3; edges: 2>1, 2>3"),
                    parse_digraph("n=3; edges: 3>1, 1>2"), parse_digraph("n=3; edges: 3>2, 2>1")})
        for (auto& v : samples(3)) CHECK(compose(m, gs, g, v) == evaluate(comp, g, v));
}

TEST_CASE("box and bracket") {
    WElement X{product_bracket()};
    ClCochain bx = box(X, X);
    CHECK(bx.arity() == 3);
    CHECK((int)enumerate_shuffles(2, 1).size() == 3);

    auto smp = samples(3);
    WElement br = bracket(X, X);
    CHECK(cochains_agree(br.cochain, Rat(2) * bx, smp));
    CHECK(is_symmetric(br.cochain, smp));

    // box against the degree-0 element given by the unit: 1 box X = X and
    // X box 1 = 2X (two (1,1)-shuffles, X symmetric)
    WElement I{ClCochain::unit()};
    CHECK(cochains_agree(box(I, X), X.cochain, samples(2)));
    CHECK(cochains_agree(box(X, I), Rat(2) * X.cochain, samples(2)));
}

TEST_CASE("grading") {
    ClCochain f = circ(product_bracket(), product_bracket(), 1);
    auto smp = samples(3);
    ClCochain sum = grade_component(f, 0) + grade_component(f, 1) + grade_component(f, 2);
    CHECK(cochains_agree(sum, f, smp));
    for (auto& line : enumerate_lines(3))
        for (auto& v : smp) {
            CHECK(grade_component(f, 3).on_line(line, v).is_zero());
            if (line.components.size() != 1)
                CHECK(grade_component(f, 2).on_line(line, v).is_zero());
        }
}
