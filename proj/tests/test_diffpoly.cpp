#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcl/diffpoly.hpp"
#include "pcl/lampoly.hpp"

#include <random>

using namespace pcl;

static DiffPoly u(int ord = 0) { return DiffPoly::u(0, ord); }

TEST_CASE("derive basics") {
    CHECK(derive(DiffPoly::one()).is_zero());
    CHECK(derive(DiffPoly::zero()).is_zero());

    // Leibniz: d(u*u) = 2 u u'
    CHECK(derive(u() * u()) == Rat(2) * u() * u(1));

    // d(u'^3) = 3 u'^2 u''
    DiffPoly up3 = u(1) * u(1) * u(1);
    CHECK(derive(up3) == Rat(3) * u(1) * u(1) * u(2));

    CHECK(derive(u(), 3) == u(3));
}

TEST_CASE("derive is a derivation on random pairs") {
    std::mt19937_64 rng(7);
    auto rand_poly = [&]() {
        DiffPoly p;
        for (int t = 0; t < 3; ++t) {
            DiffMonomial m;
            DiffPoly f = DiffPoly::one();
            int deg = (int)(rng() % 3);
            for (int i = 0; i < deg; ++i)
                f *= DiffPoly::u((int)(rng() % 2), (int)(rng() % 3));
            p += Rat((long)(rng() % 7) - 3) * f;
        }
        return p;
    };
    for (int it = 0; it < 20; ++it) {
        DiffPoly p = rand_poly(), q = rand_poly();
        CHECK(derive(p * q) == derive(p) * q + p * derive(q));
        CHECK(derive(derive(p * q)) ==
              derive(derive(p)) * q + Rat(2) * derive(p) * derive(q) + p * derive(derive(q)));
    }
}

TEST_CASE("partial derivative") {
    DiffPoly p = u() * u() * u(1) + Rat(3) * u(2);
    CHECK(partial(p, {0, 0}) == Rat(2) * u() * u(1));
    CHECK(partial(p, {0, 1}) == u() * u());
    CHECK(partial(p, {0, 2}) == DiffPoly(Rat(3)));
    CHECK(partial(p, {1, 0}).is_zero());
}

TEST_CASE("string output") {
    CHECK(DiffPoly::zero().str() == "0");
    CHECK(DiffPoly::one().str() == "1");
    DiffPoly p = u() * u() - Rat(1, 2) * u(1);
    CHECK(p.str({"u"}) == "u^2 - 1/2*u'");
}

TEST_CASE("normalize: quotient normal form") {
    // n=1: l1 * v -> -v'
    DiffPoly v = u() * u();
    LamPoly p = LamPoly::lam(1, 0, 1, v);
    CHECK(normalize(p) == LamPoly::constant(1, -derive(v)));

    // n=2: l2 * v -> -l1*v - v'
    LamPoly q = LamPoly::lam(2, 1, 1, v);
    LamPoly expect = LamPoly::lam(2, 0, 1, -v) + LamPoly::constant(2, -derive(v));
    CHECK(normalize(q) == expect);

    // n=2: (l1+l2)*v -> -v'
    LamPoly s = LamPoly::lam(2, 0, 1, v) + LamPoly::lam(2, 1, 1, v);
    CHECK(normalize(s) == LamPoly::constant(2, -derive(v)));
}

TEST_CASE("normalize is idempotent, linear, and kills the ideal") {
    std::mt19937_64 rng(11);
    auto rand_lp = [&](int n) {
        LamPoly p(n);
        for (int t = 0; t < 4; ++t) {
            LamPoly::Key k(n);
            for (int i = 0; i < n; ++i) k[i] = (int)(rng() % 3);
            DiffPoly c = Rat((long)(rng() % 5) - 2) * DiffPoly::u(0, (int)(rng() % 2));
            if ((rng() % 2) == 0) c *= DiffPoly::u(0, 1);
            p += LamPoly::term(k, c);
        }
        return p;
    };
    for (int n = 1; n <= 3; ++n) {
        // ideal generator: d + l1 + ... + ln acting on a random element
        LamPoly ideal_gen(n);
        for (int it = 0; it < 10; ++it) {
            LamPoly p = rand_lp(n), q = rand_lp(n);
            CHECK(normalize(normalize(p)) == normalize(p));
            CHECK(normalize(p + q) == normalize(p) + normalize(q));
            std::vector<Rat> ones(n, Rat(1));
            LamPoly member = apply_op(ones, Rat(1), q);
            CHECK(normalize(p + member) == normalize(p));
        }
    }
}

TEST_CASE("op_pow expands the exchange rule") {
    // P independent of the substituted variable is unchanged.
    LamPoly p = LamPoly::lam(2, 0, 2, u());
    CHECK(subst_op(p, 1, {Rat(0), Rat(0)}, Rat(0)) == p);

    // x -> l1 + d on x*v gives l1*v + v'.
    LamPoly xv = LamPoly::lam(2, 1, 1, u());
    LamPoly got = subst_op(xv, 1, {Rat(1), Rat(0)}, Rat(1));
    CHECK(got == LamPoly::lam(2, 0, 1, u()) + LamPoly::constant(2, u(1)));

    // degree-2 case expanded by hand: (l1+d)^2 v = l1^2 v + 2 l1 v' + v''.
    LamPoly x2v = LamPoly::lam(2, 1, 2, u());
    LamPoly got2 = subst_op(x2v, 1, {Rat(1), Rat(0)}, Rat(1));
    LamPoly want2 = LamPoly::lam(2, 0, 2, u()) + LamPoly::lam(2, 0, 1, Rat(2) * u(1)) +
                    LamPoly::constant(2, u(2));
    CHECK(got2 == want2);
}

TEST_CASE("LamPoly arithmetic and helpers") {
    LamPoly a = LamPoly::lam(3, 0) + LamPoly::lam(3, 1);
    LamPoly b = a * a;
    CHECK(b.degree_in(0) == 2);
    CHECK(b.degree_in(2) == 0);
    CHECK(coeff_of(b, 0, 1) == Rat(2) * LamPoly::lam(3, 1));
    CHECK(dlam(b, 0) == Rat(2) * a);

    LamPoly moved = map_vars(a, 4, {2, 3, 0});
    CHECK(moved == LamPoly::lam(4, 2) + LamPoly::lam(4, 3));

    CHECK(as_diffpoly(LamPoly::constant(2, u())) == u());
}
