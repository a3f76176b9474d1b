#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittmod/uea.hpp"
#include "wittmod/witt.hpp"

using namespace wittmod;

namespace {

WittElem rand_witt(std::mt19937_64& rng, int n, int degmax) {
    std::uniform_int_distribution<int> coeff(-3, 3), expo(0, degmax), dir(0, n - 1), nt(1, 3);
    WittElem w(n);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        MultiIndex a(n);
        int budget = expo(rng);
        for (int i = 0; i < n && budget > 0; ++i) {
            std::uniform_int_distribution<int> part(0, budget);
            int v = part(rng);
            a.set(i, v);
            budget -= v;
        }
        w.add({a, dir(rng)}, Rat(coeff(rng)));
    }
    return w;
}

PolyA rand_poly(std::mt19937_64& rng, int n, int degmax) {
    std::uniform_int_distribution<int> coeff(-3, 3), expo(0, degmax), nt(1, 2);
    PolyA p(n);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        MultiIndex a(n);
        for (int i = 0; i < n; ++i) a.set(i, expo(rng) % (degmax + 1));
        p.add(a, Rat(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("weyl defining relation") {
    int n = 1;
    WeylElem d = WeylElem::monomial(MultiIndex(n), MultiIndex{1});
    WeylElem t = WeylElem::monomial(MultiIndex{1}, MultiIndex(n));
    // d t = t d + 1
    WeylElem expect = WeylElem::monomial(MultiIndex{1}, MultiIndex{1}) + WeylElem::one(n);
    CHECK(d * t == expect);
    CHECK(t * d == WeylElem::monomial(MultiIndex{1}, MultiIndex{1}));
}

TEST_CASE("weyl d^2 t^2 expansion") {
    WeylElem d2 = WeylElem::monomial(MultiIndex{0}, MultiIndex{2});
    WeylElem t2 = WeylElem::monomial(MultiIndex{2}, MultiIndex{0});
    WeylElem expect = WeylElem::monomial(MultiIndex{2}, MultiIndex{2}) +
                      WeylElem::monomial(MultiIndex{1}, MultiIndex{1}, Rat(4)) +
                      WeylElem::monomial(MultiIndex{0}, MultiIndex{0}, Rat(2));
    CHECK(d2 * t2 == expect);
}

TEST_CASE("weyl product is associative on random elements") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> expo(0, 2), coeff(-2, 2);
    auto rand_weyl = [&](int n) {
        WeylElem w(n);
        for (int t = 0; t < 2; ++t) {
            MultiIndex a(n), b(n);
            for (int i = 0; i < n; ++i) {
                a.set(i, expo(rng));
                b.set(i, expo(rng));
            }
            w = w + WeylElem::monomial(a, b, Rat(coeff(rng)));
        }
        return w;
    };
    for (int iter = 0; iter < 25; ++iter) {
        for (int n = 1; n <= 2; ++n) {
            WeylElem x = rand_weyl(n), y = rand_weyl(n), z = rand_weyl(n);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("witt bracket frozen examples") {
    SUBCASE("[d1, d2] = 0 at n=2") {
        WittElem a = WittElem::gen(MultiIndex(2), 0);
        WittElem b = WittElem::gen(MultiIndex(2), 1);
        CHECK(witt_bracket(a, b).is_zero());
    }
    SUBCASE("[t d, t^2 d] = t^2 d at n=1") {
        WittElem a = WittElem::gen(MultiIndex{1}, 0);
        WittElem b = WittElem::gen(MultiIndex{2}, 0);
        CHECK(witt_bracket(a, b) == WittElem::gen(MultiIndex{2}, 0));
    }
    SUBCASE("[t1 d2, t2 d1] = t1 d1 - t2 d2") {
        WittElem a = WittElem::gen(MultiIndex{1, 0}, 1);
        WittElem b = WittElem::gen(MultiIndex{0, 1}, 0);
        WittElem expect =
            WittElem::gen(MultiIndex{1, 0}, 0) - WittElem::gen(MultiIndex{0, 1}, 1);
        CHECK(witt_bracket(a, b) == expect);
    }
}

TEST_CASE("tilde bracket frozen examples") {
    SUBCASE("[d1, t1] = 1") {
        TildeElem x = TildeElem::from_witt(WittElem::gen(MultiIndex{0}, 0));
        TildeElem y = TildeElem::from_poly(PolyA::monomial(MultiIndex{1}));
        TildeElem r = tilde_bracket(x, y);
        CHECK(r.vectorfield().is_zero());
        CHECK(r.function() == PolyA::one(1));
    }
    SUBCASE("[t1 d1, t1^2] = 2 t1^2") {
        TildeElem x = TildeElem::from_witt(WittElem::gen(MultiIndex{1}, 0));
        TildeElem y = TildeElem::from_poly(PolyA::monomial(MultiIndex{2}));
        TildeElem r = tilde_bracket(x, y);
        CHECK(r.vectorfield().is_zero());
        CHECK(r.function() == PolyA::monomial(MultiIndex{2}, Rat(2)));
    }
    SUBCASE("functions commute") {
        TildeElem x = TildeElem::from_poly(PolyA::monomial(MultiIndex{2, 0}));
        TildeElem y = TildeElem::from_poly(PolyA::monomial(MultiIndex{0, 3}));
        CHECK(tilde_bracket(x, y).is_zero());
    }
}

TEST_CASE("awlie bracket frozen examples") {
    const int n = 1;
    SUBCASE("[1.d, 1.td] = 1.d") {
        AWLieElem x = AWLieElem::gen(MultiIndex(n), MultiIndex(n), 0);
        AWLieElem y = AWLieElem::gen(MultiIndex(n), MultiIndex{1}, 0);
        CHECK(awlie_bracket(x, y) == x);
    }
    SUBCASE("[t.d, 1.d] = -1.d") {
        AWLieElem x = AWLieElem::gen(MultiIndex{1}, MultiIndex(n), 0);
        AWLieElem y = AWLieElem::gen(MultiIndex(n), MultiIndex(n), 0);
        AWLieElem expect = AWLieElem::gen(MultiIndex(n), MultiIndex(n), 0, Rat(-1));
        CHECK(awlie_bracket(x, y) == expect);
    }
    SUBCASE("[t1.d2, t2.d1] = t1.d1 - t2.d2") {
        AWLieElem x = AWLieElem::gen(MultiIndex{1, 0}, MultiIndex(2), 1);
        AWLieElem y = AWLieElem::gen(MultiIndex{0, 1}, MultiIndex(2), 0);
        AWLieElem expect = AWLieElem::gen(MultiIndex{1, 0}, MultiIndex(2), 0) -
                           AWLieElem::gen(MultiIndex{0, 1}, MultiIndex(2), 1);
        CHECK(awlie_bracket(x, y) == expect);
    }
}

TEST_CASE("brackets are antisymmetric and satisfy Jacobi on random triples") {
    std::mt19937_64 rng(20240812);
    for (int n = 1; n <= 3; ++n) {
        for (int iter = 0; iter < 30; ++iter) {
            WittElem x = rand_witt(rng, n, 4), y = rand_witt(rng, n, 4), z = rand_witt(rng, n, 4);
            CHECK((witt_bracket(x, y) + witt_bracket(y, x)).is_zero());
            WittElem jac = witt_bracket(x, witt_bracket(y, z)) +
                           witt_bracket(y, witt_bracket(z, x)) +
                           witt_bracket(z, witt_bracket(x, y));
            CHECK(jac.is_zero());

            TildeElem tx(rand_witt(rng, n, 3), rand_poly(rng, n, 2));
            TildeElem ty(rand_witt(rng, n, 3), rand_poly(rng, n, 2));
            TildeElem tz(rand_witt(rng, n, 3), rand_poly(rng, n, 2));
            CHECK((tilde_bracket(tx, ty) + tilde_bracket(ty, tx)).is_zero());
            TildeElem tjac = tilde_bracket(tx, tilde_bracket(ty, tz)) +
                             tilde_bracket(ty, tilde_bracket(tz, tx)) +
                             tilde_bracket(tz, tilde_bracket(tx, ty));
            CHECK(tjac.is_zero());
        }
    }
}

TEST_CASE("awlie Jacobi on random triples") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coeff(-2, 2), expo(0, 2);
    auto rand_awlie = [&](int n) {
        AWLieElem x(n);
        std::uniform_int_distribution<int> dir(0, n - 1);
        for (int t = 0; t < 2; ++t) {
            MultiIndex ap(n), al(n);
            for (int i = 0; i < n; ++i) {
                ap.set(i, expo(rng));
                al.set(i, expo(rng));
            }
            x = x + AWLieElem::gen(ap, al, dir(rng), Rat(coeff(rng)));
        }
        return x;
    };
    for (int n = 1; n <= 3; ++n) {
        for (int iter = 0; iter < 25; ++iter) {
            AWLieElem x = rand_awlie(n), y = rand_awlie(n), z = rand_awlie(n);
            CHECK((awlie_bracket(x, y) + awlie_bracket(y, x)).is_zero());
            AWLieElem jac = awlie_bracket(x, awlie_bracket(y, z)) +
                            awlie_bracket(y, awlie_bracket(z, x)) +
                            awlie_bracket(z, awlie_bracket(x, y));
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("awlie bracket agrees with witt bracket when A-parts are 1") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 2; ++n)
        for (int iter = 0; iter < 20; ++iter) {
            WittElem x = rand_witt(rng, n, 3), y = rand_witt(rng, n, 3);
            CHECK(awlie_bracket(awlie_from_witt(x), awlie_from_witt(y)) ==
                  awlie_from_witt(witt_bracket(x, y)));
        }
}

TEST_CASE("centralizer generators") {
    SUBCASE("X_{0,i} is d_i") {
        for (int n = 1; n <= 3; ++n)
            for (int i = 0; i < n; ++i)
                CHECK(centralizer_gen(MultiIndex(n), i) ==
                      AWLieElem::gen(MultiIndex(n), MultiIndex(n), i));
    }
    SUBCASE("X_{e1,1} = 1.t1 d1 - t1.d1") {
        AWLieElem expect = AWLieElem::gen(MultiIndex{0}, MultiIndex{1}, 0) -
                           AWLieElem::gen(MultiIndex{1}, MultiIndex{0}, 0);
        CHECK(centralizer_gen(MultiIndex{1}, 0) == expect);
    }
    SUBCASE("n=1 alpha=2 has 3 terms with coefficients 1, -2, 1") {
        AWLieElem x = centralizer_gen(MultiIndex{2}, 0);
        CHECK(x.terms().size() == 3);
        CHECK(x.terms().coeff({MultiIndex{0}, MultiIndex{2}, 0}) == Rat(1));
        CHECK(x.terms().coeff({MultiIndex{1}, MultiIndex{1}, 0}) == Rat(-2));
        CHECK(x.terms().coeff({MultiIndex{2}, MultiIndex{0}, 0}) == Rat(1));
    }
}

TEST_CASE("A-basis inversion identity at the Lie level") {
    // sum_{0<=beta<=alpha} C(alpha,beta) t^beta . X_{alpha-beta,i} = 1 . t^alpha d_i
    for (int n = 1; n <= 3; ++n) {
        const int degmax = n == 3 ? 4 : 5;
        for (const auto& alpha : boxed_indices(n, degmax)) {
            for (int i = 0; i < n; ++i) {
                AWLieElem acc(n);
                for (const auto& beta : sub_indices(alpha)) {
                    AWLieElem x = centralizer_gen(*alpha.checked_sub(beta), i);
                    acc = acc + a_scale(beta, x).scaled(Rat(binom(alpha, beta)));
                }
                CHECK(acc == AWLieElem::gen(MultiIndex(n), alpha, i));
            }
        }
    }
}

TEST_CASE("gl projection") {
    SUBCASE("t1 d2 -> E12") {
        RatMatrix m = gl_projection(WittElem::gen(MultiIndex{1, 0}, 1));
        CHECK(m.get(0, 1) == Rat(1));
        CHECK(m.entries().size() == 1);
    }
    SUBCASE("t1^2 d1 -> 0") {
        CHECK(gl_projection(WittElem::gen(MultiIndex{2, 0}, 0)).is_zero());
    }
    SUBCASE("degree -1 input rejected") {
        CHECK_THROWS_AS(gl_projection(WittElem::gen(MultiIndex{0, 0}, 0)),
                        std::invalid_argument);
    }
    SUBCASE("bracket pairs map to matrix commutators") {
        // all degree-0 pairs, n <= 4
        for (int n = 2; n <= 4; ++n) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l) {
                            WittElem x = WittElem::gen(MultiIndex::unit(n, i), j);
                            WittElem y = WittElem::gen(MultiIndex::unit(n, k), l);
                            CHECK(gl_projection(witt_bracket(x, y)) ==
                                  commutator(gl_projection(x), gl_projection(y)));
                        }
        }
    }
}

TEST_CASE("gl projection is a homomorphism up to degree 3") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 3; ++n)
        for (int iter = 0; iter < 40; ++iter) {
            // random positive-degree elements, |alpha| in [1,3]
            auto rand_pos = [&]() {
                WittElem w(n);
                std::uniform_int_distribution<int> coeff(-3, 3), deg(1, 3), dir(0, n - 1);
                for (int t = 0; t < 2; ++t) {
                    MultiIndex a(n);
                    int d = deg(rng);
                    for (int i = 0; i < n && d > 0; ++i) {
                        std::uniform_int_distribution<int> part(i == n - 1 ? d : 0, d);
                        int v = part(rng);
                        a.set(i, v);
                        d -= v;
                    }
                    w.add({a, dir(rng)}, Rat(coeff(rng)));
                }
                return w;
            };
            WittElem x = rand_pos(), y = rand_pos();
            CHECK(gl_projection(witt_bracket(x, y)) ==
                  commutator(gl_projection(x), gl_projection(y)));
        }
}

TEST_CASE("grading degree") {
    CHECK(grading_degree(WittElem::gen(MultiIndex{0, 0}, 0)) == -1);
    CHECK(grading_degree(WittElem::gen(MultiIndex{1, 1}, 0)) == 1);
    WittElem mixed = WittElem::gen(MultiIndex{0}, 0) + WittElem::gen(MultiIndex{1}, 0);
    CHECK_FALSE(grading_degree(mixed).has_value());
    CHECK_FALSE(grading_degree(WittElem(2)).has_value());
}

TEST_CASE("homogeneous brackets add grading degrees") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> deg(0, 3), dir(0, 1);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2;
        int da = deg(rng), db = deg(rng);
        auto homog = [&](int d) {
            WittElem w(n);
            MultiIndex a(n);
            a.set(0, d);
            w.add({a, dir(rng)}, Rat(1));
            MultiIndex b(n);
            b.set(0, d > 0 ? d - 1 : 0);
            b.set(1, d > 0 ? 1 : 0);
            w.add({b, dir(rng)}, Rat(2));
            return w;
        };
        WittElem x = homog(da), y = homog(db);
        WittElem br = witt_bracket(x, y);
        if (!br.is_zero()) {
            auto g = grading_degree(br);
            REQUIRE(g.has_value());
            CHECK(*g == (da - 1) + (db - 1));
        }
    }
}

TEST_CASE("witt element text grammar round-trips") {
    WittElem w = WittElem::gen(MultiIndex{1, 0}, 1, Rat(3, 2)) -
                 WittElem::gen(MultiIndex{0, 2}, 0) + WittElem::gen(MultiIndex{0, 0}, 0);
    std::string s = format_witt(w);
    WittElem back = parse_witt(s, 2);
    CHECK(back == w);
    CHECK(parse_witt("t^(1,0) d_2", 2) == WittElem::gen(MultiIndex{1, 0}, 1));
    CHECK(parse_witt("d_1 - d_1", 1).is_zero());
    CHECK_THROWS_AS(parse_witt("t^(1) d_3", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_witt("3.5 d_1", 1), std::invalid_argument);
}
