#include <doctest.h>

#include "eis/sl2.hpp"

using namespace eis;

TEST_CASE("context degrees") {
    for (int n : {1, 2, 3, 4, 5, 6}) {
        auto ctx = SL2Context::make(n);
        CHECK(ctx.e == (n % 2 ? n : n / 2));
        // cross-check against the metaplectic sublattice
        auto md = MetaplecticDatum::build(RootDatum::build(CartanLabel{Family::A, 1}), n);
        CHECK(md->lambda_sharp_basis()[0][0] == ctx.e);
    }
}

TEST_CASE("fundamental Hecke rules") {
    SUBCASE("even: deep cells split in two") {
        auto ctx = SL2Context::make(2);
        auto out = fundamental_hecke(ctx, ThetaElement::cell(3));
        CHECK(out == ThetaElement::cell(4) + ThetaElement::cell(2));
    }

    SUBCASE("even: boundary cells") {
        auto ctx = SL2Context::make(4);
        CHECK(fundamental_hecke(ctx, ThetaElement::cell(1)) ==
              ThetaElement::cell(0, 1) + ThetaElement::cell(0, -1));
        CHECK(fundamental_hecke(ctx, ThetaElement::cell(0)) ==
              ThetaElement::cell(1, 1) + ThetaElement::cell(1, -1));
    }

    SUBCASE("odd: deep cells split in three") {
        auto ctx = SL2Context::make(3);
        auto out = fundamental_hecke(ctx, ThetaElement::cell(2));
        CHECK(out == ThetaElement::cell(3) + ThetaElement::cell(2) + ThetaElement::cell(1));
    }

    SUBCASE("odd: first stratum folds into the open cell") {
        auto ctx = SL2Context::make(3);
        CHECK(fundamental_hecke(ctx, ThetaElement::cell(1)) ==
              ThetaElement::cell(0, 1) + ThetaElement::cell(0, -1) + ThetaElement::cell(2));
    }

    SUBCASE("odd: open cell spreads over three shifts") {
        auto ctx = SL2Context::make(5);
        CHECK(fundamental_hecke(ctx, ThetaElement::cell(0)) ==
              ThetaElement::cell(0, 2) + ThetaElement::cell(0) + ThetaElement::cell(0, -2));
    }

    SUBCASE("shifts compose additively") {
        auto ctx = SL2Context::make(2);
        auto out = fundamental_hecke(ctx, ThetaElement::cell(1, 5));
        CHECK(out == ThetaElement::cell(0, 6) + ThetaElement::cell(0, 4));
    }
}

TEST_CASE("higher Hecke operators") {
    SUBCASE("index zero is the identity") {
        auto ctx = SL2Context::make(3);
        auto elt = ThetaElement::cell(2, -1) + ThetaElement::cell(0, 1);
        CHECK(hecke_of_irreducible(ctx, 0, elt) == elt);
    }

    SUBCASE("even index two on the open cell") {
        auto ctx = SL2Context::make(2);
        auto out = hecke_of_irreducible(ctx, 2, ThetaElement::cell(0));
        CHECK(out == ThetaElement::cell(0, 2) + ThetaElement::cell(0) + ThetaElement::cell(0, -2));
    }

    SUBCASE("odd index two matches the five-dimensional grading") {
        auto ctx = SL2Context::make(3);
        auto out = hecke_of_irreducible(ctx, 2, ThetaElement::cell(0));
        ThetaElement expect;
        for (int s : {4, 2, 0, -2, -4}) expect.add(0, s, 1);
        CHECK(out == expect);
    }

    SUBCASE("operators commute") {
        for (int n : {2, 3}) {
            auto ctx = SL2Context::make(n);
            for (long long m1 : {1, 2, 3})
                for (long long m2 : {1, 2, 3})
                    for (long long k : {0, 1, 2, 5}) {
                        auto a = hecke_of_irreducible(
                            ctx, m1, hecke_of_irreducible(ctx, m2, ThetaElement::cell(k)));
                        auto b = hecke_of_irreducible(
                            ctx, m2, hecke_of_irreducible(ctx, m1, ThetaElement::cell(k)));
                        CHECK(a == b);
                    }
        }
    }
}

TEST_CASE("theta eigen property") {
    SUBCASE("odd fundamental") {
        auto rep = theta_eigen_check(SL2Context::make(3), 1);
        CHECK(rep.holds);
        CHECK(rep.eigen_poly.str() == "v^2+1+v^-2");
    }
    SUBCASE("even fundamental") {
        auto rep = theta_eigen_check(SL2Context::make(2), 1);
        CHECK(rep.holds);
        CHECK(rep.eigen_poly.str() == "v+v^-1");
    }
    SUBCASE("index zero") {
        auto rep = theta_eigen_check(SL2Context::make(4), 0);
        CHECK(rep.holds);
        CHECK(rep.eigen_poly == LaurentPoly(1));
    }
    SUBCASE("full grid") {
        for (int n : {2, 3, 4, 5})
            for (long long m : {0, 1, 2, 3}) {
                auto rep = theta_eigen_check(SL2Context::make(n), m);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(rep.holds);
                // eigenvalue is the principal character of the m-th irreducible
                CHECK(rep.eigen_poly == principal_character(SL2Context::make(n), m));
            }
    }
}

TEST_CASE("Eisenstein expansions") {
    auto ctx = SL2Context::make(2);

    SUBCASE("positive degree, nontrivial system: a single cell") {
        CHECK(eis_expand(ctx, 3, true, 20) == ThetaElement::cell(3));
    }

    SUBCASE("positive degree, trivial system: arithmetic progression") {
        auto out = eis_expand(ctx, 1, false, 9);
        ThetaElement expect;
        for (long long k = 1; k <= 9; k += 2) expect.add(k, 0, 1);
        CHECK(out == expect);
    }

    SUBCASE("degree zero") {
        auto out = eis_expand(ctx, 0, false, 8);
        ThetaElement expect = ThetaElement::cell(0, 1) + ThetaElement::cell(0, -1);
        expect.add(4, 0, 1); // degree 2n
        expect.add(6, 0, 1); // degree 3n
        expect.add(8, 0, 1);
        CHECK(out == expect);
    }

    SUBCASE("off-component degrees are rejected") {
        auto c3 = SL2Context::make(3);
        CHECK_THROWS_WITH(eis_expand(c3, 2, false, 10), doctest::Contains("eZ"));
    }

    SUBCASE("Hecke consistency across expansions") {
        for (int n : {2, 3, 4, 5}) {
            auto c = SL2Context::make(n);
            long long kmax = 14;
            for (long long d = c.e; d <= 3 * c.e; d += c.e) {
                auto lhs = fundamental_hecke(c, eis_expand(c, d, false, kmax)).truncated(kmax - 2);
                ThetaElement rhs;
                if (c.even) {
                    rhs = eis_expand(c, d + c.e, false, kmax) + eis_expand(c, d - c.e, false, kmax);
                } else {
                    rhs = eis_expand(c, d + c.n, false, kmax) + eis_expand(c, d, false, kmax) +
                          eis_expand(c, d - c.n, false, kmax);
                }
                CAPTURE(n);
                CAPTURE(d);
                CHECK(lhs == rhs.truncated(kmax - 2));
            }
        }
    }
}

TEST_CASE("stalk table") {
    auto c2 = SL2Context::make(2);
    auto c3 = SL2Context::make(3);

    auto s = stalk_table(c2, 1, 3);
    CHECK_FALSE(s.vanishes);
    CHECK(s.shift == 2);

    CHECK(stalk_table(c3, 3, 5).vanishes);

    auto s0 = stalk_table(c2, 0, 2);
    CHECK_FALSE(s0.vanishes);
    CHECK(s0.shift == 1);

    CHECK_THROWS_AS(stalk_table(c2, 3, 2), std::invalid_argument);
}

TEST_CASE("parity classes") {
    auto c4 = SL2Context::make(4);
    CHECK(parity(c4, 4) == ParityClass::plus);
    CHECK(parity(c4, 2) == ParityClass::minus);
    CHECK(parity(SL2Context::make(3), 3) == ParityClass::not_applicable);

    // the fundamental operator flips parity; the second preserves it
    for (long long k : {0, 1, 2, 3}) {
        auto elt = ThetaElement::cell(k);
        auto h1 = fundamental_hecke(c4, elt);
        for (auto& [key, m] : h1.coeffs) {
            (void)m;
            CHECK(parity(c4, key.first * c4.e) != parity(c4, k * c4.e));
        }
        auto h2 = hecke_of_irreducible(c4, 2, elt);
        for (auto& [key, m] : h2.coeffs) {
            (void)m;
            CHECK(parity(c4, key.first * c4.e) == parity(c4, k * c4.e));
        }
    }
}

TEST_CASE("transport between equal parities") {
    auto c2 = SL2Context::make(2);
    auto c4 = SL2Context::make(4);
    auto c3 = SL2Context::make(3);
    auto c5 = SL2Context::make(5);

    CHECK(transport(c2, c4, ThetaElement::cell(1)) == ThetaElement::cell(1));
    CHECK(transport(c3, c3, ThetaElement::cell(2)) == ThetaElement::cell(2));
    CHECK_THROWS_AS(transport(c2, c3, ThetaElement::cell(0)), std::invalid_argument);

    for (auto [from, to] : std::vector<std::pair<SL2Context, SL2Context>>{{c2, c4}, {c3, c5}})
        for (long long k : {0, 1, 2, 3}) {
            auto elt = ThetaElement::cell(k);
            CHECK(transport(from, to, fundamental_hecke(from, elt)) ==
                  fundamental_hecke(to, transport(from, to, elt)));
        }
}

TEST_CASE("negative coefficients abort") {
    ThetaElement a = ThetaElement::cell(0);
    ThetaElement b = ThetaElement::cell(0, 0, 2);
    CHECK_THROWS_AS(a - b, FalsificationError);
}
