#include <doctest.h>

#include "eis/stalks.hpp"
#include "oracles.hpp"

using namespace eis;

namespace {

NilradicalDatum borel_nil(const char* type, int n) {
    auto md = MetaplecticDatum::build(RootDatum::build(CartanLabel::parse(type)), n);
    return nilradical(md->build_levi({}));
}

} // namespace

TEST_CASE("assignment enumeration") {
    SUBCASE("rank one: unique assignment iff n divides m") {
        for (int n : {2, 3}) {
            auto nil = borel_nil("A1", n);
            for (long long m = 0; m <= 3 * n; ++m) {
                auto bs = enumerate_b_theta(nil, IVec{m});
                if (m % n == 0) {
                    REQUIRE(bs.size() == 1);
                    CHECK(bs[0].size() == m / n);
                } else {
                    CHECK(bs.empty());
                }
            }
        }
    }

    SUBCASE("zero degree has the empty assignment") {
        auto nil = borel_nil("A2", 1);
        auto bs = enumerate_b_theta(nil, IVec{0, 0});
        REQUIRE(bs.size() == 1);
        CHECK(bs[0].size() == 0);
    }

    SUBCASE("adjoint degree of the rank-two Borel") {
        auto nil = borel_nil("A2", 1);
        auto bs = enumerate_b_theta(nil, IVec{1, 1});
        CHECK(bs.size() == 2); // {alpha_1 + alpha_2} and {alpha_1, alpha_2}
    }

    SUBCASE("enumeration is duplicate-free") {
        auto nil = borel_nil("B2", 1);
        auto bs = enumerate_b_theta(nil, IVec{2, 2});
        std::set<std::vector<long long>> seen;
        for (auto& b : bs) CHECK(seen.insert(b.counts).second);
    }
}

TEST_CASE("stalk polynomials") {
    SUBCASE("rank one divisibility") {
        auto nil = borel_nil("A1", 2);
        for (long long m = 1; m <= 12; ++m) {
            Decomposition dec;
            dec.parts.push_back({IVec{m}, 1});
            auto rep = stalk_poincare(nil, dec);
            CHECK(rep.vanishes == (m % 2 != 0));
        }
        // theta = 2 alpha in one part: Sym^1 sits in degree 2, normalized by one part
        Decomposition dec;
        dec.parts.push_back({IVec{2}, 1});
        auto rep = stalk_poincare(nil, dec);
        CHECK(rep.shift_polynomial == LaurentPoly::monomial(1));
    }

    SUBCASE("empty decomposition gives the unit polynomial") {
        auto nil = borel_nil("A1", 2);
        Decomposition dec;
        auto rep = stalk_poincare(nil, dec);
        CHECK_FALSE(rep.vanishes);
        CHECK(rep.shift_polynomial == LaurentPoly(1));
    }

    SUBCASE("factorization over disjoint unions") {
        auto nil = borel_nil("A2", 1);
        IVec t1{1, 0}, t2{1, 1};
        Decomposition d1, d2, both;
        d1.parts.push_back({t1, 1});
        d2.parts.push_back({t2, 2});
        both.parts.push_back({t1, 1});
        both.parts.push_back({t2, 2});
        auto r1 = stalk_poincare(nil, d1);
        auto r2 = stalk_poincare(nil, d2);
        auto rb = stalk_poincare(nil, both);
        // polynomials multiply once the size normalizations are aligned
        auto lhs = rb.shift_polynomial.shifted((int)both.size());
        auto rhs = (r1.shift_polynomial.shifted((int)d1.size())) *
                   (r2.shift_polynomial.shifted((int)d2.size()));
        CHECK(lhs == rhs);
    }

    SUBCASE("coefficient extraction matches the assignment sum") {
        // finest consistency: the v^{2m} coefficient of the one-part polynomial
        // counts assignments of size m weighted by symmetric products
        for (auto type : {"A2", "B2"}) {
            auto nil = borel_nil(type, 1);
            for (long long a = 0; a <= 3; ++a)
                for (long long b = 0; a + b <= 4; ++b) {
                    IVec theta{a, b};
                    if (is_zero(theta)) continue;
                    Decomposition dec;
                    dec.parts.push_back({theta, 1});
                    auto rep = stalk_poincare(nil, dec);
                    if (rep.vanishes) continue;
                    auto gs = graded_sym(nil, theta, 0);
                    for (size_t m = 0; m < gs.sym_dims_by_degree.size(); ++m)
                        CHECK(rep.shift_polynomial.coeff(2 * (int)m - 1) ==
                              gs.sym_dims_by_degree[m]);
                }
        }
    }

    SUBCASE("vanishing outside the sublattice image") {
        auto nil = borel_nil("A1", 3);
        Decomposition dec;
        dec.parts.push_back({IVec{1}, 1});
        CHECK(stalk_poincare(nil, dec).vanishes);
    }
}

TEST_CASE("top graded module") {
    SUBCASE("degree bound for the rank-one Borel") {
        auto nil = borel_nil("A1", 2);
        for (long long m = 0; m <= 6; ++m)
            CHECK(zastava_top(nil, IVec{m}).degree_bound == 2 * m);
    }

    SUBCASE("one-dimensional top at the first sublattice degree") {
        for (int n : {2, 3}) {
            auto nil = borel_nil("A1", n);
            auto z = zastava_top(nil, IVec{(long long)n});
            CHECK_FALSE(z.vanishes);
            CHECK(z.top_dim == 1);
        }
    }

    SUBCASE("vanishing off the sublattice") {
        auto nil = borel_nil("A1", 2);
        auto z = zastava_top(nil, IVec{1});
        CHECK(z.vanishes);
    }

    SUBCASE("parabolic degree bound subtracts the Levi half-sum") {
        auto md = MetaplecticDatum::build(RootDatum::build(CartanLabel::parse("A2")), 1);
        auto nil = nilradical(md->build_levi({0}));
        // theta = class of alpha_2: lift (0,1); <2(rho - rho_M), (0,1)> = 4 - 1 = 3
        auto z = zastava_top(nil, IVec{1});
        CHECK(z.degree_bound == 3);
        CHECK(z.top_dim == 2);
    }
}
