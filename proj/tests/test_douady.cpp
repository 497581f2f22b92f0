#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kodaira/douady.hpp"
#include "kodaira/errors.hpp"

using namespace kodaira;

namespace {

std::vector<mpz_class> as_mpz(const std::vector<long>& v) {
    return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("douady_betti golden vectors for the Kodaira surface") {
    const SurfaceBetti sb = SurfaceBetti::kodaira();
    CHECK(douady_betti(sb, 2) == as_mpz({1, 3, 8, 18, 24, 18, 8, 3, 1}));
    CHECK(douady_betti(sb, 3) == as_mpz({1, 3, 8, 22, 50, 87, 106, 87, 50, 22, 8, 3, 1}));
}

TEST_CASE("douady_betti: n = 0 and n = 1 are the point and the surface") {
    for (const SurfaceBetti& sb :
         {SurfaceBetti::kodaira(), SurfaceBetti{{1, 0, 22, 0, 1}}, SurfaceBetti{{1, 4, 6, 4, 1}},
          SurfaceBetti{{1, 1, 0, 1, 1}}}) {
        CHECK(douady_betti(sb, 0) == as_mpz({1}));
        CHECK(douady_betti(sb, 1) ==
              as_mpz({1, static_cast<long>(sb.b[1]), static_cast<long>(sb.b[2]),
                      static_cast<long>(sb.b[3]), 1}));
    }
}

TEST_CASE("douady_betti satisfies Poincare duality with b0 = 1") {
    for (const SurfaceBetti& sb :
         {SurfaceBetti::kodaira(), SurfaceBetti{{1, 0, 22, 0, 1}}, SurfaceBetti{{1, 4, 6, 4, 1}},
          SurfaceBetti{{1, 1, 0, 1, 1}}}) {
        for (std::int64_t n = 0; n <= 4; ++n) {
            const auto row = douady_betti(sb, n);
            REQUIRE(static_cast<std::int64_t>(row.size()) == 4 * n + 1);
            CHECK(row.front() == 1);
            for (std::size_t j = 0; j < row.size(); ++j) CHECK(row[j] == row[row.size() - 1 - j]);
        }
    }
}

TEST_CASE("douady_betti: b1 stays the surface b1") {
    const SurfaceBetti sb = SurfaceBetti::kodaira();
    for (std::int64_t n = 1; n <= 4; ++n) CHECK(douady_betti(sb, n)[1] == 3);
}

TEST_CASE("douady_betti_series prefix reproduces every smaller n") {
    const SurfaceBetti sb = SurfaceBetti::kodaira();
    const std::int64_t N = 4;
    const TruncatedSeries2 table = douady_betti_series(sb, N);
    for (std::int64_t n = 0; n <= N; ++n) {
        const auto row = douady_betti(sb, n);
        for (std::int64_t j = 0; j <= 4 * n; ++j)
            CHECK(table.coeff(static_cast<int>(n), static_cast<int>(j)) ==
                  row[static_cast<std::size_t>(j)]);
        // beyond real dimension 4n the row is identically zero
        for (std::int64_t j = 4 * n + 1; j <= 4 * N; ++j)
            CHECK(table.coeff(static_cast<int>(n), static_cast<int>(j)) == 0);
    }
}

TEST_CASE("SurfaceBetti validation") {
    CHECK_THROWS_AS(douady_betti(SurfaceBetti{{2, 3, 4, 3, 1}}, 1), PreconditionError);
    CHECK_THROWS_AS(douady_betti(SurfaceBetti{{1, 3, 4, 2, 1}}, 1), PreconditionError);
    CHECK_THROWS_AS(douady_betti(SurfaceBetti{{1, -1, 4, -1, 1}}, 1), PreconditionError);
}

TEST_CASE("douady_pi1 is independent of n") {
    CHECK(douady_pi1(1, 1).str() == "Z^3");
    const Pi1Descriptor p = douady_pi1(3, 2);
    CHECK(p.free_rank == 3);
    CHECK(p.torsion == std::vector<std::int64_t>{3});
    CHECK(p.str() == "Z^3 + Z/3");
    CHECK(douady_pi1(7, 5).str() == "Z^3 + Z/7");
    CHECK(douady_pi1(7, 2).str() == douady_pi1(7, 9).str());
    CHECK_THROWS_AS(douady_pi1(0, 1), PreconditionError);
    CHECK_THROWS_AS(douady_pi1(3, 0), PreconditionError);
}

TEST_CASE("compare_bases across the discriminant range") {
    auto quarter = construct_example(1, 2);
    auto c = compare_bases(quarter.lattice, quarter.chern);
    CHECK(c.applicable);
    CHECK(c.iso_to_symB_possible);
    CHECK_FALSE(c.never_biholomorphic);

    auto half = construct_example(2, 2);
    auto ch = compare_bases(half.lattice, half.chern);
    CHECK(ch.applicable);
    CHECK_FALSE(ch.iso_to_symB_possible);
    CHECK(ch.never_biholomorphic);

    auto zero = construct_example(0, 2);
    auto cz = compare_bases(zero.lattice, zero.chern);
    CHECK_FALSE(cz.applicable);
    CHECK_FALSE(cz.iso_to_symB_possible);

    // outside the stably irreducible range the comparison refuses to answer
    NeronSeveriLattice lat(1, {{-2}}, 1);
    ChernData big;
    big.r = 2;
    big.c1 = NSVector{{1}};
    big.c2 = 5;
    CHECK_THROWS_AS(compare_bases(lat, big), PreconditionError);
}

TEST_CASE("douady2_fibration_census is the fixed table") {
    const FibrationCensus c = douady2_fibration_census();
    CHECK(c.generic.label == "T x T");
    CHECK(c.generic.dim == 2);
    REQUIRE(c.special.size() == 2);
    CHECK(c.special[0].dim == 2);
    CHECK(c.special[1].dim == 2);
    CHECK(c.special[1].label == "Sym^2(T)");
    const FibrationCensus again = douady2_fibration_census();
    CHECK(again.generic.label == c.generic.label);
    CHECK(again.special_intersection == c.special_intersection);
}
