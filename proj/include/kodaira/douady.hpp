#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kodaira/invariants.hpp"
#include "kodaira/series.hpp"

namespace kodaira {

// Betti numbers b0..b4 of a compact complex surface.
struct SurfaceBetti {
    std::array<std::int64_t, 5> b;

    void validate() const;  // b0 = b4 = 1, b1 = b3, all >= 0
    static SurfaceBetti kodaira() { return SurfaceBetti{{1, 3, 4, 3, 1}}; }
};

// Betti numbers of the Douady space of n points, as the q^n row of the
// product over k >= 1, j in [0,4] of (1 - (-t)^(2k-2+j) q^k)^((-1)^(j+1) b_j),
// truncated at q-degree n and t-degree 4n. Factors with k = 0 would not raise
// the q-degree (and would carry negative t-exponents), so the product index
// starts at 1. Returns b_0(X^[n]) .. b_{4n}(X^[n]).
std::vector<mpz_class> douady_betti(const SurfaceBetti& sb, std::int64_t n);

// Full truncated product up to q-degree n_max, t-degree 4*n_max; row q^i of
// the result reproduces douady_betti(sb, i) for every i <= n_max.
TruncatedSeries2 douady_betti_series(const SurfaceBetti& sb, std::int64_t n_max);

struct Pi1Descriptor {
    std::int64_t free_rank = 0;
    std::vector<std::int64_t> torsion;  // cyclic factors

    std::string str() const;  // "Z^3", "Z^3 + Z/3", ...
};

// pi_1 of the Douady space of n >= 1 points over a Kodaira surface with
// torsion order d: Z^3 + Z/d, independently of n.
Pi1Descriptor douady_pi1(std::int64_t d, std::int64_t n);

struct BaseComparison {
    Rat delta;
    bool applicable = false;          // false for the finite (delta = 0) base
    bool iso_to_symB_possible = false;  // only delta = 1/4 leaves the question open
    bool never_biholomorphic = false;   // settled for delta >= 1/2
    std::string note;
};

// Compares the space of graphs with the base Sym^n(B) of the Douady-space
// Lagrangian fibration.
BaseComparison compare_bases(const NeronSeveriLattice& lat, const ChernData& ch);

struct CensusComponent {
    std::string label;
    std::int64_t dim = 0;
};

struct FibrationCensus {
    CensusComponent generic;                    // T x T
    std::vector<CensusComponent> special;       // two components over diagonal points
    std::string special_intersection;
};

// Fixed census of the induced fibration on the Douady space of two points.
FibrationCensus douady2_fibration_census();

}  // namespace kodaira
