#pragma once

#include <cstdint>

#include "kodaira/lattice.hpp"
#include "kodaira/rat.hpp"

namespace kodaira {

// Topological invariants of a sheaf: rank, first Chern class (free part in
// lattice coordinates, torsion part as a label mod the torsion order), and
// second Chern class.
struct ChernData {
    std::int64_t r = 1;
    NSVector c1;
    std::int64_t c2 = 0;
    std::int64_t c1_torsion = 0;  // metadata only; killed by the intersection form
};

struct ModuliReport {
    Rat delta;
    Rat t;
    bool t_rank1_convention = false;  // rank 1: t fixed to 0 by convention
    bool empty = false;               // negative discriminant: no torsion-free sheaves
    std::int64_t dim = 0;             // 2*r^2*delta, meaningful when !empty
    bool stably_irreducible = false;
    bool smooth_compact = false;
    bool normalized = false;  // rank 2 with c1^2 == -8*t already
};

// (1/r)(c2 - ((r-1)/2r) c1^2).
Rat discriminant(const NeronSeveriLattice& lat, const ChernData& ch);

// (1/2) min over 0<k<r of (1/(k(r-k))) min_{alpha in NS} Q(k*c1/r - alpha).
// The sweep runs k = 1..floor(r/2); the summand is invariant under
// k -> r-k. Rank-1 inputs return 0 by convention.
Rat t_invariant(const NeronSeveriLattice& lat, std::int64_t r, const NSVector& c1);

ModuliReport classify(const NeronSeveriLattice& lat, const ChernData& ch);

struct NormalizeResult {
    ChernData chern;  // twisted invariants with c1^2 = -8 t and discriminant unchanged
    NSVector twist;   // beta with c1' = c1 + 2*beta
};

// Rank-2 twist normalization: replaces c1 by the shortest vector in its
// coset mod 2*NS and adjusts c2 so the discriminant is preserved.
NormalizeResult normalize_rank2(const NeronSeveriLattice& lat, const ChernData& ch);

struct ExampleInstance {
    NeronSeveriLattice lattice;
    ChernData chern;
};

// Rank-1 lattice instance with delta = n/r^2 and t = n/r^2 + 1/(r(r-1)):
// gram [[-2(rn-n+r)]], torsion order rn-n+r, c1 the generator,
// c2 = 2n-rn-r+1. Its moduli space is smooth compact of dimension 2n.
ExampleInstance construct_example(std::int64_t n, std::int64_t r);

// Arithmetic genus 4*delta + 1 of the spectral curve of a rank-2 sheaf.
std::int64_t spectral_genus(const NeronSeveriLattice& lat, const ChernData& ch);

// 4*delta as an exact integer (rank 2 over an even lattice).
std::int64_t four_delta(const NeronSeveriLattice& lat, const ChernData& ch);

}  // namespace kodaira
