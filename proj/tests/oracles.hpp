#pragma once

// Test-side oracles, deliberately independent of the library's enumeration
// path: radii are re-derived from first principles and the box is swept in
// full with no pruning or fast paths.

#include <algorithm>
#include <random>
#include <vector>

#include "kodaira/lattice.hpp"
#include "kodaira/rat.hpp"

namespace kodaira::testing {

inline Rat oracle_qform(const NeronSeveriLattice& lat, const std::vector<Rat>& x) {
    Rat acc = 0;
    for (int i = 0; i < lat.rank(); ++i)
        for (int j = 0; j < lat.rank(); ++j)
            acc += x[i] * Rat(lat.gram()[i][j]) * x[j];
    return -acc;
}

inline Rat oracle_value(const NeronSeveriLattice& lat, const std::vector<Rat>& target,
                        const std::vector<std::int64_t>& alpha) {
    std::vector<Rat> x(target.size());
    for (std::size_t i = 0; i < target.size(); ++i)
        x[i] = target[i] - Rat(static_cast<long>(alpha[i]));
    return oracle_qform(lat, x);
}

// Smallest integer R with R^2 >= bound.
inline std::int64_t int_sqrt_ceil(const Rat& bound) {
    std::int64_t r = 0;
    while (Rat(r) * Rat(r) < bound) ++r;
    return r;
}

// Exhaustive search over the integer box certified by the value at the
// rounded target (rank 1 and 2 only).
inline ShiftedMinResult brute_force_min(const NeronSeveriLattice& lat,
                                        const std::vector<Rat>& target) {
    const int n = lat.rank();
    if (n == 0) return ShiftedMinResult{Rat(0), {NSVector{{}}}};
    std::vector<std::int64_t> rounded(n);
    for (int i = 0; i < n; ++i) rounded[i] = target[i].round_nearest().get_si();
    const Rat v0 = oracle_value(lat, target, rounded);

    // Diagonal of (-gram)^-1 by Cramer; any minimizer alpha satisfies
    // (alpha_i - t_i)^2 <= v0 * invdiag_i.
    std::vector<Rat> invdiag(n);
    const auto& g = lat.gram();
    if (n == 1) {
        invdiag[0] = Rat(1) / Rat(-g[0][0]);
    } else {
        const Rat det = Rat(g[0][0] * g[1][1] - g[0][1] * g[1][0]);  // = det(-gram)
        invdiag[0] = Rat(-g[1][1]) / det;
        invdiag[1] = Rat(-g[0][0]) / det;
    }

    std::vector<std::int64_t> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        const std::int64_t radius = int_sqrt_ceil(v0 * invdiag[i]);
        lo[i] = target[i].floor().get_si() - radius;
        hi[i] = target[i].ceil().get_si() + radius;
    }

    Rat best = v0;
    std::vector<NSVector> mins;
    std::vector<std::int64_t> alpha(n);
    for (std::int64_t a0 = lo[0]; a0 <= hi[0]; ++a0) {
        alpha[0] = a0;
        if (n == 1) {
            const Rat v = oracle_value(lat, target, alpha);
            if (v < best) {
                best = v;
                mins.assign(1, NSVector{alpha});
            } else if (v == best) {
                mins.push_back(NSVector{alpha});
            }
            continue;
        }
        for (std::int64_t a1 = lo[1]; a1 <= hi[1]; ++a1) {
            alpha[1] = a1;
            const Rat v = oracle_value(lat, target, alpha);
            if (v < best) {
                best = v;
                mins.assign(1, NSVector{alpha});
            } else if (v == best) {
                mins.push_back(NSVector{alpha});
            }
        }
    }
    std::sort(mins.begin(), mins.end());
    return ShiftedMinResult{best, std::move(mins)};
}

// Random even negative-definite lattice with gram entries in [-20, 0].
inline NeronSeveriLattice random_lattice(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<std::int64_t> diag(1, 10);   // diagonal -2..-20
    std::uniform_int_distribution<std::int64_t> off(-20, 0);
    if (rank == 1) return NeronSeveriLattice(1, {{-2 * diag(rng)}}, 1);
    for (;;) {
        const std::int64_t a = -2 * diag(rng);
        const std::int64_t b = -2 * diag(rng);
        const std::int64_t c = off(rng);
        if (a * b - c * c > 0)
            return NeronSeveriLattice(2, {{a, c}, {c, b}}, 1);
    }
}

inline std::vector<Rat> random_target(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<Rat> t(rank);
    for (int i = 0; i < rank; ++i) t[i] = Rat(num(rng), den(rng));
    return t;
}

}  // namespace kodaira::testing
