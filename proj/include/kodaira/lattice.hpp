#pragma once

#include <cstdint>
#include <vector>

#include "kodaira/rat.hpp"

namespace kodaira {

// Element of the free part of the Neron-Severi group, in coordinates with
// respect to the lattice basis.
struct NSVector {
    std::vector<std::int64_t> coords;

    friend bool operator==(const NSVector& a, const NSVector& b) { return a.coords == b.coords; }
    friend bool operator<(const NSVector& a, const NSVector& b) { return a.coords < b.coords; }
};

// Torsion-free part of NS(X) as an even negative-definite integral lattice,
// plus the order of the torsion subgroup (generated by the fibre class).
// Torsion never enters the pairing; it is metadata carried for reports.
class NeronSeveriLattice {
public:
    NeronSeveriLattice(int rank, std::vector<std::vector<std::int64_t>> gram,
                       std::int64_t torsion_order);

    int rank() const { return rank_; }
    const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }
    std::int64_t torsion_order() const { return torsion_order_; }

    // v^T * gram * w. Even and <= 0 on the diagonal.
    std::int64_t pairing(const NSVector& v, const NSVector& w) const;

    // Positive-definite quadratic form Q(x) = -x^T * gram * x at a rational point.
    Rat qform(const std::vector<Rat>& x) const;

private:
    int rank_;
    std::vector<std::vector<std::int64_t>> gram_;
    std::int64_t torsion_order_;
};

struct ShiftedMinResult {
    Rat min_value;                     // min over alpha in Z^rank of Q(target - alpha)
    std::vector<NSVector> minimizers;  // all alpha attaining it, lexicographically sorted
};

// Minimum of Q(target - alpha) over lattice points alpha. Rank 1 rounds the
// target directly; higher ranks enumerate the integer box certified by the
// value at the rounded target (per-coordinate radii from the inverse Gram
// diagonal). Dispatches to the OpenMP kernel when the box is large.
ShiftedMinResult min_on_shifted_lattice(const NeronSeveriLattice& lat,
                                        const std::vector<Rat>& target);
ShiftedMinResult min_on_shifted_lattice_serial(const NeronSeveriLattice& lat,
                                               const std::vector<Rat>& target);
ShiftedMinResult min_on_shifted_lattice_parallel(const NeronSeveriLattice& lat,
                                                 const std::vector<Rat>& target);

struct CosetMinResult {
    NSVector best;       // v0 + scale*beta with maximal self-intersection
    std::int64_t value;  // pairing(best, best)
};

// Shortest vector in the coset v0 + scale*NS, ties broken by the
// lexicographically smallest result vector.
CosetMinResult coset_min(const NeronSeveriLattice& lat, const NSVector& v0, std::int64_t scale);

}  // namespace kodaira
