#include "kodaira/lattice.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>

#include "kodaira/errors.hpp"

namespace kodaira {

NeronSeveriLattice::NeronSeveriLattice(int rank, std::vector<std::vector<std::int64_t>> gram,
                                       std::int64_t torsion_order)
    : rank_(rank), gram_(std::move(gram)), torsion_order_(torsion_order) {
    if (rank_ < 0 || rank_ > 3)
        throw PreconditionError("NeronSeveriLattice: rank must be in {0,1,2,3}");
    if (torsion_order_ < 1) throw PreconditionError("NeronSeveriLattice: torsion order must be >= 1");
    if (static_cast<int>(gram_.size()) != rank_)
        throw PreconditionError("NeronSeveriLattice: gram matrix has wrong number of rows");
    for (const auto& row : gram_)
        if (static_cast<int>(row.size()) != rank_)
            throw PreconditionError("NeronSeveriLattice: gram matrix is not square");
    for (int i = 0; i < rank_; ++i) {
        if (gram_[i][i] > 0 || gram_[i][i] % 2 != 0)
            throw PreconditionError("NeronSeveriLattice: diagonal entries must be even and <= 0");
        for (int j = i + 1; j < rank_; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw PreconditionError("NeronSeveriLattice: gram matrix must be symmetric");
    }
    // Negative definite iff leading principal minors alternate in sign
    // starting negative. Semi-definite forms are rejected, not modeled.
    if (rank_ >= 1) {
        const auto& g = gram_;
        std::int64_t m1 = g[0][0];
        if (m1 >= 0) throw PreconditionError("NeronSeveriLattice: form is not negative definite");
        if (rank_ >= 2) {
            std::int64_t m2 = g[0][0] * g[1][1] - g[0][1] * g[0][1];
            if (m2 <= 0) throw PreconditionError("NeronSeveriLattice: form is not negative definite");
        }
        if (rank_ == 3) {
            std::int64_t m3 = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                              g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                              g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
            if (m3 >= 0) throw PreconditionError("NeronSeveriLattice: form is not negative definite");
        }
    }
}

std::int64_t NeronSeveriLattice::pairing(const NSVector& v, const NSVector& w) const {
    if (static_cast<int>(v.coords.size()) != rank_ || static_cast<int>(w.coords.size()) != rank_)
        throw PreconditionError("pairing: vector length does not match lattice rank");
    std::int64_t acc = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) acc += v.coords[i] * gram_[i][j] * w.coords[j];
    return acc;
}

Rat NeronSeveriLattice::qform(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != rank_)
        throw PreconditionError("qform: vector length does not match lattice rank");
    Rat acc = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) acc += x[i] * Rat(gram_[i][j]) * x[j];
    return -acc;
}

namespace {

Rat qform_shift(const NeronSeveriLattice& lat, const std::vector<Rat>& target,
                const std::vector<std::int64_t>& alpha) {
    std::vector<Rat> x(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) x[i] = target[i] - Rat(static_cast<long>(alpha[i]));
    return lat.qform(x);
}

// Exact integer endpoints of [t - sqrt(B), t + sqrt(B)]: alpha is admissible
// iff (alpha - t)^2 <= B, i.e. |alpha*q - p| <= isqrt(floor(B*q^2)) for t = p/q.
std::pair<std::int64_t, std::int64_t> coord_range(const Rat& t, const Rat& B) {
    const mpz_class p = t.num(), q = t.den();
    const mpz_class c = B.num() * q * q;  // condition: v*(alpha*q - p)^2 <= c with v = den(B)
    mpz_class d;
    mpz_fdiv_q(d.get_mpz_t(), c.get_mpz_t(), B.den().get_mpz_t());
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    mpz_class lo_z, hi_z;
    mpz_class a = p - s, b = p + s;
    mpz_cdiv_q(lo_z.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    mpz_fdiv_q(hi_z.get_mpz_t(), b.get_mpz_t(), q.get_mpz_t());
    if (!lo_z.fits_slong_p() || !hi_z.fits_slong_p())
        throw InvariantError("min_on_shifted_lattice: enumeration radius overflow");
    return {lo_z.get_si(), hi_z.get_si()};
}

struct Box {
    std::vector<std::int64_t> lo, hi;
};

// Value at the rounded target bounds the minimum; the Schur-complement bound
// (alpha_i - t_i)^2 <= Q * (A^{-1})_{ii} with A = -gram then certifies the
// per-coordinate enumeration radii. (A^{-1})_{ii} = adj(A)_{ii} / det(A).
Box certified_box(const NeronSeveriLattice& lat, const std::vector<Rat>& target, const Rat& v0) {
    const int n = lat.rank();
    const auto& g = lat.gram();
    std::vector<std::int64_t> adj_diag(n);
    std::int64_t det = 0;
    if (n == 1) {
        det = -g[0][0];
        adj_diag[0] = 1;
    } else if (n == 2) {
        det = g[0][0] * g[1][1] - g[0][1] * g[0][1];  // det(-G) = det(G) in rank 2
        adj_diag[0] = -g[1][1];
        adj_diag[1] = -g[0][0];
    } else {
        // A = -G, rank 3: det(A) = -det(G); adj(A)_{ii} = 2x2 minors of -G.
        const std::int64_t detG = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                                  g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                                  g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
        det = -detG;
        adj_diag[0] = g[1][1] * g[2][2] - g[1][2] * g[2][1];
        adj_diag[1] = g[0][0] * g[2][2] - g[0][2] * g[2][0];
        adj_diag[2] = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    }
    Box box;
    box.lo.resize(n);
    box.hi.resize(n);
    for (int i = 0; i < n; ++i) {
        const Rat bound = v0 * Rat(adj_diag[i], det);
        auto [lo, hi] = coord_range(target[i], bound);
        box.lo[i] = lo;
        box.hi[i] = hi;
    }
    return box;
}

void consider(const NeronSeveriLattice& lat, const std::vector<Rat>& target,
              const std::vector<std::int64_t>& alpha, Rat& best,
              std::vector<NSVector>& minimizers) {
    Rat v = qform_shift(lat, target, alpha);
    if (v < best) {
        best = v;
        minimizers.clear();
        minimizers.push_back(NSVector{alpha});
    } else if (v == best) {
        minimizers.push_back(NSVector{alpha});
    }
}

// Scan the sub-box with coordinate 0 fixed; inner loops in lex order.
void scan_fixed_outer(const NeronSeveriLattice& lat, const std::vector<Rat>& target,
                      const Box& box, std::int64_t a0, Rat& best,
                      std::vector<NSVector>& minimizers) {
    const int n = lat.rank();
    std::vector<std::int64_t> alpha(n);
    alpha[0] = a0;
    if (n == 1) {
        consider(lat, target, alpha, best, minimizers);
        return;
    }
    if (n == 2) {
        for (std::int64_t a1 = box.lo[1]; a1 <= box.hi[1]; ++a1) {
            alpha[1] = a1;
            consider(lat, target, alpha, best, minimizers);
        }
        return;
    }
    for (std::int64_t a1 = box.lo[1]; a1 <= box.hi[1]; ++a1)
        for (std::int64_t a2 = box.lo[2]; a2 <= box.hi[2]; ++a2) {
            alpha[1] = a1;
            alpha[2] = a2;
            consider(lat, target, alpha, best, minimizers);
        }
}

ShiftedMinResult rank1_by_rounding(const NeronSeveriLattice& lat, const std::vector<Rat>& target) {
    const Rat& t = target[0];
    ShiftedMinResult res;
    res.min_value = Rat(-1);
    mpz_class fl = t.floor();
    for (int step = 0; step <= 1; ++step) {
        mpz_class cand = fl + step;
        if (step == 1 && t.is_integer()) break;  // integral target: unique minimizer
        if (!cand.fits_slong_p()) throw InvariantError("min_on_shifted_lattice: target overflow");
        std::vector<std::int64_t> alpha{cand.get_si()};
        Rat v = qform_shift(lat, target, alpha);
        if (res.min_value < 0 || v < res.min_value) {
            res.min_value = v;
            res.minimizers = {NSVector{alpha}};
        } else if (v == res.min_value) {
            res.minimizers.push_back(NSVector{alpha});
        }
    }
    return res;
}

bool target_is_integral(const std::vector<Rat>& target) {
    return std::all_of(target.begin(), target.end(), [](const Rat& t) { return t.is_integer(); });
}

ShiftedMinResult min_impl(const NeronSeveriLattice& lat, const std::vector<Rat>& target,
                          bool parallel) {
    if (static_cast<int>(target.size()) != lat.rank())
        throw PreconditionError("min_on_shifted_lattice: target length does not match rank");
    if (lat.rank() == 0) return ShiftedMinResult{Rat(0), {NSVector{{}}}};
    if (lat.rank() == 1) return rank1_by_rounding(lat, target);

    std::vector<std::int64_t> rounded(lat.rank());
    for (int i = 0; i < lat.rank(); ++i) {
        mpz_class r = target[i].round_nearest();
        if (!r.fits_slong_p()) throw InvariantError("min_on_shifted_lattice: target overflow");
        rounded[i] = r.get_si();
    }
    const Rat v0 = qform_shift(lat, target, rounded);
    if (v0 == 0) return ShiftedMinResult{Rat(0), {NSVector{rounded}}};
    if (target_is_integral(target))
        throw InvariantError("min_on_shifted_lattice: integral target with nonzero value");

    const Box box = certified_box(lat, target, v0);
    const std::int64_t outer = box.hi[0] - box.lo[0] + 1;

    Rat best = v0;
    std::vector<NSVector> minimizers;
    if (!parallel) {
        for (std::int64_t a0 = box.lo[0]; a0 <= box.hi[0]; ++a0)
            scan_fixed_outer(lat, target, box, a0, best, minimizers);
    } else {
        // Per-slice results are merged in slice order afterwards, so the
        // outcome is identical for every thread count.
        std::vector<Rat> slice_best(outer, v0);
        std::vector<std::vector<NSVector>> slice_min(outer);
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < outer; ++k)
            scan_fixed_outer(lat, target, box, box.lo[0] + k, slice_best[k], slice_min[k]);
        for (std::int64_t k = 0; k < outer; ++k) {
            if (slice_min[k].empty()) continue;
            if (slice_best[k] < best) {
                best = slice_best[k];
                minimizers = slice_min[k];
            } else if (slice_best[k] == best) {
                minimizers.insert(minimizers.end(), slice_min[k].begin(), slice_min[k].end());
            }
        }
    }
    // Every global minimizer lies in the certified box, so the scan cannot
    // come back empty.
    if (minimizers.empty()) throw InvariantError("min_on_shifted_lattice: empty enumeration");
    std::sort(minimizers.begin(), minimizers.end());
    return ShiftedMinResult{best, std::move(minimizers)};
}

}  // namespace

ShiftedMinResult min_on_shifted_lattice_serial(const NeronSeveriLattice& lat,
                                               const std::vector<Rat>& target) {
    return min_impl(lat, target, false);
}

ShiftedMinResult min_on_shifted_lattice_parallel(const NeronSeveriLattice& lat,
                                                 const std::vector<Rat>& target) {
    return min_impl(lat, target, true);
}

ShiftedMinResult min_on_shifted_lattice(const NeronSeveriLattice& lat,
                                        const std::vector<Rat>& target) {
    if (lat.rank() >= 2 && omp_get_max_threads() > 1)
        return min_on_shifted_lattice_parallel(lat, target);
    return min_on_shifted_lattice_serial(lat, target);
}

CosetMinResult coset_min(const NeronSeveriLattice& lat, const NSVector& v0, std::int64_t scale) {
    if (scale < 1) throw PreconditionError("coset_min: scale must be positive");
    if (static_cast<int>(v0.coords.size()) != lat.rank())
        throw PreconditionError("coset_min: vector length does not match rank");
    if (lat.rank() == 0) return CosetMinResult{NSVector{{}}, 0};

    // Q(v0 + scale*beta) = scale^2 * Q(target - beta) with target = -v0/scale,
    // so the coset CVP reduces to the shifted-lattice minimum.
    std::vector<Rat> target(lat.rank());
    for (int i = 0; i < lat.rank(); ++i)
        target[i] = Rat(-static_cast<long>(v0.coords[i]), static_cast<long>(scale));
    ShiftedMinResult res = min_on_shifted_lattice(lat, target);

    // Lexicographic order on beta matches lexicographic order on the result
    // vector (scale > 0), so the first minimizer gives the tie-break winner.
    const NSVector& beta = res.minimizers.front();
    NSVector best;
    best.coords.resize(lat.rank());
    for (int i = 0; i < lat.rank(); ++i) best.coords[i] = v0.coords[i] + scale * beta.coords[i];
    return CosetMinResult{best, lat.pairing(best, best)};
}

}  // namespace kodaira
