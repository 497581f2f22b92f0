#include "kodaira/douady.hpp"

#include "kodaira/errors.hpp"

namespace kodaira {

void SurfaceBetti::validate() const {
    if (b[0] != 1 || b[4] != 1)
        throw PreconditionError("SurfaceBetti: b0 and b4 must both be 1");
    if (b[1] != b[3]) throw PreconditionError("SurfaceBetti: b1 must equal b3");
    for (std::int64_t v : b)
        if (v < 0) throw PreconditionError("SurfaceBetti: negative Betti number");
}

TruncatedSeries2 douady_betti_series(const SurfaceBetti& sb, std::int64_t n_max) {
    sb.validate();
    if (n_max < 0) throw PreconditionError("douady_betti_series: n must be >= 0");
    const int mq = static_cast<int>(n_max);
    const int mt = static_cast<int>(4 * n_max);
    TruncatedSeries2 prod = TruncatedSeries2::one(mq, mt);
    for (int k = 1; k <= mq; ++k) {
        for (int j = 0; j <= 4; ++j) {
            // (1 - (-t)^(2k-2+j) q^k)^e with e = (-1)^(j+1) b_j; even j gives
            // a negative-binomial factor, odd j a plain one.
            const long e = (j % 2 == 0) ? -sb.b[j] : sb.b[j];
            if (e == 0) continue;
            const int sign = (j % 2 == 0) ? 1 : -1;
            const int texp = 2 * k - 2 + j;
            if (texp > mt) continue;
            prod = series_mul(prod, series_binomial_pow(k, texp, sign, e, mq, mt));
        }
    }
    return prod;
}

std::vector<mpz_class> douady_betti(const SurfaceBetti& sb, std::int64_t n) {
    if (n < 0) throw PreconditionError("douady_betti: n must be >= 0");
    const TruncatedSeries2 prod = douady_betti_series(sb, n);
    std::vector<mpz_class> row(static_cast<std::size_t>(4 * n + 1));
    for (std::int64_t j = 0; j <= 4 * n; ++j)
        row[static_cast<std::size_t>(j)] = prod.coeff(static_cast<int>(n), static_cast<int>(j));
    for (std::int64_t j = 0; j <= 4 * n; ++j)
        if (row[j] != row[4 * n - j])
            throw InvariantError("douady_betti: output violates Poincare duality");
    return row;
}

std::string Pi1Descriptor::str() const {
    std::string s;
    if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
    for (std::int64_t d : torsion) {
        if (d <= 1) continue;
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(d);
    }
    if (s.empty()) s = "0";
    return s;
}

Pi1Descriptor douady_pi1(std::int64_t d, std::int64_t n) {
    if (d < 1) throw PreconditionError("douady_pi1: torsion order must be >= 1");
    if (n < 1) throw PreconditionError("douady_pi1: n must be >= 1");
    return Pi1Descriptor{3, {d}};
}

BaseComparison compare_bases(const NeronSeveriLattice& lat, const ChernData& ch) {
    if (ch.r != 2) throw PreconditionError("compare_bases: rank must be 2");
    const ModuliReport mr = classify(lat, ch);
    if (!mr.stably_irreducible)
        throw PreconditionError("compare_bases: invariants outside the stably irreducible range");
    BaseComparison cmp;
    cmp.delta = mr.delta;
    if (mr.delta == 0) {
        cmp.note = "finite base; comparison with Sym^n(B) does not apply";
        return cmp;
    }
    cmp.applicable = true;
    cmp.iso_to_symB_possible = (mr.delta == Rat(1, 4));
    cmp.never_biholomorphic = (mr.delta >= Rat(1, 2));
    cmp.note = cmp.iso_to_symB_possible
                   ? "both bases are B; an isomorphism is possible but not decided here"
                   : "the graph space is never biholomorphic to Sym^n(B)";
    return cmp;
}

FibrationCensus douady2_fibration_census() {
    FibrationCensus c;
    c.generic = {"T x T", 2};
    c.special = {{"P(T_X|_{T_b})", 2}, {"Sym^2(T)", 2}};
    c.special_intersection = "diagonal of Sym^2(T), a section of the P^1-bundle";
    return c;
}

}  // namespace kodaira
