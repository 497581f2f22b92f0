#include "kodaira/invariants.hpp"

#include "kodaira/errors.hpp"

namespace kodaira {

namespace {

void check_chern(const NeronSeveriLattice& lat, const ChernData& ch) {
    if (ch.r < 1) throw PreconditionError("ChernData: rank must be >= 1");
    if (static_cast<int>(ch.c1.coords.size()) != lat.rank())
        throw PreconditionError("ChernData: c1 length does not match lattice rank");
    if (ch.c1_torsion < 0 || ch.c1_torsion >= lat.torsion_order())
        throw PreconditionError("ChernData: torsion label out of range");
}

}  // namespace

Rat discriminant(const NeronSeveriLattice& lat, const ChernData& ch) {
    check_chern(lat, ch);
    const Rat c1sq(lat.pairing(ch.c1, ch.c1));
    const long r = static_cast<long>(ch.r);
    return (Rat(ch.c2) - Rat(r - 1, 2 * r) * c1sq) / Rat(r);
}

Rat t_invariant(const NeronSeveriLattice& lat, std::int64_t r, const NSVector& c1) {
    if (r < 1) throw PreconditionError("t_invariant: rank must be >= 1");
    if (static_cast<int>(c1.coords.size()) != lat.rank())
        throw PreconditionError("t_invariant: c1 length does not match lattice rank");
    if (r == 1) return Rat(0);
    if (lat.rank() == 0) return Rat(0);

    Rat best;
    bool have = false;
    for (std::int64_t k = 1; 2 * k <= r; ++k) {
        std::vector<Rat> target(lat.rank());
        for (int i = 0; i < lat.rank(); ++i)
            target[i] = Rat(mpz_class(static_cast<long>(k) * c1.coords[i]),
                            mpz_class(static_cast<long>(r)));
        const Rat inner = min_on_shifted_lattice(lat, target).min_value;
        const Rat v = inner / Rat(static_cast<long>(k) * (r - k));
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    return best * Rat(1, 2);
}

ModuliReport classify(const NeronSeveriLattice& lat, const ChernData& ch) {
    check_chern(lat, ch);
    ModuliReport rep;
    rep.delta = discriminant(lat, ch);
    rep.t = t_invariant(lat, ch.r, ch.c1);
    rep.t_rank1_convention = (ch.r == 1);
    if (rep.delta < 0) {
        rep.empty = true;
        rep.dim = 0;
    } else {
        const std::int64_t c1sq = lat.pairing(ch.c1, ch.c1);
        rep.dim = 2 * ch.r * ch.c2 - (ch.r - 1) * c1sq;  // equals 2 r^2 delta
        if (Rat(rep.dim) != Rat(2 * ch.r * ch.r) * rep.delta)
            throw InvariantError("classify: dimension disagrees with 2 r^2 delta");
    }
    rep.stably_irreducible = !rep.empty && rep.delta < rep.t;
    rep.smooth_compact = rep.stably_irreducible;
    rep.normalized =
        (ch.r == 2) && Rat(lat.pairing(ch.c1, ch.c1)) == Rat(-8) * rep.t;
    return rep;
}

NormalizeResult normalize_rank2(const NeronSeveriLattice& lat, const ChernData& ch) {
    check_chern(lat, ch);
    if (ch.r != 2) throw PreconditionError("normalize_rank2: rank must be 2");
    const CosetMinResult cm = coset_min(lat, ch.c1, 2);
    NSVector beta;
    beta.coords.resize(lat.rank());
    for (int i = 0; i < lat.rank(); ++i) {
        const std::int64_t d = cm.best.coords[i] - ch.c1.coords[i];
        if (d % 2 != 0) throw InvariantError("normalize_rank2: coset representative parity");
        beta.coords[i] = d / 2;
    }
    ChernData out = ch;
    out.c1 = cm.best;
    out.c2 = ch.c2 + lat.pairing(beta, ch.c1) + lat.pairing(beta, beta);
    return NormalizeResult{out, beta};
}

ExampleInstance construct_example(std::int64_t n, std::int64_t r) {
    if (n < 0) throw PreconditionError("construct_example: n must be >= 0");
    if (r < 2) throw PreconditionError("construct_example: r must be >= 2");
    const std::int64_t d = r * n - n + r;
    NeronSeveriLattice lat(1, {{-2 * d}}, d);
    ChernData ch;
    ch.r = r;
    ch.c1 = NSVector{{1}};
    ch.c2 = 2 * n - r * n - r + 1;
    return ExampleInstance{std::move(lat), std::move(ch)};
}

std::int64_t four_delta(const NeronSeveriLattice& lat, const ChernData& ch) {
    const Rat fd = Rat(4) * discriminant(lat, ch);
    if (!fd.is_integer())
        throw PreconditionError("four_delta: 4*delta is not integral for these invariants");
    return fd.to_int64();
}

std::int64_t spectral_genus(const NeronSeveriLattice& lat, const ChernData& ch) {
    check_chern(lat, ch);
    if (ch.r != 2) throw PreconditionError("spectral_genus: rank must be 2");
    const Rat delta = discriminant(lat, ch);
    if (delta < 0) throw PreconditionError("spectral_genus: negative discriminant");
    return four_delta(lat, ch) + 1;
}

}  // namespace kodaira
