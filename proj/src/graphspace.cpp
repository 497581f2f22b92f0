#include "kodaira/graphspace.hpp"

#include "kodaira/errors.hpp"

namespace kodaira {

std::string GraphSpaceDescriptor::label() const {
    if (kind == GraphSpaceKind::FinitePoints) return std::to_string(point_count) + " points";
    std::int64_t rank_sum = 0;
    for (std::int64_t r : bundle->ranks) rank_sum += r;
    if (rank_sum == 1) return "B";  // P^0-bundle: the base itself
    if (rank_sum == 2) return "ruled surface with base B";
    return "P^" + std::to_string(rank_sum - 1) + "-bundle with base B";
}

GraphSpaceDescriptor graph_space(const NeronSeveriLattice& lat, const ChernData& ch) {
    if (ch.r != 2) throw PreconditionError("graph_space: rank must be 2");
    const Rat delta = discriminant(lat, ch);
    if (delta < 0) throw PreconditionError("graph_space: negative discriminant");
    const std::int64_t fd = four_delta(lat, ch);

    GraphSpaceDescriptor d;
    d.ambient_bundle_degree = -lat.pairing(ch.c1, ch.c1) / 2;
    if (fd == 0) {
        d.kind = GraphSpaceKind::FinitePoints;
        d.point_count = 2;
        d.total_dim = 0;
        return d;
    }
    d.kind = GraphSpaceKind::ProjBundle;
    d.total_dim = fd;
    BundleDescriptor b;
    if (fd % 2 == 1) {
        b.kind = BundleKind::SingleStable;
        b.ranks = {fd};
        b.degrees = {-2};
    } else {
        b.kind = BundleKind::SumTwoStable;
        b.ranks = {fd / 2, fd / 2};
        b.degrees = {-1, -1};
    }
    d.bundle = std::move(b);
    return d;
}

std::vector<StratumDescriptor> strata(const NeronSeveriLattice& lat, const ChernData& ch) {
    if (ch.r != 2) throw PreconditionError("strata: rank must be 2");
    const Rat delta = discriminant(lat, ch);
    if (delta < 0) throw PreconditionError("strata: negative discriminant");
    const std::int64_t fd = four_delta(lat, ch);
    const std::int64_t kmax = fd / 2;  // floor(2*delta)

    std::vector<StratumDescriptor> out;
    out.reserve(kmax + 1);
    for (std::int64_t k = 0; k <= kmax; ++k) {
        StratumDescriptor s;
        s.k = k;
        s.codim = k;
        s.dim = fd - k;
        ChernData sub = ch;
        sub.c2 = ch.c2 - k;
        s.factor_base = graph_space(lat, sub);
        if (s.factor_base.total_dim + k != s.dim)
            throw InvariantError("strata: factor dimensions do not add up");
        s.sym_factor = "Sym^" + std::to_string(k) + "(B)";
        s.sym_dim = k;
        if (k == 0) {
            s.product_label = s.factor_base.label();
        } else {
            const std::string sym = (k == 1) ? "B" : s.sym_factor;
            std::string base_label = s.factor_base.label();
            s.product_label = base_label + " x " + sym;
            if (s.factor_base.kind == GraphSpaceKind::FinitePoints && k == 1)
                s.product_label += " (bi-section)";
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace kodaira
