#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kodaira/invariants.hpp"

namespace kodaira {

enum class GraphSpaceKind { FinitePoints, ProjBundle };
enum class BundleKind { SingleStable, SumTwoStable };

struct BundleDescriptor {
    BundleKind kind;
    std::vector<std::int64_t> ranks;
    std::vector<std::int64_t> degrees;
};

// Symbolic structure of the space of graphs of rank-2 sheaves: the base of
// the Lagrangian fibration. Descriptors carry labels and integer data, not
// geometric models.
struct GraphSpaceDescriptor {
    GraphSpaceKind kind;
    std::int64_t point_count = 0;  // FinitePoints only; always 2
    std::string base = "B";
    std::optional<BundleDescriptor> bundle;  // ProjBundle only
    std::int64_t total_dim = 0;
    std::int64_t ambient_bundle_degree = 0;  // deg of the rank-2 bundle defining the ruled surface

    std::string label() const;  // "2 points", "ruled surface with base B", "P^n-bundle with base B"
};

// Stratum of the jump filtration: curves with exactly k vertical components.
struct StratumDescriptor {
    std::int64_t k = 0;
    std::int64_t codim = 0;
    std::int64_t dim = 0;
    GraphSpaceDescriptor factor_base;  // jump-free stratum at second Chern class c2 - k
    std::string sym_factor;            // "Sym^k(B)"
    std::int64_t sym_dim = 0;
    std::string product_label;
};

// Trichotomy on 4*delta: finite for delta = 0, projectivized stable bundle
// for 4*delta odd, projectivized sum of two stable bundles for 4*delta even.
GraphSpaceDescriptor graph_space(const NeronSeveriLattice& lat, const ChernData& ch);

// One stratum per k in [0, floor(2*delta)], dims strictly decreasing by 1.
std::vector<StratumDescriptor> strata(const NeronSeveriLattice& lat, const ChernData& ch);

}  // namespace kodaira
