#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kodaira/invariants.hpp"

namespace kodaira {

// Bookkeeping record for a rank-2 torsion-free sheaf: Chern data, the net
// pullback twist absorbed into the determinant, the jump divisor (points of
// the base are opaque tokens), and the length of the singular locus.
// Invariants: delta >= 0, total jump multiplicity <= 2*delta, and the record
// is locally free exactly when sing_length = 0.
class SheafRecord {
public:
    SheafRecord(NeronSeveriLattice lat, NSVector c1, std::int64_t c2, std::int64_t base_twist,
                std::vector<std::pair<std::string, std::int64_t>> jumps, std::int64_t sing_length);

    const NeronSeveriLattice& lattice() const { return lat_; }
    const NSVector& c1() const { return c1_; }
    std::int64_t c2() const { return c2_; }
    std::int64_t base_twist() const { return base_twist_; }
    const std::vector<std::pair<std::string, std::int64_t>>& jumps() const { return jumps_; }
    std::int64_t sing_length() const { return sing_length_; }
    bool locally_free() const { return sing_length_ == 0; }

    Rat delta() const;
    std::int64_t total_jump_multiplicity() const;

private:
    NeronSeveriLattice lat_;
    NSVector c1_;
    std::int64_t c2_;
    std::int64_t base_twist_;
    std::vector<std::pair<std::string, std::int64_t>> jumps_;  // sorted by label
    std::int64_t sing_length_;
};

// Kernel of a surjection onto a negative-degree line bundle on the fibre over
// `at`: drops c2 and the jump multiplicity there by h, twists the determinant
// down by one fibre pullback, and lowers delta by h/2.
SheafRecord allowable_modification(const SheafRecord& s, const std::string& at, std::int64_t h);

// Modification by a degree deg_lambda >= 1 line bundle on the fibre over
// `at`. Whether it creates a jump there is not decidable from the record
// alone; the caller supplies that flag.
SheafRecord positive_modification(const SheafRecord& s, const std::string& at,
                                  std::int64_t deg_lambda, bool creates_jump);

// Pass to the double dual: clears the singular locus of length m, dropping c2
// by m and one jump unit per singular point. The caller maps the singular
// support onto jump labels.
SheafRecord double_dual(const SheafRecord& s,
                        const std::vector<std::pair<std::string, std::int64_t>>& support);

enum class ComponentKind { Prym, P1BundleOverPrymTimesT, QuotRecursion };

struct ComponentDescriptor {
    ComponentKind kind;
    std::int64_t prym_dim = 0;       // genus(bisection) - 1
    std::vector<std::int64_t> extra;  // Prym: {component count} when known;
                                      // QuotRecursion: {l, nu-tuple count, c2 - l}
};

// Symbolic fibre of the graph map over a stratum-k point.
struct FibreDescriptor {
    std::int64_t stratum_k = 0;
    std::vector<ComponentDescriptor> components;
    std::int64_t intersection_sections = 0;  // two-component strata only; 0 = n/a
    std::int64_t fibre_dim = 0;
};

// k = 0: Prym of the smooth bisection. k = 1: two P1-bundles over Prym x T
// meeting in 1 or 2 sections depending on whether the jump sits over a branch
// image. k >= 2: recursion skeleton over the Quot-scheme lengths l in [1,k].
FibreDescriptor fibre_descriptor(const NeronSeveriLattice& lat, const ChernData& ch,
                                 std::int64_t k, bool at_branch_point);

// Arithmetic genus of the bisection underlying a stratum-k spectral curve.
std::int64_t bisection_genus(const NeronSeveriLattice& lat, const ChernData& ch, std::int64_t k);

struct TopologyReport {
    bool in_range = false;  // stably irreducible range; no claims otherwise
    std::vector<std::string> warnings;
    Rat delta;
    bool kaehler = false;
    std::string pi1_base;  // "Z^2" once the base is a positive-dimensional bundle
    bool pi1_surjective = false;
    std::vector<std::string> labels;  // "four points", "primary Kodaira surface"
    std::optional<std::int64_t> arapura_generators;  // 8*delta when 0 < delta <= 3/4
    std::int64_t simply_connected_components = 0;
};

TopologyReport topology_report(const NeronSeveriLattice& lat, const ChernData& ch);

}  // namespace kodaira
