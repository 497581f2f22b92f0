#include "kodaira/fibres.hpp"

#include <algorithm>

#include "kodaira/errors.hpp"

namespace kodaira {

SheafRecord::SheafRecord(NeronSeveriLattice lat, NSVector c1, std::int64_t c2,
                         std::int64_t base_twist,
                         std::vector<std::pair<std::string, std::int64_t>> jumps,
                         std::int64_t sing_length)
    : lat_(std::move(lat)),
      c1_(std::move(c1)),
      c2_(c2),
      base_twist_(base_twist),
      jumps_(std::move(jumps)),
      sing_length_(sing_length) {
    if (sing_length_ < 0) throw PreconditionError("SheafRecord: negative singular length");
    std::sort(jumps_.begin(), jumps_.end());
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        if (jumps_[i].second < 1)
            throw PreconditionError("SheafRecord: jump multiplicities must be >= 1");
        if (i > 0 && jumps_[i].first == jumps_[i - 1].first)
            throw PreconditionError("SheafRecord: duplicate jump label");
    }
    const Rat d = delta();
    if (d < 0) throw PreconditionError("SheafRecord: negative discriminant");
    if (Rat(total_jump_multiplicity()) > Rat(2) * d)
        throw PreconditionError("SheafRecord: total jump multiplicity exceeds 2*delta");
}

Rat SheafRecord::delta() const {
    ChernData ch;
    ch.r = 2;
    ch.c1 = c1_;
    ch.c2 = c2_;
    return discriminant(lat_, ch);
}

std::int64_t SheafRecord::total_jump_multiplicity() const {
    std::int64_t s = 0;
    for (const auto& [label, mult] : jumps_) s += mult;
    return s;
}

SheafRecord allowable_modification(const SheafRecord& s, const std::string& at, std::int64_t h) {
    if (!s.locally_free())
        throw PreconditionError("allowable_modification: record is not locally free");
    if (h < 1) throw PreconditionError("allowable_modification: h must be >= 1");
    auto jumps = s.jumps();
    auto it = std::find_if(jumps.begin(), jumps.end(),
                           [&](const auto& j) { return j.first == at; });
    if (it == jumps.end())
        throw PreconditionError("allowable_modification: no jump at '" + at + "'");
    if (it->second < h)
        throw PreconditionError("allowable_modification: h exceeds the jump multiplicity at '" +
                                at + "'");
    it->second -= h;
    if (it->second == 0) jumps.erase(it);
    const Rat new_delta = s.delta() - Rat(h, 2);
    if (new_delta < 0)
        throw InvariantError("allowable_modification: discriminant driven below zero");
    return SheafRecord(s.lattice(), s.c1(), s.c2() - h, s.base_twist() - 1, std::move(jumps), 0);
}

SheafRecord positive_modification(const SheafRecord& s, const std::string& at,
                                  std::int64_t deg_lambda, bool creates_jump) {
    if (!s.locally_free())
        throw PreconditionError("positive_modification: record is not locally free");
    if (deg_lambda < 1) throw PreconditionError("positive_modification: degree must be >= 1");
    auto jumps = s.jumps();
    if (creates_jump) {
        auto it = std::find_if(jumps.begin(), jumps.end(),
                               [&](const auto& j) { return j.first == at; });
        if (it == jumps.end())
            jumps.emplace_back(at, deg_lambda);
        else
            it->second += deg_lambda;
    }
    // Every elementary modification along a fibre twists the determinant by
    // one pullback, positive-degree ones included.
    return SheafRecord(s.lattice(), s.c1(), s.c2() + deg_lambda, s.base_twist() - 1,
                       std::move(jumps), 0);
}

SheafRecord double_dual(const SheafRecord& s,
                        const std::vector<std::pair<std::string, std::int64_t>>& support) {
    if (s.locally_free()) throw PreconditionError("double_dual: record is already locally free");
    std::int64_t m = 0;
    for (const auto& [label, count] : support) {
        if (count < 1) throw PreconditionError("double_dual: support counts must be >= 1");
        m += count;
    }
    if (m != s.sing_length())
        throw PreconditionError("double_dual: support does not account for the singular length");
    auto jumps = s.jumps();
    for (const auto& [label, count] : support) {
        auto it = std::find_if(jumps.begin(), jumps.end(),
                               [&](const auto& j) { return j.first == label; });
        if (it == jumps.end() || it->second < count)
            throw PreconditionError("double_dual: singular support not matched by jumps at '" +
                                    label + "'");
        it->second -= count;
        if (it->second == 0) jumps.erase(it);
    }
    return SheafRecord(s.lattice(), s.c1(), s.c2() - m, s.base_twist(), std::move(jumps), 0);
}

std::int64_t bisection_genus(const NeronSeveriLattice& lat, const ChernData& ch, std::int64_t k) {
    if (ch.r != 2) throw PreconditionError("bisection_genus: rank must be 2");
    const Rat delta = discriminant(lat, ch);
    if (delta < 0) throw PreconditionError("bisection_genus: negative discriminant");
    const std::int64_t fd = four_delta(lat, ch);
    if (k < 0 || 2 * k > fd) throw PreconditionError("bisection_genus: stratum index out of range");
    return fd - 2 * k + 1;
}

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

FibreDescriptor fibre_descriptor(const NeronSeveriLattice& lat, const ChernData& ch,
                                 std::int64_t k, bool at_branch_point) {
    if (ch.r != 2) throw PreconditionError("fibre_descriptor: rank must be 2");
    const Rat delta = discriminant(lat, ch);
    if (delta < 0) throw PreconditionError("fibre_descriptor: negative discriminant");
    const std::int64_t fd = four_delta(lat, ch);
    if (k < 0 || 2 * k > fd)
        throw PreconditionError("fibre_descriptor: stratum index out of range");

    FibreDescriptor f;
    f.stratum_k = k;
    f.fibre_dim = fd;

    if (k == 0) {
        ComponentDescriptor c;
        c.kind = ComponentKind::Prym;
        c.prym_dim = fd;  // genus 4*delta + 1, each Prym component has dim genus - 1
        if (fd == 0) c.extra = {2};  // unramified double cover: two-element Prym
        f.components = {c};
        return f;
    }
    if (k == 1) {
        const std::int64_t genus = fd - 1;  // bisection genus 4*delta - 2k + 1
        ComponentDescriptor c;
        c.kind = ComponentKind::P1BundleOverPrymTimesT;
        c.prym_dim = genus - 1;
        if (genus == 1) c.extra = {2};
        f.components = {c, c};  // locally free closure and the Quot component
        // A genus-1 bisection covers B without ramification, so the two
        // components always meet in two sections there.
        f.intersection_sections = (genus > 1 && at_branch_point) ? 1 : 2;
        return f;
    }
    // k >= 2: recursion skeleton. At a generic stratum-k point the jump
    // multiplicities are (1,...,1), so the nu-tuples with sum l number
    // binom(k, l); each l refers the non-locally free part to the moduli
    // space at second Chern class c2 - l.
    for (std::int64_t l = 1; l <= k; ++l) {
        ComponentDescriptor c;
        c.kind = ComponentKind::QuotRecursion;
        c.prym_dim = fd - 2 * k;  // Prym of the underlying bisection
        c.extra = {l, binom(k, l), ch.c2 - l};
        f.components.push_back(std::move(c));
    }
    return f;
}

TopologyReport topology_report(const NeronSeveriLattice& lat, const ChernData& ch) {
    if (ch.r != 2) throw PreconditionError("topology_report: rank must be 2");
    TopologyReport rep;
    const ModuliReport mr = classify(lat, ch);
    rep.delta = mr.delta;
    rep.in_range = mr.stably_irreducible;
    if (!rep.in_range) {
        rep.warnings.push_back(
            "invariants are outside the stably irreducible range; no topological claims");
        return rep;
    }
    const Rat& d = mr.delta;
    rep.kaehler = (d == 0);  // four reduced points; positive dimension is never Kaehler
    if (d >= Rat(1, 2)) {
        rep.pi1_base = "Z^2";
        rep.pi1_surjective = true;
    }
    if (d == 0) rep.labels.emplace_back("four points");
    if (d == Rat(1, 4)) rep.labels.emplace_back("primary Kodaira surface");
    if (d > 0 && d <= Rat(3, 4)) rep.arapura_generators = (Rat(8) * d).to_int64();
    rep.simply_connected_components = (d > 0) ? 0 : 4;
    return rep;
}

}  // namespace kodaira
