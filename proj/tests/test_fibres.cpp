#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "kodaira/errors.hpp"
#include "kodaira/fibres.hpp"
#include "kodaira/graphspace.hpp"

using namespace kodaira;

namespace {

NeronSeveriLattice lat1(std::int64_t g) { return NeronSeveriLattice(1, {{g}}, 1); }

// gram [[-8]], c1 = generator: 2*delta = c2 + 2, so c2 in [-2, 2] spans
// 2*delta in [0, 4].
SheafRecord record_with(std::int64_t c2, std::vector<std::pair<std::string, std::int64_t>> jumps,
                        std::int64_t sing = 0) {
    return SheafRecord(lat1(-8), NSVector{{1}}, c2, 0, std::move(jumps), sing);
}

ChernData chern2(std::int64_t c2) {
    ChernData ch;
    ch.r = 2;
    ch.c1 = NSVector{{1}};
    ch.c2 = c2;
    return ch;
}

}  // namespace

TEST_CASE("SheafRecord validates the jump bound") {
    CHECK_NOTHROW(record_with(0, {{"b", 2}}));          // 2*delta = 2
    CHECK_THROWS_AS(record_with(0, {{"b", 3}}), PreconditionError);
    CHECK_THROWS_AS(record_with(-3, {}), PreconditionError);  // delta < 0
    CHECK_THROWS_AS(record_with(0, {{"b", 0}}), PreconditionError);
    CHECK_THROWS_AS(record_with(0, {{"b", 1}, {"b", 1}}), PreconditionError);
    CHECK(record_with(0, {}).locally_free());
    CHECK_FALSE(record_with(0, {{"b", 1}}, 1).locally_free());
}

TEST_CASE("allowable_modification drops c2, the jump and the twist") {
    SheafRecord s = record_with(0, {{"b", 2}});
    CHECK(s.delta() == Rat(1));
    SheafRecord m = allowable_modification(s, "b", 1);
    CHECK(m.c2() == -1);
    CHECK(m.jumps() == std::vector<std::pair<std::string, std::int64_t>>{{"b", 1}});
    CHECK(m.base_twist() == -1);
    CHECK(m.delta() == Rat(1, 2));

    SheafRecord gone = allowable_modification(m, "b", 1);
    CHECK(gone.jumps().empty());
    CHECK(gone.delta() == Rat(0));
}

TEST_CASE("allowable_modification rejects overshoot and absent labels") {
    SheafRecord s = record_with(0, {{"b", 2}});
    CHECK_THROWS_AS(allowable_modification(s, "b", 3), PreconditionError);
    CHECK_THROWS_AS(allowable_modification(s, "c", 1), PreconditionError);
    SheafRecord sing = record_with(0, {{"b", 1}}, 1);
    CHECK_THROWS_AS(allowable_modification(sing, "b", 1), PreconditionError);
}

TEST_CASE("positive_modification raises c2 and optionally the jump") {
    SheafRecord s = record_with(-1, {});  // delta = 1/2
    SheafRecord p = positive_modification(s, "b", 1, true);
    CHECK(p.c2() == 0);
    CHECK(p.delta() == Rat(1));
    CHECK(p.jumps() == std::vector<std::pair<std::string, std::int64_t>>{{"b", 1}});

    SheafRecord q = positive_modification(s, "b", 1, false);
    CHECK(q.jumps().empty());
    CHECK(q.delta() == Rat(1));

    CHECK_THROWS_AS(positive_modification(s, "b", 0, true), PreconditionError);
}

TEST_CASE("allowable then positive at the same label restores c1, c2 and jumps") {
    SheafRecord s = record_with(0, {{"b", 2}});
    SheafRecord down = allowable_modification(s, "b", 2);
    SheafRecord up = positive_modification(down, "b", 2, true);
    CHECK(up.c1() == s.c1());
    CHECK(up.c2() == s.c2());
    CHECK(up.jumps() == s.jumps());
    CHECK(up.delta() == s.delta());
    CHECK(up.base_twist() != s.base_twist());  // the determinant twist does not cancel
}

TEST_CASE("double_dual clears the singular locus") {
    SheafRecord s = record_with(0, {{"b", 1}}, 1);  // delta = 1, one singular point over b
    SheafRecord d = double_dual(s, {{"b", 1}});
    CHECK(d.locally_free());
    CHECK(d.c2() == -1);
    CHECK(d.delta() == Rat(1, 2));
    CHECK(d.jumps().empty());
    CHECK(d.base_twist() == s.base_twist());

    CHECK_THROWS_AS(double_dual(record_with(0, {}), {}), PreconditionError);

    SheafRecord two = record_with(1, {{"b", 1}, {"c", 1}}, 2);  // delta = 3/2, m = 2
    SheafRecord dd = double_dual(two, {{"b", 1}, {"c", 1}});
    CHECK(dd.delta() == two.delta() - Rat(1));  // m/r = 1 for rank 2
    CHECK(dd.c2() == -1);

    // support must match the singular length and be covered by jumps
    CHECK_THROWS_AS(double_dual(two, {{"b", 2}}), PreconditionError);
    CHECK_THROWS_AS(double_dual(two, {{"b", 1}}), PreconditionError);
}

TEST_CASE("ledger safety: exhaustive modification sequences for 2*delta <= 4") {
    // Enumerate every jump configuration on up to three labels with total
    // multiplicity <= 2*delta, then walk every allowable-modification
    // sequence; delta must stay >= 0 throughout and the walk terminates.
    const std::vector<std::string> labels = {"b1", "b2", "b3"};
    long long configs = 0, sequences = 0;

    std::function<void(const SheafRecord&)> walk = [&](const SheafRecord& rec) {
        CHECK(rec.delta() >= 0);
        CHECK(Rat(rec.total_jump_multiplicity()) <= Rat(2) * rec.delta());
        bool leaf = true;
        for (const auto& [at, mult] : rec.jumps())
            for (std::int64_t h = 1; h <= mult; ++h) {
                leaf = false;
                walk(allowable_modification(rec, at, h));
            }
        if (leaf) ++sequences;
    };

    for (std::int64_t c2 = -2; c2 <= 2; ++c2) {
        const std::int64_t two_delta = c2 + 2;
        // multiplicities m1 >= m2 >= m3 >= 0 assigned to distinct labels;
        // overshooting assignments must be rejected at construction
        for (std::int64_t m1 = 0; m1 <= two_delta + 2; ++m1)
            for (std::int64_t m2 = 0; m2 <= m1; ++m2)
                for (std::int64_t m3 = 0; m3 <= m2; ++m3) {
                    std::vector<std::pair<std::string, std::int64_t>> jumps;
                    if (m1 > 0) jumps.emplace_back(labels[0], m1);
                    if (m2 > 0) jumps.emplace_back(labels[1], m2);
                    if (m3 > 0) jumps.emplace_back(labels[2], m3);
                    if (m1 + m2 + m3 > two_delta) {
                        CHECK_THROWS_AS(record_with(c2, std::move(jumps)), PreconditionError);
                        continue;
                    }
                    ++configs;
                    walk(record_with(c2, std::move(jumps)));
                }
    }
    CHECK(configs > 0);
    CHECK(sequences > 0);
}

TEST_CASE("fibre_descriptor: jump-free strata are Prym varieties") {
    auto half = construct_example(2, 2);  // delta = 1/2
    auto f = fibre_descriptor(half.lattice, half.chern, 0, false);
    REQUIRE(f.components.size() == 1);
    CHECK(f.components[0].kind == ComponentKind::Prym);
    CHECK(f.components[0].prym_dim == 2);
    CHECK(f.fibre_dim == 2);
    CHECK(f.intersection_sections == 0);

    auto zero = construct_example(0, 2);  // delta = 0: two points
    auto fz = fibre_descriptor(zero.lattice, zero.chern, 0, false);
    REQUIRE(fz.components.size() == 1);
    CHECK(fz.components[0].prym_dim == 0);
    REQUIRE(fz.components[0].extra.size() == 1);
    CHECK(fz.components[0].extra[0] == 2);
    CHECK(fz.fibre_dim == 0);
}

TEST_CASE("fibre_descriptor: one-jump strata are two P1-bundles") {
    auto tq = construct_example(3, 2);  // delta = 3/4
    auto at_branch = fibre_descriptor(tq.lattice, tq.chern, 1, true);
    REQUIRE(at_branch.components.size() == 2);
    for (const auto& c : at_branch.components) {
        CHECK(c.kind == ComponentKind::P1BundleOverPrymTimesT);
        CHECK(c.prym_dim == 1);  // genus-2 bisection
    }
    CHECK(at_branch.intersection_sections == 1);
    CHECK(at_branch.fibre_dim == 3);

    auto generic = fibre_descriptor(tq.lattice, tq.chern, 1, false);
    CHECK(generic.intersection_sections == 2);

    // delta = 1/2: the bisection is genus 1, covers without branching,
    // so two sections regardless of the flag
    auto half = construct_example(2, 2);
    CHECK(fibre_descriptor(half.lattice, half.chern, 1, true).intersection_sections == 2);
    CHECK(fibre_descriptor(half.lattice, half.chern, 1, false).intersection_sections == 2);
    for (const auto& c : fibre_descriptor(half.lattice, half.chern, 1, false).components) {
        CHECK(c.prym_dim == 0);
        REQUIRE(c.extra.size() == 1);
        CHECK(c.extra[0] == 2);  // two-element Prym: base is T x {1,-1}
    }
}

TEST_CASE("fibre_descriptor: deep strata give the Quot recursion skeleton") {
    auto big = construct_example(5, 2);  // delta = 5/4, floor(2 delta) = 2
    auto f = fibre_descriptor(big.lattice, big.chern, 2, false);
    REQUIRE(f.components.size() == 2);
    CHECK(f.components[0].kind == ComponentKind::QuotRecursion);
    CHECK(f.components[0].extra == std::vector<std::int64_t>{1, 2, big.chern.c2 - 1});
    CHECK(f.components[1].extra == std::vector<std::int64_t>{2, 1, big.chern.c2 - 2});
    CHECK_THROWS_AS(fibre_descriptor(big.lattice, big.chern, 3, false), PreconditionError);
    CHECK_THROWS_AS(fibre_descriptor(big.lattice, big.chern, -1, false), PreconditionError);
}

TEST_CASE("fibre dimensions complement the strata dimensions") {
    // stratum_dim(k) + fibre_dim(k) = 8*delta - k for k in {0,1}, delta <= 3
    for (std::int64_t fd = 0; fd <= 12; ++fd) {
        auto ex = construct_example(fd, 2);  // delta = fd/4
        auto st = strata(ex.lattice, ex.chern);
        for (std::int64_t k = 0; k <= std::min<std::int64_t>(1, fd / 2); ++k) {
            auto f = fibre_descriptor(ex.lattice, ex.chern, k, false);
            CHECK(f.fibre_dim == fd);
            CHECK(st[static_cast<std::size_t>(k)].dim + f.fibre_dim == 2 * fd - k);
        }
    }
}

TEST_CASE("bisection_genus tracks the spectral genus") {
    auto tq = construct_example(3, 2);
    CHECK(bisection_genus(tq.lattice, tq.chern, 1) == 2);
    auto half = construct_example(2, 2);
    CHECK(bisection_genus(half.lattice, half.chern, 1) == 1);
    auto one = construct_example(4, 2);  // delta = 1
    CHECK(bisection_genus(one.lattice, one.chern, 0) == 5);

    for (std::int64_t fd = 0; fd <= 10; ++fd) {
        auto ex = construct_example(fd, 2);
        CHECK(bisection_genus(ex.lattice, ex.chern, 0) == spectral_genus(ex.lattice, ex.chern));
        for (std::int64_t k = 1; 2 * k <= fd; ++k)
            CHECK(bisection_genus(ex.lattice, ex.chern, k) ==
                  bisection_genus(ex.lattice, ex.chern, k - 1) - 2);
    }
}

TEST_CASE("topology_report truth table") {
    struct Row {
        std::int64_t n;  // construct_example(n, 2): delta = n/4
        bool kaehler;
        bool surjective;
        const char* label;  // nullptr = no special label
        bool arapura;
        std::int64_t arapura_gens;
        std::int64_t simply_connected;
    };
    const Row rows[] = {
        {0, true, false, "four points", false, 0, 4},
        {1, false, false, "primary Kodaira surface", true, 2, 0},
        {2, false, true, nullptr, true, 4, 0},
        {3, false, true, nullptr, true, 6, 0},
        {4, false, true, nullptr, false, 0, 0},
        {6, false, true, nullptr, false, 0, 0},
    };
    for (const auto& row : rows) {
        auto ex = construct_example(row.n, 2);
        auto rep = topology_report(ex.lattice, ex.chern);
        CAPTURE(row.n);
        CHECK(rep.in_range);
        CHECK(rep.kaehler == row.kaehler);
        CHECK(rep.pi1_surjective == row.surjective);
        if (row.surjective) CHECK(rep.pi1_base == "Z^2");
        if (row.label == nullptr) {
            CHECK(rep.labels.empty());
        } else {
            REQUIRE(rep.labels.size() == 1);
            CHECK(rep.labels[0] == row.label);
        }
        CHECK(rep.arapura_generators.has_value() == row.arapura);
        if (row.arapura) CHECK(*rep.arapura_generators == row.arapura_gens);
        CHECK(rep.simply_connected_components == row.simply_connected);
    }
}

TEST_CASE("topology_report outside the range carries warnings only") {
    auto rep = topology_report(lat1(-2), chern2(5));  // delta = 11/2 >> t = 1/4
    CHECK_FALSE(rep.in_range);
    CHECK_FALSE(rep.warnings.empty());
}
