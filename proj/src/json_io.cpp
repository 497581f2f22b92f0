#include "kodaira/json_io.hpp"

#include <utility>

#include "kodaira/errors.hpp"

namespace kodaira {

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Translate the byte offset into line:column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SchemaError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                          ": " + e.what());
    }
}

namespace {

const Json& require_field(const Json& j, const char* key, const char* what) {
    if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw SchemaError(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(as_int(v, what));
    return out;
}

}  // namespace

NeronSeveriLattice lattice_from_json(const Json& j) {
    const std::int64_t rank = as_int(require_field(j, "rank", "lattice"), "lattice.rank");
    const Json& gj = require_field(j, "gram", "lattice");
    if (!gj.is_array()) throw SchemaError("lattice.gram: expected an array of rows");
    std::vector<std::vector<std::int64_t>> gram;
    for (const auto& row : gj) gram.push_back(as_int_array(row, "lattice.gram"));
    const std::int64_t torsion = as_int(require_field(j, "torsion", "lattice"), "lattice.torsion");
    return NeronSeveriLattice(static_cast<int>(rank), std::move(gram), torsion);
}

ChernData chern_from_json(const Json& j, const NeronSeveriLattice& lat) {
    ChernData ch;
    ch.r = as_int(require_field(j, "r", "chern"), "chern.r");
    ch.c1 = NSVector{as_int_array(require_field(j, "c1", "chern"), "chern.c1")};
    ch.c2 = as_int(require_field(j, "c2", "chern"), "chern.c2");
    if (j.contains("c1_torsion")) ch.c1_torsion = as_int(j["c1_torsion"], "chern.c1_torsion");
    if (static_cast<int>(ch.c1.coords.size()) != lat.rank())
        throw SchemaError("chern.c1: length does not match lattice rank");
    return ch;
}

SheafRecord record_from_json(const Json& j) {
    NeronSeveriLattice lat = lattice_from_json(require_field(j, "lattice", "record"));
    NSVector c1{as_int_array(require_field(j, "c1", "record"), "record.c1")};
    const std::int64_t c2 = as_int(require_field(j, "c2", "record"), "record.c2");
    std::int64_t base_twist = 0;
    if (j.contains("base_twist")) base_twist = as_int(j["base_twist"], "record.base_twist");
    std::vector<std::pair<std::string, std::int64_t>> jumps;
    if (j.contains("jumps")) {
        const Json& ja = j["jumps"];
        if (!ja.is_array()) throw SchemaError("record.jumps: expected an array");
        for (const auto& e : ja) {
            const Json& at = require_field(e, "at", "record.jumps");
            if (!at.is_string()) throw SchemaError("record.jumps.at: expected a string");
            jumps.emplace_back(at.get<std::string>(),
                               as_int(require_field(e, "mult", "record.jumps"), "record.jumps.mult"));
        }
    }
    std::int64_t sing = 0;
    if (j.contains("sing_length")) sing = as_int(j["sing_length"], "record.sing_length");
    SheafRecord rec(std::move(lat), std::move(c1), c2, base_twist, std::move(jumps), sing);
    if (j.contains("locally_free")) {
        if (!j["locally_free"].is_boolean())
            throw SchemaError("record.locally_free: expected a boolean");
        if (j["locally_free"].get<bool>() != rec.locally_free())
            throw SchemaError("record.locally_free: inconsistent with sing_length");
    }
    return rec;
}

Json to_json(const Rat& r) {
    return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Json to_json(const NSVector& v) {
    Json a = Json::array();
    for (std::int64_t c : v.coords) a.push_back(c);
    return a;
}

Json to_json(const NeronSeveriLattice& lat) {
    Json gram = Json::array();
    for (const auto& row : lat.gram()) {
        Json r = Json::array();
        for (std::int64_t v : row) r.push_back(v);
        gram.push_back(std::move(r));
    }
    return Json{{"rank", lat.rank()}, {"gram", std::move(gram)}, {"torsion", lat.torsion_order()}};
}

Json to_json(const ChernData& ch) {
    return Json{{"r", ch.r}, {"c1", to_json(ch.c1)}, {"c2", ch.c2}, {"c1_torsion", ch.c1_torsion}};
}

Json to_json(const ModuliReport& rep) {
    Json j;
    j["delta"] = to_json(rep.delta);
    j["t"] = to_json(rep.t);
    if (rep.t_rank1_convention) j["t_rank1_convention"] = true;
    if (rep.empty)
        j["dim"] = "EMPTY";
    else
        j["dim"] = rep.dim;
    j["stably_irreducible"] = rep.stably_irreducible;
    j["smooth_compact"] = rep.smooth_compact;
    j["normalized"] = rep.normalized;
    return j;
}

Json to_json(const GraphSpaceDescriptor& d) {
    Json j;
    j["kind"] = d.kind == GraphSpaceKind::FinitePoints ? "FINITE_POINTS" : "PROJ_BUNDLE";
    if (d.kind == GraphSpaceKind::FinitePoints) {
        j["points"] = d.point_count;
        j["ranks"] = Json::array();
        j["degrees"] = Json::array();
    } else {
        j["bundle_kind"] =
            d.bundle->kind == BundleKind::SingleStable ? "SINGLE_STABLE" : "SUM_TWO_STABLE";
        j["ranks"] = d.bundle->ranks;
        j["degrees"] = d.bundle->degrees;
    }
    j["base"] = d.base;
    j["total_dim"] = d.total_dim;
    j["ambient_bundle_degree"] = d.ambient_bundle_degree;
    j["label"] = d.label();
    return j;
}

Json to_json(const StratumDescriptor& s) {
    Json j;
    j["k"] = s.k;
    j["codim"] = s.codim;
    j["dim"] = s.dim;
    j["factor_base"] = to_json(s.factor_base);
    j["sym_factor"] = s.sym_factor;
    j["sym_dim"] = s.sym_dim;
    j["label"] = s.product_label;
    return j;
}

Json to_json(const ComponentDescriptor& c) {
    Json j;
    switch (c.kind) {
        case ComponentKind::Prym:
            j["kind"] = "PRYM";
            j["prym_dim"] = c.prym_dim;
            if (!c.extra.empty()) j["component_count"] = c.extra[0];
            break;
        case ComponentKind::P1BundleOverPrymTimesT:
            j["kind"] = "P1_BUNDLE_OVER_PRYM_TIMES_T";
            j["prym_dim"] = c.prym_dim;
            if (!c.extra.empty()) j["prym_component_count"] = c.extra[0];
            break;
        case ComponentKind::QuotRecursion:
            j["kind"] = "QUOT_RECURSION";
            j["prym_dim"] = c.prym_dim;
            j["quot_length"] = c.extra[0];
            j["nu_tuple_count"] = c.extra[1];
            j["sub_c2"] = c.extra[2];
            break;
    }
    return j;
}

Json to_json(const FibreDescriptor& f) {
    Json j;
    j["stratum_k"] = f.stratum_k;
    j["fibre_dim"] = f.fibre_dim;
    if (f.intersection_sections > 0) j["intersection_sections"] = f.intersection_sections;
    Json comps = Json::array();
    for (const auto& c : f.components) comps.push_back(to_json(c));
    j["components"] = std::move(comps);
    return j;
}

Json to_json(const SheafRecord& s) {
    Json jumps = Json::array();
    for (const auto& [at, mult] : s.jumps()) jumps.push_back(Json{{"at", at}, {"mult", mult}});
    Json j;
    j["lattice"] = to_json(s.lattice());
    j["c1"] = to_json(s.c1());
    j["c2"] = s.c2();
    j["base_twist"] = s.base_twist();
    j["jumps"] = std::move(jumps);
    j["sing_length"] = s.sing_length();
    j["locally_free"] = s.locally_free();
    return j;
}

Json to_json(const TopologyReport& rep) {
    Json j;
    j["in_range"] = rep.in_range;
    j["delta"] = to_json(rep.delta);
    if (!rep.in_range) {
        j["warnings"] = rep.warnings;
        return j;
    }
    j["kaehler"] = rep.kaehler;
    if (!rep.pi1_base.empty()) j["pi1_base"] = rep.pi1_base;
    j["pi1_surjective"] = rep.pi1_surjective;
    j["labels"] = rep.labels;
    if (rep.arapura_generators)
        j["arapura_generators"] = *rep.arapura_generators;
    j["simply_connected_components"] = rep.simply_connected_components;
    return j;
}

Json to_json(const Pi1Descriptor& p) {
    Json j;
    j["free_rank"] = p.free_rank;
    j["torsion"] = p.torsion;
    j["group"] = p.str();
    return j;
}

Json to_json(const BaseComparison& c) {
    Json j;
    j["delta"] = to_json(c.delta);
    j["applicable"] = c.applicable;
    j["iso_to_symB_possible"] = c.iso_to_symB_possible;
    j["never_biholomorphic"] = c.never_biholomorphic;
    j["note"] = c.note;
    return j;
}

Json to_json(const FibrationCensus& c) {
    Json special = Json::array();
    for (const auto& comp : c.special)
        special.push_back(Json{{"label", comp.label}, {"dim", comp.dim}});
    Json j;
    j["generic"] = Json{{"label", c.generic.label}, {"dim", c.generic.dim}};
    j["special"] = std::move(special);
    j["special_intersection"] = c.special_intersection;
    return j;
}

}  // namespace kodaira
