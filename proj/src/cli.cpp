#include "kodaira/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kodaira/errors.hpp"
#include "kodaira/json_io.hpp"

namespace kodaira {

namespace {

struct InputSource {
    std::string path;
    std::string inline_json;
};

Json load_input(const InputSource& src) {
    const bool has_path = !src.path.empty();
    const bool has_inline = !src.inline_json.empty();
    if (has_path == has_inline)
        throw SchemaError("exactly one of --input and --inline must be given");
    if (has_inline) return parse_json(src.inline_json, "<inline>");
    std::ifstream f(src.path);
    if (!f) throw SchemaError("cannot open input file '" + src.path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_json(buf.str(), src.path);
}

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object()) throw SchemaError("input: expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("input: missing field '") + key + "'");
    return *it;
}

struct Problem {
    NeronSeveriLattice lattice;
    ChernData chern;
};

Problem problem_from_input(const Json& in) {
    NeronSeveriLattice lat = lattice_from_json(require_field(in, "lattice"));
    ChernData ch = chern_from_json(require_field(in, "chern"), lat);
    return Problem{std::move(lat), std::move(ch)};
}

// --- plain-text rendering ---------------------------------------------------

bool is_scalar_array(const Json& j) {
    for (const auto& v : j)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

bool is_scalar_matrix(const Json& j) {
    for (const auto& v : j)
        if (!v.is_array() || !is_scalar_array(v)) return false;
    return true;
}

std::string scalar_str(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_text(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                os << pad << key << ":\n";
                render_text(os, value, indent + 1);
            } else if (value.is_array() && is_scalar_array(value)) {
                os << pad << key << ": [";
                for (std::size_t i = 0; i < value.size(); ++i)
                    os << (i ? ", " : "") << scalar_str(value[i]);
                os << "]\n";
            } else if (value.is_array() && is_scalar_matrix(value)) {
                os << pad << key << ": " << value.dump() << "\n";
            } else if (value.is_array()) {
                os << pad << key << ":\n";
                render_text(os, value, indent + 1);
            } else {
                os << pad << key << ": " << scalar_str(value) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            os << pad << "-\n";
            render_text(os, v, indent + 1);
        }
    } else {
        os << pad << scalar_str(j) << "\n";
    }
}

std::string rat_str(const Json& rat) {
    const std::string num = rat.at("num").get<std::string>();
    const std::string den = rat.at("den").get<std::string>();
    return den == "1" ? num : num + "/" + den;
}

// Collapse {"num","den"} objects to "p/q" strings for human-readable output.
Json humanize(const Json& j) {
    if (j.is_object()) {
        if (j.size() == 2 && j.contains("num") && j.contains("den")) return rat_str(j);
        Json out = Json::object();
        for (const auto& [key, value] : j.items()) out[key] = humanize(value);
        return out;
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& v : j) out.push_back(humanize(v));
        return out;
    }
    return j;
}

void emit(std::ostream& os, const Json& report, const std::string& format) {
    if (format == "json") {
        os << report.dump(2) << "\n";
    } else {
        render_text(os, humanize(report), 0);
    }
}

// --- commands ---------------------------------------------------------------

Json cmd_classify(const Json& in) {
    Problem p = problem_from_input(in);
    const ModuliReport rep = classify(p.lattice, p.chern);
    Json out;
    out["lattice"] = to_json(p.lattice);
    out["chern"] = to_json(p.chern);
    out["report"] = to_json(rep);
    if (p.chern.r == 2 && !rep.empty) {
        out["spectral_genus"] = spectral_genus(p.lattice, p.chern);
        out["topology"] = to_json(topology_report(p.lattice, p.chern));
    }
    return out;
}

Json cmd_construct(std::int64_t n, std::int64_t r) {
    const ExampleInstance ex = construct_example(n, r);
    Json out;
    out["lattice"] = to_json(ex.lattice);
    out["chern"] = to_json(ex.chern);
    out["report"] = to_json(classify(ex.lattice, ex.chern));
    return out;
}

Json cmd_normalize(const Json& in) {
    Problem p = problem_from_input(in);
    const NormalizeResult res = normalize_rank2(p.lattice, p.chern);
    Json out;
    out["chern"] = to_json(res.chern);
    out["twist"] = to_json(res.twist);
    out["delta"] = to_json(discriminant(p.lattice, res.chern));
    out["c1_sq"] = p.lattice.pairing(res.chern.c1, res.chern.c1);
    out["t"] = to_json(t_invariant(p.lattice, 2, res.chern.c1));
    out["report"] = to_json(classify(p.lattice, res.chern));
    return out;
}

Json cmd_strata(const Json& in) {
    Problem p = problem_from_input(in);
    Json out = to_json(graph_space(p.lattice, p.chern));
    Json st = Json::array();
    for (const auto& s : strata(p.lattice, p.chern)) st.push_back(to_json(s));
    out["strata"] = std::move(st);
    return out;
}

Json cmd_fibres(const Json& in, std::int64_t k, bool at_branch_point) {
    Problem p = problem_from_input(in);
    Json out;
    out["fibre"] = to_json(fibre_descriptor(p.lattice, p.chern, k, at_branch_point));
    out["bisection_genus"] = bisection_genus(p.lattice, p.chern, k);
    const Rat delta = discriminant(p.lattice, p.chern);
    if (delta == Rat(1, 2) && k == 1)
        out["douady_x2_comparison"] = to_json(douady2_fibration_census());
    return out;
}

SurfaceBetti parse_surface(const std::string& spec) {
    SurfaceBetti sb{};
    std::stringstream ss(spec);
    std::string item;
    int idx = 0;
    while (std::getline(ss, item, ',')) {
        if (idx >= 5) throw SchemaError("--surface: expected 5 comma-separated integers");
        try {
            sb.b[static_cast<std::size_t>(idx++)] = std::stoll(item);
        } catch (const std::exception&) {
            throw SchemaError("--surface: '" + item + "' is not an integer");
        }
    }
    if (idx != 5) throw SchemaError("--surface: expected 5 comma-separated integers");
    return sb;
}

Json cmd_betti(std::int64_t n, const SurfaceBetti& sb) {
    const std::vector<mpz_class> row = douady_betti(sb, n);
    Json betti = Json::array();
    for (const auto& v : row) betti.push_back(v.get_str());
    Json out;
    out["n"] = n;
    out["surface"] = std::vector<std::int64_t>(sb.b.begin(), sb.b.end());
    out["betti"] = std::move(betti);
    return out;
}

Json cmd_modify(const Json& in) {
    SheafRecord rec = record_from_json(require_field(in, "record"));
    const Json& script = require_field(in, "script");
    if (!script.is_array()) throw SchemaError("script: expected an array of operations");

    Json out;
    out["initial"] = Json{{"record", to_json(rec)}, {"delta", to_json(rec.delta())}};
    Json steps = Json::array();
    for (const auto& op : script) {
        const Json& name = require_field(op, "op");
        if (!name.is_string()) throw SchemaError("script.op: expected a string");
        const std::string opname = name.get<std::string>();
        if (opname == "allowable") {
            const std::string at = require_field(op, "at").get<std::string>();
            const std::int64_t h = require_field(op, "h").get<std::int64_t>();
            rec = allowable_modification(rec, at, h);
        } else if (opname == "positive") {
            const std::string at = require_field(op, "at").get<std::string>();
            const std::int64_t h = require_field(op, "h").get<std::int64_t>();
            const Json& cj = require_field(op, "creates_jump");
            if (!cj.is_boolean()) throw SchemaError("script.creates_jump: expected a boolean");
            rec = positive_modification(rec, at, h, cj.get<bool>());
        } else if (opname == "double_dual") {
            std::vector<std::pair<std::string, std::int64_t>> support;
            if (op.contains("support")) {
                for (const auto& [label, count] : op["support"].items())
                    support.emplace_back(label, count.get<std::int64_t>());
            } else {
                support.emplace_back(require_field(op, "at").get<std::string>(),
                                     require_field(op, "h").get<std::int64_t>());
            }
            rec = double_dual(rec, support);
        } else {
            throw SchemaError("script.op: unknown operation '" + opname + "'");
        }
        steps.push_back(Json{{"op", op}, {"record", to_json(rec)}, {"delta", to_json(rec.delta())}});
    }
    out["steps"] = std::move(steps);
    out["final"] = to_json(rec);
    return out;
}

struct CatalogRow {
    std::int64_t n, r, gram, c2, dim;
    Rat delta, t;
    std::string note;
};

std::vector<CatalogRow> catalog_rows(std::int64_t max_n, std::int64_t max_r) {
    if (max_n < 0) throw PreconditionError("catalog: max-n must be >= 0");
    if (max_r < 2) throw PreconditionError("catalog: max-r must be >= 2");
    const std::int64_t nn = max_n + 1, nr = max_r - 1;
    std::vector<CatalogRow> rows(static_cast<std::size_t>(nn * nr));
    // Rows are independent; results land at fixed grid positions, so the
    // assembled table is identical for every thread count.
#pragma omp parallel for collapse(2) schedule(static)
    for (std::int64_t n = 0; n <= max_n; ++n)
        for (std::int64_t r = 2; r <= max_r; ++r) {
            const ExampleInstance ex = construct_example(n, r);
            const ModuliReport rep = classify(ex.lattice, ex.chern);
            CatalogRow row;
            row.n = n;
            row.r = r;
            row.gram = ex.lattice.gram()[0][0];
            row.c2 = ex.chern.c2;
            row.dim = rep.dim;
            row.delta = rep.delta;
            row.t = rep.t;
            if (ex.chern.r == 2) {
                if (rep.delta == 0)
                    row.note = "four points";
                else
                    row.note = graph_space(ex.lattice, ex.chern).label();
            } else {
                row.note = "";
            }
            rows[static_cast<std::size_t>(n * nr + (r - 2))] = std::move(row);
        }
    return rows;
}

std::string rat_plain(const Rat& r) { return r.str(); }

void emit_catalog(std::ostream& os, const std::vector<CatalogRow>& rows,
                  const std::string& format) {
    if (format == "csv") {
        os << "n,r,gram,c2,delta,t,dim\n";
        for (const auto& row : rows)
            os << row.n << "," << row.r << "," << row.gram << "," << row.c2 << ","
               << rat_plain(row.delta) << "," << rat_plain(row.t) << "," << row.dim << "\n";
        return;
    }
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json j;
            j["n"] = row.n;
            j["r"] = row.r;
            j["gram"] = row.gram;
            j["c2"] = row.c2;
            j["delta"] = to_json(row.delta);
            j["t"] = to_json(row.t);
            j["dim"] = row.dim;
            j["note"] = row.note;
            arr.push_back(std::move(j));
        }
        os << Json{{"rows", std::move(arr)}}.dump(2) << "\n";
        return;
    }
    os << "  n  r   gram   c2  delta      t  dim  note\n";
    for (const auto& row : rows) {
        std::ostringstream line;
        line.width(3);
        line << row.n;
        line.width(3);
        line << row.r;
        line.width(7);
        line << row.gram;
        line.width(5);
        line << row.c2;
        line.width(7);
        line << rat_plain(row.delta);
        line.width(7);
        line << rat_plain(row.t);
        line.width(5);
        line << row.dim;
        os << line.str() << "  " << row.note << "\n";
    }
}

Json cmd_compare(const Json& in) {
    Problem p = problem_from_input(in);
    const BaseComparison cmp = compare_bases(p.lattice, p.chern);
    Json out;
    out["comparison"] = to_json(cmp);
    const std::int64_t fd = four_delta(p.lattice, p.chern);
    if (fd >= 1)  // the Douady space of matching dimension has n = 4*delta points
        out["douady_pi1"] = to_json(douady_pi1(p.lattice.torsion_order(), fd));
    return out;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of moduli of rank-2 sheaves on primary Kodaira surfaces"};
    app.require_subcommand(1);

    InputSource src;
    std::string format = "text";

    auto add_io = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--input", src.path, "JSON input file");
        cmd->add_option("--inline", src.inline_json, "inline JSON input");
        if (with_format)
            cmd->add_option("--format", format, "output format: json|text")
                ->check(CLI::IsMember({"json", "text"}));
    };

    auto* classify_cmd = app.add_subcommand("classify", "moduli report for (lattice, chern)");
    add_io(classify_cmd);

    std::int64_t n_arg = 0, r_arg = 2;
    auto* construct_cmd =
        app.add_subcommand("construct", "instance with a 2n-dimensional moduli space");
    construct_cmd->add_option("--n", n_arg, "target half-dimension")->required();
    construct_cmd->add_option("--r", r_arg, "sheaf rank (>= 2)")->required();
    construct_cmd->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* normalize_cmd = app.add_subcommand("normalize", "rank-2 twist normalization");
    add_io(normalize_cmd);

    auto* strata_cmd = app.add_subcommand("strata", "graph space and jump stratification");
    add_io(strata_cmd);

    std::int64_t k_arg = 0;
    bool branch_arg = false;
    auto* fibres_cmd = app.add_subcommand("fibres", "fibre of the graph map over stratum k");
    add_io(fibres_cmd);
    fibres_cmd->add_option("--k", k_arg, "stratum index")->required();
    fibres_cmd->add_flag("--at-branch-point", branch_arg,
                         "jump sits over the image of a ramification point");

    std::int64_t betti_n = 0;
    std::string surface_arg = "1,3,4,3,1";
    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the Douady space of n points");
    betti_cmd->add_option("--n", betti_n, "number of points")->required();
    betti_cmd->add_option("--surface", surface_arg, "surface Betti numbers b0,b1,b2,b3,b4");
    betti_cmd->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* modify_cmd = app.add_subcommand("modify", "run an elementary-modification script");
    add_io(modify_cmd);

    std::int64_t max_n = 0, max_r = 2;
    std::string cat_format = "text";
    auto* catalog_cmd = app.add_subcommand("catalog", "existence grid of smooth compact moduli");
    catalog_cmd->add_option("--max-n", max_n, "largest half-dimension")->required();
    catalog_cmd->add_option("--max-r", max_r, "largest rank")->required();
    catalog_cmd->add_option("--format", cat_format, "output format: csv|json|text")
        ->check(CLI::IsMember({"csv", "json", "text"}));

    auto* compare_cmd = app.add_subcommand("compare", "graph space vs Douady-space base");
    add_io(compare_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    if (classify_cmd->parsed()) emit(out, cmd_classify(load_input(src)), format);
    if (construct_cmd->parsed()) emit(out, cmd_construct(n_arg, r_arg), format);
    if (normalize_cmd->parsed()) emit(out, cmd_normalize(load_input(src)), format);
    if (strata_cmd->parsed()) emit(out, cmd_strata(load_input(src)), format);
    if (fibres_cmd->parsed()) emit(out, cmd_fibres(load_input(src), k_arg, branch_arg), format);
    if (betti_cmd->parsed()) {
        const SurfaceBetti sb = parse_surface(surface_arg);
        const Json rep = cmd_betti(betti_n, sb);
        if (format == "json") {
            out << rep.dump(2) << "\n";
        } else {
            out << "b(X^[" << betti_n << "]) = (";
            const auto& row = rep["betti"];
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? ", " : "") << row[i].get<std::string>();
            out << ")\n";
        }
    }
    if (modify_cmd->parsed()) emit(out, cmd_modify(load_input(src)), format);
    if (catalog_cmd->parsed()) emit_catalog(out, catalog_rows(max_n, max_r), cat_format);
    if (compare_cmd->parsed()) emit(out, cmd_compare(load_input(src)), format);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(argc, argv, out, err);
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace kodaira
