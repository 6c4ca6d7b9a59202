// Command-line front end: diagrams, quotients, projections, derived
// diagrams, moduli components, clock partitions, rank-zero lists, the
// regenerated tables and the full cross-check.
//
// Exit status: 0 on success, 1 when a computation rejects its input, 2 on a
// usage error.

#include "tricomm/derived.hpp"
#include "tricomm/io.hpp"
#include "tricomm/moduli.hpp"
#include "tricomm/projection.hpp"
#include "tricomm/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tricomm;

namespace {

struct Options {
    std::string group;
    std::string center = "trivial";
    int k = 0;
    std::string format = "text";
    int max_rank = 12;
    bool central = false;
    std::string out_dir;
};

bool as_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const Json& j, const std::string& text) {
    if (as_json(o))
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

Json header(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

std::string types_text(const std::vector<SimpleType>& ts) { return product_name(ts); }

Json orbits_json(const std::vector<Orbit>& orbits) {
    Json a = Json::array();
    for (const auto& o : orbits) {
        Json x;
        x["members"] = o.members;
        x["size"] = o.size;
        x["epsilon"] = o.epsilon;
        x["g"] = o.mark;
        x["kind"] = o.kind == OrbitKind::Ordinary ? "ordinary" : (o.kind == OrbitKind::Exceptional ? "exceptional" : "degenerate");
        a.push_back(x);
    }
    return a;
}

int cmd_datum(const Options& o) {
    const SimpleType t = parse_group(o.group);
    const RootDatum& d = datum(t);
    AffineDiagram dg = d.diagram();
    Json j = header("datum");
    j["type"] = type_to_json(d.type);
    j["ambient_dim"] = d.ambient_dim;
    j["h"] = d.h;
    j["g"] = d.g;
    j["dual_coxeter"] = dual_coxeter(d.type);
    if (t.family != Family::BC) j["center_order"] = center_order(d).str();
    j["diagram"] = diagram_to_json(dg);
    std::ostringstream os;
    os << "type " << d.type.name() << "  (node 0 is the extended coroot)\n";
    os << "root integers h:   " << join_ints(d.h, " ") << "\n";
    os << "coroot integers g: " << join_ints(d.g, " ") << "\n";
    os << "dual Coxeter number g = " << dual_coxeter(d.type) << "\n";
    if (t.family != Family::BC) os << "center order = " << center_order(d) << "\n";
    os << render_diagram(dg);
    emit(o, j, os.str());
    return 0;
}

int cmd_quotient(const Options& o) {
    const RootDatum& d = datum(parse_group(o.group));
    CenterSubgroup sub = parse_center(d, o.center);
    OrbitSet os_ = orbit_data(d, sub);
    AffineDiagram q = quotient(d.diagram(), sub.automorphisms());
    auto cls = classify(q);
    const std::string type = cls.type ? canonical(*cls.type).name() : "unrecognized";
    Json j = header("quotient");
    j["group"] = d.type.name();
    j["center"] = center_label(d, sub);
    j["center_nodes"] = sub.nodes();
    j["structure"] = sub.structure();
    j["orbits"] = orbits_json(os_.orbits);
    j["diagram"] = diagram_to_json(q);
    j["classified"] = type;
    std::ostringstream os;
    os << d.type.name() << " / " << center_label(d, sub) << "  (" << sub.structure() << ", center nodes "
       << join_ints(sub.nodes(), " ") << ")\n";
    for (std::size_t i = 0; i < os_.orbits.size(); ++i)
        os << "orbit " << i << ": {" << join_ints(os_.orbits[i].members, " ") << "}  n=" << os_.orbits[i].size
           << " eps=" << os_.orbits[i].epsilon << " g=" << os_.orbits[i].mark << "\n";
    os << "quotient type " << type << ", integers " << join_ints(q.marks, " ") << "\n";
    os << render_diagram(q);
    emit(o, j, os.str());
    return 0;
}

int cmd_project(const Options& o) {
    const RootDatum& d = datum(parse_group(o.group));
    CenterSubgroup sub = parse_center(d, o.center);
    ProjectedSystem p = project(d, sub);
    FixedSystems f = fixed_systems(d, sub);
    DiagramCheck c = check_diagram1(d, sub);
    LcFactors l = l_c_factors(d, sub);
    Json j = header("project");
    j["group"] = d.type.name();
    j["center"] = center_label(d, sub);
    j["fixed_dim"] = p.fixed_subspace_basis.size();
    Json pc = Json::array();
    for (const auto& v : p.projected_coroots) {
        Json x = Json::array();
        for (const auto& r : v) x.push_back(rat_to_json(r));
        pc.push_back(x);
    }
    j["projected_coroots_frame"] = pc;
    j["diagram"] = diagram_to_json(p.diagram);
    j["L_C"] = l.name;
    j["invariant"] = types_text(f.invariant);
    j["restricted"] = types_text(f.restricted);
    j["projection"] = types_text(f.projection);
    j["classified"] = p.classified.name();
    j["matches_quotient"] = c.ok;
    j["check"] = c.message;
    std::ostringstream os;
    os << d.type.name() << " / " << center_label(d, sub) << ": fixed subspace of dimension "
       << p.fixed_subspace_basis.size() << "\n";
    os << "L_C " << l.name << "; Phi^{w_C} " << types_text(f.invariant) << "; Phi^res " << types_text(f.restricted)
       << "; Phi^proj " << types_text(f.projection) << "; Phi(w_C) " << p.classified.name() << "\n";
    os << "projected-coroot diagram, integers " << join_ints(p.diagram.marks, " ") << "\n";
    os << render_diagram(p.diagram);
    os << "against the quotient diagram: " << c.message << "\n";
    emit(o, j, os.str());
    return c.ok ? 0 : 1;
}

int cmd_derived(const Options& o) {
    const RootDatum& d = datum(parse_group(o.group));
    CenterSubgroup sub = parse_center(d, o.center);
    if (o.k < 1) throw std::invalid_argument("derived: --k must be a positive integer");
    MarkedDiagram m = make_marked(quotient(d.diagram(), sub.automorphisms()));
    DerivedDiagram dd = derived(m, o.k);
    SamediagsReport rep = check_samediags(d, sub, o.k);
    Json j = header("derived");
    j["group"] = d.type.name();
    j["center"] = center_label(d, sub);
    j["k"] = o.k;
    j["survivors"] = dd.survivors;
    Json nt = Json::array();
    for (auto t : dd.node_types) nt.push_back(node_type_name(t));
    j["node_types"] = nt;
    Json lk = Json::array();
    for (const auto& x : dd.ell_k_sq) lk.push_back(rat_to_json(x));
    j["ell_k_sq"] = lk;
    j["surviving_integers"] = dd.surviving_n;
    j["diagram"] = diagram_to_json(dd.diagram);
    j["classified"] = dd.classified.name();
    j["centralizer"] = types_text(rep.centralizer);
    j["matches_projection"] = rep.ok;
    j["check"] = rep.message;
    std::ostringstream os;
    os << d.type.name() << " / " << center_label(d, sub) << ", k = " << o.k << "\n";
    for (std::size_t i = 0; i < dd.survivors.size(); ++i)
        os << "survivor " << dd.survivors[i] << ": integer " << dd.surviving_n[i] << ", type "
           << node_type_name(dd.node_types[i]) << ", l_k^2 = " << to_string(dd.ell_k_sq[i]) << "\n";
    os << "derived type " << dd.classified.name() << ", centralizer " << types_text(rep.centralizer) << "\n";
    os << render_diagram(dd.diagram);
    os << "against the projection: " << rep.message << "\n";
    emit(o, j, os.str());
    return rep.ok ? 0 : 1;
}

std::vector<ComponentRecord> component_list(const RootDatum& d, const CenterSubgroup& sub) {
    if (sub.is_cyclic()) return components(d, sub);
    if (d.type.family != Family::D || d.rank() % 2 != 0)
        throw std::invalid_argument("components: non-cyclic center subgroups exist only for D_{2n}");
    return noncyclic_components(d.rank() / 2);
}

int cmd_components(const Options& o) {
    const RootDatum& d = datum(parse_group(o.group));
    CenterSubgroup sub = parse_center(d, o.center);
    auto cs = component_list(d, sub);
    int total = 0;
    for (const auto& c : cs) total += c.d_X;
    const int g = dual_coxeter(d.type);
    Json j = header("components");
    j["group"] = d.type.name();
    j["center"] = center_label(d, sub);
    j["g"] = g;
    j["components"] = components_to_json(cs);
    j["sum_d_X"] = total;
    TableDocument t;
    t.title = d.type.name() + " / " + center_label(d, sub) + ": " + std::to_string(cs.size()) + " components";
    t.source = "one row per component; (order, cs) identifies the component";
    t.columns = {"order", "label", "cs", "d_X", "dim", "shape", "centralizer"};
    for (const auto& c : cs) {
        std::string shape = shape_name(c.shape);
        if (c.shape == Shape::QuotientF) shape += " |F|=" + std::to_string(c.finite_group_order);
        t.rows.push_back({std::to_string(c.order), std::to_string(c.label), to_string(c.cs), std::to_string(c.d_X),
                          std::to_string(c.dim), shape, product_name(c.centralizer)});
    }
    std::string text = table_to_text(t) + "sum d_X = " + std::to_string(total) + " = g\n";
    if (total != g) throw std::logic_error("components: sum d_X differs from g");
    emit(o, j, text);
    return 0;
}

int cmd_clock(const Options& o) {
    const RootDatum& d = datum(parse_group(o.group));
    CenterSubgroup sub = parse_center(d, o.center);
    ClockReport r = clock_report(d, sub);
    Json j = header("clock");
    j["group"] = d.type.name();
    j["center"] = center_label(d, sub);
    j["g"] = r.g;
    j["modulus"] = 2 * r.g;
    j["parity"] = r.parity == 0 ? "even" : "odd";
    Json arr = Json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        Json x;
        x["order"] = r.components[i].order;
        x["cs"] = rat_to_json(r.components[i].cs);
        x["J"] = r.J[i];
        arr.push_back(x);
    }
    j["sets"] = arr;
    j["valid"] = r.valid;
    std::ostringstream os;
    os << d.type.name() << " / " << center_label(d, sub) << ": residues mod " << 2 * r.g << "\n";
    for (std::size_t i = 0; i < r.components.size(); ++i)
        os << "cs " << to_string(r.components[i].cs) << " (order " << r.components[i].order << "): {"
           << join_ints(r.J[i], " ") << "}\n";
    os << "union is the " << (r.parity == 0 ? "even" : "odd") << " class, " << (r.valid ? "disjoint: valid" : "INVALID")
       << "\n";
    emit(o, j, os.str());
    return r.valid ? 0 : 1;
}

int cmd_rank_zero(const Options& o) {
    if (o.k < 1) throw std::invalid_argument("rank-zero: --k must be a positive integer");
    auto list = rank_zero_list(o.k, o.central, o.max_rank);
    Json j = header("rank-zero");
    j["k"] = o.k;
    j["central"] = o.central;
    j["max_rank"] = o.max_rank;
    Json arr = Json::array();
    std::ostringstream os;
    os << "rank-zero triples of order " << o.k << (o.central ? " (nontrivial cyclic center subgroups)" : "")
       << ", ranks <= " << o.max_rank << ":\n";
    for (const auto& e : list) {
        Json x;
        x["group"] = e.type.name();
        x["center"] = e.center;
        arr.push_back(x);
        os << "  " << e.type.name() << (o.central ? " / " + e.center : "") << "\n";
    }
    j["groups"] = arr;
    emit(o, j, os.str());
    return 0;
}

int cmd_paper_tables(const Options& o) {
    auto tables = paper_tables(o.max_rank);
    std::string dir = o.out_dir;
    if (dir.empty())
        if (const char* env = std::getenv("TRICOMM_GOLDEN_DIR")) dir = env;
    const std::string ext = as_json(o) ? ".json" : ".txt";
    if (dir.empty()) {
        Json all = header("paper-tables");
        Json arr = Json::array();
        std::string text;
        for (const auto& t : tables) {
            arr.push_back(table_to_json(t));
            text += table_to_text(t) + "\n";
        }
        all["tables"] = arr;
        emit(o, all, text);
        return 0;
    }
    std::filesystem::create_directories(dir);
    for (const auto& t : tables) {
        std::ofstream f(std::filesystem::path(dir) / (t.name + ext), std::ios::binary);
        if (!f) throw std::runtime_error("cannot write into " + dir);
        f << (as_json(o) ? table_to_json(t).dump(2) + "\n" : table_to_text(t));
        std::cout << "wrote " << (std::filesystem::path(dir) / (t.name + ext)).string() << "\n";
    }
    return 0;
}

int cmd_check_all(const Options& o) {
    CheckAllReport r = check_all(o.max_rank);
    Json j = header("check-all");
    j["report"] = r.json();
    emit(o, j, r.text());
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification data for commuting pairs and triples in compact simple groups"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_group = [&](CLI::App* c) {
        c->add_option("--group", o.group, "Group: A5, E8, Spin(12), SU(7), Sp(6), BC3, ...")->required();
    };
    auto add_center = [&](CLI::App* c) {
        c->add_option("--center", o.center, "Center subgroup: trivial, full, c, c_SO, c_exotic, or a node id");
    };

    auto* datum_cmd = app.add_subcommand("datum", "Extended coroot diagram and integers");
    add_group(datum_cmd);
    add_format(datum_cmd);

    auto* quotient_cmd = app.add_subcommand("quotient", "Quotient diagram of a center subgroup");
    add_group(quotient_cmd);
    add_center(quotient_cmd);
    add_format(quotient_cmd);

    auto* project_cmd = app.add_subcommand("project", "Projected coroots on the fixed subspace");
    add_group(project_cmd);
    add_center(project_cmd);
    add_format(project_cmd);

    auto* derived_cmd = app.add_subcommand("derived", "Derived diagram of order k");
    add_group(derived_cmd);
    add_center(derived_cmd);
    derived_cmd->add_option("--k", o.k, "Order k")->required();
    add_format(derived_cmd);

    auto* comp_cmd = app.add_subcommand("components", "Components of the moduli space");
    add_group(comp_cmd);
    add_center(comp_cmd);
    add_format(comp_cmd);

    auto* clock_cmd = app.add_subcommand("clock", "Chern-Simons clock partition");
    add_group(clock_cmd);
    add_center(clock_cmd);
    add_format(clock_cmd);

    auto* rz_cmd = app.add_subcommand("rank-zero", "Groups with rank-zero triples of order k");
    rz_cmd->add_option("--k", o.k, "Order k")->required();
    rz_cmd->add_flag("--central", o.central, "Scan nontrivial cyclic center subgroups");
    rz_cmd->add_option("--max-rank", o.max_rank, "Largest rank scanned")->check(CLI::Range(1, 40));
    add_format(rz_cmd);

    auto* pt_cmd = app.add_subcommand("paper-tables", "Regenerate the diagram and root-system tables");
    pt_cmd->add_option("--max-rank", o.max_rank, "Largest rank instantiated")->check(CLI::Range(1, 40));
    pt_cmd->add_option("--out", o.out_dir, "Output directory (default: $TRICOMM_GOLDEN_DIR, else stdout)");
    add_format(pt_cmd);

    auto* ca_cmd = app.add_subcommand("check-all", "Run every cross-check");
    ca_cmd->add_option("--max-rank", o.max_rank, "Largest rank checked")->check(CLI::Range(1, 40));
    add_format(ca_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*datum_cmd) return cmd_datum(o);
        if (*quotient_cmd) return cmd_quotient(o);
        if (*project_cmd) return cmd_project(o);
        if (*derived_cmd) return cmd_derived(o);
        if (*comp_cmd) return cmd_components(o);
        if (*clock_cmd) return cmd_clock(o);
        if (*rz_cmd) return cmd_rank_zero(o);
        if (*pt_cmd) return cmd_paper_tables(o);
        if (*ca_cmd) return cmd_check_all(o);
    } catch (const std::exception& e) {
        if (as_json(o)) {
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["error"] = e.what();
            std::cerr << j.dump() << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }
    return 2;
}
