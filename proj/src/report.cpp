#include "tricomm/report.hpp"

#include "tricomm/derived.hpp"
#include "tricomm/moduli.hpp"
#include "tricomm/numerology.hpp"
#include "tricomm/projection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tricomm {

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string bond_summary(const AffineDiagram& d) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t u = 0; u < d.size(); ++u)
        for (std::size_t v = u + 1; v < d.size(); ++v) {
            if (!d.bonded(u, v)) continue;
            const int a = -d.cartan[u][v], b = -d.cartan[v][u];
            std::string tok;
            if (a * b == 1)
                tok = "-";
            else if (d.sq_lengths[u] == d.sq_lengths[v])
                tok = "<" + std::to_string(std::max(a, b)) + ">";
            else if (d.sq_lengths[u] > d.sq_lengths[v])
                tok = "=" + std::to_string(std::max(a, b)) + ">";
            else
                tok = "<" + std::to_string(std::max(a, b)) + "=";
            os << (first ? "" : " ") << d.nodes[u] << tok << d.nodes[v];
            first = false;
        }
    return first ? "none" : os.str();
}

Json table_to_json(const TableDocument& t) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = t.name;
    j["title"] = t.title;
    j["source"] = t.source;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j;
}

std::string table_to_text(const TableDocument& t) {
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& r : t.rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) s += " | ";
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
        }
        return s + "\n";
    };
    std::string out = "# " + t.title + "\n# " + t.source + "\n";
    out += line(t.columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    out += line(rule);
    for (const auto& r : t.rows) out += line(r);
    return out;
}

std::vector<std::pair<std::string, CenterSubgroup>> named_subgroups(const RootDatum& d) {
    std::vector<std::pair<std::string, CenterSubgroup>> out;
    for (auto& s : all_subgroups(d)) {
        if (s.order() == 1) continue;
        std::string label = center_label(d, s);
        if (label == "c_exotic") {
            auto nodes = s.nodes();
            if (std::find(nodes.begin(), nodes.end(), d.rank()) == nodes.end()) continue;
        }
        s.label = label;
        out.emplace_back(label, s);
    }
    return out;
}

namespace {

std::string types_name(const std::vector<SimpleType>& ts) { return product_name(ts); }

}  // namespace

TableDocument coroot_diagram_table(int max_rank) {
    TableDocument t;
    t.name = "coroot_diagrams";
    t.title = "Extended coroot diagrams and coroot integers";
    t.source = "catalog data, node 0 is the extended coroot";
    t.columns = {"G", "nodes", "coroot integers", "g", "bonds"};
    for (const auto& ty : catalog_types(max_rank, true)) {
        const RootDatum& d = datum(ty);
        AffineDiagram dg = d.diagram();
        t.rows.push_back({ty.name(), std::to_string(d.nodes()), join_ints(d.g), std::to_string(dual_coxeter(ty)),
                          bond_summary(dg)});
    }
    return t;
}

TableDocument quotient_diagram_table(int max_rank) {
    TableDocument t;
    t.name = "quotient_diagrams";
    t.title = "Quotient extended coroot diagrams and quotient coroot integers";
    t.source = "orbit diagrams of nontrivial center subgroups";
    t.columns = {"G", "C", "o(C)", "structure", "type", "quotient integers", "bonds"};
    for (const auto& ty : catalog_types(max_rank, false)) {
        const RootDatum& d = datum(ty);
        for (const auto& [label, sub] : named_subgroups(d)) {
            AffineDiagram q = quotient(d.diagram(), sub.automorphisms());
            auto cls = classify(q);
            t.rows.push_back({ty.name(), label, std::to_string(sub.order()), sub.structure(),
                              cls.type ? canonical(*cls.type).name() : "unrecognized", join_ints(q.marks),
                              bond_summary(q)});
        }
    }
    return t;
}

TableDocument fixed_subspace_table(int max_rank) {
    TableDocument t;
    t.name = "fixed_subspace_root_systems";
    t.title = "Root systems on the fixed subspace of w_C";
    t.source = "center subgroups with a nonzero fixed subspace";
    t.columns = {"G", "C", "L_C", "Phi^{w_C}", "Phi^res", "Phi^proj", "Phi(w_C)", "g_abar"};
    for (const auto& ty : catalog_types(max_rank, false)) {
        const RootDatum& d = datum(ty);
        if (ty.family == Family::A) continue;  // the fixed subspace is zero or the quotient is of type A
        for (const auto& [label, sub] : named_subgroups(d)) {
            FixedSystems f = fixed_systems(d, sub);
            ProjectedSystem p = project(d, sub);
            LcFactors l = l_c_factors(d, sub);
            t.rows.push_back({ty.name(), label, l.name, types_name(f.invariant), types_name(f.restricted),
                              types_name(f.projection), f.diagram.name(), join_ints(p.diagram.marks)});
        }
    }
    return t;
}

TableDocument order_k_table(int max_rank) {
    TableDocument t;
    t.name = "order_k_root_systems";
    t.title = "Root systems on t(k) for k > 1";
    t.source = "trivial center, every k > 1 dividing a coroot integer";
    t.columns = {"G", "k", "L", "Phi(t(k))", "g_a divisible by k"};
    for (const auto& ty : catalog_types(max_rank, false)) {
        const RootDatum& d = datum(ty);
        CenterSubgroup triv = trivial_subgroup(d);
        MarkedDiagram m = make_marked(d.diagram());
        for (int k : admissible_orders(m)) {
            if (k == 1) continue;
            SamediagsReport rep = check_samediags(d, triv, k);
            t.rows.push_back({ty.name(), std::to_string(k), types_name(rep.centralizer), rep.derived_type.name(),
                              join_ints(rep.surviving_n)});
        }
    }
    return t;
}

TableDocument twisted_order_k_table(int max_rank) {
    TableDocument t;
    t.name = "twisted_order_k_root_systems";
    t.title = "Root systems on t^{w_C}(g, k) for nontrivial C and k not dividing n0";
    t.source = "nontrivial center subgroups, every admissible k not dividing n0";
    t.columns = {"G", "C", "k", "L", "Phi(t^{w_C}(g,k))", "g_abar divisible by k"};
    for (const auto& ty : catalog_types(max_rank, false)) {
        const RootDatum& d = datum(ty);
        for (const auto& [label, sub] : named_subgroups(d)) {
            MarkedDiagram m = make_marked(quotient(d.diagram(), sub.automorphisms()));
            for (int k : admissible_orders(m)) {
                if (m.n0 % k == 0) continue;
                SamediagsReport rep = check_samediags(d, sub, k);
                t.rows.push_back({ty.name(), label, std::to_string(k), types_name(rep.centralizer),
                                  rep.derived_type.name(), join_ints(rep.surviving_n)});
            }
        }
    }
    return t;
}

std::vector<TableDocument> paper_tables(int max_rank) {
    return {coroot_diagram_table(max_rank), quotient_diagram_table(max_rank), fixed_subspace_table(max_rank),
            order_k_table(max_rank), twisted_order_k_table(max_rank)};
}

bool CheckAllReport::ok() const {
    for (const auto& c : checks)
        if (c.failed) return false;
    return true;
}

std::string CheckAllReport::text() const {
    std::ostringstream os;
    os << "check-all max_rank=" << max_rank << "\n";
    int pass = 0, fail = 0;
    for (const auto& c : checks) {
        os << c.name << ": " << c.passed << " passed, " << c.failed << " failed\n";
        for (const auto& f : c.failures) os << "  FAIL " << f << "\n";
        pass += c.passed;
        fail += c.failed;
    }
    os << "total: " << pass << " passed, " << fail << " failed\n";
    return os.str();
}

Json CheckAllReport::json() const {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["max_rank"] = max_rank;
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json x;
        x["name"] = c.name;
        x["passed"] = c.passed;
        x["failed"] = c.failed;
        x["failures"] = c.failures;
        arr.push_back(x);
    }
    j["checks"] = arr;
    j["ok"] = ok();
    return j;
}

CheckAllReport check_all(int max_rank) {
    CheckAllReport rep;
    rep.max_rank = max_rank;
    std::map<std::string, CheckResult> by_name;
    const std::vector<std::string> order = {"datum",    "nu",       "diagram1", "samediags", "derived",
                                            "counts",   "assumption", "clocked", "components"};
    for (const auto& n : order) by_name[n].name = n;
    auto record = [&](const std::string& name, const std::string& what, const std::function<std::string()>& f) {
        CheckResult& c = by_name[name];
        std::string err;
        try {
            err = f();
        } catch (const std::exception& ex) {
            err = ex.what();
        }
        if (err.empty()) {
            ++c.passed;
        } else {
            ++c.failed;
            c.failures.push_back(what + ": " + err);
        }
    };

    auto numerology_checks = [&](const std::string& what, const MarkedDiagram& m) {
        record("counts", what, [&]() {
            NumerologyCounts nc = counts(m);
            int s = 0;
            for (const auto& [x, dx] : nc.d) s += euler_phi(x) * dx;
            return s == nc.g ? std::string() : "sum phi(x) d_x = " + std::to_string(s) + " differs from g";
        });
        for (int k : admissible_orders(m))
            record("assumption", what + " k=" + std::to_string(k),
                   [&]() { return check_assumption(m, k) ? std::string() : "no cyclic decomposition"; });
        record("clocked", what, [&]() { return clocked(m).valid() ? std::string() : "J-sets do not tile a parity class"; });
    };

    for (const auto& ty : catalog_types(max_rank, true)) {
        const RootDatum& d = datum(ty);
        const std::string tn = ty.name();
        record("datum", tn, [&]() {
            auto bad = check_datum(d);
            return bad.empty() ? std::string() : bad.front();
        });
        if (ty.family == Family::BC) {
            MarkedDiagram m = make_marked(d.diagram());
            numerology_checks(tn, m);
            for (int k : admissible_orders(m))
                record("derived", tn + " k=" + std::to_string(k), [&]() {
                    // derived() asserts affine type and the proportionality of the surviving integers
                    derived(m, k);
                    return std::string();
                });
            continue;
        }

        for (int node = 0; node < d.nodes(); ++node) {
            if (d.h[node] != 1) continue;
            record("nu", tn + " node " + std::to_string(node), [&]() {
                int c = nu_candidates(d, node);
                return c == 1 ? std::string() : std::to_string(c) + " automorphisms pass the alcove test";
            });
        }
        record("nu", tn + " homomorphism", [&]() {
            CenterSubgroup full = center_group(d);
            for (std::size_t i = 0; i < full.elements.size(); ++i)
                for (std::size_t j = 0; j < full.elements.size(); ++j) {
                    int prod = center_product(d, full.elements[i].node, full.elements[j].node);
                    int via_table = full.elements[static_cast<std::size_t>(full.table[i][j])].node;
                    if (prod != via_table) return std::string("composition table differs from coweight classes");
                }
            return std::string();
        });

        std::vector<CenterSubgroup> subs = all_subgroups(d);
        for (const auto& sub : subs) {
            const std::string what = tn + " / " + center_label(d, sub) + " (" + join_ints(sub.nodes()) + ")";
            record("diagram1", what, [&]() {
                DiagramCheck c = check_diagram1(d, sub);
                return c.ok ? std::string() : c.message;
            });
            MarkedDiagram m = make_marked(quotient(d.diagram(), sub.automorphisms()));
            numerology_checks(what, m);
            for (int k : admissible_orders(m))
                record("samediags", what + " k=" + std::to_string(k), [&]() {
                    SamediagsReport r = check_samediags(d, sub, k);
                    return r.ok ? std::string() : r.message;
                });
            record("components", what, [&]() {
                ClockReport cr = clock_report(d, sub);
                int total = 0;
                std::map<int, int> per_order;
                for (const auto& c : cr.components) {
                    total += c.d_X;
                    ++per_order[c.order];
                    if (c.cs != Rat(c.label, c.order) || (c.order > 1 && std::gcd(c.label, c.order) != 1))
                        return std::string("CS value is not a primitive k-torsion point");
                }
                if (sub.is_cyclic())
                    for (const auto& [k, n] : per_order)
                        if (n != euler_phi(k)) return "order " + std::to_string(k) + " has " + std::to_string(n) + " components";
                if (total != cr.g) return "sum d_X = " + std::to_string(total) + " differs from g";
                return cr.valid ? std::string() : std::string("clock report is not valid");
            });
        }
    }
    for (const auto& n : order) rep.checks.push_back(by_name[n]);
    return rep;
}

}  // namespace tricomm
