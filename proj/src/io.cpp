#include "tricomm/io.hpp"

#include "tricomm/root_data.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tricomm {

Json rat_to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) throw std::invalid_argument("rational must be a string or an integer");
    return parse_rat(j.get<std::string>());
}

Json type_to_json(const SimpleType& t) {
    Json j;
    if (t.family == Family::Trivial) {
        j["family"] = "trivial";
    } else {
        std::string n = t.name();
        j["family"] = n.substr(0, n.find_first_of("0123456789"));
    }
    j["rank"] = t.rank;
    j["name"] = t.name();
    return j;
}

SimpleType type_from_json(const Json& j) {
    const std::string name = j.is_string() ? j.get<std::string>() : j.at("name").get<std::string>();
    if (name == "trivial") return make_type(Family::Trivial, 0);
    return parse_group(name);
}

Json diagram_to_json(const AffineDiagram& d) {
    Json j;
    j["nodes"] = d.nodes;
    j["cartan"] = d.cartan;
    j["marks"] = d.marks;
    Json sq = Json::array();
    for (const auto& x : d.sq_lengths) sq.push_back(rat_to_json(x));
    j["sq_lengths"] = sq;
    return j;
}

AffineDiagram diagram_from_json(const Json& j) {
    AffineDiagram d;
    d.nodes = j.at("nodes").get<std::vector<int>>();
    d.cartan = j.at("cartan").get<IntMatrix>();
    d.marks = j.at("marks").get<std::vector<int>>();
    for (const auto& x : j.at("sq_lengths")) d.sq_lengths.push_back(rat_from_json(x));
    const std::size_t n = d.nodes.size();
    if (d.cartan.size() != n || d.marks.size() != n || d.sq_lengths.size() != n)
        throw std::invalid_argument("diagram: nodes, cartan, marks and sq_lengths must have equal length");
    for (const auto& row : d.cartan)
        if (row.size() != n) throw std::invalid_argument("diagram: cartan matrix is not square");
    return d;
}

Shape shape_from_name(const std::string& name) {
    for (Shape s : {Shape::Point, Shape::SbarCubed, Shape::SbarSquaredS, Shape::QuotientF})
        if (shape_name(s) == name) return s;
    throw std::invalid_argument("unknown shape '" + name + "'");
}

Json component_to_json(const ComponentRecord& c) {
    Json j;
    j["order"] = c.order;
    j["label"] = c.label;
    j["cs"] = rat_to_json(c.cs);
    j["d_X"] = c.d_X;
    j["dim"] = c.dim;
    j["torus_rank"] = c.torus_rank;
    j["shape"] = shape_name(c.shape);
    Json cz = Json::array();
    for (const auto& t : c.centralizer) cz.push_back(t.name());
    j["centralizer"] = cz;
    if (c.shape == Shape::QuotientF) j["finite_group_order"] = c.finite_group_order;
    return j;
}

ComponentRecord component_from_json(const Json& j) {
    ComponentRecord c;
    c.order = j.at("order").get<int>();
    c.label = j.at("label").get<int>();
    c.cs = rat_from_json(j.at("cs"));
    c.d_X = j.at("d_X").get<int>();
    c.dim = j.at("dim").get<int>();
    c.torus_rank = j.at("torus_rank").get<int>();
    c.shape = shape_from_name(j.at("shape").get<std::string>());
    for (const auto& t : j.at("centralizer")) c.centralizer.push_back(type_from_json(t));
    if (j.contains("finite_group_order")) c.finite_group_order = j.at("finite_group_order").get<long long>();
    return c;
}

Json components_to_json(const std::vector<ComponentRecord>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(component_to_json(c));
    return a;
}

std::vector<ComponentRecord> components_from_json(const Json& j) {
    std::vector<ComponentRecord> out;
    for (const auto& c : j) out.push_back(component_from_json(c));
    return out;
}

namespace {

std::string node_token(const AffineDiagram& d, std::size_t u) { return "•(" + std::to_string(d.marks[u]) + ")"; }

// Bond drawn from u (left) to v (right).
std::string bond_token(const AffineDiagram& d, std::size_t u, std::size_t v) {
    const int a = -d.cartan[u][v], b = -d.cartan[v][u];
    const int m = std::max(a, b);
    if (a * b == 1) return "-";
    if (d.sq_lengths[u] == d.sq_lengths[v]) return "<" + std::to_string(m) + ">";
    if (d.sq_lengths[u] > d.sq_lengths[v]) return "=" + std::to_string(m) + ">";
    return "<" + std::to_string(m) + "=";
}

// Node positions along the chain, or empty if the graph is not a path.
std::vector<std::size_t> chain_order(const AffineDiagram& d) {
    const std::size_t n = d.size();
    std::vector<int> degree(n, 0);
    std::size_t edges = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (d.bonded(u, v)) {
                ++degree[u];
                if (u < v) ++edges;
            }
    if (edges + 1 != n) return {};
    std::size_t start = n;
    for (std::size_t u = 0; u < n; ++u) {
        if (degree[u] > 2) return {};
        if (degree[u] <= 1 && start == n) start = u;
    }
    std::vector<std::size_t> order{start};
    std::vector<bool> seen(n, false);
    seen[start] = true;
    while (order.size() < n) {
        std::size_t cur = order.back(), next = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v] && d.bonded(cur, v)) next = v;
        if (next == n) return {};
        seen[next] = true;
        order.push_back(next);
    }
    return order;
}

}  // namespace

std::string render_diagram(const AffineDiagram& d) {
    std::ostringstream os;
    auto chain = chain_order(d);
    if (!chain.empty()) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i) os << bond_token(d, chain[i - 1], chain[i]);
            os << node_token(d, chain[i]);
        }
        os << "\n";
        return os.str();
    }
    for (std::size_t u = 0; u < d.size(); ++u) os << (u ? " " : "") << d.nodes[u] << ":" << node_token(d, u);
    os << "\n";
    for (std::size_t u = 0; u < d.size(); ++u)
        for (std::size_t v = u + 1; v < d.size(); ++v)
            if (d.bonded(u, v)) os << "  " << d.nodes[u] << " " << bond_token(d, u, v) << " " << d.nodes[v] << "\n";
    return os.str();
}

}  // namespace tricomm
