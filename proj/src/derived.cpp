#include "tricomm/derived.hpp"

#include "tricomm/projection.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tricomm {

std::string node_type_name(NodeType t) {
    switch (t) {
        case NodeType::Infinity: return "inf";
        case NodeType::One: return "1";
        case NodeType::TwoI: return "2(i)";
        case NodeType::TwoII: return "2(ii)";
        case NodeType::Three: return "3";
        case NodeType::FourI: return "4(i)";
        case NodeType::FourII: return "4(ii)";
        case NodeType::FourIII: return "4(iii)";
    }
    return "?";
}

int node_type_divisor(NodeType t) {
    switch (t) {
        case NodeType::Infinity:
        case NodeType::One: return 1;
        case NodeType::TwoI:
        case NodeType::TwoII: return 2;
        case NodeType::Three: return 3;
        default: return 4;
    }
}

namespace {

// m if the component is a simply laced chain A_m, else 0.
int a_chain_rank(const AffineDiagram& d, const std::vector<int>& comp) {
    int edges = 0;
    for (int u : comp) {
        int degree = 0;
        for (int v : comp) {
            if (!d.bonded(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) continue;
            if (d.cartan[u][v] != -1 || d.cartan[v][u] != -1) return 0;
            ++degree;
            ++edges;
        }
        if (degree > 2) return 0;
    }
    edges /= 2;
    return edges + 1 == static_cast<int>(comp.size()) ? static_cast<int>(comp.size()) : 0;
}

bool touches(const AffineDiagram& d, int v, const std::vector<int>& comp) {
    for (int u : comp)
        if (d.bonded(static_cast<std::size_t>(v), static_cast<std::size_t>(u))) return true;
    return false;
}

}  // namespace

NodeType node_type(const MarkedDiagram& m, int k, int v) {
    const AffineDiagram& d = m.diagram;
    auto surv = survivors(m, k);
    if (std::find(surv.begin(), surv.end(), v) == surv.end())
        throw std::invalid_argument("node_type: node is not divisible by k");
    if (surv.size() == 1) return NodeType::Infinity;

    auto I = I_set(m, k);
    std::vector<std::vector<int>> adj;
    for (const auto& comp : components(d, I))
        if (touches(d, v, comp)) adj.push_back(comp);
    std::vector<int> adj_nodes;
    for (int u : I)
        if (d.bonded(static_cast<std::size_t>(v), static_cast<std::size_t>(u))) adj_nodes.push_back(u);

    const Rat& lv = d.sq_lengths[static_cast<std::size_t>(v)];
    if (adj.empty()) return NodeType::One;
    if (adj_nodes.size() == 1 && lv < d.sq_lengths[static_cast<std::size_t>(adj_nodes[0])]) return NodeType::TwoII;
    if (adj.size() == 2) {
        int a = a_chain_rank(d, adj[0]);
        int b = a_chain_rank(d, adj[1]);
        if (a > b) std::swap(a, b);
        if (a == 1 && b == 1) {
            Rat mn = std::min(d.sq_lengths[static_cast<std::size_t>(adj[0][0])],
                              d.sq_lengths[static_cast<std::size_t>(adj[1][0])]);
            return lv <= mn ? NodeType::TwoI : NodeType::FourI;
        }
        if (a == 2 && b == 2) return NodeType::Three;
        if (a == 3 && b == 3) return NodeType::FourII;
        if (a == 1 && b == 3) return NodeType::FourIII;
    }
    std::ostringstream os;
    os << "node_type: node " << d.nodes[static_cast<std::size_t>(v)] << " (k = " << k
       << ") matches none of the connection types";
    throw std::logic_error(os.str());
}

DerivedDiagram derived(const MarkedDiagram& m, int k) {
    const AffineDiagram& d = m.diagram;
    DerivedDiagram out;
    out.parent = m;
    out.k = k;
    out.survivors = survivors(m, k);
    if (out.survivors.empty())
        throw std::invalid_argument("k = " + std::to_string(k) + " divides none of the node integers");
    const std::size_t s = out.survivors.size();
    for (int v : out.survivors) {
        NodeType t = node_type(m, k, v);
        out.node_types.push_back(t);
        out.ell_k_sq.push_back(d.sq_lengths[static_cast<std::size_t>(v)] / node_type_divisor(t));
        out.surviving_n.push_back(m.n[static_cast<std::size_t>(v)]);
    }

    AffineDiagram& g = out.diagram;
    for (int v : out.survivors) g.nodes.push_back(d.nodes[static_cast<std::size_t>(v)]);
    if (s == 1) {
        g.cartan = {{2}};
        g.marks = {1};
        g.sq_lengths = {Rat(2)};
        out.classified = make_type(Family::Trivial, 0);
        return out;
    }

    auto I = I_set(m, k);
    auto comps = components(d, I);
    std::vector<std::vector<bool>> bond(s, std::vector<bool>(s, false));
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
            if (a == b) continue;
            int u = out.survivors[a], v = out.survivors[b];
            bool linked = d.bonded(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
            for (const auto& c : comps)
                if (touches(d, u, c) && touches(d, v, c)) linked = true;
            bond[a][b] = linked;
        }

    g.cartan.assign(s, std::vector<int>(s, 0));
    for (std::size_t a = 0; a < s; ++a) g.cartan[a][a] = 2;
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a + 1; b < s; ++b) {
            if (!bond[a][b]) continue;
            auto isolated_pair = [&]() {
                for (std::size_t c = 0; c < s; ++c) {
                    if (c == a || c == b) continue;
                    if (bond[a][c] || bond[b][c]) return false;
                }
                return true;
            };
            if (out.ell_k_sq[a] == out.ell_k_sq[b] && isolated_pair()) {
                g.cartan[a][b] = g.cartan[b][a] = -2;
                continue;
            }
            std::size_t lo = a, hi = b;  // hi is the longer node
            if (out.ell_k_sq[a] > out.ell_k_sq[b]) std::swap(lo, hi);
            Rat ratio = out.ell_k_sq[hi] / out.ell_k_sq[lo];
            if (!is_integer(ratio)) throw std::logic_error("derived: length ratio is not an integer");
            g.cartan[hi][lo] = -static_cast<int>(to_ll(ratio));
            g.cartan[lo][hi] = -1;
        }
    g.sq_lengths = normalize_lengths(out.ell_k_sq);
    validate_cartan(g.cartan);
    auto marks = is_affine_type(g.cartan);
    if (!marks) throw std::logic_error("derived: diagram is not of affine type");
    g.marks = *marks;
    // surviving integers divided by k are a multiple of the kernel vector
    int scale = out.surviving_n[0] / k / g.marks[0];
    for (std::size_t a = 0; a < s; ++a)
        if (scale < 1 || out.surviving_n[a] != k * scale * g.marks[a])
            throw std::logic_error("derived: surviving integers are not proportional to the diagram marks");
    validate(g);
    auto cls = classify(g);
    if (!cls.type) throw std::logic_error("derived: diagram is not in the catalog");
    out.classified = canonical(*cls.type);
    return out;
}

SamediagsReport check_samediags(const RootDatum& d, const CenterSubgroup& sub, int k) {
    SamediagsReport rep;
    AffineDiagram q = quotient(d.diagram(), sub.automorphisms());
    MarkedDiagram m = make_marked(q);
    DerivedDiagram dd = derived(m, k);
    rep.derived_type = dd.classified;
    rep.surviving_n = dd.surviving_n;
    ProjectedSystem ps = project(d, sub);
    const auto r = static_cast<std::size_t>(d.rank());

    std::vector<RatVector> rows;
    RatMatrix id = RatMatrix::identity(r);
    for (const auto& e : sub.elements) {
        RatMatrix w = e.linear - id;
        for (std::size_t i = 0; i < r; ++i) rows.push_back(w.row(i));
    }
    for (int o : I_set(m, k))
        rows.push_back(d.root_functional[static_cast<std::size_t>(ps.orbits[static_cast<std::size_t>(o)].members[0])]);
    std::vector<RatVector> T = common_kernel(rows, r);
    rep.torus_rank = static_cast<int>(T.size());
    rep.centralizer = classify_root_system(roots_vanishing_on(d, T), d.gram);

    std::ostringstream os;
    os << d.type.name() << " / " << sub.label << ", k = " << k << ": ";
    if (rep.torus_rank + 1 != static_cast<int>(dd.survivors.size())) {
        os << "subspace rank " << rep.torus_rank << " does not match " << dd.survivors.size() << " survivors";
        rep.message = os.str();
        return rep;
    }
    if (dd.survivors.size() == 1) {
        rep.projected_type = make_type(Family::Trivial, 0);
        rep.ok = dd.classified == rep.projected_type;
        os << (rep.ok ? "both trivial" : "derived diagram is not trivial");
        rep.message = os.str();
        return rep;
    }
    std::vector<RatVector> vecs;
    std::vector<int> ids;
    for (int v : dd.survivors) {
        vecs.push_back(orthogonal_project(ps.projected_coroots[static_cast<std::size_t>(v)], T, d.frame_gram));
        ids.push_back(v);
    }
    AffineDiagram pd;
    try {
        pd = diagram_from_vectors(vecs, d.frame_gram, dd.diagram.marks, ids);
    } catch (const std::exception& ex) {
        os << "projected coroots do not form a diagram (" << ex.what() << ")";
        rep.message = os.str();
        return rep;
    }
    auto cls = classify(pd);
    rep.projected_type = cls.type ? canonical(*cls.type) : make_type(Family::Trivial, 0);
    for (std::size_t a = 0; a < pd.size(); ++a) {
        if (pd.sq_lengths[a] != dd.diagram.sq_lengths[a]) {
            os << "squared length of survivor " << dd.survivors[a] << " differs";
            rep.message = os.str();
            return rep;
        }
        for (std::size_t b = 0; b < pd.size(); ++b)
            if (pd.cartan[a][b] != dd.diagram.cartan[a][b]) {
                os << "n(" << dd.survivors[a] << "," << dd.survivors[b] << ") differs (" << dd.diagram.cartan[a][b]
                   << " derived vs " << pd.cartan[a][b] << " projected)";
                rep.message = os.str();
                return rep;
            }
    }
    rep.ok = cls.type.has_value() && rep.projected_type == rep.derived_type;
    os << (rep.ok ? "equal, type " + rep.derived_type.name() : "classification mismatch");
    rep.message = os.str();
    return rep;
}

}  // namespace tricomm
