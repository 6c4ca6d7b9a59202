#include "tricomm/center.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tricomm {

RatMatrix linear_map(const RootDatum& d, const DiagramAutomorphism& sigma) {
    const auto n = static_cast<std::size_t>(d.rank());
    RatMatrix w(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const RatVector& img = d.coroot_frame[static_cast<std::size_t>(sigma.perm[j + 1])];
        for (std::size_t i = 0; i < n; ++i) w(i, j) = img[i];
    }
    return w;
}

bool in_weyl_group(const RootDatum& d, const RatMatrix& w) {
    const int n = d.rank();
    const AlcoveData& a = alcove(d);
    // regular dominant coweight with distinct coefficients, so no nontrivial
    // diagram symmetry fixes it
    RatVector v = zeros(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v = add(v, scale(Rat(i * d.h[i]), a.vertices_frame[i]));
    RatVector u = w * v;
    for (int guard = 0; guard < 100000; ++guard) {
        bool moved = false;
        for (int i = 1; i <= n; ++i) {
            Rat c = dot(d.root_functional[i], u);
            if (c < 0) {
                u = sub(u, scale(c, d.coroot_frame[i]));
                moved = true;
                break;
            }
        }
        if (!moved) return u == v;
    }
    throw std::logic_error("in_weyl_group: reduction did not terminate");
}

namespace {

struct Candidate {
    DiagramAutomorphism sigma;
    RatMatrix w;
    int zeta_node;
};

std::vector<Candidate> oracle(const RootDatum& d, int target) {
    if (target < 0 || target >= d.nodes()) throw std::invalid_argument("nu: node id out of range");
    if (d.h[target] != 1) throw std::invalid_argument("nu: node " + std::to_string(target) + " has root integer != 1");
    AffineDiagram dg = d.diagram();
    const AlcoveData& a = alcove(d);
    std::map<RatVector, int> vertex_node;
    for (int i = 0; i < d.nodes(); ++i) vertex_node[a.vertices_frame[i]] = i;

    std::vector<Candidate> out;
    for (const auto& sigma : automorphism_group(dg)) {
        if (sigma.perm[0] != target) continue;
        RatMatrix w = linear_map(d, sigma);
        int found_zeta = -1;
        for (int z = 0; z < d.nodes(); ++z) {
            if (d.h[z] != 1) continue;
            const RatVector& zeta = a.vertices_frame[z];
            bool ok = true;
            for (int i = 0; i < d.nodes() && ok; ++i) {
                RatVector img = w * sub(a.vertices_frame[i], zeta);
                auto it = vertex_node.find(img);
                // the vertex of node i must land on the vertex of node sigma(i)
                ok = it != vertex_node.end() && it->second == sigma.perm[i];
            }
            if (ok) {
                found_zeta = z;
                break;
            }
        }
        if (found_zeta < 0) continue;
        if (!in_weyl_group(d, w)) continue;
        out.push_back(Candidate{sigma, w, found_zeta});
    }
    return out;
}

// coweight class of a center node in frame coordinates, reduced mod the coroot lattice
RatVector coweight_class(const RootDatum& d, int node) {
    RatVector v = zeros(static_cast<std::size_t>(d.rank()));
    if (node > 0) v = d.to_frame(d.coweight_lattice_basis[node - 1]);
    for (auto& x : v) {
        Int num = boost::multiprecision::numerator(x);
        Int den = boost::multiprecision::denominator(x);
        Int r = num % den;
        if (r < 0) r += den;
        x = Rat(r, den);
    }
    return v;
}

std::vector<int> center_nodes(const RootDatum& d) {
    std::vector<int> out;
    for (int i = 0; i < d.nodes(); ++i)
        if (d.h[i] == 1) out.push_back(i);
    return out;
}

}  // namespace

int nu_candidates(const RootDatum& d, int target_node) { return static_cast<int>(oracle(d, target_node).size()); }

namespace {

CenterElement compute_nu(const RootDatum& d, int target_node) {
    auto c = oracle(d, target_node);
    if (c.size() != 1)
        throw std::logic_error("nu: " + std::to_string(c.size()) + " automorphisms pass the alcove oracle for " +
                               d.type.name() + " node " + std::to_string(target_node));
    CenterElement e;
    e.node = target_node;
    e.w = c[0].sigma;
    e.linear = c[0].w;
    e.zeta_node = c[0].zeta_node;
    return e;
}

}  // namespace

CenterElement nu(const RootDatum& d, int target_node) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, CenterElement> cache;
    const auto key = std::make_pair(d.type.name(), target_node);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CenterElement e = compute_nu(d, target_node);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, e).first->second;
}

namespace {

// coweight classes of all center nodes, computed once per type
const std::map<int, RatVector>& coweight_classes(const RootDatum& d) {
    static std::mutex mu;
    static std::map<std::string, std::map<int, RatVector>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d.type.name());
    if (it != cache.end()) return it->second;
    std::map<int, RatVector> classes;
    for (int c : center_nodes(d)) classes[c] = coweight_class(d, c);
    return cache.emplace(d.type.name(), std::move(classes)).first->second;
}

}  // namespace

int center_product(const RootDatum& d, int a, int b) {
    const auto& classes = coweight_classes(d);
    auto ia = classes.find(a), ib = classes.find(b);
    if (ia == classes.end() || ib == classes.end()) throw std::invalid_argument("center_product: not a center node");
    RatVector s = add(ia->second, ib->second);
    for (auto& x : s)
        if (x >= 1) x -= 1;
    for (const auto& [c, v] : classes)
        if (v == s) return c;
    throw std::logic_error("center_product: coweight class not represented by a vertex");
}

bool CenterSubgroup::is_cyclic() const {
    const int n = order();
    for (int i = 0; i < n; ++i) {
        int k = 1, cur = i;
        while (cur != 0) {
            cur = table[cur][i];
            ++k;
        }
        if (i == 0) k = 1;
        if (k == n) return true;
    }
    return false;
}

std::string CenterSubgroup::structure() const {
    if (order() == 1) return "trivial";
    if (is_cyclic()) return "Z/" + std::to_string(order());
    if (order() == 4) return "Z/2 x Z/2";
    return "order " + std::to_string(order());
}

std::vector<int> CenterSubgroup::nodes() const {
    std::vector<int> out;
    for (const auto& e : elements) out.push_back(e.node);
    return out;
}

std::vector<DiagramAutomorphism> CenterSubgroup::automorphisms() const {
    std::vector<DiagramAutomorphism> out;
    for (const auto& e : elements) out.push_back(e.w);
    return out;
}

namespace {

CenterSubgroup make_subgroup(const RootDatum& d, std::vector<int> nodes, std::vector<int> gens, std::string label) {
    std::sort(nodes.begin(), nodes.end());
    CenterSubgroup g;
    for (int n : nodes) g.elements.push_back(nu(d, n));
    const std::size_t m = g.elements.size();
    g.table.assign(m, std::vector<int>(m, -1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto c = g.elements[j].w.compose(g.elements[i].w);
            for (std::size_t k = 0; k < m; ++k)
                if (g.elements[k].w == c) g.table[i][j] = static_cast<int>(k);
            if (g.table[i][j] < 0) throw std::logic_error("center subgroup is not closed under composition");
        }
    g.generated_by = std::move(gens);
    g.label = std::move(label);
    return g;
}

}  // namespace

CenterSubgroup center_group(const RootDatum& d) { return make_subgroup(d, center_nodes(d), {}, "full"); }

CenterSubgroup trivial_subgroup(const RootDatum& d) { return make_subgroup(d, {0}, {}, "trivial"); }

CenterSubgroup subgroup_generated(const RootDatum& d, const std::vector<int>& gens, const std::string& label) {
    std::set<int> elems{0};
    bool grew = true;
    for (int g : gens) {
        if (g < 0 || g >= d.nodes() || d.h[g] != 1)
            throw std::invalid_argument("node " + std::to_string(g) + " is not a center node of " + d.type.name());
        elems.insert(g);
    }
    while (grew) {
        grew = false;
        std::vector<int> cur(elems.begin(), elems.end());
        for (int a : cur)
            for (int b : cur)
                if (elems.insert(center_product(d, a, b)).second) grew = true;
    }
    std::string l = label;
    if (l.empty()) {
        std::ostringstream os;
        os << "<";
        for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << "node " << gens[i];
        os << ">";
        l = os.str();
    }
    return make_subgroup(d, std::vector<int>(elems.begin(), elems.end()), gens, l);
}

std::vector<CenterSubgroup> all_subgroups(const RootDatum& d) {
    std::vector<CenterSubgroup> out;
    std::set<std::vector<int>> seen;
    auto nodes = center_nodes(d);
    for (int n : nodes) {
        CenterSubgroup s = (n == 0) ? trivial_subgroup(d) : subgroup_generated(d, {n});
        if (seen.insert(s.nodes()).second) out.push_back(s);
    }
    CenterSubgroup full = center_group(d);
    if (seen.insert(full.nodes()).second) out.push_back(full);
    return out;
}

CenterSubgroup parse_center(const RootDatum& d, const std::string& spec) {
    const auto& t = d.type;
    if (spec == "trivial" || spec == "1") return trivial_subgroup(d);
    if (spec == "full") return center_group(d);
    if (spec == "c") {
        CenterSubgroup full = center_group(d);
        if (!full.is_cyclic())
            throw std::invalid_argument("center of " + t.name() + " is not cyclic; use c_SO, c_exotic or a node id");
        for (const auto& e : full.elements) {
            if (e.node == 0 && full.order() > 1) continue;
            CenterSubgroup s = subgroup_generated(d, {e.node}, "c");
            if (s.order() == full.order()) return s;
        }
        return trivial_subgroup(d);
    }
    if (spec == "c_SO") {
        if (t.family != Family::D) throw std::invalid_argument("c_SO is only defined for type D");
        return subgroup_generated(d, {1}, "c_SO");
    }
    if (spec == "c_exotic") {
        if (t.family != Family::D || t.rank % 2 != 0)
            throw std::invalid_argument("c_exotic is only defined for type D_{2n}");
        return subgroup_generated(d, {t.rank}, "c_exotic");
    }
    if (!spec.empty() && std::all_of(spec.begin(), spec.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        if (spec.size() > 3) throw std::invalid_argument("node id out of range: " + spec);
        return subgroup_generated(d, {std::stoi(spec)}, "node " + spec);
    }
    throw std::invalid_argument("unrecognized center spec '" + spec + "'");
}

OrbitSet orbit_data(const RootDatum& d, const CenterSubgroup& sub) {
    OrbitSet s;
    s.orbits = orbit_structure(d.diagram(), sub.automorphisms());
    s.degenerate = s.orbits.size() == 1 && s.orbits[0].kind == OrbitKind::Degenerate;
    return s;
}

std::vector<RatVector> fixed_subspace(const RootDatum& d, const CenterSubgroup& sub) {
    const auto n = static_cast<std::size_t>(d.rank());
    std::vector<RatVector> rows;
    RatMatrix id = RatMatrix::identity(n);
    for (const auto& e : sub.elements) {
        RatMatrix m = e.linear - id;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
    }
    return common_kernel(rows, n);
}

std::vector<RatVector> roots_vanishing_on(const RootDatum& d, const std::vector<RatVector>& basis) {
    const auto& roots = enumerate_roots(d);
    const auto& functionals = root_functionals(d);
    std::vector<RatVector> out;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        bool zero = true;
        for (const auto& b : basis)
            if (dot(functionals[j], b) != 0) {
                zero = false;
                break;
            }
        if (zero) out.push_back(roots[j]);
    }
    return out;
}

LcFactors l_c_factors(const RootDatum& d, const CenterSubgroup& sub) {
    LcFactors f;
    auto subsystem = classify_root_system(roots_vanishing_on(d, fixed_subspace(d, sub)), d.gram);
    f.name = product_name(subsystem);
    if (sub.is_cyclic()) {
        OrbitSet os = orbit_data(d, sub);
        for (const auto& o : os.orbits) {
            int size = o.kind == OrbitKind::Degenerate ? o.mark : o.size;
            if (size > 1)
                f.sizes.push_back(size);
            else
                ++f.trivial;
        }
    } else {
        bool supported = d.type.family == Family::D && d.type.rank % 2 == 0 && sub.order() == 4;
        if (!supported) throw std::invalid_argument("l_c_factors: unsupported non-cyclic subgroup");
        for (const auto& t : subsystem) {
            if (t.family != Family::A) throw std::logic_error("l_c_factors: non-A factor in L_C");
            f.sizes.push_back(t.rank + 1);
        }
    }
    std::sort(f.sizes.rbegin(), f.sizes.rend());
    return f;
}

}  // namespace tricomm
