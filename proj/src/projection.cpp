#include "tricomm/projection.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tricomm {

RatVector average_projection(const CenterSubgroup& sub, const RatVector& v) {
    RatVector s = zeros(v.size());
    for (const auto& e : sub.elements) s = add(s, e.linear * v);
    return scale(Rat(1, sub.order()), s);
}

ProjectedSystem project(const RootDatum& d, const CenterSubgroup& sub) {
    ProjectedSystem p;
    OrbitSet os = orbit_data(d, sub);
    p.orbits = os.orbits;
    p.degenerate = os.degenerate;
    p.fixed_subspace_basis = fixed_subspace(d, sub);
    const auto r = static_cast<std::size_t>(d.rank());

    if (p.fixed_subspace_basis.empty()) {
        if (!p.degenerate) throw std::logic_error("project: zero fixed subspace for a non-degenerate action");
        p.projected_coroots = {zeros(r)};
        p.proj_gram = RatMatrix(1, 1);
        p.diagram.nodes = {0};
        p.diagram.cartan = {{2}};
        p.diagram.marks = {p.orbits[0].mark};
        p.diagram.sq_lengths = {Rat(2)};
        p.classified = make_type(Family::Trivial, 0);
        return p;
    }

    std::vector<int> marks, ids;
    for (std::size_t i = 0; i < p.orbits.size(); ++i) {
        const Orbit& o = p.orbits[i];
        RatVector s = zeros(r);
        for (int b : o.members) s = add(s, d.coroot_frame[static_cast<std::size_t>(b)]);
        RatVector pi = scale(Rat(1, o.size), s);
        // the orbit average must agree with the orthogonal projection of every member
        for (int b : o.members) {
            const RatVector& cv = d.coroot_frame[static_cast<std::size_t>(b)];
            if (orthogonal_project(cv, p.fixed_subspace_basis, d.frame_gram) != pi)
                throw std::logic_error("project: orbit average differs from orthogonal projection");
        }
        p.projected_coroots.push_back(pi);
        marks.push_back(o.mark);
        ids.push_back(static_cast<int>(i));
    }
    RatVector rel = zeros(r);
    for (std::size_t i = 0; i < p.orbits.size(); ++i)
        rel = add(rel, scale(Rat(marks[i]), p.projected_coroots[i]));
    if (!is_zero(rel)) throw std::logic_error("project: marks do not give a relation among projected coroots");

    p.proj_gram = gram_of(p.projected_coroots, d.frame_gram);
    p.diagram = diagram_from_vectors(p.projected_coroots, d.frame_gram, marks, ids);
    auto cls = classify(p.diagram);
    if (!cls.type) throw std::logic_error("project: projected-coroot diagram is not in the catalog");
    p.classified = canonical(*cls.type);
    return p;
}

FixedSystems fixed_systems(const RootDatum& d, const CenterSubgroup& sub) {
    FixedSystems f;
    std::set<RatVector> restricted, projection;
    const auto& roots = enumerate_roots(d);
    const auto& frames = root_frames(d);
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const RatVector& a = roots[j];
        const RatVector& af = frames[j];
        RatVector res = average_projection(sub, af);
        if (!is_zero(res)) restricted.insert(res);
        RatVector co = scale(2 / inner(a, a, d.gram), af);
        RatVector pc = average_projection(sub, co);
        if (!is_zero(pc)) projection.insert(scale(2 / inner(pc, pc, d.frame_gram), pc));
    }
    f.restricted = classify_root_system({restricted.begin(), restricted.end()}, d.frame_gram);
    f.projection = classify_root_system({projection.begin(), projection.end()}, d.frame_gram);
    for (const auto& t : f.projection) f.invariant.push_back(canonical(non_multipliable(t)));
    std::sort(f.invariant.begin(), f.invariant.end());
    f.diagram = project(d, sub).classified;
    return f;
}

DiagramCheck check_diagram1(const RootDatum& d, const CenterSubgroup& sub) {
    DiagramCheck c;
    AffineDiagram q = quotient(d.diagram(), sub.automorphisms());
    AffineDiagram p = project(d, sub).diagram;
    std::ostringstream os;
    os << d.type.name() << " / " << sub.label << ": ";
    if (q.size() != p.size()) {
        os << "node counts differ (" << q.size() << " vs " << p.size() << ")";
        c.message = os.str();
        return c;
    }
    for (std::size_t u = 0; u < q.size(); ++u) {
        if (q.marks[u] != p.marks[u]) {
            os << "mark of node " << u << " differs (" << q.marks[u] << " vs " << p.marks[u] << ")";
            c.message = os.str();
            return c;
        }
        if (q.sq_lengths[u] != p.sq_lengths[u]) {
            os << "squared length of node " << u << " differs";
            c.message = os.str();
            return c;
        }
        for (std::size_t v = 0; v < q.size(); ++v)
            if (q.cartan[u][v] != p.cartan[u][v]) {
                os << "n(" << u << "," << v << ") differs (" << q.cartan[u][v] << " vs " << p.cartan[u][v] << ")";
                c.message = os.str();
                return c;
            }
    }
    c.ok = true;
    os << "equal (" << q.size() << " nodes)";
    c.message = os.str();
    return c;
}

namespace {

DiagramAutomorphism full_perm(const RootDatum& d, const DiagramAutomorphism& tau) {
    DiagramAutomorphism t;
    const auto n = static_cast<std::size_t>(d.nodes());
    if (tau.perm.size() + 1 == n) {
        t.perm.push_back(0);
        t.perm.insert(t.perm.end(), tau.perm.begin(), tau.perm.end());
    } else {
        t = tau;
    }
    if (t.perm.size() != n || t.perm[0] != 0) throw std::invalid_argument("fold: tau must fix the extended node");
    std::vector<int> sorted = t.perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
        if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("fold: tau is not a permutation");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (d.cartan[u][v] != d.cartan[static_cast<std::size_t>(t.perm[u])][static_cast<std::size_t>(t.perm[v])])
                throw std::invalid_argument("fold: tau is not a diagram automorphism");
    return t;
}

}  // namespace

FoldResult fold_detail(const RootDatum& d, const DiagramAutomorphism& tau_in) {
    DiagramAutomorphism tau = full_perm(d, tau_in);
    std::vector<DiagramAutomorphism> group{tau};
    while (!group.back().is_identity()) group.push_back(group.back().compose(tau));
    const auto r = static_cast<std::size_t>(d.rank());

    FoldResult f;
    auto orbits = orbit_structure(d.diagram(), group);
    std::vector<RatVector> u;
    std::vector<int> ids;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        RatVector s = zeros(r);
        for (int a : orbits[i].members) s = add(s, d.coroot_frame[static_cast<std::size_t>(a)]);
        u.push_back(scale(Rat(orbits[i].epsilon), s));
        ids.push_back(static_cast<int>(i));
    }
    f.diagram = diagram_from_vectors(u, d.frame_gram, std::vector<int>(u.size(), 1), ids);
    auto marks = is_affine_type(f.diagram.cartan);
    if (!marks) throw std::logic_error("fold: restricted coroot diagram is not of affine type");
    f.diagram.marks = *marks;
    auto cls = classify(f.diagram);
    if (!cls.type) throw std::logic_error("fold: restricted coroot diagram is not in the catalog");
    f.from_diagram = canonical(*cls.type);

    std::vector<RatMatrix> maps;
    for (const auto& g : group) maps.push_back(linear_map(d, g));
    std::set<RatVector> restricted;
    for (const auto& af : root_frames(d)) {
        RatVector s = zeros(r);
        for (const auto& m : maps) s = add(s, m * af);
        s = scale(Rat(1, static_cast<int>(maps.size())), s);
        if (!is_zero(s)) restricted.insert(s);
    }
    f.from_roots = classify_root_system({restricted.begin(), restricted.end()}, d.frame_gram);
    return f;
}

SimpleType fold(const RootDatum& d, const DiagramAutomorphism& tau) { return fold_detail(d, tau).from_diagram; }

std::vector<DiagramAutomorphism> finite_diagram_automorphisms(const RootDatum& d) {
    std::vector<DiagramAutomorphism> out;
    for (const auto& a : automorphism_group(d.diagram()))
        if (a.perm[0] == 0 && !a.is_identity()) out.push_back(a);
    return out;
}

}  // namespace tricomm
