#ifndef TRICOMM_PROJECTION_HPP
#define TRICOMM_PROJECTION_HPP

#include "tricomm/center.hpp"
#include "tricomm/diagrams.hpp"
#include "tricomm/root_data.hpp"

#include <string>
#include <vector>

namespace tricomm {

/*
 * Orthogonal projection of the extended coroots onto the subspace fixed by a
 * group of center elements.  All vectors are in frame coordinates and inner
 * products use the datum's frame Gram matrix.  Node i of the diagram is
 * orbit i of the center action (orbits ordered by smallest member), matching
 * the node order of quotient().
 */
struct ProjectedSystem {
    std::vector<RatVector> fixed_subspace_basis;
    std::vector<Orbit> orbits;
    std::vector<RatVector> projected_coroots;  // one per orbit
    RatMatrix proj_gram;                       // Gram matrix of projected_coroots
    AffineDiagram diagram;
    SimpleType classified;                     // type of the projected-coroot diagram
    bool degenerate = false;                   // fixed subspace is zero
};

ProjectedSystem project(const RootDatum& d, const CenterSubgroup& sub);

// Projection onto the fixed subspace by averaging over the group.
RatVector average_projection(const CenterSubgroup& sub, const RatVector& frame_vector);

/*
 * The four root systems attached to the fixed subspace of a center subgroup,
 * each obtained by enumerating every root of the datum.
 *   restricted  nonzero restrictions of roots
 *   projection  roots dual to the nonzero projections of coroots
 *   invariant   non-multipliable part of the projection system
 *   diagram     type of the projected-coroot diagram
 */
struct FixedSystems {
    std::vector<SimpleType> restricted;
    std::vector<SimpleType> projection;
    std::vector<SimpleType> invariant;
    SimpleType diagram;
};

FixedSystems fixed_systems(const RootDatum& d, const CenterSubgroup& sub);

struct DiagramCheck {
    bool ok = false;
    std::string message;
};

// Compare the projected-coroot diagram with the combinatorial quotient,
// node for node (Cartan integers, marks and squared lengths).
DiagramCheck check_diagram1(const RootDatum& d, const CenterSubgroup& sub);

/*
 * Folding by an automorphism tau of the finite Dynkin diagram (perm over
 * node ids 0..rank with tau(0) = 0, or over 1..rank given with rank entries).
 * The restricted coroots eps * sum of the coroots in each tau-orbit of the
 * extended diagram give an affine diagram which is classified; the same type
 * is recomputed by enumerating restricted roots.
 */
struct FoldResult {
    SimpleType from_diagram;
    std::vector<SimpleType> from_roots;
    AffineDiagram diagram;
};

FoldResult fold_detail(const RootDatum& d, const DiagramAutomorphism& tau);
SimpleType fold(const RootDatum& d, const DiagramAutomorphism& tau);

// Nontrivial automorphisms of the finite Dynkin diagram (fixing node 0).
std::vector<DiagramAutomorphism> finite_diagram_automorphisms(const RootDatum& d);

}  // namespace tricomm

#endif
