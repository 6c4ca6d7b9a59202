#ifndef TRICOMM_CENTER_HPP
#define TRICOMM_CENTER_HPP

#include "tricomm/diagrams.hpp"
#include "tricomm/root_data.hpp"

#include <string>
#include <vector>

namespace tricomm {

/*
 * A center element c, identified with the extended-diagram node whose
 * alcove vertex exponentiates to it (the identity is the extended node 0),
 * together with its Weyl part acting on the extended coroot diagram.
 */
struct CenterElement {
    int node = 0;
    DiagramAutomorphism w;  // w.perm[0] == node
    RatMatrix linear;       // action on frame coordinates
    int zeta_node = 0;      // node of the alcove vertex moved to the origin
};

struct CenterSubgroup {
    std::vector<CenterElement> elements;      // sorted by node; elements[0] is the identity
    std::vector<std::vector<int>> table;      // table[i][j] = index of elements[i] * elements[j]
    std::vector<int> generated_by;            // generator nodes (empty for the trivial group)
    std::string label;                        // e.g. "trivial", "full", "c", "c_SO", "node 3"

    int order() const { return static_cast<int>(elements.size()); }
    bool is_cyclic() const;
    std::string structure() const;            // "Z/m" or "Z/2 x Z/2"
    std::vector<int> nodes() const;
    std::vector<DiagramAutomorphism> automorphisms() const;
};

struct OrbitSet {
    std::vector<Orbit> orbits;
    bool degenerate = false;
};

struct LcFactors {
    std::vector<int> sizes;  // n for each A_{n-1} factor with n >= 2, descending
    int trivial = 0;         // number of orbits of size one (cyclic case)
    std::string name;        // e.g. "A1^3", "A2^2", "trivial"
};

// Linear map on frame coordinates induced by a permutation of extended coroots.
RatMatrix linear_map(const RootDatum& d, const DiagramAutomorphism& sigma);

// Weyl-group membership by reflecting a regular dominant coweight back to the
// dominant chamber.
bool in_weyl_group(const RootDatum& d, const RatMatrix& w);

// Number of diagram automorphisms with sigma(0) == target that pass the alcove
// vertex oracle (used to assert uniqueness).
int nu_candidates(const RootDatum& d, int target_node);

CenterElement nu(const RootDatum& d, int target_node);
CenterSubgroup center_group(const RootDatum& d);
CenterSubgroup subgroup_generated(const RootDatum& d, const std::vector<int>& generator_nodes,
                                  const std::string& label = "");
CenterSubgroup trivial_subgroup(const RootDatum& d);

// Every distinct cyclic subgroup, plus the full center when it is not cyclic.
std::vector<CenterSubgroup> all_subgroups(const RootDatum& d);

// "trivial", "full", "c", "c_SO", "c_exotic", or a node id.
CenterSubgroup parse_center(const RootDatum& d, const std::string& spec);

// The product of two center elements computed from coweight classes modulo
// the coroot lattice (independent of the diagram automorphisms).
int center_product(const RootDatum& d, int node_a, int node_b);

OrbitSet orbit_data(const RootDatum& d, const CenterSubgroup& sub);

// Basis (frame coordinates) of the subspace fixed by every element.
std::vector<RatVector> fixed_subspace(const RootDatum& d, const CenterSubgroup& sub);

// Roots (ambient) vanishing on a subspace given by frame-coordinate basis vectors.
std::vector<RatVector> roots_vanishing_on(const RootDatum& d, const std::vector<RatVector>& basis);

LcFactors l_c_factors(const RootDatum& d, const CenterSubgroup& sub);

}  // namespace tricomm

#endif
