#ifndef TRICOMM_DERIVED_HPP
#define TRICOMM_DERIVED_HPP

#include "tricomm/center.hpp"
#include "tricomm/numerology.hpp"
#include "tricomm/root_data.hpp"

#include <string>
#include <vector>

namespace tricomm {

enum class NodeType { Infinity, One, TwoI, TwoII, Three, FourI, FourII, FourIII };

std::string node_type_name(NodeType t);
// The divisor r with l_k^2 = l^2 / r (1 for the rank-zero type).
int node_type_divisor(NodeType t);

/*
 * The diagram on the nodes whose integer is divisible by k, built from the
 * node types: a survivor's squared length is divided by its type number, two
 * survivors are joined when they are joined in the parent or both touch the
 * same component of the complementary subdiagram, and bond multiplicities
 * are length ratios.
 */
struct DerivedDiagram {
    MarkedDiagram parent;
    int k = 1;
    std::vector<int> survivors;           // parent positions, ascending
    std::vector<NodeType> node_types;     // per survivor
    std::vector<Rat> ell_k_sq;            // per survivor
    std::vector<int> surviving_n;         // parent integers of the survivors
    AffineDiagram diagram;                // node i is survivors[i]; marks are the primitive kernel vector
    SimpleType classified;
};

NodeType node_type(const MarkedDiagram& m, int k, int v);
DerivedDiagram derived(const MarkedDiagram& m, int k);

struct SamediagsReport {
    bool ok = false;
    std::string message;
    SimpleType derived_type;
    SimpleType projected_type;
    std::vector<SimpleType> centralizer;  // roots vanishing on the order-k subspace
    std::vector<int> surviving_n;
    int torus_rank = 0;
};

// Projects the quotient coroots of the survivors onto the subspace of the
// fixed subspace killed by the complementary orbits and compares the
// resulting Cartan integers with derived() on the quotient marked diagram.
SamediagsReport check_samediags(const RootDatum& d, const CenterSubgroup& sub, int k);

}  // namespace tricomm

#endif
