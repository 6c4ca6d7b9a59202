#ifndef TRICOMM_DIAGRAMS_HPP
#define TRICOMM_DIAGRAMS_HPP

#include "tricomm/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tricomm {

using IntMatrix = std::vector<std::vector<int>>;

enum class Family { Trivial, A, B, C, D, E, F, G, BC };

// A simple (possibly non-reduced) root system type, or the rank-zero
// "trivial" type.
struct SimpleType {
    Family family = Family::Trivial;
    int rank = 0;

    std::string name() const;
    bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const SimpleType& o) const { return !(*this == o); }
    bool operator<(const SimpleType& o) const;
};

SimpleType make_type(Family f, int rank);
bool is_valid_type(const SimpleType& t);
// Map low-rank coincidences to a canonical label: B1, C1 -> A1; B2 -> C2; D3 -> A3.
SimpleType canonical(const SimpleType& t);
// The non-multipliable subsystem: BC_n -> C_n, everything else unchanged.
SimpleType non_multipliable(const SimpleType& t);
// Root-system duality: B <-> C, others fixed.
SimpleType dual_type(const SimpleType& t);
// Product of simple types rendered like "A1^3 x D6"; empty product is "trivial".
std::string product_name(std::vector<SimpleType> factors);

/*
 * Generalized Cartan matrix with marks and squared lengths.
 *
 * Convention: cartan[u][v] = n(u,v) = 2<u,v>/<v,v> for the (co)root vectors
 * attached to the nodes, so cartan[u][v] * sq_lengths[v] is symmetric.  The
 * marks vector m satisfies sum_u m[u] * cartan[u][v] = 0 for every v.
 * A single node (cartan [[2]]) is the rank-zero diagram.
 */
struct AffineDiagram {
    std::vector<int> nodes;
    IntMatrix cartan;
    std::vector<int> marks;
    std::vector<Rat> sq_lengths;

    std::size_t size() const { return nodes.size(); }
    int rank() const { return static_cast<int>(nodes.size()) - 1; }
    int mark_sum() const;
    bool bonded(std::size_t u, std::size_t v) const { return u != v && cartan[u][v] != 0; }
    bool operator==(const AffineDiagram& o) const;
    bool operator!=(const AffineDiagram& o) const { return !(*this == o); }
};

// Throws std::invalid_argument naming the first violated diagram invariant.
void validate(const AffineDiagram& d);

// Throws std::invalid_argument naming the first violated generalized-Cartan condition.
void validate_cartan(const IntMatrix& cartan);

// The strictly positive primitive kernel vector of the transpose, if the
// matrix is of affine type.
std::optional<std::vector<int>> is_affine_type(const IntMatrix& cartan);

struct DiagramAutomorphism {
    std::vector<int> perm;  // position index -> position index

    bool operator==(const DiagramAutomorphism& o) const { return perm == o.perm; }
    bool operator<(const DiagramAutomorphism& o) const { return perm < o.perm; }
    DiagramAutomorphism compose(const DiagramAutomorphism& after) const;  // after o this
    bool is_identity() const;
};

// All mark-preserving automorphisms of the Cartan matrix, sorted.
std::vector<DiagramAutomorphism> automorphism_group(const AffineDiagram& d);

// Composition table: table[i][j] = index of (group[j] o group[i]).
std::vector<std::vector<int>> composition_table(const std::vector<DiagramAutomorphism>& group);

struct Classification {
    std::optional<SimpleType> type;  // nullopt means "unrecognized"
    std::vector<int> bijection;      // d position -> catalog node id
    int scale = 1;                   // d.marks = scale * catalog marks
};

// Identify d with a catalog extended coroot diagram (Cartan integers and
// marks up to a common factor).
Classification classify(const AffineDiagram& d);

// Isomorphism of diagrams respecting Cartan integers and marks exactly.
std::optional<std::vector<int>> find_isomorphism(const AffineDiagram& a, const AffineDiagram& b,
                                                 bool proportional_marks = false);

enum class OrbitKind { Ordinary, Exceptional, Degenerate };

struct Orbit {
    std::vector<int> members;  // positions in the parent diagram, sorted
    int size = 0;              // n_orbit
    int epsilon = 1;           // 1 ordinary, 2 exceptional
    int mark = 0;              // n_orbit * mark of any member
    OrbitKind kind = OrbitKind::Ordinary;
};

// Orbits of a group of automorphisms, ordered by smallest member.  Throws
// std::invalid_argument for an orbit that is neither ordinary nor exceptional
// unless the diagram is a cycle acted on transitively.
std::vector<Orbit> orbit_structure(const AffineDiagram& d, const std::vector<DiagramAutomorphism>& group);

// Quotient diagram on orbits.
AffineDiagram quotient(const AffineDiagram& d, const std::vector<DiagramAutomorphism>& group);

// Quotient Cartan integer between distinct orbits, summing over the second
// orbit: n(u,v) = eps(v) * sum_{v' in v} n(u, v').
int quotient_cartan(const AffineDiagram& d, const Orbit& u, const Orbit& v);

// Normalize squared lengths so the minimum is 2.
std::vector<Rat> normalize_lengths(const std::vector<Rat>& sq);

// Connected components of the graph induced on a subset of positions.
std::vector<std::vector<int>> components(const AffineDiagram& d, const std::vector<int>& subset);

// Diagram whose Cartan integers come from exact vectors and a Gram matrix.
AffineDiagram diagram_from_vectors(const std::vector<RatVector>& vectors, const RatMatrix& gram,
                                   const std::vector<int>& marks, const std::vector<int>& node_ids);

// Classify a finite (possibly reducible, possibly non-reduced) root system
// given by all of its roots as vectors for the inner product gram.  Returns
// the irreducible factors, sorted; an empty set of roots gives no factors.
std::vector<SimpleType> classify_root_system(const std::vector<RatVector>& roots, const RatMatrix& gram);

}  // namespace tricomm

#endif
