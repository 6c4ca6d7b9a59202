#ifndef TRICOMM_ROOT_DATA_HPP
#define TRICOMM_ROOT_DATA_HPP

#include "tricomm/diagrams.hpp"
#include "tricomm/linalg.hpp"

#include <string>
#include <vector>

namespace tricomm {

/*
 * Exact realization of a simple (or BC) root system with its extended
 * simple roots and coroots.
 *
 * Node ids: 0 is the extended node (minus the highest root); 1..rank are the
 * simple roots in Bourbaki order:
 *   A_n  e_i - e_{i+1}                         (ambient R^{n+1})
 *   B_n  e_i - e_{i+1}, e_n                    (R^n)
 *   C_n  e_i - e_{i+1}, 2 e_n                  (R^n)
 *   D_n  e_i - e_{i+1}, e_{n-1} + e_n          (R^n)
 *   E_8  (e1+e8)/2 - (e2+..+e7)/2, e1+e2, e2-e1, e3-e2, ..., e7-e6  (R^8);
 *        E_7 and E_6 use the first 7 resp. 6 of these
 *   F_4  e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2     (R^4)
 *   G_2  e1-e2, -2e1+e2+e3                     (R^3)
 *   BC_n e_i - e_{i+1}, e_n; highest root 2e_1 (R^n)
 *
 * The ambient form is scaled so that the shortest coroots have squared
 * length 2.  Computations use "frame" coordinates: x in Q^rank stands for
 * sum_i x_i (simple coroot i).
 */
struct RootDatum {
    SimpleType type;
    int ambient_dim = 0;
    RatMatrix gram;  // ambient inner product

    std::vector<RatVector> extended_roots;    // ambient, index = node id
    std::vector<RatVector> extended_coroots;  // ambient, index = node id
    std::vector<int> h;                       // root integers
    std::vector<int> g;                       // coroot integers
    std::vector<RatVector> coroot_lattice_basis;   // simple coroots (ambient)
    std::vector<RatVector> coweight_lattice_basis; // fundamental coweights (ambient)

    RatMatrix frame_gram;                     // Gram matrix of the simple coroots
    std::vector<RatVector> coroot_frame;      // extended coroots in frame coordinates
    std::vector<RatVector> root_functional;   // a(x) = dot(root_functional[a], x) on frame coordinates
    IntMatrix cartan;                         // n(u,v) on extended coroots
    std::vector<Rat> sq_lengths;              // squared lengths of extended coroots

    int rank() const { return type.rank; }
    int nodes() const { return type.rank + 1; }
    RatVector to_frame(const RatVector& ambient) const;
    RatVector to_ambient(const RatVector& frame) const;
    AffineDiagram diagram() const;

    RatMatrix frame_gram_inverse;
};

struct AlcoveData {
    std::vector<RatVector> vertices;        // ambient; vertex i belongs to node i (node 0: origin)
    std::vector<RatVector> vertices_frame;  // frame coordinates
    RatVector barycenter;
    RatVector barycenter_frame;
};

// Catalog realization (cached; the reference stays valid for the process lifetime).
const RootDatum& datum(const SimpleType& t);
int dual_coxeter(const SimpleType& t);
// Alcove and root lists are computed once per catalog type and cached.
const AlcoveData& alcove(const RootDatum& d);

// Every violated invariant of a catalog datum, as a message; empty when the
// datum is sound.  Checks the root and coroot relations, h_0 = g_0 = 1,
// g | h, the short-coroot normalization, Cartan integers against the Gram
// form, the value set {1..N} of the coroot integers, the gcd property of the
// coroot integers, the center order, and the alcove vertex equations.
std::vector<std::string> check_datum(const RootDatum& d);

// Order of the coweight lattice modulo the coroot lattice.
Int center_order(const RootDatum& d);

// All roots (ambient coordinates), sorted; includes the divisible roots for BC.
const std::vector<RatVector>& enumerate_roots(const RootDatum& d);
// The same roots in frame coordinates, and as functionals on frame
// coordinates (a(x) = dot(root_functionals[j], x)); index-aligned with
// enumerate_roots.
const std::vector<RatVector>& root_frames(const RootDatum& d);
const std::vector<RatVector>& root_functionals(const RootDatum& d);

// All catalog types with rank <= max_rank, in a fixed order.  B_2 is omitted
// because it shares its datum with C_2.
std::vector<SimpleType> catalog_types(int max_rank, bool include_bc = true);

// Parse "A5", "E8", "Spin(12)", "SU(7)", "Sp(6)", "BC3", "B2".
SimpleType parse_group(const std::string& spec);

}  // namespace tricomm

#endif
