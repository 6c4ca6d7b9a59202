#ifndef TRICOMM_MODULI_HPP
#define TRICOMM_MODULI_HPP

#include "tricomm/center.hpp"
#include "tricomm/numerology.hpp"
#include "tricomm/root_data.hpp"

#include <string>
#include <vector>

namespace tricomm {

enum class Shape {
    Point,         // rank zero
    SbarCubed,     // (Sbar x Sbar x Sbar) / W
    SbarSquaredS,  // (Sbar x Sbar x S) / W
    QuotientF,     // ((S x S x S) / F) / W, non-cyclic center only
};

std::string shape_name(Shape s);

/*
 * One component of the moduli space of commuting (or c-, or C-) triples.
 * Components of order k are labelled by the units l of Z/k; the Chern-Simons
 * value is l/k.  Which geometric component carries which unit is a
 * convention; the pair (order, cs) identifies a component.
 */
struct ComponentRecord {
    int order = 1;
    int label = 0;
    int d_X = 1;
    int dim = 0;
    int torus_rank = 0;
    Shape shape = Shape::Point;
    Rat cs;
    std::vector<SimpleType> centralizer;  // semisimple type of the centralizer of the torus
    long long finite_group_order = 0;     // |F| for Shape::QuotientF
};

// Components for a trivial or cyclic center subgroup, sorted by (order, label).
std::vector<ComponentRecord> components(const RootDatum& d, const CenterSubgroup& sub);

// The four components for the full center of Spin(4n), i.e. D_{2n}, n >= 2.
std::vector<ComponentRecord> noncyclic_components(int n);

// Orders of the finite groups F (order-1,2 components) and F' (order-4
// components), counted by enumerating the solutions of their defining
// sign equations.
long long order_of_F(int n);
long long order_of_F_prime(int n);

struct RankZeroEntry {
    SimpleType type;
    std::string center;  // "trivial" or a center label such as "c", "c_exotic"
    bool operator==(const RankZeroEntry& o) const { return type == o.type && center == o.center; }
    bool operator<(const RankZeroEntry& o) const;
};

/*
 * Groups admitting a rank-zero triple of order k: exactly one of the
 * (quotient) coroot integers is divisible by k.  With central = false the
 * scan uses commuting triples (trivial center subgroup, including the
 * trivial group); with central = true it uses every nontrivial cyclic
 * center subgroup.
 */
std::vector<RankZeroEntry> rank_zero_list(int k, bool central, int max_rank = 12);

// Canonical label of a cyclic subgroup: "trivial", "c" (the whole center),
// "c_SO", "c_exotic", or "node i".
std::string center_label(const RootDatum& d, const CenterSubgroup& sub);

struct ClockReport {
    int g = 0;
    std::vector<ComponentRecord> components;
    std::vector<std::vector<int>> J;  // per component, residues mod 2g, sorted
    int parity = 0;
    bool valid = false;
};

ClockReport clock_report(const RootDatum& d, const CenterSubgroup& sub);

}  // namespace tricomm

#endif
