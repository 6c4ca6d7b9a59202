#ifndef TRICOMM_NUMEROLOGY_HPP
#define TRICOMM_NUMEROLOGY_HPP

#include "tricomm/diagrams.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tricomm {

/*
 * An affine diagram together with a node function n = n0 * g, where g is the
 * primitive positive kernel vector of the transposed Cartan matrix.  Quotient
 * diagrams carry their orbit integers as marks, so make_marked() reads n off
 * the marks and recovers n0 as their gcd.
 */
struct MarkedDiagram {
    AffineDiagram diagram;
    std::vector<int> n;
    int n0 = 1;
};

MarkedDiagram make_marked(const AffineDiagram& d);

// Positions v with k not dividing n_v.  Throws if k divides no n_v.
std::vector<int> I_set(const MarkedDiagram& m, int k);

// Positions v with k | n_v.
std::vector<int> survivors(const MarkedDiagram& m, int k);

// Every k >= 1 dividing at least one n_v, ascending.
std::vector<int> admissible_orders(const MarkedDiagram& m);

/*
 * A witness for the cyclic-subgroup decomposition of the residues of I_set:
 * orders[i] is the order of C_i, and members[i][j] is the position assigned
 * to the element (j+1) * (k / orders[i]) of C_i.
 */
struct Decomposition {
    int k = 1;
    std::vector<int> orders;
    std::vector<std::vector<int>> members;
};

// Exhaustive search; the lexicographically smallest ascending list of orders
// among all valid decompositions, or nothing.
std::optional<Decomposition> check_assumption(const MarkedDiagram& m, int k);

struct NumerologyCounts {
    int N = 0;
    int g = 0;
    int n0 = 1;
    std::map<int, int> i;  // value -> number of nodes with that n-value
    std::map<int, int> d;  // x -> number of nodes with x | n_v (only nonzero entries)

    int i_mod(int x, int k) const;  // number of nodes with n_v == x mod k
};

// Counts with every lemma of the numerology verified; throws std::logic_error
// naming the violated statement.
NumerologyCounts counts(const MarkedDiagram& m);

// Lower-level: the statistics only, without checks.
NumerologyCounts raw_counts(const std::vector<int>& n);

int euler_phi(int n);

struct ClockSet {
    int x = 1;
    int r = 1;
    std::vector<int> residues;  // sorted, mod 2g
};

struct ClockPartition {
    int g = 0;
    std::vector<ClockSet> sets;  // ordered by (x, r)
    bool disjoint = false;
    bool covers_parity = false;
    int parity = 0;              // 0 even, 1 odd
    bool valid() const { return disjoint && covers_parity; }
};

ClockPartition clocked(const MarkedDiagram& m);
ClockPartition clocked(const std::vector<int>& n);

}  // namespace tricomm

#endif
