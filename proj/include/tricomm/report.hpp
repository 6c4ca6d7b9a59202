#ifndef TRICOMM_REPORT_HPP
#define TRICOMM_REPORT_HPP

#include "tricomm/center.hpp"
#include "tricomm/io.hpp"
#include "tricomm/root_data.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tricomm {

/*
 * A table of string cells with a fixed column order.  Rows are generated in a
 * deterministic order (catalog order of types, then center label, then k).
 */
struct TableDocument {
    std::string name;     // file stem, e.g. "quotient_diagrams"
    std::string title;
    std::string source;   // which family of diagrams or root systems the table lists
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Json table_to_json(const TableDocument& t);
std::string table_to_text(const TableDocument& t);

// Compact bond list such as "0-2 1-2 2=2>3"; node ids as in d.nodes.
std::string bond_summary(const AffineDiagram& d);
std::string join_ints(const std::vector<int>& v, const std::string& sep = ",");

/*
 * The nontrivial center subgroups of a group used in the tables, keyed by
 * their canonical label.  Of the two exotic order-2 subgroups of D_{2n} only
 * the one generated by node 2n is listed; their invariants coincide.
 */
std::vector<std::pair<std::string, CenterSubgroup>> named_subgroups(const RootDatum& d);

TableDocument coroot_diagram_table(int max_rank);
TableDocument quotient_diagram_table(int max_rank);
TableDocument fixed_subspace_table(int max_rank);   // root systems on the fixed subspace
TableDocument order_k_table(int max_rank);          // root systems on t(k), trivial center
TableDocument twisted_order_k_table(int max_rank);  // root systems on t^{w_C}(g, k), k not dividing n0
std::vector<TableDocument> paper_tables(int max_rank);

/*
 * Every cross-check over all catalog types up to max_rank and all center
 * subgroups: datum invariants, uniqueness of nu and the homomorphism
 * property, projected versus quotient diagrams, derived versus projected
 * diagrams, the numerology lemmas, the clock partition and sum d_X = g.
 */
struct CheckResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

struct CheckAllReport {
    int max_rank = 12;
    std::vector<CheckResult> checks;
    bool ok() const;
    std::string text() const;
    Json json() const;
};

CheckAllReport check_all(int max_rank);

}  // namespace tricomm

#endif
