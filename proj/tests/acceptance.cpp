// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance <path-to-tricomm_cli>
//
// Expected diagrams and table rows are written out here by family, directly
// from the published figures and tables, and compared with what the library
// computes.  Diagrams are compared with a small backtracking matcher that is
// independent of the library's own isomorphism search.

#include "tricomm/center.hpp"
#include "tricomm/derived.hpp"
#include "tricomm/moduli.hpp"
#include "tricomm/numerology.hpp"
#include "tricomm/projection.hpp"
#include "tricomm/report.hpp"
#include "tricomm/root_data.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tricomm;

namespace {

// Pinned limits.
constexpr int kMaxRank = 12;
constexpr double kFigureSeconds = 1.0;
constexpr double kNumerologySeconds = 30.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        if (failures.size() < 8) failures.push_back(what);
    }
};

// ---------------------------------------------------------------------------
// Figures

// A bond of a drawn diagram: multiplicity and the node the arrow points at
// (-1 for no arrow).
struct Bond {
    int u, v, mult, arrow;
};

struct Figure {
    std::vector<int> marks;
    std::vector<Bond> bonds;
    int circle = -1;  // the extended coroot, when drawn
};

// Chain with bond tokens between consecutive nodes:
//   "-" simple, ">"/"<" double with arrow right/left, "=" double without
//   arrow, "3>" triple with arrow right, "4>" quadruple with arrow right.
Figure chain(const std::vector<int>& marks, const std::vector<std::string>& tokens) {
    Figure f;
    f.marks = marks;
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
        const std::string& t = tokens.at(i);
        int u = static_cast<int>(i), v = u + 1;
        if (t == "-") f.bonds.push_back({u, v, 1, -1});
        else if (t == ">") f.bonds.push_back({u, v, 2, v});
        else if (t == "<") f.bonds.push_back({u, v, 2, u});
        else if (t == "=") f.bonds.push_back({u, v, 2, -1});
        else if (t == "3>") f.bonds.push_back({u, v, 3, v});
        else if (t == "4>") f.bonds.push_back({u, v, 4, v});
        else throw std::logic_error("bad bond token " + t);
    }
    return f;
}

// Chain of `count` nodes with given end bonds and simple bonds inside.  A
// two-node chain whose end arrows point outward collapses to the plain
// double bond of the two-node cycle.
Figure chain_ends(const std::vector<int>& marks, const std::string& first, const std::string& last) {
    if (marks.size() == 2 && first == "<" && last == ">") return chain(marks, {"="});
    std::vector<std::string> tokens(marks.size() - 1, "-");
    tokens.front() = first;
    tokens.back() = last;
    return chain(marks, tokens);
}

Figure cycle(int nodes, int mark) {
    Figure f;
    f.marks.assign(nodes, mark);
    if (nodes == 2) {
        f.bonds.push_back({0, 1, 2, -1});
    } else if (nodes > 2) {
        for (int i = 0; i < nodes; ++i) f.bonds.push_back({i, (i + 1) % nodes, 1, -1});
    }
    return f;
}

// Two leaves with marks `leaf` hanging off node 2 of a chain that starts at
// index 2; the chain is given by its marks and tokens.
Figure forked(int leaf, const std::vector<int>& chain_marks, const std::vector<std::string>& tokens) {
    Figure tail = chain(chain_marks, tokens);
    Figure f;
    f.marks = {leaf, leaf};
    f.marks.insert(f.marks.end(), tail.marks.begin(), tail.marks.end());
    f.bonds = {{0, 2, 1, -1}, {1, 2, 1, -1}};
    for (auto b : tail.bonds) f.bonds.push_back({b.u + 2, b.v + 2, b.mult, b.arrow < 0 ? -1 : b.arrow + 2});
    return f;
}

Figure extended_figure(const SimpleType& t) {
    const int n = t.rank;
    switch (t.family) {
    case Family::A: {
        Figure f = cycle(n + 1, 1);
        f.circle = 0;
        return f;
    }
    case Family::B: {
        // circle and a mark-1 node on a chain of 2s ending in =<= 1
        std::vector<int> m(n - 2, 2);
        m.push_back(1);
        std::vector<std::string> tok(n - 2, "-");
        tok.back() = "<";
        Figure f = forked(1, m, tok);
        f.circle = 0;
        return f;
    }
    case Family::C: {
        Figure f = chain_ends(std::vector<int>(n + 1, 1), "<", ">");
        f.circle = 0;
        return f;
    }
    case Family::D: {
        Figure f = forked(1, std::vector<int>(n - 3, 2), std::vector<std::string>(std::max(n - 4, 0), "-"));
        // the far end forks into two mark-1 leaves
        int end = static_cast<int>(f.marks.size()) - 1;
        f.marks.push_back(1);
        f.marks.push_back(1);
        f.bonds.push_back({end, end + 1, 1, -1});
        f.bonds.push_back({end, end + 2, 1, -1});
        f.circle = 0;
        return f;
    }
    case Family::E: {
        if (n == 6) {
            // arm 1-2-3-2-1; the circle hangs off the middle through a mark-2 node
            Figure f = chain({1, 2, 3, 2, 1}, std::vector<std::string>(4, "-"));
            f.marks.push_back(2);
            f.marks.push_back(1);
            f.bonds.push_back({2, 5, 1, -1});
            f.bonds.push_back({5, 6, 1, -1});
            f.circle = 6;
            return f;
        }
        if (n == 7) {
            Figure f = chain({1, 2, 3, 4, 3, 2, 1}, std::vector<std::string>(6, "-"));
            f.marks.push_back(2);
            f.bonds.push_back({3, 7, 1, -1});
            f.circle = 0;
            return f;
        }
        Figure f = chain({1, 2, 3, 4, 5, 6, 4, 2}, std::vector<std::string>(7, "-"));
        f.marks.push_back(3);
        f.bonds.push_back({5, 8, 1, -1});
        f.circle = 0;
        return f;
    }
    case Family::F: {
        Figure f = chain({1, 2, 3, 2, 1}, {"-", ">", "-", "-"});
        f.circle = 4;
        return f;
    }
    case Family::G: {
        Figure f = chain({1, 2, 1}, {"3>", "-"});
        f.circle = 2;
        return f;
    }
    case Family::BC: {
        if (n == 1) {
            Figure f = chain({1, 2}, {"4>"});
            f.circle = 1;
            return f;
        }
        std::vector<int> m(n + 1, 2);
        m[0] = 1;
        Figure f = chain_ends(m, ">", ">");
        f.circle = n;
        return f;
    }
    default:
        throw std::logic_error("no figure for " + t.name());
    }
}

// Quotient figure for a nontrivial center subgroup, or nothing if the
// published list has no such diagram.
std::optional<Figure> quotient_figure(const SimpleType& t, const std::string& label, int order) {
    const int n = t.rank;
    switch (t.family) {
    case Family::A: {
        int nodes = (n + 1) / order;
        if (nodes == 1) return Figure{{order}, {}, -1};
        return cycle(nodes, order);
    }
    case Family::B: {
        std::vector<int> m(n, 2);
        m.back() = 1;
        std::vector<std::string> tok(n - 1, "-");
        tok.front() = "<";
        tok.back() = "<";
        return chain(m, tok);
    }
    case Family::C: {
        if (n == 2) return chain({1, 2}, {"4>"});
        if (n == 3) return chain({2, 2}, {"="});
        if (n % 2 == 0) {
            std::vector<int> m(n / 2 + 1, 2);
            m[0] = 1;
            return chain_ends(m, ">", ">");
        }
        return chain_ends(std::vector<int>(n / 2 + 1, 2), "<", ">");
    }
    case Family::D: {
        if (label == "c_SO") return chain_ends(std::vector<int>(n - 1, 2), "<", ">");
        if (label == "c_exotic") {
            if (n == 4) return chain({2, 2, 2}, {"<", ">"});
            int half = n / 2;
            std::vector<int> m(half - 2, 4);
            m.push_back(2);
            std::vector<std::string> tok(half - 2, "-");
            tok.back() = "<";
            return forked(2, m, tok);
        }
        if (label == "c" && n % 2 == 1) return chain_ends(std::vector<int>(n / 2, 4), "<", ">");
        if (label == "full" && n % 2 == 0) {
            if (n == 4) return chain({2, 4}, {"4>"});
            std::vector<int> m(n / 2, 4);
            m[0] = 2;
            return chain_ends(m, ">", ">");
        }
        return std::nullopt;
    }
    case Family::E:
        if (n == 6) return chain({3, 6, 3}, {"3>", "-"});
        if (n == 7) return chain({2, 4, 6, 4, 2}, {"-", ">", "-", "-"});
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

// Bond data read straight off a generalized Cartan matrix: the multiplicity
// is the larger |n(u,v)| and the arrow points at the node with the larger
// |n(., node)|, i.e. the shorter one.
std::pair<int, int> bond_of(const AffineDiagram& d, int u, int v) {
    int a = -d.cartan[u][v], b = -d.cartan[v][u];
    if (a == 0 && b == 0) return {0, -1};
    int mult = std::max(a, b);
    int arrow = a > b ? v : (b > a ? u : -1);
    return {mult, arrow};
}

bool matches(const Figure& f, const AffineDiagram& d) {
    const int n = static_cast<int>(f.marks.size());
    if (n != static_cast<int>(d.size())) return false;
    std::vector<std::vector<std::pair<int, int>>> fb(n, std::vector<std::pair<int, int>>(n, {0, -1}));
    for (const auto& b : f.bonds) {
        fb[b.u][b.v] = {b.mult, b.arrow};
        fb[b.v][b.u] = {b.mult, b.arrow};
    }
    std::vector<int> assign(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == n) return true;
        for (int p = 0; p < n; ++p) {
            if (used[p] || d.marks[p] != f.marks[i]) continue;
            if (i == f.circle && d.nodes[p] != 0) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                auto [mult, arrow] = bond_of(d, assign[j], p);
                auto [fm, fa] = fb[j][i];
                int mapped = fa < 0 ? -1 : (fa == i ? p : assign[fa]);
                ok = mult == fm && arrow == mapped;
            }
            if (!ok) continue;
            assign[i] = p;
            used[p] = true;
            if (go(i + 1)) return true;
            used[p] = false;
        }
        return false;
    };
    return go(0);
}

std::string subgroup_label(const RootDatum& d, const CenterSubgroup& s) {
    return s.is_cyclic() ? center_label(d, s) : "full";
}

// Every (type, subgroup) pair in scope: trivial, cyclic, and the non-cyclic
// full center of D_{2n}.
template <class F>
void for_each_pair(bool include_trivial, F&& fn) {
    for (const auto& t : catalog_types(kMaxRank, false)) {
        const RootDatum& d = datum(t);
        if (include_trivial) fn(d, trivial_subgroup(d));
        for (const auto& s : all_subgroups(d))
            if (s.order() > 1) fn(d, s);
    }
}

// ---------------------------------------------------------------------------
// Criteria

Outcome figures() {
    Outcome out;
    auto t0 = Clock::now();
    int checked = 0;
    for (const auto& t : catalog_types(kMaxRank, true)) {
        const RootDatum& d = datum(t);
        ++checked;
        if (!matches(extended_figure(t), d.diagram())) out.fail(t.name());
    }
    double secs = seconds_since(t0);
    if (secs >= kFigureSeconds) out.fail("runtime " + std::to_string(secs) + " s");
    // negative controls: the matcher must see arrow directions and families
    const AffineDiagram f4 = datum(parse_group("F4")).diagram();
    Figure reversed = chain({1, 2, 3, 2, 1}, {"-", "<", "-", "-"});
    reversed.circle = 4;
    if (matches(reversed, f4)) out.fail("matcher accepted a reversed arrow");
    if (matches(extended_figure(make_type(Family::C, 5)), datum(parse_group("B5")).diagram()))
        out.fail("matcher accepted C5 for B5");
    out.detail = std::to_string(checked) + " diagrams, " + std::to_string(secs) + " s";
    return out;
}

Outcome quotient_figures() {
    Outcome out;
    int checked = 0;
    for_each_pair(false, [&](const RootDatum& d, const CenterSubgroup& s) {
        std::string label = subgroup_label(d, s);
        auto fig = quotient_figure(d.type, label, s.order());
        std::string name = d.type.name() + "/" + label;
        if (!fig) {
            out.fail(name + ": no published diagram");
            return;
        }
        ++checked;
        if (!matches(*fig, quotient(d.diagram(), s.automorphisms()))) out.fail(name);
    });
    out.detail = std::to_string(checked) + " quotient diagrams";
    return out;
}

Outcome projected_equals_quotient() {
    Outcome out;
    int checked = 0;
    for_each_pair(true, [&](const RootDatum& d, const CenterSubgroup& s) {
        ++checked;
        DiagramCheck c = check_diagram1(d, s);
        if (!c.ok) out.fail(d.type.name() + "/" + subgroup_label(d, s) + ": " + c.message);
    });
    out.detail = std::to_string(checked) + " (type, subgroup) pairs";
    return out;
}

SimpleType ty(Family f, int r) { return r <= 0 ? make_type(Family::Trivial, 0) : canonical(make_type(f, r)); }

std::string prod(std::vector<SimpleType> ts) {
    std::vector<SimpleType> keep;
    for (auto& t : ts)
        if (t.family != Family::Trivial) keep.push_back(canonical(t));
    return product_name(keep);
}

std::vector<SimpleType> a1s(int count) { return std::vector<SimpleType>(std::max(count, 0), make_type(Family::A, 1)); }

std::vector<SimpleType> plus(std::vector<SimpleType> a, const std::vector<SimpleType>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<int> fill(std::initializer_list<std::pair<int, int>> value_counts) {
    std::vector<int> v;
    for (auto [value, count] : value_counts) v.insert(v.end(), std::max(count, 0), value);
    std::sort(v.begin(), v.end());
    return v;
}

struct FixedRow {
    SimpleType g;
    std::string label;
    std::string lc, inv, res, proj, diag;
    std::vector<int> marks;
};

std::vector<FixedRow> fixed_rows() {
    std::vector<FixedRow> rows;
    auto name = [](SimpleType t) { return t.name(); };
    for (int n = 3; n <= kMaxRank; ++n)
        rows.push_back({make_type(Family::B, n), "c", prod(a1s(1)), name(ty(Family::C, n - 1)), name(ty(Family::B, n - 1)),
                        name(ty(Family::BC, n - 1)), name(ty(Family::BC, n - 1)), fill({{1, 1}, {2, n - 1}})});
    for (int n = 1; 2 * n + 1 <= kMaxRank; ++n)
        rows.push_back({make_type(Family::C, 2 * n + 1), "c", prod(a1s(n + 1)), name(ty(Family::C, n)),
                        name(ty(Family::BC, n)), name(ty(Family::BC, n)), name(ty(Family::C, n)), fill({{2, n + 1}})});
    for (int n = 1; 2 * n <= kMaxRank; ++n)
        rows.push_back({make_type(Family::C, 2 * n), "c", prod(a1s(n)), name(ty(Family::C, n)), name(ty(Family::C, n)),
                        name(ty(Family::BC, n)), name(ty(Family::BC, n)), fill({{1, 1}, {2, n}})});
    for (int n = 4; n <= kMaxRank; ++n)
        rows.push_back({make_type(Family::D, n), "c_SO", prod(a1s(2)), name(ty(Family::C, n - 2)), name(ty(Family::B, n - 2)),
                        name(ty(Family::C, n - 2)), name(ty(Family::C, n - 2)), fill({{2, n - 1}})});
    for (int n = 2; 2 * n <= kMaxRank; ++n)
        rows.push_back({make_type(Family::D, 2 * n), "c_exotic", prod(a1s(n)), name(ty(Family::B, n)), name(ty(Family::C, n)),
                        name(ty(Family::B, n)), name(ty(Family::B, n)), fill({{2, 3}, {4, n - 2}})});
    for (int n = 2; 2 * n + 1 <= kMaxRank; ++n)
        rows.push_back({make_type(Family::D, 2 * n + 1), "c", prod(plus(a1s(n - 1), {make_type(Family::A, 3)})),
                        name(ty(Family::C, n - 1)), name(ty(Family::BC, n - 1)), name(ty(Family::BC, n - 1)),
                        name(ty(Family::C, n - 1)), fill({{4, n}})});
    for (int n = 2; 2 * n <= kMaxRank; ++n)
        rows.push_back({make_type(Family::D, 2 * n), "full", prod(a1s(n + 1)), name(ty(Family::C, n - 1)),
                        name(ty(Family::BC, n - 1)), name(ty(Family::BC, n - 1)), name(ty(Family::BC, n - 1)),
                        fill({{2, 1}, {4, n - 1}})});
    rows.push_back({make_type(Family::E, 6), "c", prod({make_type(Family::A, 2), make_type(Family::A, 2)}), "G2", "G2", "G2",
                    "G2", fill({{3, 2}, {6, 1}})});
    rows.push_back({make_type(Family::E, 7), "c", prod(a1s(3)), "F4", "F4", "F4", "F4", fill({{2, 2}, {4, 2}, {6, 1}})});
    return rows;
}

std::string names(const std::vector<SimpleType>& ts) { return prod(ts); }

Outcome fixed_subspace_rows() {
    Outcome out;
    int checked = 0;
    for (const auto& row : fixed_rows()) {
        const RootDatum& d = datum(row.g);
        bool found = false;
        for (const auto& s : all_subgroups(d)) {
            if (s.order() == 1 || subgroup_label(d, s) != row.label) continue;
            found = true;
            ++checked;
            std::string where = row.g.name() + "/" + row.label;
            auto basis = fixed_subspace(d, s);
            std::string lc = names(classify_root_system(roots_vanishing_on(d, basis), d.gram));
            FixedSystems fs = fixed_systems(d, s);
            ProjectedSystem p = project(d, s);
            std::vector<int> marks = p.diagram.marks;
            std::sort(marks.begin(), marks.end());
            std::array<std::pair<std::string, std::string>, 6> cmp{{{lc, row.lc},
                                                                   {names(fs.invariant), row.inv},
                                                                   {names(fs.restricted), row.res},
                                                                   {names(fs.projection), row.proj},
                                                                   {canonical(p.classified).name(), row.diag},
                                                                   {join_ints(marks), join_ints(row.marks)}}};
            const char* cols[] = {"L_C", "Phi^{w_C}", "Phi^res", "Phi^proj", "Phi(w_C)", "g_abar"};
            for (std::size_t i = 0; i < cmp.size(); ++i)
                if (cmp[i].first != cmp[i].second)
                    out.fail(where + " " + cols[i] + ": got " + cmp[i].first + ", expected " + cmp[i].second);
        }
        if (!found) out.fail(row.g.name() + "/" + row.label + ": subgroup not found");
    }
    out.detail = "9 rows, " + std::to_string(checked) + " instances";
    return out;
}

struct KRow {
    SimpleType g;
    std::string label;  // "trivial" for the untwisted table
    int k;
    std::string l, phi;
    std::vector<int> marks;
};

std::vector<KRow> order_k_rows() {
    std::vector<KRow> rows;
    auto T = [](Family f, int r) { return make_type(f, r); };
    for (int n = 3; n <= kMaxRank; ++n)
        rows.push_back({T(Family::B, n), "trivial", 2, "B3", ty(Family::C, n - 3).name(), fill({{2, n - 2}})});
    for (int n = 4; n <= kMaxRank; ++n)
        rows.push_back({T(Family::D, n), "trivial", 2, "D4", ty(Family::C, n - 4).name(), fill({{2, n - 3}})});
    const SimpleType e6 = T(Family::E, 6), e7 = T(Family::E, 7), e8 = T(Family::E, 8);
    rows.push_back({e6, "trivial", 2, "D4", "A2", fill({{2, 3}})});
    rows.push_back({e6, "trivial", 3, "E6", "trivial", fill({{3, 1}})});
    rows.push_back({e7, "trivial", 2, "D4", "B3", fill({{2, 3}, {4, 1}})});
    rows.push_back({e7, "trivial", 3, "E6", "A1", fill({{3, 2}})});
    rows.push_back({e7, "trivial", 4, "E7", "trivial", fill({{4, 1}})});
    rows.push_back({e8, "trivial", 2, "D4", "F4", fill({{2, 2}, {4, 2}, {6, 1}})});
    rows.push_back({e8, "trivial", 3, "E6", "G2", fill({{3, 2}, {6, 1}})});
    rows.push_back({e8, "trivial", 4, "E7", "A1", fill({{4, 2}})});
    rows.push_back({e8, "trivial", 5, "E8", "trivial", fill({{5, 1}})});
    rows.push_back({e8, "trivial", 6, "E8", "trivial", fill({{6, 1}})});
    rows.push_back({T(Family::F, 4), "trivial", 2, "B3", "A1", fill({{2, 2}})});
    rows.push_back({T(Family::F, 4), "trivial", 3, "F4", "trivial", fill({{3, 1}})});
    rows.push_back({T(Family::G, 2), "trivial", 2, "G2", "trivial", fill({{2, 1}})});
    return rows;
}

std::vector<KRow> twisted_rows() {
    std::vector<KRow> rows;
    auto T = [](Family f, int r) { return make_type(f, r); };
    for (int n = 3; n <= kMaxRank; ++n)
        rows.push_back({T(Family::B, n), "c", 2, "C2", ty(Family::C, n - 2).name(), fill({{2, n - 1}})});
    for (int n = 1; 2 * n <= kMaxRank; ++n)
        rows.push_back({T(Family::C, 2 * n), "c", 2, prod(plus(a1s(n - 1), {T(Family::C, 2)})), ty(Family::C, n - 1).name(),
                        fill({{2, n}})});
    for (int n = 3; 2 * n <= kMaxRank; ++n)
        rows.push_back({T(Family::D, 2 * n), "c_exotic", 4, prod(plus(a1s(n - 3), {T(Family::D, 6)})),
                        ty(Family::C, n - 3).name(), fill({{4, n - 2}})});
    for (int n = 2; 2 * n <= kMaxRank; ++n)
        rows.push_back({T(Family::D, 2 * n), "full", 4, prod(plus(a1s(n - 2), {T(Family::D, 4)})),
                        ty(Family::C, n - 2).name(), fill({{4, n - 1}})});
    const SimpleType e6 = T(Family::E, 6), e7 = T(Family::E, 7);
    rows.push_back({e6, "c", 2, "E6", "trivial", fill({{6, 1}})});
    rows.push_back({e6, "c", 6, "E6", "trivial", fill({{6, 1}})});
    rows.push_back({e7, "c", 4, "D6", "A1", fill({{4, 2}})});
    rows.push_back({e7, "c", 3, "E7", "trivial", fill({{6, 1}})});
    rows.push_back({e7, "c", 6, "E7", "trivial", fill({{6, 1}})});
    return rows;
}

std::string key(const SimpleType& g, const std::string& label, int k) {
    return g.name() + "/" + label + " k=" + std::to_string(k);
}

Outcome order_k_tables() {
    Outcome out;
    std::map<std::string, KRow> expected;
    for (const auto& r : order_k_rows()) expected[key(r.g, r.label, r.k)] = r;
    for (const auto& r : twisted_rows()) expected[key(r.g, r.label, r.k)] = r;

    std::set<std::string> seen;
    int instances = 0;
    for_each_pair(true, [&](const RootDatum& d, const CenterSubgroup& s) {
        std::string label = s.order() == 1 ? "trivial" : subgroup_label(d, s);
        MarkedDiagram m = make_marked(quotient(d.diagram(), s.automorphisms()));
        for (int k : admissible_orders(m)) {
            if (k == 1 || m.n0 % k == 0) continue;
            std::string id = key(d.type, label, k);
            auto it = expected.find(id);
            if (it == expected.end()) {
                out.fail(id + ": computed but not in the tables");
                continue;
            }
            seen.insert(id);
            ++instances;
            SamediagsReport rep = check_samediags(d, s, k);
            std::vector<int> surv = rep.surviving_n;
            std::sort(surv.begin(), surv.end());
            const KRow& e = it->second;
            if (!rep.ok) out.fail(id + ": " + rep.message);
            if (prod(rep.centralizer) != e.l) out.fail(id + " L: got " + prod(rep.centralizer) + ", expected " + e.l);
            if (canonical(rep.derived_type).name() != e.phi)
                out.fail(id + " Phi: got " + rep.derived_type.name() + ", expected " + e.phi);
            if (surv != e.marks) out.fail(id + " marks: got " + join_ints(surv) + ", expected " + join_ints(e.marks));
        }
    });
    for (const auto& [id, row] : expected)
        if (!seen.count(id)) out.fail(id + ": table row not produced");
    out.detail = "15 + 9 rows, " + std::to_string(instances) + " instances";
    return out;
}

Outcome numerology() {
    Outcome out;
    auto t0 = Clock::now();
    int diagrams = 0, orders = 0;
    auto run = [&](const std::string& name, const MarkedDiagram& m) {
        ++diagrams;
        try {
            NumerologyCounts c = counts(m);
            int total = 0, g = std::accumulate(m.n.begin(), m.n.end(), 0);
            for (int x = 1; x <= *std::max_element(m.n.begin(), m.n.end()); ++x) {
                int dx = 0;
                for (int v : m.n) dx += (v % x == 0);
                total += euler_phi(x) * dx;
            }
            if (total != g || c.g != g) out.fail(name + ": sum phi(x) d_x = " + std::to_string(total) + " != g");
        } catch (const std::exception& e) {
            out.fail(name + ": " + e.what());
        }
        for (int k : admissible_orders(m)) {
            ++orders;
            if (!check_assumption(m, k)) out.fail(name + " k=" + std::to_string(k) + ": no decomposition");
        }
        if (!clocked(m).valid()) out.fail(name + ": clock partition invalid");
    };
    for (const auto& t : catalog_types(kMaxRank, true)) run(t.name(), make_marked(datum(t).diagram()));
    for_each_pair(false, [&](const RootDatum& d, const CenterSubgroup& s) {
        run(d.type.name() + "/" + subgroup_label(d, s), make_marked(quotient(d.diagram(), s.automorphisms())));
    });
    double secs = seconds_since(t0);
    if (secs >= kNumerologySeconds) out.fail("runtime " + std::to_string(secs) + " s");
    out.detail = std::to_string(diagrams) + " marked diagrams, " + std::to_string(orders) + " orders, " +
                 std::to_string(secs) + " s";
    return out;
}

Outcome moduli() {
    Outcome out;
    int pairs = 0;
    for_each_pair(true, [&](const RootDatum& d, const CenterSubgroup& s) {
        ++pairs;
        std::string where = d.type.name() + "/" + (s.order() == 1 ? std::string("trivial") : subgroup_label(d, s));
        if (!clock_report(d, s).valid) out.fail(where + ": clock report invalid");
        if (!s.is_cyclic()) {
            auto cs = noncyclic_components(d.rank() / 2);
            std::multiset<Rat> vals;
            int sum = 0;
            for (const auto& c : cs) {
                vals.insert(c.cs);
                sum += c.d_X;
            }
            if (vals != std::multiset<Rat>{Rat(0), Rat(1, 2), Rat(1, 4), Rat(3, 4)}) out.fail(where + ": CS values");
            if (sum != dual_coxeter(d.type)) out.fail(where + ": sum d_X != g");
            return;
        }
        MarkedDiagram m = make_marked(quotient(d.diagram(), s.automorphisms()));
        auto cs = components(d, s);
        int sum = 0;
        for (const auto& c : cs) sum += c.d_X;
        if (sum != std::accumulate(m.n.begin(), m.n.end(), 0) || sum != dual_coxeter(d.type))
            out.fail(where + ": sum d_X = " + std::to_string(sum));
        const std::vector<int> orders = admissible_orders(m);
        std::set<int> ks(orders.begin(), orders.end());
        std::set<int> got;
        for (const auto& c : cs) got.insert(c.order);
        if (got != ks) out.fail(where + ": component orders differ from admissible orders");
        for (int k : ks) {
            std::set<Rat> expect, have;
            for (int l = 0; l < k; ++l)
                if (std::gcd(l, k) == 1) expect.insert(Rat(l, k));
            int dx = 0;
            for (int v : m.n) dx += (v % k == 0);
            int count = 0;
            for (const auto& c : cs)
                if (c.order == k) {
                    ++count;
                    have.insert(c.cs);
                    if (c.d_X != dx) out.fail(where + ": d_X at k=" + std::to_string(k));
                }
            if (count != euler_phi(k)) out.fail(where + ": " + std::to_string(count) + " components of order " + std::to_string(k));
            if (have != expect) out.fail(where + ": CS values at k=" + std::to_string(k));
        }
    });
    // spot values
    const RootDatum& e8 = datum(parse_group("E8"));
    auto e8c = components(e8, trivial_subgroup(e8));
    int e8sum = 0;
    for (const auto& c : e8c) e8sum += c.d_X;
    if (e8c.size() != 12 || e8sum != 30) out.fail("E8 spot value");
    const RootDatum& e7 = datum(parse_group("E7"));
    auto e7c = components(e7, center_group(e7));
    int e7sum = 0;
    for (const auto& c : e7c) e7sum += c.d_X;
    if (e7c.size() != 8 || e7sum != 18) out.fail("E7 spot value");
    auto spin8 = noncyclic_components(2);
    std::multiset<Rat> v8;
    for (const auto& c : spin8) v8.insert(c.cs);
    if (spin8.size() != 4 || v8 != std::multiset<Rat>{Rat(0), Rat(1, 2), Rat(1, 4), Rat(3, 4)}) out.fail("Spin(8) spot value");
    out.detail = std::to_string(pairs) + " (type, subgroup) pairs; E8 12/30, E7 8/18, Spin(8) 4";
    return out;
}

Outcome rank_zero() {
    Outcome out;
    auto render = [](const std::vector<RankZeroEntry>& es) {
        std::set<std::string> s;
        for (const auto& e : es) s.insert(e.type.name() + (e.center == "trivial" ? "" : "/" + e.center));
        return s;
    };
    const std::map<int, std::set<std::string>> plain = {
        {1, {"trivial"}}, {2, {"D4", "B3", "G2"}}, {3, {"E6", "F4"}}, {4, {"E7"}}, {5, {"E8"}}, {6, {"E8"}}};
    for (int k = 1; k <= 13; ++k) {
        std::set<std::string> expect = plain.count(k) ? plain.at(k) : std::set<std::string>{};
        if (render(rank_zero_list(k, false, kMaxRank)) != expect) out.fail("plain k=" + std::to_string(k));

        std::set<std::string> central;
        for (int n = 1; n <= kMaxRank; ++n)
            if ((n + 1) % k == 0) central.insert("A" + std::to_string(n) + "/c");
        if (k == 2) central.insert("C2/c");
        if (k == 4) central.insert("D6/c_exotic");
        if (k == 2 || k == 6) central.insert("E6/c");
        if (k == 3 || k == 6) central.insert("E7/c");
        if (render(rank_zero_list(k, true, kMaxRank)) != central) out.fail("central k=" + std::to_string(k));
    }
    out.detail = "k = 1..13, both lists";
    return out;
}

Outcome nu_oracle() {
    Outcome out;
    int elements = 0;
    for (const auto& t : catalog_types(kMaxRank, false)) {
        const RootDatum& d = datum(t);
        CenterSubgroup full = center_group(d);
        if (Int(full.order()) != center_order(d)) out.fail(t.name() + ": center order");
        std::set<std::vector<int>> perms;
        for (const auto& c : full.elements) {
            ++elements;
            int n = nu_candidates(d, c.node);
            if (n != 1) out.fail(t.name() + " node " + std::to_string(c.node) + ": " + std::to_string(n) + " candidates");
            perms.insert(c.w.perm);
        }
        if (perms.size() != full.elements.size()) out.fail(t.name() + ": nu not injective");
        for (const auto& a : full.elements)
            for (const auto& b : full.elements) {
                int p = center_product(d, a.node, b.node);
                if (nu(d, p).w != a.w.compose(b.w))
                    out.fail(t.name() + ": nu(" + std::to_string(a.node) + ") nu(" + std::to_string(b.node) + ")");
            }
    }
    out.detail = std::to_string(elements) + " center elements";
    return out;
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    status = pclose(p);
    return out;
}

Outcome determinism(const std::string& cli) {
    Outcome out;
    if (cli.empty()) {
        out.fail("no CLI path given");
        return out;
    }
    std::string cmd = "\"" + cli + "\" check-all --max-rank " + std::to_string(kMaxRank);
    int s1 = 0, s2 = 0;
    std::string a = capture(cmd, s1);
    std::string b = capture(cmd, s2);
    if (s1 != 0 || s2 != 0) out.fail("check-all exit status " + std::to_string(s1) + "/" + std::to_string(s2));
    if (a.empty()) out.fail("empty output");
    if (a != b) out.fail("outputs differ");
    out.detail = std::to_string(a.size()) + " bytes, identical";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"extended coroot diagrams", figures},
        {"quotient diagrams", quotient_figures},
        {"projected coroots equal quotient", projected_equals_quotient},
        {"fixed-subspace root systems", fixed_subspace_rows},
        {"order-k root systems", order_k_tables},
        {"numerology", numerology},
        {"moduli components", moduli},
        {"rank-zero lists", rank_zero},
        {"nu uniqueness and homomorphism", nu_oracle},
        {"determinism", [&] { return determinism(cli); }},
    };
    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        passed += o.ok;
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].title;
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << "\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
        std::cout.flush();
    }
    std::cout << "acceptance: " << passed << "/" << criteria.size() << " criteria passed\n";
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
