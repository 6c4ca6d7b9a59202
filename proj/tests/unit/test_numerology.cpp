#include "doctest.h"

#include "tricomm/center.hpp"
#include "tricomm/derived.hpp"
#include "tricomm/numerology.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace tricomm;

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> values_at(const MarkedDiagram& m, const std::vector<int>& positions) {
    std::vector<int> out;
    for (int p : positions) out.push_back(m.n[p]);
    return sorted(out);
}

MarkedDiagram catalog(const char* name) { return make_marked(datum(parse_group(name)).diagram()); }

MarkedDiagram quotient_of(const char* name, const char* center) {
    const RootDatum& d = datum(parse_group(name));
    return make_marked(quotient(d.diagram(), parse_center(d, center).automorphisms()));
}

int node_with_mark(const MarkedDiagram& m, int mark, int degree) {
    for (std::size_t v = 0; v < m.n.size(); ++v) {
        int deg = 0;
        for (std::size_t u = 0; u < m.n.size(); ++u) deg += m.diagram.bonded(u, v);
        if (m.n[v] == mark && deg == degree) return static_cast<int>(v);
    }
    return -1;
}

}  // namespace

TEST_CASE("I_set") {
    MarkedDiagram e8 = catalog("E8");
    CHECK(values_at(e8, I_set(e8, 2)) == std::vector<int>{1, 3, 3, 5});
    CHECK(I_set(e8, 1).empty());
    CHECK_THROWS(I_set(e8, 7));

    MarkedDiagram e7q = quotient_of("E7", "full");
    CHECK(e7q.n0 == 2);
    CHECK(values_at(e7q, I_set(e7q, 4)) == std::vector<int>{2, 2, 6});
}

TEST_CASE("assumption witnesses") {
    MarkedDiagram e8 = catalog("E8");
    auto five = check_assumption(e8, 5);
    REQUIRE(five.has_value());
    CHECK(five->orders == std::vector<int>{5, 5});

    auto two = check_assumption(e8, 2);
    REQUIRE(two.has_value());
    CHECK(two->orders == std::vector<int>(4, 2));

    MarkedDiagram e6 = catalog("E6");
    auto three = check_assumption(e6, 3);
    REQUIRE(three.has_value());
    CHECK(three->orders == std::vector<int>{3, 3, 3});

    // each witness covers the I-set exactly once with the right residues
    for (const auto& dec : {*five, *two, *three}) {
        const MarkedDiagram& m = dec.k == 3 ? e6 : e8;
        std::multiset<int> used;
        for (std::size_t i = 0; i < dec.orders.size(); ++i)
            for (std::size_t j = 0; j < dec.members[i].size(); ++j) {
                int pos = dec.members[i][j];
                used.insert(pos);
                int residue = static_cast<int>((j + 1) * (dec.k / dec.orders[i])) % dec.k;
                CHECK(m.n[pos] % dec.k == residue);
            }
        auto is = I_set(m, dec.k);
        CHECK(used == std::multiset<int>(is.begin(), is.end()));
    }
}

TEST_CASE("counts of E8 against a direct tally") {
    MarkedDiagram e8 = catalog("E8");
    NumerologyCounts c = counts(e8);
    std::map<int, int> i, d;
    for (int v : e8.n) ++i[v];
    for (int x = 1; x <= 6; ++x)
        for (int v : e8.n)
            if (v % x == 0) ++d[x];
    CHECK(c.N == 6);
    CHECK(c.g == 30);
    CHECK(c.i == i);
    CHECK(c.d == d);
    CHECK(c.i == std::map<int, int>{{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}});
    CHECK(c.d == std::map<int, int>{{1, 9}, {2, 5}, {3, 3}, {4, 2}, {5, 1}, {6, 1}});
    int total = 0;
    for (auto [x, dx] : c.d) total += euler_phi(x) * dx;
    CHECK(total == c.g);
}

TEST_CASE("counts of A_n and of a quotient") {
    for (int n = 1; n <= 6; ++n) {
        NumerologyCounts c = counts(make_marked(datum(make_type(Family::A, n)).diagram()));
        CHECK(c.N == 1);
        CHECK(c.g == n + 1);
        CHECK(c.d.at(1) == n + 1);
    }
    MarkedDiagram e7q = quotient_of("E7", "full");
    NumerologyCounts c = counts(e7q);
    CHECK(c.g == 18);
    CHECK(c.n0 == 2);
    std::vector<int> reduced;
    for (int v : e7q.n) reduced.push_back(v / e7q.n0);
    CHECK(*std::max_element(reduced.begin(), reduced.end()) == 3);
}

TEST_CASE("euler phi") {
    const int expect[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
    for (int n = 1; n <= 10; ++n) CHECK(euler_phi(n) == expect[n - 1]);
}

TEST_CASE("clock partition of G2") {
    ClockPartition p = clocked(catalog("G2"));
    CHECK(p.g == 4);
    REQUIRE(p.sets.size() == 2);
    CHECK(p.sets[0].x == 1);
    CHECK(p.sets[0].residues == std::vector<int>{0, 2, 6});
    CHECK(p.sets[1].x == 2);
    CHECK(p.sets[1].residues == std::vector<int>{4});
    CHECK(p.valid());
    CHECK(p.parity == 0);
}

TEST_CASE("clock partition of A1") {
    ClockPartition p = clocked(catalog("A1"));
    CHECK(p.g == 2);
    REQUIRE(p.sets.size() == 1);
    CHECK(p.sets[0].residues == std::vector<int>{1, 3});
    CHECK(p.valid());
    CHECK(p.parity == 1);
}

TEST_CASE("node types") {
    MarkedDiagram e8 = catalog("E8");
    // k = 3: the mark-3 node on the long arm touches two A_2 components
    int arm3 = node_with_mark(e8, 3, 2);
    REQUIRE(arm3 >= 0);
    CHECK(node_type(e8, 3, arm3) == NodeType::Three);
    // the mark-3 leaf only touches survivors
    CHECK(node_type(e8, 3, node_with_mark(e8, 3, 1)) == NodeType::One);
    // k = 2: the branch node touches two A_1 components of the same length
    int six = node_with_mark(e8, 6, 3);
    REQUIRE(six >= 0);
    CHECK(node_type(e8, 2, six) == NodeType::TwoI);
    int five = node_with_mark(e8, 5, 2);
    CHECK(node_type(e8, 5, five) == NodeType::Infinity);
    CHECK(node_type_divisor(NodeType::FourII) == 4);
    CHECK(node_type_divisor(NodeType::TwoI) == 2);

    // k = 4: the two mark-4 nodes touch A_3 + A_3 and A_3 + A_1
    std::vector<NodeType> fours;
    DerivedDiagram e8k4 = derived(e8, 4);
    for (std::size_t i = 0; i < e8k4.survivors.size(); ++i)
        if (e8k4.surviving_n[i] == 4) fours.push_back(e8k4.node_types[i]);
    std::sort(fours.begin(), fours.end());
    CHECK(fours == std::vector<NodeType>{NodeType::FourII, NodeType::FourIII});

    // F_4, k = 2: a mark-2 node strictly longer than its two A_1 neighbours
    MarkedDiagram f4 = catalog("F4");
    DerivedDiagram d = derived(f4, 2);
    int four_i = 0;
    for (std::size_t i = 0; i < d.survivors.size(); ++i) {
        four_i += d.node_types[i] == NodeType::FourI;
        CHECK(d.ell_k_sq[i] * node_type_divisor(d.node_types[i]) == f4.diagram.sq_lengths[d.survivors[i]]);
    }
    CHECK(four_i == 1);
    CHECK(d.classified == make_type(Family::A, 1));
}

TEST_CASE("derived diagrams") {
    MarkedDiagram e8 = catalog("E8");
    DerivedDiagram d2 = derived(e8, 2);
    CHECK(d2.classified == make_type(Family::F, 4));
    CHECK(sorted(d2.surviving_n) == std::vector<int>{2, 2, 4, 4, 6});
    CHECK(is_affine_type(d2.diagram.cartan).has_value());

    CHECK(derived(catalog("E7"), 3).classified == make_type(Family::A, 1));

    DerivedDiagram d1 = derived(e8, 1);
    CHECK(d1.diagram.cartan == e8.diagram.cartan);
    CHECK(d1.classified == make_type(Family::E, 8));
}

TEST_CASE("derived diagram against the projection oracle") {
    const RootDatum& e8 = datum(parse_group("E8"));
    SamediagsReport r = check_samediags(e8, trivial_subgroup(e8), 3);
    CHECK(r.ok);
    CHECK(r.derived_type == make_type(Family::G, 2));
    CHECK(r.projected_type == make_type(Family::G, 2));

    const RootDatum& e7 = datum(parse_group("E7"));
    SamediagsReport q = check_samediags(e7, center_group(e7), 4);
    CHECK(q.ok);
    CHECK(q.derived_type == make_type(Family::A, 1));
    CHECK(q.projected_type == make_type(Family::A, 1));
    CHECK(sorted(q.surviving_n) == std::vector<int>{4, 4});
    CHECK(product_name(q.centralizer) == "D6");

    SamediagsReport id = check_samediags(e7, trivial_subgroup(e7), 1);
    CHECK(id.ok);
    CHECK(id.derived_type == make_type(Family::E, 7));
}
