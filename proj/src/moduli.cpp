#include "tricomm/moduli.hpp"

#include "tricomm/derived.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tricomm {

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::Point: return "point";
        case Shape::SbarCubed: return "(Sbar x Sbar x Sbar)/W";
        case Shape::SbarSquaredS: return "(Sbar x Sbar x S)/W";
        case Shape::QuotientF: return "((S x S x S)/F)/W";
    }
    return "?";
}

bool RankZeroEntry::operator<(const RankZeroEntry& o) const {
    if (type != o.type) return type < o.type;
    return center < o.center;
}

std::string center_label(const RootDatum& d, const CenterSubgroup& sub) {
    if (sub.order() == 1) return "trivial";
    if (!sub.is_cyclic()) return "full";
    if (Int(sub.order()) == center_order(d)) return "c";
    auto nodes = sub.nodes();
    const int n = d.rank();
    if (d.type.family == Family::D && sub.order() == 2) {
        if (nodes[1] == 1) return "c_SO";
        if (n % 2 == 0 && (nodes[1] == n || nodes[1] == n - 1)) return "c_exotic";
    }
    return "node " + std::to_string(nodes[1]);
}

namespace {

Shape shape_for(const RootDatum& d, const CenterSubgroup& sub, const std::vector<SimpleType>& centralizer,
                int torus_rank) {
    if (torus_rank == 0) return Shape::Point;
    if (sub.order() == 1) return Shape::SbarCubed;
    std::vector<SimpleType> l0;
    for (const auto& t : centralizer)
        if (t.family != Family::A) l0.push_back(t);
    if (l0.empty()) return Shape::SbarSquaredS;
    const auto& t = d.type;
    const SimpleType c2 = make_type(Family::C, 2), d6 = make_type(Family::D, 6);
    if (l0.size() == 1) {
        if (t.family == Family::B && l0[0] == c2) return Shape::SbarCubed;
        if (t.family == Family::C && t.rank % 2 == 0 && l0[0] == c2) return Shape::SbarSquaredS;
        if (t.family == Family::D && t.rank % 2 == 0 && l0[0] == d6) return Shape::SbarSquaredS;
        if (t == make_type(Family::E, 7) && l0[0] == d6) return Shape::SbarCubed;
    }
    throw std::logic_error("components: centralizer " + product_name(centralizer) + " of " + t.name() +
                           " has a non-A factor outside the listed cases");
}

std::vector<int> units(int k) {
    if (k == 1) return {0};
    std::vector<int> out;
    for (int l = 1; l < k; ++l)
        if (std::gcd(l, k) == 1) out.push_back(l);
    return out;
}

}  // namespace

std::vector<ComponentRecord> components(const RootDatum& d, const CenterSubgroup& sub) {
    if (!sub.is_cyclic())
        throw std::invalid_argument("components: center subgroup is not cyclic; use noncyclic_components");
    if (d.type.family == Family::BC) throw std::invalid_argument("components: BC is not the type of a group");
    MarkedDiagram m = make_marked(quotient(d.diagram(), sub.automorphisms()));
    std::vector<ComponentRecord> out;
    int total = 0;
    for (int k : admissible_orders(m)) {
        SamediagsReport rep = check_samediags(d, sub, k);
        if (!rep.ok) throw std::logic_error("components: " + rep.message);
        const int dx = static_cast<int>(survivors(m, k).size());
        if (rep.torus_rank != dx - 1) throw std::logic_error("components: torus rank differs from d_X - 1");
        Shape shape = shape_for(d, sub, rep.centralizer, rep.torus_rank);
        for (int l : units(k)) {
            ComponentRecord c;
            c.order = k;
            c.label = l;
            c.d_X = dx;
            c.torus_rank = dx - 1;
            c.dim = 3 * c.torus_rank;
            c.shape = shape;
            c.cs = Rat(l, k);
            c.centralizer = rep.centralizer;
            out.push_back(c);
            total += dx;
        }
    }
    if (total != dual_coxeter(d.type)) throw std::logic_error("components: sum of d_X differs from g");
    return out;
}

long long order_of_F(int n) {
    if (n < 2) throw std::invalid_argument("order_of_F: n must be at least 2");
    // an element is (mu_1..mu_{n-1}, mu_+, mu_-) with mu_1...mu_{n-1} = mu_+ = mu_-;
    // signs are bits (1 means -1)
    struct Elt {
        unsigned mu;  // bits 0..n-2
        int plus, minus;
    };
    std::vector<Elt> fc;
    for (unsigned mu = 0; mu < (1u << (n - 1)); ++mu)
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                int prod = __builtin_popcount(mu) % 2;
                if (prod == p && p == q) fc.push_back({mu, p, q});
            }
    long long count = 0;
    for (const auto& a : fc)
        for (const auto& b : fc) {
            if (a.mu != b.mu) continue;
            for (const auto& c : fc)
                if (b.minus == c.minus && a.plus == c.plus) ++count;
        }
    return count;
}

long long order_of_F_prime(int n) {
    if (n < 2) throw std::invalid_argument("order_of_F_prime: n must be at least 2");
    // (mu_0, mu_1..mu_{n-2}) with mu_0 in a Klein four-group (0..3) equal to the
    // image of the product of the signs under the embedding -1 -> element 1
    struct Elt {
        unsigned mu;
        int mu0;
    };
    std::vector<Elt> fi;
    for (unsigned mu = 0; mu < (1u << (n - 2)); ++mu)
        for (int m0 = 0; m0 < 4; ++m0) {
            int image = (__builtin_popcount(mu) % 2) ? 1 : 0;
            if (m0 == image) fi.push_back({mu, m0});
        }
    long long count = 0;
    for (const auto& a : fi)
        for (const auto& b : fi) {
            if (a.mu != b.mu) continue;
            count += static_cast<long long>(fi.size());
        }
    return count;
}

std::vector<ComponentRecord> noncyclic_components(int n) {
    if (n < 2) throw std::invalid_argument("noncyclic_components: need n >= 2 (Spin(4n) = D_{2n})");
    const RootDatum& d = datum(make_type(Family::D, 2 * n));
    CenterSubgroup full = center_group(d);
    if (full.is_cyclic()) throw std::logic_error("noncyclic_components: center of D_{2n} is cyclic");
    MarkedDiagram m = make_marked(quotient(d.diagram(), full.automorphisms()));
    struct Row {
        int k, label;
        int rank;
        long long fo;
    };
    const std::vector<Row> rows = {{1, 0, n - 1, order_of_F(n)},
                                   {2, 1, n - 1, order_of_F(n)},
                                   {4, 1, n - 2, order_of_F_prime(n)},
                                   {4, 3, n - 2, order_of_F_prime(n)}};
    std::vector<ComponentRecord> out;
    int total = 0;
    for (const auto& r : rows) {
        const int dx = static_cast<int>(survivors(m, r.k).size());
        if (dx != r.rank + 1) throw std::logic_error("noncyclic_components: d_X disagrees with the quotient diagram");
        SamediagsReport rep = check_samediags(d, full, r.k);
        if (!rep.ok || rep.torus_rank != r.rank) throw std::logic_error("noncyclic_components: " + rep.message);
        ComponentRecord c;
        c.order = r.k;
        c.label = r.label;
        c.d_X = dx;
        c.torus_rank = r.rank;
        c.dim = 3 * r.rank;
        c.cs = Rat(r.label, r.k);
        c.centralizer = rep.centralizer;
        c.shape = r.rank == 0 ? Shape::Point : Shape::QuotientF;
        c.finite_group_order = r.fo;
        out.push_back(c);
        total += dx;
    }
    if (total != 4 * n - 2 || total != dual_coxeter(d.type))
        throw std::logic_error("noncyclic_components: sum of d_X differs from g");
    return out;
}

std::vector<RankZeroEntry> rank_zero_list(int k, bool central, int max_rank) {
    if (k < 1) throw std::invalid_argument("rank_zero_list: k must be positive");
    std::set<RankZeroEntry> out;
    auto exactly_one = [&](const std::vector<int>& marks, bool require_equal) {
        int hits = 0, value = 0;
        for (int x : marks)
            if (x % k == 0) {
                ++hits;
                value = x;
            }
        if (hits != 1) return false;
        if (require_equal && value != k) throw std::logic_error("rank_zero_list: the divisible integer differs from k");
        return true;
    };
    if (!central && exactly_one({1}, true)) out.insert({make_type(Family::Trivial, 0), "trivial"});
    for (const auto& t : catalog_types(max_rank, false)) {
        const RootDatum& d = datum(t);
        if (!central) {
            if (exactly_one(d.g, true)) out.insert({t, "trivial"});
            continue;
        }
        for (const auto& sub : all_subgroups(d)) {
            if (sub.order() == 1 || !sub.is_cyclic()) continue;
            AffineDiagram q = quotient(d.diagram(), sub.automorphisms());
            if (exactly_one(q.marks, false)) out.insert({t, center_label(d, sub)});
        }
    }
    return {out.begin(), out.end()};
}

ClockReport clock_report(const RootDatum& d, const CenterSubgroup& sub) {
    ClockReport rep;
    rep.g = dual_coxeter(d.type);
    if (sub.is_cyclic()) {
        rep.components = components(d, sub);
    } else {
        if (d.type.family != Family::D || d.rank() % 2 != 0)
            throw std::invalid_argument("clock_report: non-cyclic subgroup outside D_{2n}");
        rep.components = noncyclic_components(d.rank() / 2);
    }
    const int mod = 2 * rep.g;
    std::vector<int> hits(static_cast<std::size_t>(mod), 0);
    for (const auto& c : rep.components) {
        Rat center = Rat(mod) * c.cs;
        if (!is_integer(center)) throw std::logic_error("clock_report: 2g * CS is not an integer");
        const int ctr = static_cast<int>(to_ll(center));
        std::vector<int> J;
        for (int j = 0; j < c.d_X; ++j) {
            int v = ((ctr - c.d_X + 1 + 2 * j) % mod + mod) % mod;
            J.push_back(v);
            hits[static_cast<std::size_t>(v)]++;
        }
        std::sort(J.begin(), J.end());
        rep.J.push_back(J);
    }
    rep.parity = hits[0] ? 0 : 1;
    rep.valid = true;
    for (int v = 0; v < mod; ++v) {
        int want = (v % 2 == rep.parity) ? 1 : 0;
        if (hits[static_cast<std::size_t>(v)] != want) rep.valid = false;
    }
    // the same sets come out of the numerology of the quotient marked diagram
    MarkedDiagram m = make_marked(quotient(d.diagram(), sub.automorphisms()));
    ClockPartition p = clocked(m);
    std::multiset<std::vector<int>> a(rep.J.begin(), rep.J.end()), b;
    for (const auto& s : p.sets) b.insert(s.residues);
    if (a != b) throw std::logic_error("clock_report: component J-sets differ from the numerology partition");
    return rep;
}

}  // namespace tricomm
