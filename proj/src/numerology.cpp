#include "tricomm/numerology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tricomm {

MarkedDiagram make_marked(const AffineDiagram& d) {
    MarkedDiagram m;
    m.diagram = d;
    m.n = d.marks;
    if (m.n.empty()) throw std::invalid_argument("make_marked: empty diagram");
    m.n0 = 0;
    for (int x : m.n) {
        if (x <= 0) throw std::invalid_argument("make_marked: marks must be positive");
        m.n0 = std::gcd(m.n0, x);
    }
    if (d.size() > 1) {
        auto g = is_affine_type(d.cartan);
        if (!g) throw std::invalid_argument("make_marked: diagram is not of affine type");
        for (std::size_t v = 0; v < d.size(); ++v)
            if (m.n[v] != m.n0 * (*g)[v])
                throw std::invalid_argument("make_marked: marks are not a multiple of the affine kernel vector");
    }
    return m;
}

std::vector<int> survivors(const MarkedDiagram& m, int k) {
    if (k < 1) throw std::invalid_argument("order k must be positive");
    std::vector<int> out;
    for (std::size_t v = 0; v < m.n.size(); ++v)
        if (m.n[v] % k == 0) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<int> I_set(const MarkedDiagram& m, int k) {
    if (survivors(m, k).empty())
        throw std::invalid_argument("k = " + std::to_string(k) + " divides none of the node integers");
    std::vector<int> out;
    for (std::size_t v = 0; v < m.n.size(); ++v)
        if (m.n[v] % k != 0) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<int> admissible_orders(const MarkedDiagram& m) {
    std::set<int> ks;
    for (int x : m.n)
        for (int k = 1; k <= x; ++k)
            if (x % k == 0) ks.insert(k);
    return {ks.begin(), ks.end()};
}

namespace {

struct CoverSearch {
    int k;
    std::vector<int> divisors;
    std::optional<Decomposition> best;

    void run(std::map<int, std::vector<int>>& remaining, Decomposition& cur) {
        if (remaining.empty()) {
            Decomposition cand = cur;
            // sort subgroups by order, keeping members attached
            std::vector<std::size_t> idx(cand.orders.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) { return cand.orders[a] < cand.orders[b]; });
            Decomposition sorted;
            sorted.k = k;
            for (auto i : idx) {
                sorted.orders.push_back(cand.orders[i]);
                sorted.members.push_back(cand.members[i]);
            }
            if (!best || sorted.orders < best->orders) best = sorted;
            return;
        }
        int r = remaining.begin()->first;
        int ord = k / std::gcd(r, k);
        for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
            int d = *it;
            if (d < 2 || d % ord != 0) continue;
            int step = k / d;
            bool ok = true;
            for (int j = 1; j < d && ok; ++j) ok = remaining.count(j * step) > 0;
            if (!ok) continue;
            std::vector<int> members;
            for (int j = 1; j < d; ++j) {
                auto& v = remaining[j * step];
                members.push_back(v.back());
                v.pop_back();
                if (v.empty()) remaining.erase(j * step);
            }
            cur.orders.push_back(d);
            cur.members.push_back(members);
            run(remaining, cur);
            cur.orders.pop_back();
            cur.members.pop_back();
            for (int j = d - 1; j >= 1; --j) remaining[j * step].push_back(members[static_cast<std::size_t>(j - 1)]);
        }
    }
};

}  // namespace

std::optional<Decomposition> check_assumption(const MarkedDiagram& m, int k) {
    auto I = I_set(m, k);
    CoverSearch s;
    s.k = k;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) s.divisors.push_back(d);
    std::map<int, std::vector<int>> remaining;
    // positions are pushed in descending order so that pop_back takes the smallest
    for (auto it = I.rbegin(); it != I.rend(); ++it) remaining[m.n[static_cast<std::size_t>(*it)] % k].push_back(*it);
    Decomposition cur;
    cur.k = k;
    s.run(remaining, cur);
    if (!s.best && I.empty()) {
        Decomposition empty;
        empty.k = k;
        return empty;
    }
    return s.best;
}

int euler_phi(int n) {
    int r = 0;
    for (int i = 1; i <= n; ++i)
        if (std::gcd(i, n) == 1) ++r;
    return r;
}

int NumerologyCounts::i_mod(int x, int k) const {
    int s = 0;
    for (const auto& [v, c] : i)
        if (((v - x) % k + k) % k == 0) s += c;
    return s;
}

NumerologyCounts raw_counts(const std::vector<int>& n) {
    NumerologyCounts c;
    c.n0 = 0;
    for (int x : n) {
        c.i[x]++;
        c.g += x;
        c.N = std::max(c.N, x);
        c.n0 = std::gcd(c.n0, x);
    }
    for (int x = 1; x <= c.N; ++x) {
        int dx = 0;
        for (int v : n)
            if (v % x == 0) ++dx;
        if (dx) c.d[x] = dx;
    }
    return c;
}

namespace {

void fail(const std::string& what, const std::vector<int>& n) {
    std::ostringstream os;
    os << what << " fails for node integers (";
    for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
    os << ")";
    throw std::logic_error(os.str());
}

int i_of(const NumerologyCounts& c, int x) {
    auto it = c.i.find(x);
    return it == c.i.end() ? 0 : it->second;
}

}  // namespace

NumerologyCounts counts(const MarkedDiagram& m) {
    NumerologyCounts c = raw_counts(m.n);
    if (c.n0 != m.n0) fail("n0 = gcd", m.n);

    int total = 0;
    for (const auto& [x, dx] : c.d) total += euler_phi(x) * dx;
    if (total != c.g) fail("sum phi(x) d_x = g", m.n);

    for (int x = 1; x <= c.N; ++x) {
        bool present = i_of(c, x) != 0;
        if (present != (x % c.n0 == 0)) fail("the values n_v are the multiples of n0 up to N", m.n);
    }

    // comparison of residue counts for every admissible k
    for (int k : admissible_orders(m)) {
        for (int r = 1; r < k; ++r)
            for (int s = 1; s < k; ++s)
                if (std::gcd(s, k) % std::gcd(r, k) == 0 && c.i_mod(r, k) > c.i_mod(s, k))
                    fail("i(r,k) <= i(s,k) when <s> is contained in <r>", m.n);
    }

    // statements about the reduced pair
    std::vector<int> reduced;
    for (int x : m.n) reduced.push_back(x / c.n0);
    NumerologyCounts rc = raw_counts(reduced);
    if (euler_phi(rc.N) > 2) fail("phi(N) <= 2 for the reduced pair", m.n);
    for (int l = 2; l <= rc.N; ++l) {
        if (i_of(rc, l) == 0) continue;
        bool multiples = false;
        for (int t = 2; t * l <= rc.N; ++t)
            if (i_of(rc, t * l) != 0) multiples = true;
        if (multiples && i_of(rc, l) < 2) fail("i(l) >= 2 when a proper multiple of l occurs", m.n);
    }
    const int i1 = i_of(rc, 1), i2 = i_of(rc, 2), i3 = i_of(rc, 3), i4 = i_of(rc, 4), i5 = i_of(rc, 5),
              i6 = i_of(rc, 6);
    switch (rc.N) {
        case 1:
            if (rc.g != i1) fail("g = i(1) when N = 1", m.n);
            break;
        case 2:
            if (rc.g != i1 + 2 * i2) fail("g = i(1) + 2 i(2) when N = 2", m.n);
            break;
        case 3:
            if (i1 != i2 || rc.g != 3 * (i1 + i3)) fail("residue conditions for N = 3", m.n);
            break;
        case 4:
            if (i1 != i3 || i1 + i4 != i2 || rc.g != 6 * (i1 + i4)) fail("residue conditions for N = 4", m.n);
            break;
        case 6:
            if (i1 != i5 || i1 != i6 || i2 != 2 * i1 || i3 != 2 * i1 || i4 != 2 * i1 || rc.g != 30 * i1)
                fail("residue conditions for N = 6", m.n);
            break;
        default:
            fail("N in {1,2,3,4,6}", m.n);
    }
    return c;
}

ClockPartition clocked(const std::vector<int>& n) {
    NumerologyCounts c = raw_counts(n);
    ClockPartition p;
    p.g = c.g;
    const int mod = 2 * c.g;
    std::vector<int> hits(static_cast<std::size_t>(mod), 0);
    for (const auto& [x, dx] : c.d) {
        if (mod % x != 0) fail("x | 2g", n);
        for (int r = 1; r <= x; ++r) {
            if (std::gcd(r, x) != 1) continue;
            ClockSet s;
            s.x = x;
            s.r = r;
            const int center = mod / x * r;
            for (int j = 0; j < dx; ++j) {
                int v = ((center - dx + 1 + 2 * j) % mod + mod) % mod;
                s.residues.push_back(v);
                hits[static_cast<std::size_t>(v)]++;
            }
            std::sort(s.residues.begin(), s.residues.end());
            p.sets.push_back(s);
        }
    }
    p.disjoint = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
    p.parity = hits[0] ? 0 : 1;
    p.covers_parity = true;
    for (int v = 0; v < mod; ++v) {
        bool want = (v % 2) == p.parity;
        if ((hits[static_cast<std::size_t>(v)] == 1) != want) p.covers_parity = false;
    }
    return p;
}

ClockPartition clocked(const MarkedDiagram& m) { return clocked(m.n); }

}  // namespace tricomm
