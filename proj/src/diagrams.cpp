#include "tricomm/diagrams.hpp"

#include "tricomm/root_data.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tricomm {

// ---------------------------------------------------------------------------
// SimpleType

std::string SimpleType::name() const {
    switch (family) {
        case Family::Trivial: return "trivial";
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::C: return "C" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::E: return "E" + std::to_string(rank);
        case Family::F: return "F" + std::to_string(rank);
        case Family::G: return "G" + std::to_string(rank);
        case Family::BC: return "BC" + std::to_string(rank);
    }
    return "?";
}

bool SimpleType::operator<(const SimpleType& o) const {
    if (family != o.family) return static_cast<int>(family) < static_cast<int>(o.family);
    return rank < o.rank;
}

SimpleType make_type(Family f, int rank) {
    SimpleType t;
    t.family = f;
    t.rank = rank;
    return t;
}

bool is_valid_type(const SimpleType& t) {
    switch (t.family) {
        case Family::Trivial: return t.rank == 0;
        case Family::A: return t.rank >= 1;
        case Family::B: return t.rank >= 2;
        case Family::C: return t.rank >= 2;
        case Family::D: return t.rank >= 4;
        case Family::E: return t.rank >= 6 && t.rank <= 8;
        case Family::F: return t.rank == 4;
        case Family::G: return t.rank == 2;
        case Family::BC: return t.rank >= 1;
    }
    return false;
}

SimpleType canonical(const SimpleType& t) {
    if (t.rank == 0) return make_type(Family::Trivial, 0);
    if ((t.family == Family::B || t.family == Family::C) && t.rank == 1) return make_type(Family::A, 1);
    if (t.family == Family::B && t.rank == 2) return make_type(Family::C, 2);
    if (t.family == Family::D && t.rank == 3) return make_type(Family::A, 3);
    return t;
}

SimpleType non_multipliable(const SimpleType& t) {
    if (t.family == Family::BC) return canonical(make_type(Family::C, t.rank));
    return t;
}

SimpleType dual_type(const SimpleType& t) {
    if (t.family == Family::B) return canonical(make_type(Family::C, t.rank));
    if (t.family == Family::C) return canonical(make_type(Family::B, t.rank));
    return t;
}

std::string product_name(std::vector<SimpleType> factors) {
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const SimpleType& t) { return t.family == Family::Trivial; }),
                  factors.end());
    if (factors.empty()) return "trivial";
    std::sort(factors.begin(), factors.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (i > 0) os << " x ";
        os << factors[i].name();
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// AffineDiagram

int AffineDiagram::mark_sum() const { return std::accumulate(marks.begin(), marks.end(), 0); }

bool AffineDiagram::operator==(const AffineDiagram& o) const {
    return nodes == o.nodes && cartan == o.cartan && marks == o.marks && sq_lengths == o.sq_lengths;
}

void validate_cartan(const IntMatrix& c) {
    const std::size_t n = c.size();
    for (const auto& row : c)
        if (row.size() != n) throw std::invalid_argument("generalized Cartan matrix: not square");
    for (std::size_t u = 0; u < n; ++u) {
        if (c[u][u] != 2) throw std::invalid_argument("generalized Cartan matrix: diagonal entry is not 2");
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            if (c[u][v] > 0) throw std::invalid_argument("generalized Cartan matrix: positive off-diagonal entry");
            if ((c[u][v] == 0) != (c[v][u] == 0))
                throw std::invalid_argument("generalized Cartan matrix: asymmetric zero pattern");
        }
    }
}

namespace {

bool connected(const IntMatrix& c) {
    const std::size_t n = c.size();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v] && u != v && c[u][v] != 0) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

int gcd_of(const std::vector<int>& xs) {
    int g = 0;
    for (int x : xs) g = std::gcd(g, x);
    return g;
}

}  // namespace

std::optional<std::vector<int>> is_affine_type(const IntMatrix& c) {
    validate_cartan(c);
    if (!connected(c)) return std::nullopt;
    const std::size_t n = c.size();
    RatMatrix t(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) t(v, u) = c[u][v];
    auto ker = kernel_basis(t);
    if (ker.size() != 1) return std::nullopt;
    std::vector<int> m;
    for (const auto& x : ker[0]) {
        if (x <= 0) return std::nullopt;
        m.push_back(static_cast<int>(to_ll(x)));
    }
    return m;
}

void validate(const AffineDiagram& d) {
    const std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("diagram: no nodes");
    if (d.cartan.size() != n || d.marks.size() != n || d.sq_lengths.size() != n)
        throw std::invalid_argument("diagram: inconsistent sizes");
    validate_cartan(d.cartan);
    for (int m : d.marks)
        if (m <= 0) throw std::invalid_argument("diagram: non-positive mark");
    for (const auto& l : d.sq_lengths)
        if (l <= 0) throw std::invalid_argument("diagram: non-positive squared length");
    if (n == 1) return;
    if (!connected(d.cartan)) throw std::invalid_argument("diagram: not connected");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (d.cartan[u][v] * d.sq_lengths[v] != d.cartan[v][u] * d.sq_lengths[u])
                throw std::invalid_argument("diagram: squared lengths inconsistent with Cartan integers");
    for (std::size_t v = 0; v < n; ++v) {
        long long s = 0;
        for (std::size_t u = 0; u < n; ++u) s += static_cast<long long>(d.marks[u]) * d.cartan[u][v];
        if (s != 0) throw std::invalid_argument("diagram: marks are not a relation");
    }
    if (!is_affine_type(d.cartan)) throw std::invalid_argument("diagram: not of affine type");
}

// ---------------------------------------------------------------------------
// isomorphisms

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& after) const {
    DiagramAutomorphism r;
    r.perm.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) r.perm[i] = after.perm[perm[i]];
    return r;
}

bool DiagramAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

namespace {

std::vector<int> reduced_marks(const std::vector<int>& m) {
    int g = gcd_of(m);
    std::vector<int> r;
    for (int x : m) r.push_back(x / g);
    return r;
}

// Signature of a node that any isomorphism must preserve.
std::vector<int> signature(const AffineDiagram& d, const std::vector<int>& marks, std::size_t u) {
    std::vector<int> s{marks[u]};
    std::vector<std::pair<int, int>> nb;
    for (std::size_t v = 0; v < d.size(); ++v)
        if (d.bonded(u, v)) nb.emplace_back(d.cartan[u][v], d.cartan[v][u]);
    std::sort(nb.begin(), nb.end());
    s.push_back(static_cast<int>(nb.size()));
    for (auto& p : nb) {
        s.push_back(p.first);
        s.push_back(p.second);
    }
    return s;
}

void enumerate_isomorphisms(const AffineDiagram& a, const AffineDiagram& b, bool proportional,
                            const std::function<bool(const std::vector<int>&)>& visit) {
    const std::size_t n = a.size();
    if (b.size() != n) return;
    std::vector<int> ma = proportional ? reduced_marks(a.marks) : a.marks;
    std::vector<int> mb = proportional ? reduced_marks(b.marks) : b.marks;

    std::vector<std::vector<int>> sa(n), sb(n);
    for (std::size_t i = 0; i < n; ++i) {
        sa[i] = signature(a, ma, i);
        sb[i] = signature(b, mb, i);
    }
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return;
    }

    // BFS order so that each new node is bonded to an earlier one.
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (placed[s]) continue;
        std::queue<std::size_t> q;
        q.push(s);
        placed[s] = true;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            order.push_back(u);
            for (std::size_t v = 0; v < n; ++v)
                if (!placed[v] && a.bonded(u, v)) {
                    placed[v] = true;
                    q.push(v);
                }
        }
    }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    bool stop = false;
    std::function<void(std::size_t)> step = [&](std::size_t k) {
        if (stop) return;
        if (k == n) {
            if (!visit(map)) stop = true;
            return;
        }
        auto u = order[k];
        for (std::size_t c = 0; c < n && !stop; ++c) {
            if (used[c] || sa[u] != sb[c]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                auto w = order[j];
                auto cw = static_cast<std::size_t>(map[w]);
                ok = a.cartan[u][w] == b.cartan[c][cw] && a.cartan[w][u] == b.cartan[cw][c];
            }
            if (!ok) continue;
            map[u] = static_cast<int>(c);
            used[c] = true;
            step(k + 1);
            used[c] = false;
            map[u] = -1;
        }
    };
    step(0);
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const AffineDiagram& a, const AffineDiagram& b,
                                                 bool proportional_marks) {
    std::optional<std::vector<int>> found;
    enumerate_isomorphisms(a, b, proportional_marks, [&](const std::vector<int>& m) {
        found = m;
        return false;
    });
    return found;
}

std::vector<DiagramAutomorphism> automorphism_group(const AffineDiagram& d) {
    std::vector<DiagramAutomorphism> out;
    enumerate_isomorphisms(d, d, false, [&](const std::vector<int>& m) {
        out.push_back(DiagramAutomorphism{m});
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> composition_table(const std::vector<DiagramAutomorphism>& group) {
    std::vector<std::vector<int>> table(group.size(), std::vector<int>(group.size(), -1));
    for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = 0; j < group.size(); ++j) {
            auto c = group[i].compose(group[j]);
            auto it = std::find(group.begin(), group.end(), c);
            if (it == group.end()) throw std::logic_error("composition_table: set is not closed");
            table[i][j] = static_cast<int>(it - group.begin());
        }
    return table;
}

Classification classify(const AffineDiagram& d) {
    Classification c;
    if (d.size() == 1) {
        c.type = make_type(Family::Trivial, 0);
        c.bijection = {0};
        c.scale = d.marks.at(0);
        return c;
    }
    const int r = d.rank();
    std::vector<SimpleType> candidates = {make_type(Family::A, r)};
    if (r >= 3) candidates.push_back(make_type(Family::B, r));
    if (r >= 2) candidates.push_back(make_type(Family::C, r));
    if (r >= 4) candidates.push_back(make_type(Family::D, r));
    if (r >= 6 && r <= 8) candidates.push_back(make_type(Family::E, r));
    if (r == 4) candidates.push_back(make_type(Family::F, 4));
    if (r == 2) candidates.push_back(make_type(Family::G, 2));
    candidates.push_back(make_type(Family::BC, r));
    for (const auto& t : candidates) {
        AffineDiagram cat = datum(t).diagram();
        auto iso = find_isomorphism(d, cat, true);
        if (!iso) continue;
        c.type = t;
        c.bijection = *iso;
        c.scale = d.marks[0] / cat.marks[static_cast<std::size_t>((*iso)[0])];
        return c;
    }
    return c;
}

// ---------------------------------------------------------------------------
// orbits and quotients

std::vector<std::vector<int>> components(const AffineDiagram& d, const std::vector<int>& subset) {
    std::set<int> in(subset.begin(), subset.end());
    std::set<int> seen;
    std::vector<std::vector<int>> out;
    for (int s : subset) {
        if (seen.count(s)) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : subset)
                if (!seen.count(v) && d.bonded(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) {
                    seen.insert(v);
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Orbit> orbit_structure(const AffineDiagram& d, const std::vector<DiagramAutomorphism>& group) {
    const std::size_t n = d.size();
    std::vector<int> owner(n, -1);
    std::vector<Orbit> orbits;
    for (std::size_t s = 0; s < n; ++s) {
        if (owner[s] >= 0) continue;
        std::set<int> members;
        for (const auto& g : group) members.insert(g.perm[s]);
        members.insert(static_cast<int>(s));
        Orbit o;
        o.members.assign(members.begin(), members.end());
        for (int m : o.members) owner[m] = static_cast<int>(orbits.size());
        o.size = static_cast<int>(o.members.size());
        orbits.push_back(o);
    }

    auto is_cycle = [&]() {
        if (d.size() < 2) return false;
        auto cls = classify(d);
        return cls.type && cls.type->family == Family::A;
    };

    for (auto& o : orbits) {
        std::map<int, int> partners;
        bool simple_pairs = true;
        int bonds = 0;
        for (int u : o.members)
            for (int v : o.members) {
                if (!d.bonded(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) continue;
                ++bonds;
                partners[u]++;
                if (d.cartan[u][v] != -1) simple_pairs = false;
            }
        if (bonds == 0) {
            o.kind = OrbitKind::Ordinary;
            o.epsilon = 1;
        } else if (simple_pairs && static_cast<int>(partners.size()) == o.size &&
                   std::all_of(partners.begin(), partners.end(), [](auto& p) { return p.second == 1; })) {
            o.kind = OrbitKind::Exceptional;
            o.epsilon = 2;
        } else if (orbits.size() == 1 && is_cycle()) {
            o.kind = OrbitKind::Degenerate;
            o.epsilon = 1;
        } else {
            std::ostringstream os;
            os << "orbit {";
            for (std::size_t i = 0; i < o.members.size(); ++i) os << (i ? "," : "") << d.nodes[o.members[i]];
            os << "} is neither ordinary nor exceptional";
            throw std::invalid_argument(os.str());
        }
        if (o.kind == OrbitKind::Degenerate) {
            o.mark = d.mark_sum();
        } else {
            int m = d.marks[static_cast<std::size_t>(o.members[0])];
            for (int u : o.members)
                if (d.marks[static_cast<std::size_t>(u)] != m) throw std::logic_error("orbit marks are not constant");
            o.mark = o.size * m;
        }
    }
    return orbits;
}

int quotient_cartan(const AffineDiagram& d, const Orbit& u, const Orbit& v) {
    int s = 0;
    auto a = static_cast<std::size_t>(u.members[0]);
    for (int b : v.members) s += d.cartan[a][static_cast<std::size_t>(b)];
    return v.epsilon * s;
}

std::vector<Rat> normalize_lengths(const std::vector<Rat>& sq) {
    if (sq.empty()) return sq;
    Rat mn = *std::min_element(sq.begin(), sq.end());
    std::vector<Rat> out;
    for (const auto& x : sq) out.push_back(2 * x / mn);
    return out;
}

AffineDiagram quotient(const AffineDiagram& d, const std::vector<DiagramAutomorphism>& group) {
    auto orbits = orbit_structure(d, group);
    AffineDiagram q;
    const std::size_t m = orbits.size();
    q.cartan.assign(m, std::vector<int>(m, 0));
    std::vector<Rat> sq;
    for (std::size_t i = 0; i < m; ++i) {
        q.nodes.push_back(static_cast<int>(i));
        q.marks.push_back(orbits[i].mark);
        const auto& o = orbits[i];
        sq.push_back(d.sq_lengths[static_cast<std::size_t>(o.members[0])] / (o.epsilon * o.size));
        for (std::size_t j = 0; j < m; ++j)
            q.cartan[i][j] = (i == j) ? 2 : quotient_cartan(d, orbits[i], orbits[j]);
    }
    if (m == 1) sq = {Rat(2)};
    q.sq_lengths = normalize_lengths(sq);
    return q;
}

AffineDiagram diagram_from_vectors(const std::vector<RatVector>& vectors, const RatMatrix& gram,
                                   const std::vector<int>& marks, const std::vector<int>& node_ids) {
    AffineDiagram d;
    d.nodes = node_ids;
    d.marks = marks;
    RatMatrix g = gram_of(vectors, gram);
    const std::size_t n = vectors.size();
    d.cartan.assign(n, std::vector<int>(n, 0));
    std::vector<Rat> sq;
    for (std::size_t u = 0; u < n; ++u) sq.push_back(g(u, u));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (sq[v] == 0) throw std::domain_error("diagram_from_vectors: zero vector");
            Rat x = 2 * g(u, v) / sq[v];
            if (!is_integer(x)) throw std::domain_error("diagram_from_vectors: non-integral Cartan integer");
            d.cartan[u][v] = static_cast<int>(to_ll(x));
        }
    d.sq_lengths = normalize_lengths(sq);
    return d;
}

}  // namespace tricomm

namespace tricomm {

std::vector<SimpleType> classify_root_system(const std::vector<RatVector>& roots_in, const RatMatrix& gram) {
    std::set<RatVector> all(roots_in.begin(), roots_in.end());
    std::vector<SimpleType> out;
    if (all.empty()) return out;
    const std::size_t dim = roots_in[0].size();

    // A linear functional that vanishes on no root.
    RatVector p;
    for (int base = 7;; base += 2) {
        p.assign(dim, Rat(0));
        Rat x = 1;
        for (std::size_t i = 0; i < dim; ++i, x *= base) p[i] = x;
        bool ok = true;
        for (const auto& r : all)
            if (inner(p, r, gram) == 0) {
                ok = false;
                break;
            }
        if (ok) break;
        if (base > 1000) throw std::logic_error("classify_root_system: no regular functional found");
    }

    std::vector<RatVector> positive;
    std::set<RatVector> pos_set;
    for (const auto& r : all)
        if (inner(p, r, gram) > 0) {
            positive.push_back(r);
            pos_set.insert(r);
        }
    std::vector<RatVector> simple;
    for (const auto& r : positive) {
        if (all.count(scale(Rat(1, 2), r))) continue;
        bool decomposable = false;
        for (const auto& s : positive)
            if (s != r && pos_set.count(sub(r, s))) {
                decomposable = true;
                break;
            }
        if (!decomposable) simple.push_back(r);
    }

    const std::size_t n = simple.size();
    RatMatrix sg = gram_of(simple, gram);
    RatMatrix sg_inv = inverse(sg);
    // coefficients of each positive root on the simple roots
    std::vector<RatVector> coeff;
    for (const auto& r : positive) {
        RatVector b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = inner(simple[i], r, gram);
        RatVector c = sg_inv * b;
        if (c.size() != n) throw std::logic_error("classify_root_system: bad coefficients");
        for (const auto& x : c)
            if (!is_integer(x) || x < 0) throw std::logic_error("classify_root_system: roots are not a root system");
        coeff.push_back(c);
    }

    // components of the simple system
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v)
                if (comp[v] < 0 && sg(u, v) != 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }

    auto coroot = [&](const RatVector& r) { return scale(2 / inner(r, r, gram), r); };
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c) members.push_back(i);
        Rat best = -1;
        std::size_t hi = 0;
        for (std::size_t k = 0; k < positive.size(); ++k) {
            Rat height = 0;
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (coeff[k][i] == 0) continue;
                if (comp[i] != c) inside = false;
                height += coeff[k][i];
            }
            if (inside && height > best) {
                best = height;
                hi = k;
            }
        }
        std::vector<RatVector> ext{coroot(scale(-1, positive[hi]))};
        for (auto i : members) ext.push_back(coroot(simple[i]));
        std::vector<int> ids(ext.size());
        std::iota(ids.begin(), ids.end(), 0);
        AffineDiagram d = diagram_from_vectors(ext, gram, std::vector<int>(ext.size(), 1), ids);
        auto marks = is_affine_type(d.cartan);
        if (!marks) throw std::logic_error("classify_root_system: extended diagram is not affine");
        d.marks = *marks;
        auto cls = classify(d);
        if (!cls.type) throw std::logic_error("classify_root_system: unrecognized component");
        out.push_back(canonical(*cls.type));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tricomm
