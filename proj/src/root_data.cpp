#include "tricomm/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace tricomm {

namespace {

RatVector e(int dim, int i) { return unit(static_cast<std::size_t>(dim), static_cast<std::size_t>(i)); }

RatVector vec(std::initializer_list<Rat> xs) { return RatVector(xs); }

struct Realization {
    int ambient_dim = 0;
    Rat form_scale = 1;  // ambient form = form_scale * identity
    std::vector<RatVector> simple;
    RatVector highest;
};

Realization e8_like(int rank) {
    Realization r;
    r.ambient_dim = 8;
    const Rat h(1, 2);
    r.simple.push_back(vec({h, -h, -h, -h, -h, -h, -h, h}));
    r.simple.push_back(add(e(8, 0), e(8, 1)));
    for (int i = 0; i < 6; ++i) r.simple.push_back(sub(e(8, i + 1), e(8, i)));
    r.simple.resize(static_cast<std::size_t>(rank));
    if (rank == 8) r.highest = add(e(8, 6), e(8, 7));
    if (rank == 7) r.highest = sub(e(8, 7), e(8, 6));
    if (rank == 6) r.highest = vec({h, h, h, h, h, -h, -h, h});
    return r;
}

Realization realize(const SimpleType& t) {
    Realization r;
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            r.ambient_dim = n + 1;
            for (int i = 0; i < n; ++i) r.simple.push_back(sub(e(n + 1, i), e(n + 1, i + 1)));
            r.highest = sub(e(n + 1, 0), e(n + 1, n));
            break;
        case Family::B:
            r.ambient_dim = n;
            for (int i = 0; i + 1 < n; ++i) r.simple.push_back(sub(e(n, i), e(n, i + 1)));
            r.simple.push_back(e(n, n - 1));
            r.highest = add(e(n, 0), e(n, 1));
            break;
        case Family::C:
            r.ambient_dim = n;
            r.form_scale = Rat(1, 2);
            for (int i = 0; i + 1 < n; ++i) r.simple.push_back(sub(e(n, i), e(n, i + 1)));
            r.simple.push_back(scale(2, e(n, n - 1)));
            r.highest = scale(2, e(n, 0));
            break;
        case Family::D:
            r.ambient_dim = n;
            for (int i = 0; i + 1 < n; ++i) r.simple.push_back(sub(e(n, i), e(n, i + 1)));
            r.simple.push_back(add(e(n, n - 2), e(n, n - 1)));
            r.highest = add(e(n, 0), e(n, 1));
            break;
        case Family::E:
            r = e8_like(n);
            break;
        case Family::F: {
            r.ambient_dim = 4;
            const Rat h(1, 2);
            r.simple = {vec({0, 1, -1, 0}), vec({0, 0, 1, -1}), vec({0, 0, 0, 1}), vec({h, -h, -h, -h})};
            r.highest = vec({1, 1, 0, 0});
            break;
        }
        case Family::G:
            r.ambient_dim = 3;
            r.form_scale = Rat(1, 3);
            r.simple = {vec({1, -1, 0}), vec({-2, 1, 1})};
            r.highest = vec({-1, -1, 2});
            break;
        case Family::BC:
            r.ambient_dim = n;
            r.form_scale = Rat(1, 2);
            for (int i = 0; i + 1 < n; ++i) r.simple.push_back(sub(e(n, i), e(n, i + 1)));
            r.simple.push_back(e(n, n - 1));
            r.highest = scale(2, e(n, 0));
            break;
        case Family::Trivial:
            break;
    }
    return r;
}

std::vector<int> positive_kernel(const std::vector<RatVector>& columns, std::size_t dim, const char* what) {
    auto ker = kernel_basis(RatMatrix::from_columns(columns, dim));
    if (ker.size() != 1) throw std::logic_error(std::string("catalog: relation space for ") + what + " is not one-dimensional");
    std::vector<int> out;
    for (const auto& x : ker[0]) {
        if (x <= 0) throw std::logic_error(std::string("catalog: non-positive ") + what);
        out.push_back(static_cast<int>(to_ll(x)));
    }
    return out;
}

RootDatum build(const SimpleType& t) {
    Realization r = realize(t);
    RootDatum d;
    d.type = t;
    d.ambient_dim = r.ambient_dim;
    d.gram = RatMatrix::identity(static_cast<std::size_t>(r.ambient_dim));
    for (int i = 0; i < r.ambient_dim; ++i) d.gram(i, i) = r.form_scale;

    d.extended_roots.push_back(scale(-1, r.highest));
    for (const auto& a : r.simple) d.extended_roots.push_back(a);
    for (const auto& a : d.extended_roots) d.extended_coroots.push_back(scale(2 / inner(a, a, d.gram), a));

    const auto dim = static_cast<std::size_t>(r.ambient_dim);
    d.h = positive_kernel(d.extended_roots, dim, "root integers");
    d.g = positive_kernel(d.extended_coroots, dim, "coroot integers");

    const int n = t.rank;
    for (int i = 1; i <= n; ++i) d.coroot_lattice_basis.push_back(d.extended_coroots[i]);

    d.frame_gram = gram_of(d.coroot_lattice_basis, d.gram);
    d.frame_gram_inverse = inverse(d.frame_gram);
    for (const auto& c : d.extended_coroots) d.coroot_frame.push_back(d.to_frame(c));
    for (const auto& a : d.extended_roots) {
        RatVector f(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) f[i] = inner(a, d.coroot_lattice_basis[i], d.gram);
        d.root_functional.push_back(f);
    }

    // fundamental coweights: b(w_a) = delta_ab for simple b
    RatMatrix pairing(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b)
        for (int i = 0; i < n; ++i) pairing(b, i) = d.root_functional[b + 1][i];
    RatMatrix pinv = inverse(pairing);
    for (int a = 0; a < n; ++a) d.coweight_lattice_basis.push_back(d.to_ambient(pinv.column(a)));

    const auto nodes = static_cast<std::size_t>(n + 1);
    d.cartan.assign(nodes, std::vector<int>(nodes, 0));
    for (std::size_t u = 0; u < nodes; ++u) {
        d.sq_lengths.push_back(inner(d.extended_coroots[u], d.extended_coroots[u], d.gram));
    }
    for (std::size_t u = 0; u < nodes; ++u)
        for (std::size_t v = 0; v < nodes; ++v) {
            Rat x = 2 * inner(d.extended_coroots[u], d.extended_coroots[v], d.gram) / d.sq_lengths[v];
            d.cartan[u][v] = static_cast<int>(to_ll(x));
        }
    return d;
}

}  // namespace

RatVector RootDatum::to_frame(const RatVector& ambient) const {
    RatVector rhs(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) rhs[i] = inner(coroot_lattice_basis[i], ambient, gram);
    return frame_gram_inverse * rhs;
}

RatVector RootDatum::to_ambient(const RatVector& frame) const {
    RatVector out = zeros(static_cast<std::size_t>(ambient_dim));
    for (int i = 0; i < rank(); ++i)
        if (frame[i] != 0) out = add(out, scale(frame[i], coroot_lattice_basis[i]));
    return out;
}

AffineDiagram RootDatum::diagram() const {
    AffineDiagram dg;
    for (int i = 0; i < nodes(); ++i) dg.nodes.push_back(i);
    dg.cartan = cartan;
    dg.marks = g;
    dg.sq_lengths = sq_lengths;
    return dg;
}

const RootDatum& datum(const SimpleType& requested) {
    if (!is_valid_type(requested) || requested.family == Family::Trivial)
        throw std::invalid_argument("datum: invalid type " + requested.name());
    SimpleType t = requested;
    if (t.family == Family::B && t.rank == 2) t = make_type(Family::C, 2);

    static std::mutex mu;
    static std::map<SimpleType, std::unique_ptr<RootDatum>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, std::make_unique<RootDatum>(build(t))).first;
    return *it->second;
}

int dual_coxeter(const SimpleType& t) {
    const auto& d = datum(t);
    int s = 0;
    for (int x : d.g) s += x;
    return s;
}

namespace {

AlcoveData compute_alcove(const RootDatum& d) {
    AlcoveData a;
    const auto n = static_cast<std::size_t>(d.rank());
    a.vertices_frame.push_back(zeros(n));
    for (int i = 1; i <= d.rank(); ++i) {
        RatVector w = d.to_frame(d.coweight_lattice_basis[i - 1]);
        a.vertices_frame.push_back(scale(Rat(1, d.h[i]), w));
    }
    a.barycenter_frame = zeros(n);
    for (const auto& v : a.vertices_frame) a.barycenter_frame = add(a.barycenter_frame, v);
    a.barycenter_frame = scale(Rat(1, static_cast<int>(a.vertices_frame.size())), a.barycenter_frame);
    for (const auto& v : a.vertices_frame) a.vertices.push_back(d.to_ambient(v));
    a.barycenter = d.to_ambient(a.barycenter_frame);
    return a;
}

std::vector<RatVector> compute_roots(const RootDatum& d);

// Derived data of catalog realizations, computed on first use.
struct DerivedCache {
    AlcoveData alcove;
    std::vector<RatVector> roots, frames, functionals;
};

const DerivedCache& derived_cache(const RootDatum& d) {
    static std::mutex mu;
    static std::map<SimpleType, std::unique_ptr<DerivedCache>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d.type);
    if (it != cache.end()) return *it->second;
    auto c = std::make_unique<DerivedCache>();
    c->alcove = compute_alcove(d);
    c->roots = compute_roots(d);
    for (const auto& r : c->roots) {
        c->frames.push_back(d.to_frame(r));
        RatVector f(static_cast<std::size_t>(d.rank()));
        for (int i = 0; i < d.rank(); ++i) f[i] = inner(r, d.coroot_lattice_basis[i], d.gram);
        c->functionals.push_back(f);
    }
    return *cache.emplace(d.type, std::move(c)).first->second;
}

}  // namespace

const AlcoveData& alcove(const RootDatum& d) { return derived_cache(d).alcove; }
const std::vector<RatVector>& enumerate_roots(const RootDatum& d) { return derived_cache(d).roots; }
const std::vector<RatVector>& root_frames(const RootDatum& d) { return derived_cache(d).frames; }
const std::vector<RatVector>& root_functionals(const RootDatum& d) { return derived_cache(d).functionals; }

Int center_order(const RootDatum& d) {
    RatMatrix pairing(static_cast<std::size_t>(d.rank()), static_cast<std::size_t>(d.rank()));
    for (int b = 0; b < d.rank(); ++b)
        for (int i = 0; i < d.rank(); ++i) pairing(b, i) = d.root_functional[b + 1][i];
    Rat det = determinant(pairing);
    if (det < 0) det = -det;
    return boost::multiprecision::numerator(det);
}

namespace {

std::vector<RatVector> compute_roots(const RootDatum& d) {
    std::set<RatVector> seen;
    std::vector<RatVector> frontier;
    for (const auto& a : d.extended_roots) {
        if (seen.insert(a).second) frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<RatVector> next;
        for (const auto& v : frontier) {
            for (int i = 1; i <= d.rank(); ++i) {
                Rat c = inner(v, d.extended_coroots[i], d.gram);
                if (c == 0) continue;
                RatVector w = sub(v, scale(c, d.extended_roots[i]));
                if (seen.insert(w).second) next.push_back(w);
            }
        }
        frontier.swap(next);
    }
    return std::vector<RatVector>(seen.begin(), seen.end());
}

}  // namespace

std::vector<SimpleType> catalog_types(int max_rank, bool include_bc) {
    std::vector<SimpleType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back(make_type(Family::A, n));
    for (int n = 3; n <= max_rank; ++n) out.push_back(make_type(Family::B, n));
    for (int n = 2; n <= max_rank; ++n) out.push_back(make_type(Family::C, n));
    for (int n = 4; n <= max_rank; ++n) out.push_back(make_type(Family::D, n));
    for (int n = 6; n <= 8 && n <= max_rank; ++n) out.push_back(make_type(Family::E, n));
    if (max_rank >= 4) out.push_back(make_type(Family::F, 4));
    if (max_rank >= 2) out.push_back(make_type(Family::G, 2));
    if (include_bc)
        for (int n = 1; n <= max_rank; ++n) out.push_back(make_type(Family::BC, n));
    return out;
}

SimpleType parse_group(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s.push_back(c);
    std::smatch m;
    auto bad = [&]() { return std::invalid_argument("unrecognized group spec '" + raw + "'"); };
    auto num = [&](const std::string& x) {
        if (x.size() > 4) throw bad();
        return std::stoi(x);
    };
    SimpleType t;
    if (std::regex_match(s, m, std::regex(R"((BC|bc|A|B|C|D|E|F|G|a|b|c|d|e|f|g)(\d+))"))) {
        std::string f = m[1];
        for (auto& c : f) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        static const std::map<std::string, Family> fam = {
            {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
            {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"BC", Family::BC}};
        t = make_type(fam.at(f), num(m[2]));
    } else if (std::regex_match(s, m, std::regex(R"((SU|Spin|Sp|su|spin|sp)\((\d+)\))"))) {
        std::string f = m[1];
        for (auto& c : f) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        int k = num(m[2]);
        if (f == "su") {
            t = make_type(Family::A, k - 1);
        } else if (f == "sp") {
            if (k % 2 != 0) throw bad();
            t = make_type(Family::C, k / 2);
        } else {
            t = (k % 2 == 0) ? make_type(Family::D, k / 2) : make_type(Family::B, (k - 1) / 2);
        }
    } else {
        throw bad();
    }
    if (!is_valid_type(t)) throw std::invalid_argument("invalid type " + t.name() + " from spec '" + raw + "'");
    return t;
}

}  // namespace tricomm

namespace tricomm {

std::vector<std::string> check_datum(const RootDatum& d) {
    std::vector<std::string> bad;
    const auto dim = static_cast<std::size_t>(d.ambient_dim);
    const int nodes = d.nodes();
    RatVector sh = zeros(dim), sg = zeros(dim);
    for (int a = 0; a < nodes; ++a) {
        sh = add(sh, scale(Rat(d.h[a]), d.extended_roots[a]));
        sg = add(sg, scale(Rat(d.g[a]), d.extended_coroots[a]));
    }
    if (!is_zero(sh)) bad.push_back("sum of h_a a is not zero");
    if (!is_zero(sg)) bad.push_back("sum of g_a a^v is not zero");
    // the non-reduced BC diagrams carry coroot integer 2 on the extended node
    const bool bc = d.type.family == Family::BC;
    if (d.h[0] != 1 || d.g[0] != (bc ? 2 : 1)) bad.push_back("extended node integers differ from the catalog convention");
    for (int a = bc ? 1 : 0; a < nodes; ++a)
        if (d.h[a] % d.g[a] != 0) bad.push_back("g_" + std::to_string(a) + " does not divide h_" + std::to_string(a));
    Rat shortest = *std::min_element(d.sq_lengths.begin(), d.sq_lengths.end());
    if (shortest != 2) bad.push_back("shortest coroot squared length is " + to_string(shortest) + ", not 2");
    for (int u = 0; u < nodes; ++u)
        for (int v = 0; v < nodes; ++v) {
            Rat x = 2 * inner(d.extended_coroots[u], d.extended_coroots[v], d.gram) /
                    inner(d.extended_coroots[v], d.extended_coroots[v], d.gram);
            if (x != d.cartan[u][v]) bad.push_back("Cartan integer n(" + std::to_string(u) + "," + std::to_string(v) + ")");
        }

    std::set<int> values(d.g.begin(), d.g.end());
    const int N = *values.rbegin();
    for (int x = 1; x <= N; ++x)
        if (!values.count(x)) bad.push_back("coroot integer " + std::to_string(x) + " is missing below the maximum");
    for (int k = 1; k <= N; ++k) {
        int gg = 0;
        for (int x : d.g)
            if (x % k == 0) gg = std::gcd(gg, x);
        if (gg != 0 && gg != k) bad.push_back("gcd of coroot integers divisible by " + std::to_string(k) + " is not k");
    }

    if (d.type.family != Family::BC) {
        Int expected = 1;
        switch (d.type.family) {
            case Family::A: expected = d.rank() + 1; break;
            case Family::B:
            case Family::C: expected = 2; break;
            case Family::D: expected = 4; break;
            case Family::E: expected = d.rank() == 6 ? 3 : (d.rank() == 7 ? 2 : 1); break;
            default: expected = 1;
        }
        if (center_order(d) != expected) bad.push_back("center order is " + center_order(d).str());
    }

    const AlcoveData& al = alcove(d);
    const RatVector& highest = d.root_functional[0];  // minus the highest root
    RatVector bary = zeros(static_cast<std::size_t>(d.rank()));
    for (int i = 0; i < nodes; ++i) bary = add(bary, al.vertices_frame[i]);
    bary = scale(Rat(1, nodes), bary);
    if (bary != al.barycenter_frame) bad.push_back("alcove barycenter is not the vertex average");
    if (!is_zero(al.vertices_frame[0])) bad.push_back("alcove vertex 0 is not the origin");
    for (int i = 1; i < nodes; ++i) {
        if (-dot(highest, al.vertices_frame[i]) != 1) bad.push_back("alcove vertex " + std::to_string(i) + " is off the highest-root wall");
        for (int b = 1; b < nodes; ++b)
            if (b != i && dot(d.root_functional[b], al.vertices_frame[i]) != 0)
                bad.push_back("alcove vertex " + std::to_string(i) + " is off the wall of root " + std::to_string(b));
    }
    return bad;
}

}  // namespace tricomm
