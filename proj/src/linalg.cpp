#include "tricomm/linalg.hpp"

#include <stdexcept>

namespace tricomm {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged input");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    return RatVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RatVector RatMatrix::column(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    return p;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    RatVector r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    RatMatrix d(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) d.data_[i] = data_[i] - o.data_[i];
    return d;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RatVector zeros(std::size_t n) { return RatVector(n, Rat(0)); }

RatVector unit(std::size_t n, std::size_t i) {
    RatVector v(n, Rat(0));
    v[i] = 1;
    return v;
}

RatVector add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector scale(const Rat& s, const RatVector& a) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat inner(const RatVector& a, const RatVector& b, const RatMatrix& gram) {
    if (gram.rows() != a.size() || gram.cols() != b.size())
        throw std::invalid_argument("inner: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram(i, j) * b[j];
    }
    return s;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a).size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    RatMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v = zeros(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
        basis.push_back(primitive_integer(v));
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    auto pivots = rref(a);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw std::domain_error("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
    return inv;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

RatVector solve(const RatMatrix& m, const RatVector& b) { return inverse(m) * b; }

RatMatrix gram_of(const std::vector<RatVector>& vectors, const RatMatrix& gram) {
    RatMatrix g(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i; j < vectors.size(); ++j) {
            g(i, j) = inner(vectors[i], vectors[j], gram);
            g(j, i) = g(i, j);
        }
    return g;
}

RatVector orthogonal_project(const RatVector& v, const std::vector<RatVector>& span_vectors,
                             const RatMatrix& gram) {
    if (span_vectors.empty()) return zeros(v.size());
    // Reduce the spanning set to an independent subset first.
    RatMatrix rows = RatMatrix::from_rows(span_vectors, v.size());
    RatMatrix t = rows.transpose();
    auto pivots = rref(t);
    std::vector<RatVector> basis;
    for (auto p : pivots) basis.push_back(span_vectors[p]);

    RatMatrix g = gram_of(basis, gram);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (g(i, i) <= 0) throw std::domain_error("orthogonal_project: form is not positive on the span");
    RatVector rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = inner(basis[i], v, gram);
    RatVector coeff;
    try {
        coeff = solve(g, rhs);
    } catch (const std::domain_error&) {
        throw std::domain_error("orthogonal_project: form is degenerate on the span");
    }
    RatVector out = zeros(v.size());
    for (std::size_t i = 0; i < basis.size(); ++i) out = add(out, scale(coeff[i], basis[i]));
    return out;
}

std::vector<RatVector> common_kernel(const std::vector<RatVector>& functionals, std::size_t dim) {
    if (functionals.empty()) {
        std::vector<RatVector> basis;
        for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit(dim, i));
        return basis;
    }
    return kernel_basis(RatMatrix::from_rows(functionals, dim));
}

Int gcd_int(const Int& a, const Int& b) {
    Int x = a < 0 ? Int(-a) : a;
    Int y = b < 0 ? Int(-b) : b;
    while (y != 0) {
        Int t = x % y;
        x = y;
        y = t;
    }
    return x;
}

RatVector primitive_integer(const RatVector& v) {
    Int l = 1;
    for (const auto& x : v) {
        Int d = boost::multiprecision::denominator(x);
        l = l / gcd_int(l, d) * d;
    }
    std::vector<Int> ints;
    Int g = 0;
    for (const auto& x : v) {
        Rat s = x * l;
        Int n = boost::multiprecision::numerator(s);
        ints.push_back(n);
        g = gcd_int(g, n);
    }
    if (g == 0) return v;
    int sign = 1;
    for (const auto& n : ints)
        if (n != 0) {
            sign = n < 0 ? -1 : 1;
            break;
        }
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g) * sign;
    return out;
}

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

long long to_ll(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("to_ll: not an integer: " + to_string(r));
    return boost::multiprecision::numerator(r).convert_to<long long>();
}

std::string to_string(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace tricomm
