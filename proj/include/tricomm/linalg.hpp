#ifndef TRICOMM_LINALG_HPP
#define TRICOMM_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace tricomm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatVector = std::vector<Rat>;

/*
 * Dense row-major matrix over the rationals.  Everything here is small
 * (at most ~15x15), so no attempt is made at clever storage.
 */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
    static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;
    RatMatrix transpose() const;

    RatMatrix operator*(const RatMatrix& other) const;
    RatVector operator*(const RatVector& v) const;
    RatMatrix operator-(const RatMatrix& other) const;

    bool operator==(const RatMatrix& other) const;
    bool operator!=(const RatMatrix& other) const { return !(*this == other); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

// vector helpers
RatVector zeros(std::size_t n);
RatVector unit(std::size_t n, std::size_t i);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rat& s, const RatVector& a);
bool is_zero(const RatVector& v);

// Euclidean dot product of coordinate vectors.
Rat dot(const RatVector& a, const RatVector& b);
// Inner product a^T * gram * b.
Rat inner(const RatVector& a, const RatVector& b, const RatMatrix& gram);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Basis of the right kernel, each vector scaled to coprime integers.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

// Inverse of a nonsingular square matrix; throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);

// Determinant of a square matrix.
Rat determinant(const RatMatrix& m);

// Solve m x = b for a nonsingular square m.
RatVector solve(const RatMatrix& m, const RatVector& b);

// Symmetric matrix of pairwise inner products.
RatMatrix gram_of(const std::vector<RatVector>& vectors, const RatMatrix& gram);

// Exact orthogonal projection of v onto span(span_vectors) for the inner
// product given by gram.  The spanning set may be dependent.
RatVector orthogonal_project(const RatVector& v, const std::vector<RatVector>& span_vectors,
                             const RatMatrix& gram);

// Intersection of the row spaces' orthogonal complements, i.e. the common
// kernel of a list of linear functionals (given as coefficient rows).
std::vector<RatVector> common_kernel(const std::vector<RatVector>& functionals, std::size_t dim);

// Scale a nonzero vector to coprime integer entries with positive sign of the
// first nonzero entry.
RatVector primitive_integer(const RatVector& v);

Int gcd_int(const Int& a, const Int& b);
long long to_ll(const Rat& r);  // throws if r is not an integer that fits
bool is_integer(const Rat& r);
std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);

}  // namespace tricomm

#endif
