#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "assoc/error.hpp"

namespace assoc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense double-precision matrix. Symmetric inputs are the norm in this library.
using FloatMatrix = Eigen::MatrixXd;
using FloatVector = Eigen::VectorXd;

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const;

    bool is_zero() const;
    Rational trace() const;
    FloatMatrix to_float() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    FloatMatrix eigenvectors;         // column i pairs with eigenvalues[i]
};

/// Exact solve of A X = B by Gauss-Jordan elimination over the rationals.
/// Throws Errc::SingularSystem when A is rank-deficient.
RationalMatrix rational_solve(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank over the rationals.
std::size_t rational_rank(const RationalMatrix& a);

/// Maximum absolute entry.
double max_abs(const FloatMatrix& m);

/// Operator infinity norm (maximum absolute row sum).
double norm_inf(const FloatMatrix& m);

/// Full symmetric eigendecomposition. Throws Errc::NotSymmetric when
/// |M - M^t|_max > 1e-12.
EigenDecomposition eig_sym(const FloatMatrix& m);

struct SimultaneousOptions {
    double commute_tolerance = 1e-9;
    double cluster_tolerance = 1e-7;  // relative, on eigenvalue gaps
    unsigned seed = 20240611u;
};

/// Orthogonal projectors onto the common eigenspaces of a commuting family of
/// symmetric matrices. Each member is a real combination of the projectors and
/// the projectors sum to the identity. Order follows the eigenvalues of the
/// random combination used to separate them; callers reorder as they need.
/// Throws Errc::NotCommuting (message carries the worst commutator norm).
std::vector<FloatMatrix> simultaneous_eigenbasis(const std::vector<FloatMatrix>& family,
                                                 const SimultaneousOptions& options = {});

/// [tr(A^0), tr(A^1), ..., tr(A^max_power)] by repeated exact multiplication.
std::vector<Rational> power_traces(const RationalMatrix& a, std::size_t max_power);

}  // namespace assoc
