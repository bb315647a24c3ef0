#include "assoc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>

namespace assoc {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(Errc::ShapeMismatch, "matrix product dimensions differ");
    RationalMatrix out(rows_, rhs.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = (*this)(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& bkj = rhs(k, j);
                if (sgn(bkj) == 0) continue;
                tmp = aik * bkj;
                out(i, j) += tmp;
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(Errc::ShapeMismatch, "matrix difference dimensions differ");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

FloatMatrix RationalMatrix::to_float() const {
    FloatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_d();
    return m;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RationalMatrix rational_solve(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw Error(Errc::ShapeMismatch, "rational_solve needs a square system");
    if (b.rows() != n) throw Error(Errc::ShapeMismatch, "right-hand side has wrong row count");

    RationalMatrix aug(n, n + b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    const auto pivots = row_reduce(aug, n);
    if (pivots.size() != n) {
        std::ostringstream msg;
        msg << "matrix of order " << n << " has rank " << pivots.size();
        throw Error(Errc::SingularSystem, msg.str());
    }
    RationalMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
    return x;
}

std::size_t rational_rank(const RationalMatrix& a) {
    RationalMatrix copy = a;
    return row_reduce(copy, copy.cols()).size();
}

double max_abs(const FloatMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double norm_inf(const FloatMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

EigenDecomposition eig_sym(const FloatMatrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::ShapeMismatch, "eig_sym needs a square matrix");
    const double asym = max_abs(m - m.transpose());
    if (asym > 1e-12) {
        std::ostringstream msg;
        msg << "|M - M^t|_max = " << asym;
        throw Error(Errc::NotSymmetric, msg.str());
    }
    Eigen::SelfAdjointEigenSolver<FloatMatrix> solver(m);
    if (solver.info() != Eigen::Success) throw Error(Errc::NotSymmetric, "eigensolver failed");
    EigenDecomposition out;
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    out.eigenvectors = solver.eigenvectors();
    return out;
}

namespace {

// Splits the ascending eigenvalues into runs whose consecutive gaps stay
// within `tol`. Returns [begin, end) index ranges.
std::vector<std::pair<std::size_t, std::size_t>> cluster(const std::vector<double>& ascending,
                                                         double tol) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= ascending.size(); ++i) {
        if (i == ascending.size() || ascending[i] - ascending[i - 1] > tol) {
            runs.emplace_back(start, i);
            start = i;
        }
    }
    return runs;
}

double spectral_scale(const std::vector<double>& ev) {
    double s = 1.0;
    for (double x : ev) s = std::max(s, std::abs(x));
    return s;
}

}  // namespace

std::vector<FloatMatrix> simultaneous_eigenbasis(const std::vector<FloatMatrix>& family,
                                                 const SimultaneousOptions& options) {
    if (family.empty()) throw Error(Errc::ShapeMismatch, "empty matrix family");
    const Eigen::Index n = family.front().rows();
    for (const auto& m : family) {
        if (m.rows() != n || m.cols() != n)
            throw Error(Errc::ShapeMismatch, "family members differ in size");
        if (max_abs(m - m.transpose()) > 1e-12)
            throw Error(Errc::NotSymmetric, "family member is not symmetric");
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const FloatMatrix comm = family[i] * family[j] - family[j] * family[i];
            const double scale = std::max(1.0, norm_inf(family[i]) * norm_inf(family[j]));
            worst = std::max(worst, norm_inf(comm) / scale);
        }
    }
    if (worst > options.commute_tolerance) {
        std::ostringstream msg;
        msg << "max ||[M_i,M_j]||_inf (relative) = " << worst;
        throw Error(Errc::NotCommuting, msg.str());
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> coef(1.0, 2.0);
    FloatMatrix combo = FloatMatrix::Zero(n, n);
    for (const auto& m : family) combo += coef(rng) * m / std::max(1.0, norm_inf(m));

    const EigenDecomposition base = eig_sym(0.5 * (combo + combo.transpose()));
    const double base_tol = options.cluster_tolerance * spectral_scale(base.eigenvalues);

    std::deque<FloatMatrix> pending;
    for (auto [b, e] : cluster(base.eigenvalues, base_tol))
        pending.push_back(base.eigenvectors.middleCols(b, e - b));

    // Refine each subspace against every member until all act as scalars.
    std::vector<FloatMatrix> bases;
    while (!pending.empty()) {
        FloatMatrix v = std::move(pending.front());
        pending.pop_front();
        bool split = false;
        for (const auto& m : family) {
            if (v.cols() == 1) break;
            FloatMatrix restricted = v.transpose() * m * v;
            restricted = 0.5 * (restricted + restricted.transpose());
            const EigenDecomposition local = eig_sym(restricted);
            const double tol = options.cluster_tolerance * std::max(1.0, norm_inf(m));
            const auto runs = cluster(local.eigenvalues, tol);
            if (runs.size() > 1) {
                for (auto [b, e] : runs) pending.push_back(v * local.eigenvectors.middleCols(b, e - b));
                split = true;
                break;
            }
        }
        if (!split) bases.push_back(std::move(v));
    }

    std::vector<FloatMatrix> projectors;
    projectors.reserve(bases.size());
    for (const auto& v : bases) projectors.push_back(v * v.transpose());
    return projectors;
}

std::vector<Rational> power_traces(const RationalMatrix& a, std::size_t max_power) {
    if (a.rows() != a.cols()) throw Error(Errc::ShapeMismatch, "power_traces needs a square matrix");
    std::vector<Rational> traces;
    traces.reserve(max_power + 1);
    RationalMatrix p = RationalMatrix::identity(a.rows());
    for (std::size_t l = 0; l <= max_power; ++l) {
        traces.push_back(p.trace());
        if (l < max_power) p = p * a;
    }
    return traces;
}

}  // namespace assoc
