#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/numerics.hpp"
#include "assoc/scheme.hpp"

namespace assoc {

/// Conductances c_1..c_d, one per non-identity class.
class ConductanceVector {
public:
    ConductanceVector() = default;
    explicit ConductanceVector(std::vector<Rational> values);

    /// c_1 = 1, all others 0.
    static ConductanceVector unit(std::size_t d);
    static ConductanceVector from_doubles(const std::vector<double>& values);

    std::size_t size() const { return values_.size(); }
    /// c_i for 1 <= i <= d.
    const Rational& at(std::size_t i) const { return values_.at(i - 1); }
    double value(std::size_t i) const { return at(i).get_d(); }
    const std::vector<Rational>& values() const { return values_; }

    /// True when c_1 > 0 and every other entry is zero.
    bool single_on_first() const;

private:
    std::vector<Rational> values_;
};

/// Throws ShapeMismatch on a length mismatch, BadParameter on a negative or
/// all-zero vector, Disconnected when the support does not connect the vertices.
void validate_conductances(const AssociationScheme& scheme, const ConductanceVector& c);

enum class Method { Oracle, Spectral, Polynomial, ClosedForm };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// R^{(0)}..R^{(d)}; entry 0 is zero.
struct ResistanceTable {
    Method method = Method::Oracle;
    std::vector<double> values;
    std::optional<std::vector<Rational>> exact;
    double stratum_spread = 0;  // oracle only: max spread of R within a stratum of vertex 0

    std::size_t class_count() const { return values.empty() ? 0 : values.size() - 1; }
};

/// L = sum_i c_i kappa_i I - sum_i c_i A_i.
FloatMatrix laplacian(const AssociationScheme& scheme, const ConductanceVector& c);

/// Pseudo-inverse over eigenvalues above 1e-8 max|lambda|. Throws
/// Errc::Disconnected when more than one eigenvalue falls below that cutoff.
FloatMatrix laplacian_pseudoinverse(const FloatMatrix& l);

/// R_{ab} = L+_{aa} + L+_{bb} - 2 L+_{ab} for all pairs.
FloatMatrix resistance_matrix(const FloatMatrix& pinv);

/// Pseudo-inverse route. Evaluates every vertex against vertex 0 and throws
/// Errc::StratumSpread when two vertices of one stratum differ by more than 1e-9.
ResistanceTable resistance_oracle(const AssociationScheme& scheme, const ConductanceVector& c);

/// Eigenmatrix route:
/// R^{(l)} = 2/(N k_l) sum_{k>=1} m_k (k_l - P_kl) / sum_i c_i (k_i - P_ki).
/// Throws Errc::ZeroDenominator when some denominator is <= 1e-12.
ResistanceTable resistance_spectral(const AssociationScheme& scheme, const SpectralData& spectral,
                                    const ConductanceVector& c);

/// A_m = sum_n C(m,n) A^n and A^l = sum_m Cinv(l,m) A_m, with A = A_1.
struct PolynomialCoefficients {
    RationalMatrix C;
    RationalMatrix Cinv;

    /// tr(A^l) = N Cinv(l,0)
    Rational power_trace(std::size_t l, std::size_t n_vertices) const { return Cinv(l, 0) * n_vertices; }
};

/// Exact expansion of A^0..A^d in the class basis and its inverse. Throws
/// Errc::FewerEigenvalues (with the rank) when A_1 does not generate the algebra.
PolynomialCoefficients polynomial_coefficients(const AssociationScheme& scheme);

/// Exact resistances with conductance c_1 on class 1 only (c_1 = 1 unless given):
/// R^{(m)} = 2/(N k_m c_1) sum_{n=1}^d C(m,n) (sum_{i=1}^n k^{n-i} tr(A^{i-1}) - n k^{n-1}).
ResistanceTable resistance_polynomial(const AssociationScheme& scheme, const PolynomialCoefficients& coeffs,
                                      const Rational& c1 = 1);

/// Exact resistance at class m of a distance-regular graph with N vertices,
/// from its intersection array, for 1 <= m <= min(5, d). Throws OutOfRange or
/// InvalidArray.
Rational resistance_drg_closed(const IntersectionArray& array, std::size_t n_vertices, std::size_t m);

/// Checks the array for consistency and returns the class sizes k_0..k_d.
/// Throws Errc::InvalidArray.
std::vector<Integer> drg_class_sizes(const IntersectionArray& array, std::size_t n_vertices);

ResistanceTable resistance_closed_form(const AssociationScheme& scheme);

struct FosterReport {
    double sum = 0;       // (N/2) sum_l c_l k_l R^{(l)}
    double expected = 0;  // N - 1
    double residual = 0;
    bool exact = false;
    bool pass = false;
};

/// Exact comparison for rational tables, 1e-9 otherwise.
FosterReport foster_sum(const AssociationScheme& scheme, const ConductanceVector& c, const ResistanceTable& table);

/// Whole-matrix properties of the pseudo-inverse route.
struct MetricReport {
    double symmetry = 0;            // max |R_ab - R_ba|
    double triangle_violation = 0;  // max (R_ac - R_ab - R_bc), clipped at 0
    double diagonal_spread = 0;     // max - min of diag(L+)
    double stratum_spread = 0;      // over every reference vertex
};

MetricReport metric_report(const AssociationScheme& scheme, const ConductanceVector& c);

}  // namespace assoc
