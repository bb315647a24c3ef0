#include "assoc/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace assoc {

ConductanceVector::ConductanceVector(std::vector<Rational> values) : values_(std::move(values)) {
    for (auto& v : values_) v.canonicalize();
}

ConductanceVector ConductanceVector::unit(std::size_t d) {
    std::vector<Rational> v(d, Rational(0));
    if (d > 0) v[0] = 1;
    return ConductanceVector(std::move(v));
}

ConductanceVector ConductanceVector::from_doubles(const std::vector<double>& values) {
    std::vector<Rational> v;
    v.reserve(values.size());
    for (double x : values) v.emplace_back(x);
    return ConductanceVector(std::move(v));
}

bool ConductanceVector::single_on_first() const {
    if (values_.empty() || sgn(values_[0]) <= 0) return false;
    return std::all_of(values_.begin() + 1, values_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void validate_conductances(const AssociationScheme& scheme, const ConductanceVector& c) {
    const std::size_t d = scheme.class_count();
    if (c.size() != d) {
        std::ostringstream msg;
        msg << c.size() << " conductances given for " << d << " classes";
        throw Error(Errc::ShapeMismatch, msg.str());
    }
    std::vector<bool> use(d + 1, false);
    bool any = false;
    for (std::size_t i = 1; i <= d; ++i) {
        if (sgn(c.at(i)) < 0) throw Error(Errc::BadParameter, "conductance c_" + std::to_string(i) + " is negative");
        use[i] = sgn(c.at(i)) > 0;
        any = any || use[i];
    }
    if (!any) throw Error(Errc::BadParameter, "all conductances are zero");
    if (!relations_connected(scheme, use))
        throw Error(Errc::Disconnected, "classes with positive conductance do not connect the vertices");
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Oracle: return "oracle";
        case Method::Spectral: return "spectral";
        case Method::Polynomial: return "polynomial";
        case Method::ClosedForm: return "closed";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : {Method::Oracle, Method::Spectral, Method::Polynomial, Method::ClosedForm})
        if (method_name(m) == name) return m;
    if (name == "closed_form") return Method::ClosedForm;
    return std::nullopt;
}

FloatMatrix laplacian(const AssociationScheme& scheme, const ConductanceVector& c) {
    const std::size_t n = scheme.vertex_count();
    const std::size_t d = scheme.class_count();
    if (c.size() != d) throw Error(Errc::ShapeMismatch, "conductance count differs from class count");
    std::vector<double> weight(d + 1, 0.0);
    double degree = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        weight[i] = c.value(i);
        degree += weight[i] * static_cast<double>(scheme.valency(i));
    }
    FloatMatrix l(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            l(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = -weight[scheme.label(a, b)];
    l.diagonal().setConstant(degree);
    return l;
}

FloatMatrix laplacian_pseudoinverse(const FloatMatrix& l) {
    const EigenDecomposition eig = eig_sym(l);
    double scale = 0;
    for (double x : eig.eigenvalues) scale = std::max(scale, std::abs(x));
    const double cutoff = 1e-8 * scale;
    const Eigen::Index n = l.rows();
    FloatMatrix pinv = FloatMatrix::Zero(n, n);
    std::size_t zeros = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double lambda = eig.eigenvalues[static_cast<std::size_t>(i)];
        if (std::abs(lambda) <= cutoff) {
            ++zeros;
            continue;
        }
        const auto v = eig.eigenvectors.col(i);
        pinv.noalias() += (1.0 / lambda) * v * v.transpose();
    }
    if (zeros > 1) {
        std::ostringstream msg;
        msg << "Laplacian has " << zeros << " zero eigenvalues";
        throw Error(Errc::Disconnected, msg.str());
    }
    return pinv;
}

FloatMatrix resistance_matrix(const FloatMatrix& pinv) {
    const FloatVector diag = pinv.diagonal();
    const Eigen::Index n = pinv.rows();
    FloatMatrix r(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) r(a, b) = diag(a) + diag(b) - 2.0 * pinv(a, b);
    return r;
}

ResistanceTable resistance_oracle(const AssociationScheme& scheme, const ConductanceVector& c) {
    validate_conductances(scheme, c);
    const std::size_t n = scheme.vertex_count();
    const std::size_t d1 = scheme.class_count() + 1;
    const FloatMatrix pinv = laplacian_pseudoinverse(laplacian(scheme, c));

    ResistanceTable t;
    t.method = Method::Oracle;
    t.values.assign(d1, 0.0);
    std::vector<double> lo(d1, INFINITY), hi(d1, -INFINITY);
    for (std::size_t b = 0; b < n; ++b) {
        const auto bi = static_cast<Eigen::Index>(b);
        const double r = pinv(0, 0) + pinv(bi, bi) - 2.0 * pinv(0, bi);
        const std::size_t l = scheme.label(0, b);
        lo[l] = std::min(lo[l], r);
        hi[l] = std::max(hi[l], r);
    }
    for (std::size_t l = 0; l < d1; ++l) {
        const auto rep = static_cast<Eigen::Index>(scheme.representative(l));
        t.values[l] = l == 0 ? 0.0 : pinv(0, 0) + pinv(rep, rep) - 2.0 * pinv(0, rep);
        t.stratum_spread = std::max(t.stratum_spread, hi[l] - lo[l]);
    }
    if (t.stratum_spread > 1e-9) {
        std::ostringstream msg;
        msg << "resistances within one stratum differ by " << t.stratum_spread;
        throw Error(Errc::StratumSpread, msg.str());
    }
    return t;
}

ResistanceTable resistance_spectral(const AssociationScheme& scheme, const SpectralData& spectral,
                                    const ConductanceVector& c) {
    validate_conductances(scheme, c);
    const std::size_t n = scheme.vertex_count();
    const std::size_t d = scheme.class_count();
    const auto& p = spectral.P;
    if (static_cast<std::size_t>(p.rows()) != d + 1 || spectral.multiplicities.size() != d + 1)
        throw Error(Errc::ShapeMismatch, "spectral data does not match the scheme");

    std::vector<double> denom(d + 1, 0.0);
    for (std::size_t k = 1; k <= d; ++k) {
        for (std::size_t i = 1; i <= d; ++i)
            denom[k] += c.value(i) * (static_cast<double>(scheme.valency(i)) - p(k, i));
        if (denom[k] <= 1e-12) {
            std::ostringstream msg;
            msg << "eigenspace " << k << " has Laplacian eigenvalue " << denom[k];
            throw Error(Errc::ZeroDenominator, msg.str());
        }
    }

    ResistanceTable t;
    t.method = Method::Spectral;
    t.values.assign(d + 1, 0.0);
    for (std::size_t l = 1; l <= d; ++l) {
        const double kl = static_cast<double>(scheme.valency(l));
        double s = 0;
        for (std::size_t k = 1; k <= d; ++k)
            s += static_cast<double>(spectral.multiplicities[k]) * (kl - p(k, l)) / denom[k];
        t.values[l] = 2.0 * s / (static_cast<double>(n) * kl);
    }
    return t;
}

PolynomialCoefficients polynomial_coefficients(const AssociationScheme& scheme) {
    const std::size_t n = scheme.vertex_count();
    const std::size_t d1 = scheme.class_count() + 1;

    // Row 0 of A^l as an exact integer vector; A^l = sum_m Cinv(l,m) A_m means
    // the row is constant on each class with value Cinv(l,m).
    const RelationMatrix& a = scheme.relation(d1 > 1 ? 1 : 0);
    std::vector<Integer> row(n, 0), next(n);
    row[0] = 1;
    RationalMatrix cinv(d1, d1);
    for (std::size_t l = 0; l < d1; ++l) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t m = scheme.label(0, b);
            if (b == scheme.representative(m)) cinv(l, m) = row[b];
            else if (row[b] != row[scheme.representative(m)])
                throw Error(Errc::NotClosed, "A^" + std::to_string(l) + " is not constant on class " + std::to_string(m));
        }
        if (l + 1 == d1) break;
        for (std::size_t b = 0; b < n; ++b) {
            next[b] = 0;
            for (std::size_t g = 0; g < n; ++g)
                if (a(g, b)) next[b] += row[g];
        }
        std::swap(row, next);
    }

    const std::size_t rank = rational_rank(cinv);
    if (rank < d1) {
        std::ostringstream msg;
        msg << "powers of A_1 span a space of dimension " << rank << " out of " << d1
            << "; A_1 has fewer than d+1 distinct eigenvalues";
        throw Error(Errc::FewerEigenvalues, msg.str());
    }
    PolynomialCoefficients out;
    out.C = rational_solve(cinv, RationalMatrix::identity(d1));
    out.Cinv = std::move(cinv);
    return out;
}

ResistanceTable resistance_polynomial(const AssociationScheme& scheme, const PolynomialCoefficients& coeffs,
                                      const Rational& c1) {
    const std::size_t d = scheme.class_count();
    if (d == 0) throw Error(Errc::BadParameter, "scheme has no classes");
    if (sgn(c1) <= 0) throw Error(Errc::BadParameter, "conductance c_1 must be positive");
    validate_conductances(scheme, ConductanceVector::unit(d));
    const std::size_t n = scheme.vertex_count();
    const Integer kappa = static_cast<unsigned long>(scheme.valency(1));

    // inner[n] = sum_{i=1}^n k^{n-i} tr(A^{i-1}) - n k^{n-1}
    std::vector<Rational> inner(d + 1, Rational(0));
    for (std::size_t p = 1; p <= d; ++p) {
        Rational s = 0;
        Integer kpow = 1;  // k^{p-i}, i running down from p
        for (std::size_t i = p; i >= 1; --i) {
            s += kpow * coeffs.power_trace(i - 1, n);
            if (i > 1) kpow *= kappa;
        }
        Integer k_p1;
        mpz_pow_ui(k_p1.get_mpz_t(), kappa.get_mpz_t(), static_cast<unsigned long>(p - 1));
        s -= Rational(static_cast<unsigned long>(p)) * k_p1;
        inner[p] = s;
    }

    ResistanceTable t;
    t.method = Method::Polynomial;
    std::vector<Rational> exact(d + 1, Rational(0));
    t.values.assign(d + 1, 0.0);
    for (std::size_t m = 1; m <= d; ++m) {
        Rational s = 0;
        for (std::size_t p = 1; p <= d; ++p) s += coeffs.C(m, p) * inner[p];
        const Rational scale = Rational(2) / (Rational(static_cast<unsigned long>(n)) *
                                              Rational(static_cast<unsigned long>(scheme.valency(m))) * c1);
        exact[m] = s * scale;
        exact[m].canonicalize();
        t.values[m] = exact[m].get_d();
    }
    t.exact = std::move(exact);
    return t;
}

FosterReport foster_sum(const AssociationScheme& scheme, const ConductanceVector& c, const ResistanceTable& table) {
    const std::size_t n = scheme.vertex_count();
    const std::size_t d = scheme.class_count();
    if (table.values.size() != d + 1 || c.size() != d)
        throw Error(Errc::ShapeMismatch, "table or conductances do not match the scheme");
    FosterReport r;
    r.expected = static_cast<double>(n) - 1.0;
    if (table.exact) {
        Rational s = 0;
        for (std::size_t l = 1; l <= d; ++l)
            s += c.at(l) * Rational(static_cast<unsigned long>(scheme.valency(l))) * (*table.exact)[l];
        Rational half_n(static_cast<unsigned long>(n), 2);
        half_n.canonicalize();
        s *= half_n;
        s.canonicalize();
        r.exact = true;
        r.sum = s.get_d();
        r.residual = std::abs(r.sum - r.expected);
        r.pass = s == Rational(static_cast<unsigned long>(n - 1));
        return r;
    }
    double s = 0;
    for (std::size_t l = 1; l <= d; ++l) s += c.value(l) * static_cast<double>(scheme.valency(l)) * table.values[l];
    r.sum = 0.5 * static_cast<double>(n) * s;
    r.residual = std::abs(r.sum - r.expected);
    r.pass = r.residual <= 1e-9;
    return r;
}

MetricReport metric_report(const AssociationScheme& scheme, const ConductanceVector& c) {
    validate_conductances(scheme, c);
    const FloatMatrix pinv = laplacian_pseudoinverse(laplacian(scheme, c));
    const FloatMatrix r = resistance_matrix(pinv);
    const auto n = r.rows();
    const std::size_t d1 = scheme.class_count() + 1;

    MetricReport out;
    out.symmetry = max_abs(r - r.transpose());
    out.diagonal_spread = pinv.diagonal().maxCoeff() - pinv.diagonal().minCoeff();
    for (Eigen::Index b = 0; b < n; ++b)
        for (Eigen::Index a = 0; a < n; ++a) {
            const double rab = r(a, b);
            for (Eigen::Index cc = 0; cc < n; ++cc)
                out.triangle_violation = std::max(out.triangle_violation, r(a, cc) - rab - r(b, cc));
        }
    for (Eigen::Index a = 0; a < n; ++a) {
        std::vector<double> lo(d1, INFINITY), hi(d1, -INFINITY);
        for (Eigen::Index b = 0; b < n; ++b) {
            const std::size_t l = scheme.label(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            lo[l] = std::min(lo[l], r(a, b));
            hi[l] = std::max(hi[l], r(a, b));
        }
        for (std::size_t l = 0; l < d1; ++l) out.stratum_spread = std::max(out.stratum_spread, hi[l] - lo[l]);
    }
    return out;
}

}  // namespace assoc
