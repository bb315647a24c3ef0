#include "assoc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "assoc/error.hpp"

namespace assoc {

namespace {

using Mat2 = std::array<long, 4>;

Mat2 compose(const Mat2& p, const Mat2& q) {
    return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
            p[2] * q[1] + p[3] * q[3]};
}

std::vector<Mat2> closure(const std::vector<Mat2>& generators) {
    std::set<Mat2> group{{1, 0, 0, 1}};
    std::vector<Mat2> frontier{{1, 0, 0, 1}};
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& g : frontier)
            for (const auto& s : generators) {
                const Mat2 h = compose(s, g);
                if (group.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

}  // namespace

const std::vector<std::array<long, 4>>& point_group(LatticeKind kind) {
    static const std::vector<Mat2> square = closure({{0, 1, 1, 0}, {1, 0, 0, -1}});
    static const std::vector<Mat2> hexagonal = closure({{-1, 0, 0, -1}, {0, 1, 1, 0}, {1, -1, 1, 0}});
    return kind == LatticeKind::Square ? square : hexagonal;
}

std::vector<LatticeVector> orbit(LatticeKind kind, LatticeVector v) {
    std::set<LatticeVector> out;
    for (const auto& g : point_group(kind)) out.insert({g[0] * v[0] + g[1] * v[1], g[2] * v[0] + g[3] * v[1]});
    return {out.begin(), out.end()};
}

std::vector<LatticeVector> orbit_mod(LatticeKind kind, long m, LatticeVector v) {
    if (m < 1) throw Error(Errc::BadParameter, "period must be positive");
    std::set<LatticeVector> out;
    for (const auto& w : orbit(kind, v)) out.insert({((w[0] % m) + m) % m, ((w[1] % m) + m) % m});
    return {out.begin(), out.end()};
}

std::vector<LatticeVector> nearest_neighbours(LatticeKind kind) { return orbit(kind, {1, 0}); }

namespace {

struct Simpson {
    const std::function<double(double)>& f;
    const QuadratureOptions& opt;
    std::size_t evaluations = 0;
    double error = 0;
    bool failed = false;

    double eval(double x) {
        ++evaluations;
        return f(x);
    }

    double step(double a, double b, double fa, double fm, double fb, double whole, double tol, std::size_t depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = eval(lm), frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        const bool converged = depth >= 3 && std::abs(delta) <= 15.0 * tol;
        if (converged || depth >= opt.max_depth || evaluations > opt.max_evaluations) {
            if (!converged) failed = true;
            error += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return step(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               step(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
    Simpson s{f, options};
    const double fa = s.eval(a), fb = s.eval(b), fm = s.eval(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double value = s.step(a, b, fa, fm, fb, whole, options.abs_tolerance, 0);
    if (s.failed) {
        std::ostringstream msg;
        msg << "adaptive Simpson on [" << a << ", " << b << "] stopped with error estimate " << s.error
            << " after " << s.evaluations << " evaluations";
        throw Error(Errc::QuadratureNotConverged, msg.str());
    }
    return {value, s.error, s.evaluations};
}

QuadratureResult infinite_line_resistance(long l, const QuadratureOptions& options) {
    if (l < 0) l = -l;
    if (l == 0) return {0.0, 0.0, 0};
    // (1 - cos lx)/(1 - cos x) = sin^2(lx/2)/sin^2(x/2), or the Fejer sum
    // l + 2 sum_{j<l} (l-j) cos(jx) near the removable singularity.
    auto f = [l](double x) {
        const double s = std::sin(0.5 * x);
        if (std::abs(s) > 1e-3) {
            const double t = std::sin(0.5 * static_cast<double>(l) * x);
            return t * t / (s * s);
        }
        double sum = static_cast<double>(l);
        for (long j = 1; j < l; ++j) sum += 2.0 * static_cast<double>(l - j) * std::cos(static_cast<double>(j) * x);
        return sum;
    };
    // f is symmetric about pi.
    QuadratureOptions opt = options;
    opt.abs_tolerance = options.abs_tolerance * std::numbers::pi;
    auto r = integrate(f, 0.0, std::numbers::pi, opt);
    return {r.value / std::numbers::pi, r.error_estimate / std::numbers::pi, r.evaluations};
}

namespace {

// sum_{g in O} 2 sin^2(<g,x>/2), and its quadratic form at the origin along x.
struct OrbitKernel {
    std::vector<LatticeVector> members;

    double value(double x, double y) const {
        double s = 0;
        for (const auto& g : members) {
            const double t = std::sin(0.5 * (static_cast<double>(g[0]) * x + static_cast<double>(g[1]) * y));
            s += 2.0 * t * t;
        }
        return s;
    }
    double quadratic(double x, double y) const {
        double s = 0;
        for (const auto& g : members) {
            const double t = static_cast<double>(g[0]) * x + static_cast<double>(g[1]) * y;
            s += t * t;
        }
        return s;
    }
};

}  // namespace

QuadratureResult infinite_lattice_resistance(LatticeKind kind, long l1, long l2, double abs_tolerance) {
    if (l1 == 0 && l2 == 0) throw Error(Errc::BadParameter, "separation (0,0) has zero resistance by definition");
    const OrbitKernel target{orbit(kind, {l1, l2})};
    const OrbitKernel base{nearest_neighbours(kind)};
    const double kappa = static_cast<double>(target.members.size());
    const double pi = std::numbers::pi;

    // The ratio is bounded; at the origin use the limit along the inner
    // integration direction (0, 1).
    auto ratio = [&](double x, double y) {
        const double den = base.value(x, y);
        if (den < 1e-24) return target.quadratic(x, y == 0 && x == 0 ? 1.0 : y) /
                                 base.quadratic(x, y == 0 && x == 0 ? 1.0 : y);
        return target.value(x, y) / den;
    };

    // R = (2/kappa) (2pi)^-2 int_{[-pi,pi]^2} ratio; the integrand is even,
    // so twice the upper half plane, split at the singular corner.
    const double scale = 2.0 * 2.0 / (kappa * 4.0 * pi * pi);
    const double tol = abs_tolerance / scale;
    QuadratureOptions outer;
    outer.abs_tolerance = 0.5 * tol;
    QuadratureOptions inner;
    inner.abs_tolerance = 0.25 * tol / pi;
    std::size_t evaluations = 0;
    double inner_error = 0;
    auto slice = [&](double x) {
        double total = 0;
        for (double sign : {1.0, -1.0}) {
            auto g = [&](double y) { return ratio(sign * x, y); };
            const auto r = integrate(g, 0.0, pi, inner);
            evaluations += r.evaluations;
            inner_error = std::max(inner_error, r.error_estimate);
            total += r.value;
        }
        return total;
    };
    const auto r = integrate(slice, 0.0, pi, outer);
    return {scale * r.value, scale * (r.error_estimate + pi * inner_error), evaluations};
}

namespace {

double orbit_eigenvalue(const std::vector<LatticeVector>& members, long m, long k1, long k2) {
    const double w = 2.0 * std::numbers::pi / static_cast<double>(m);
    double s = 0;
    for (const auto& g : members) {
        const long phase = ((g[0] * k1 + g[1] * k2) % m + m) % m;
        s += std::cos(w * static_cast<double>(phase));
    }
    return s;
}

}  // namespace

double finite_lattice_resistance_formula(LatticeKind kind, long m, long l1, long l2) {
    if (m < 3) throw Error(Errc::TooSmall, "lattice period must be at least 3");
    const auto target = orbit_mod(kind, m, {l1, l2});
    const auto base = orbit_mod(kind, m, {1, 0});
    if (target.size() == 1 && target.front() == LatticeVector{0, 0}) return 0.0;
    const double kl = static_cast<double>(target.size());
    const double k1 = static_cast<double>(base.size());
    double sum = 0;
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b) {
            if (a == 0 && b == 0) continue;
            sum += (kl - orbit_eigenvalue(target, m, a, b)) / (k1 - orbit_eigenvalue(base, m, a, b));
        }
    return 2.0 * sum / (static_cast<double>(m) * static_cast<double>(m) * kl);
}

double finite_lattice_extrapolation(LatticeKind kind, long m, long l1, long l2) {
    const double fine = finite_lattice_resistance_formula(kind, m, l1, l2);
    const double coarse = finite_lattice_resistance_formula(kind, m / 2, l1, l2);
    const double ratio = static_cast<double>(m) / static_cast<double>(m / 2);
    return (ratio * ratio * fine - coarse) / (ratio * ratio - 1.0);
}

}  // namespace assoc
