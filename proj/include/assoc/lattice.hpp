#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace assoc {

enum class LatticeKind { Square, Hexagonal };

/// 2-D integer vector.
using LatticeVector = std::array<long, 2>;

/// Point group as integer 2x2 matrices {a, b, c, d} acting by (x,y) -> (ax+by, cx+dy).
/// Square: the dihedral group of order 8. Hexagonal: order 12, generated by
/// negation, the coordinate swap and the sixfold rotation (x,y) -> (x-y, x).
const std::vector<std::array<long, 4>>& point_group(LatticeKind kind);

/// Distinct images of v under the point group, sorted.
std::vector<LatticeVector> orbit(LatticeKind kind, LatticeVector v);

/// Distinct images of v in Z_m x Z_m, each coordinate reduced into [0, m), sorted.
std::vector<LatticeVector> orbit_mod(LatticeKind kind, long m, LatticeVector v);

/// Nearest neighbours of the origin: the orbit of (1,0).
std::vector<LatticeVector> nearest_neighbours(LatticeKind kind);

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    std::size_t evaluations = 0;
};

struct QuadratureOptions {
    double abs_tolerance = 1e-10;
    std::size_t max_depth = 40;
    std::size_t max_evaluations = 20'000'000;
};

/// Adaptive Simpson rule with Richardson correction. Throws
/// Errc::QuadratureNotConverged when the evaluation budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Resistance between sites l apart on the infinite chain of unit resistors,
/// (1/2pi) int_0^{2pi} (1 - cos lx)/(1 - cos x) dx.
QuadratureResult infinite_line_resistance(long l, const QuadratureOptions& options = {});

/// Resistance between the origin and (l1, l2) on the infinite square or
/// triangular-coordinate hexagonal lattice with unit nearest-neighbour
/// conductances. Error target is absolute.
QuadratureResult infinite_lattice_resistance(LatticeKind kind, long l1, long l2,
                                             double abs_tolerance = 1e-7);

/// Direct double cosine sum over the m x m torus with unit nearest-neighbour
/// conductances.
double finite_lattice_resistance_formula(LatticeKind kind, long m, long l1, long l2);

/// Richardson estimate of the infinite-lattice value from tori of sizes m/2, m
/// (error falls like 1/m^2).
double finite_lattice_extrapolation(LatticeKind kind, long m, long l1, long l2);

}  // namespace assoc
