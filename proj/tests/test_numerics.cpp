#include <doctest.h>

#include <algorithm>
#include <random>

#include "assoc/builders.hpp"
#include "assoc/numerics.hpp"
#include "oracles.hpp"

using namespace assoc;
using oracle::q;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

std::vector<std::size_t> ranks(const std::vector<FloatMatrix>& projectors) {
    std::vector<std::size_t> r;
    for (const auto& e : projectors) r.push_back(static_cast<std::size_t>(std::lround(e.trace())));
    std::sort(r.begin(), r.end());
    return r;
}

void check_projector_family(const std::vector<FloatMatrix>& family, const std::vector<FloatMatrix>& e) {
    const auto n = family.front().rows();
    FloatMatrix total = FloatMatrix::Zero(n, n);
    for (std::size_t j = 0; j < e.size(); ++j) {
        total += e[j];
        for (std::size_t k = 0; k < e.size(); ++k) {
            const FloatMatrix prod = e[j] * e[k];
            CHECK(max_abs(j == k ? FloatMatrix(prod - e[j]) : prod) <= 1e-8);
        }
    }
    CHECK(max_abs(total - FloatMatrix::Identity(n, n)) <= 1e-8);
    // each member acts as a scalar on each projector
    for (const auto& m : family)
        for (const auto& p : e) {
            const double lambda = (m * p).trace() / p.trace();
            CHECK(max_abs(m * p - lambda * p) <= 1e-8);
        }
}

}  // namespace

TEST_CASE("rational_solve: identity returns the right-hand side") {
    const RationalMatrix b = from_rows({{1, -2}, {3, 4}, {5, 0}});
    CHECK(rational_solve(RationalMatrix::identity(3), b) == b);
}

TEST_CASE("rational_solve: 2x + y = 5, x - y = 1") {
    const RationalMatrix x = rational_solve(from_rows({{2, 1}, {1, -1}}), from_rows({{5}, {1}}));
    CHECK(x(0, 0) == 2);
    CHECK(x(1, 0) == 1);
}

TEST_CASE("rational_solve: S4 power system gives A_4 = (A^3 - 20A)/16") {
    // Unknowns A_2, A_3, A_4; right-hand sides in the basis A^0..A^4:
    // A^2 - 6A_0 = 3A_2 + 2A_3, A^3 - 20A = 16A_4, A^4 - 120A_0 = 108A_2 + 104A_3.
    const RationalMatrix a = from_rows({{3, 2, 0}, {0, 0, 16}, {108, 104, 0}});
    const RationalMatrix b = from_rows({{-6, 0, 1, 0, 0}, {0, -20, 0, 1, 0}, {-120, 0, 0, 0, 1}});
    const RationalMatrix x = rational_solve(a, b);
    CHECK(x(2, 0) == 0);
    CHECK(x(2, 1) == q(-5, 4));
    CHECK(x(2, 2) == 0);
    CHECK(x(2, 3) == q(1, 16));
    CHECK(x(2, 4) == 0);
    // A_2 = -(A^4 - 52A^2 + 192)/48
    CHECK(x(0, 0) == -4);
    CHECK(x(0, 2) == q(13, 12));
    CHECK(x(0, 4) == q(-1, 48));
    CHECK((a * x - b).is_zero());
}

TEST_CASE("rational_solve: singular system") {
    const RationalMatrix a = from_rows({{1, 2}, {2, 4}});
    CHECK_THROWS_AS(rational_solve(a, RationalMatrix::identity(2)), Error);
    try {
        rational_solve(a, RationalMatrix::identity(2));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularSystem);
    }
    CHECK(rational_rank(a) == 1);
}

TEST_CASE("rational_solve: random integer systems round-trip exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix a(6, 6), b(6, 2);
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) a(i, j) = entry(rng);
            for (std::size_t j = 0; j < 2; ++j) b(i, j) = entry(rng);
        }
        if (rational_rank(a) < 6) continue;
        CHECK((a * rational_solve(a, b) - b).is_zero());
    }
}

TEST_CASE("eig_sym: diagonal, K4 Laplacian, C4 adjacency") {
    FloatMatrix d = FloatMatrix::Zero(3, 3);
    d.diagonal() << 3, 1, 2;
    auto e = eig_sym(d);
    CHECK(e.eigenvalues[0] == doctest::Approx(1));
    CHECK(e.eigenvalues[1] == doctest::Approx(2));
    CHECK(e.eigenvalues[2] == doctest::Approx(3));

    FloatMatrix k4 = -FloatMatrix::Ones(4, 4);
    k4.diagonal().setConstant(3);
    e = eig_sym(k4);
    const std::vector<double> want{0, 4, 4, 4};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(e.eigenvalues[i] - want[i]) < 1e-12);

    const FloatMatrix c4 = build_cycle(4).relation(1).to_float();
    e = eig_sym(c4);
    const std::vector<double> want_c4{-2, 0, 0, 2};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(e.eigenvalues[i] - want_c4[i]) < 1e-12);
}

TEST_CASE("eig_sym: residual, orthonormality and reconstruction on random symmetric matrices") {
    std::mt19937 rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 5; ++trial) {
        FloatMatrix m(12, 12);
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = g(rng);
        const auto e = eig_sym(m);
        const double scale = norm_inf(m);
        FloatMatrix rebuilt = FloatMatrix::Zero(12, 12);
        for (int i = 0; i < 12; ++i) {
            const FloatVector v = e.eigenvectors.col(i);
            CHECK((m * v - e.eigenvalues[static_cast<std::size_t>(i)] * v).cwiseAbs().maxCoeff() <= 1e-9 * scale);
            rebuilt += e.eigenvalues[static_cast<std::size_t>(i)] * v * v.transpose();
            if (i > 0) CHECK(e.eigenvalues[static_cast<std::size_t>(i)] >= e.eigenvalues[static_cast<std::size_t>(i - 1)]);
        }
        CHECK(max_abs(e.eigenvectors.transpose() * e.eigenvectors - FloatMatrix::Identity(12, 12)) <= 1e-10);
        CHECK(norm_inf(rebuilt - m) <= 1e-8 * scale);
    }
}

TEST_CASE("eig_sym: rejects asymmetric input") {
    FloatMatrix m = FloatMatrix::Identity(3, 3);
    m(0, 1) = 1e-6;
    try {
        eig_sym(m);
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSymmetric);
    }
}

TEST_CASE("simultaneous_eigenbasis: identity family") {
    const std::vector<FloatMatrix> family{FloatMatrix::Identity(3, 3)};
    const auto e = simultaneous_eigenbasis(family);
    REQUIRE(e.size() == 1);
    CHECK(max_abs(e[0] - FloatMatrix::Identity(3, 3)) <= 1e-12);
}

TEST_CASE("simultaneous_eigenbasis: C6 family has ranks {1,2,2,1}") {
    const auto s = build_cycle(6);
    std::vector<FloatMatrix> family;
    for (std::size_t i = 1; i <= s.class_count(); ++i) family.push_back(s.relation(i).to_float());
    const auto e = simultaneous_eigenbasis(family);
    CHECK(ranks(e) == std::vector<std::size_t>{1, 1, 2, 2});
    check_projector_family(family, e);
}

TEST_CASE("simultaneous_eigenbasis: S4 class sums have ranks {1,1,4,9,9}") {
    const auto s = build_group_scheme(symmetric_group_s4());
    std::vector<FloatMatrix> family;
    for (std::size_t i = 1; i <= s.class_count(); ++i) family.push_back(s.relation(i).to_float());
    const auto e = simultaneous_eigenbasis(family);
    CHECK(ranks(e) == std::vector<std::size_t>{1, 1, 4, 9, 9});
    check_projector_family(family, e);
}

TEST_CASE("simultaneous_eigenbasis: non-commuting pair") {
    FloatMatrix a = FloatMatrix::Zero(2, 2), b = FloatMatrix::Zero(2, 2);
    a(0, 0) = 1;
    b(0, 1) = b(1, 0) = 1;
    try {
        simultaneous_eigenbasis({a, b});
        FAIL("expected NotCommuting");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotCommuting);
        CHECK(std::string(e.what()).find("[M_i,M_j]") != std::string::npos);
    }
}

TEST_CASE("power_traces: K3, zero diagonal, S4 transpositions") {
    RationalMatrix k3(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) k3(i, j) = i == j ? 0 : 1;
    const auto t = power_traces(k3, 3);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == 3);
    CHECK(t[1] == 0);
    CHECK(t[2] == 6);
    CHECK(t[3] == 6);

    const auto s4 = build_group_scheme(symmetric_group_s4());
    const auto ts = power_traces(s4.relation(1).to_rational(), 2);
    CHECK(ts[0] == 24);
    CHECK(ts[1] == 0);
    CHECK(ts[2] == 144);
}

TEST_CASE("power_traces agrees with integer matrix powers") {
    const auto s = build_orbit_scheme_z5z5();
    const auto exact = power_traces(s.relation(1).to_rational(), 6);
    const oracle::IntMatrix a = oracle::dense(s.relation(1));
    oracle::IntMatrix p = oracle::IntMatrix::Identity(a.rows(), a.cols());
    for (std::size_t l = 0; l <= 6; ++l) {
        CHECK(exact[l] == mpq_class(static_cast<long>(p.trace())));
        p = p * a;
    }
}
