#include "assoc/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace assoc {

RelationMatrix RelationMatrix::identity(std::size_t n) {
    RelationMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FloatMatrix RelationMatrix::to_float() const {
    FloatMatrix m(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(r, c) = (*this)(r, c);
    return m;
}

RationalMatrix RelationMatrix::to_rational() const {
    RationalMatrix m(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            if ((*this)(r, c)) m(r, c) = 1;
    return m;
}

namespace {

std::string relation_name(std::size_t i) { return "A_" + std::to_string(i); }

}  // namespace

AssociationScheme verify_scheme(std::vector<RelationMatrix> relations,
                                std::vector<std::string> class_names, std::string name) {
    if (relations.empty()) throw Error(Errc::ShapeMismatch, "no relation matrices");
    const std::size_t n = relations.front().size();
    const std::size_t d1 = relations.size();
    if (n == 0) throw Error(Errc::ShapeMismatch, "empty vertex set");
    if (d1 > 65535) throw Error(Errc::ShapeMismatch, "too many classes");
    if (!class_names.empty() && class_names.size() != d1)
        throw Error(Errc::ShapeMismatch, "class_names has " + std::to_string(class_names.size()) +
                                             " entries for " + std::to_string(d1) + " relations");

    for (std::size_t i = 0; i < d1; ++i) {
        const auto& a = relations[i];
        if (a.size() != n || a.data().size() != n * n)
            throw Error(Errc::ShapeMismatch, relation_name(i) + " is not " + std::to_string(n) +
                                                 "x" + std::to_string(n));
        for (auto v : a.data())
            if (v > 1) throw Error(Errc::NotZeroOne, relation_name(i) + " has an entry outside {0,1}");
    }

    if (relations[0] != RelationMatrix::identity(n))
        throw Error(Errc::IdentityMissing, "A_0 must be the identity matrix");

    std::vector<std::uint16_t> labels(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            int hits = 0;
            for (std::size_t i = 0; i < d1; ++i) {
                if (relations[i](a, b)) {
                    labels[a * n + b] = static_cast<std::uint16_t>(i);
                    ++hits;
                }
            }
            if (hits != 1) {
                std::ostringstream msg;
                msg << "entry (" << a << "," << b << ") is covered by " << hits
                    << " relations; the A_i must sum to J";
                throw Error(Errc::NotPartition, msg.str());
            }
        }
    }

    std::vector<std::size_t> representatives(d1, n);
    for (std::size_t b = 0; b < n; ++b)
        if (representatives[labels[b]] == n) representatives[labels[b]] = b;
    for (std::size_t i = 0; i < d1; ++i)
        if (representatives[i] == n)
            throw Error(Errc::NotPartition, relation_name(i) + " has no entry in row 0");

    for (std::size_t i = 0; i < d1; ++i) {
        const auto& a = relations[i];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c)
                if (a(r, c) != a(c, r)) {
                    std::ostringstream msg;
                    msg << relation_name(i) << " differs at (" << r << "," << c << ") and (" << c
                        << "," << r << ")";
                    throw Error(Errc::NotSymmetric, msg.str());
                }
    }

    // p^k_{ij} is the number of gamma with (alpha,gamma) in R_i and
    // (gamma,beta) in R_j, and must depend only on the class k of (alpha,beta).
    IntersectionNumbers p(d1);
    std::vector<bool> seen(d1, false);
    const std::size_t block = d1 * d1;
    std::vector<std::uint32_t> counts(n * block);
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        std::fill(counts.begin(), counts.end(), 0u);
        const std::uint16_t* row_alpha = &labels[alpha * n];
        for (std::size_t gamma = 0; gamma < n; ++gamma) {
            const std::size_t i = row_alpha[gamma];
            const std::uint16_t* row_gamma = &labels[gamma * n];
            std::uint32_t* base = counts.data() + i * d1;
            for (std::size_t beta = 0; beta < n; ++beta) ++base[beta * block + row_gamma[beta]];
        }
        for (std::size_t beta = 0; beta < n; ++beta) {
            const std::size_t k = row_alpha[beta];
            const std::uint32_t* c = counts.data() + beta * block;
            if (!seen[k]) {
                for (std::size_t i = 0; i < d1; ++i)
                    for (std::size_t j = 0; j < d1; ++j) p(i, j, k) = c[i * d1 + j];
                seen[k] = true;
                continue;
            }
            for (std::size_t i = 0; i < d1; ++i) {
                for (std::size_t j = 0; j < d1; ++j) {
                    if (p(i, j, k) != static_cast<std::int64_t>(c[i * d1 + j])) {
                        std::ostringstream msg;
                        msg << relation_name(i) << relation_name(j) << " is not a combination of the A_k: "
                            << "its entries on " << relation_name(k) << " take the values " << p(i, j, k)
                            << " and " << c[i * d1 + j];
                        throw Error(Errc::NotClosed, msg.str());
                    }
                }
            }
        }
    }

    for (std::size_t k = 0; k < d1; ++k)
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = i + 1; j < d1; ++j)
                if (p(i, j, k) != p(j, i, k)) {
                    std::ostringstream msg;
                    msg << "p^" << k << "_{" << i << j << "} = " << p(i, j, k) << " but p^" << k << "_{"
                        << j << i << "} = " << p(j, i, k);
                    throw Error(Errc::NotCommutative, msg.str());
                }

    AssociationScheme s;
    s.n_ = n;
    s.relations_ = std::move(relations);
    s.labels_ = std::move(labels);
    s.valencies_.resize(d1);
    for (std::size_t i = 0; i < d1; ++i) s.valencies_[i] = static_cast<std::size_t>(p(i, i, 0));
    s.representatives_ = std::move(representatives);
    s.p_ = std::move(p);
    if (class_names.empty())
        for (std::size_t i = 0; i < d1; ++i) class_names.push_back(std::to_string(i));
    s.class_names_ = std::move(class_names);
    s.name_ = std::move(name);
    return s;
}

namespace {

// sum_{(a,b) in R_j} M(a,b) for every class j.
std::vector<double> class_sums(const AssociationScheme& scheme, const FloatMatrix& m) {
    const std::size_t n = scheme.vertex_count();
    std::vector<double> sums(scheme.class_count() + 1, 0.0);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a)
            sums[scheme.label(a, b)] += m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    return sums;
}

bool rows_descending(const std::vector<double>& x, const std::vector<double>& y) {
    for (std::size_t j = 1; j < x.size(); ++j) {
        if (std::abs(x[j] - y[j]) > 1e-7) return x[j] > y[j];
    }
    return false;
}

}  // namespace

SpectralData spectral_data(const AssociationScheme& scheme) {
    const std::size_t n = scheme.vertex_count();
    const std::size_t d1 = scheme.class_count() + 1;

    std::vector<FloatMatrix> family;
    for (std::size_t i = 1; i < d1; ++i) family.push_back(scheme.relation(i).to_float());
    if (family.empty()) family.push_back(FloatMatrix::Identity(n, n));

    std::vector<FloatMatrix> projectors = simultaneous_eigenbasis(family);
    if (projectors.size() != d1) {
        std::ostringstream msg;
        msg << "found " << projectors.size() << " common eigenspaces, expected " << d1;
        throw Error(Errc::DegenerateSplit, msg.str());
    }

    struct Entry {
        FloatMatrix e;
        std::size_t m;
        std::vector<double> row;
    };
    std::vector<Entry> entries;
    for (auto& e : projectors) {
        const double tr = e.trace();
        const double rounded = std::round(tr);
        if (std::abs(tr - rounded) >= 1e-6 || rounded < 1) {
            std::ostringstream msg;
            msg << "projector trace " << tr << " is not a positive integer";
            throw Error(Errc::DegenerateSplit, msg.str());
        }
        auto sums = class_sums(scheme, e);
        for (auto& x : sums) x /= rounded;
        entries.push_back({std::move(e), static_cast<std::size_t>(rounded), std::move(sums)});
    }

    // E_0 is the eigenspace on which every A_j acts as its valency.
    auto is_trivial = [&](const Entry& en) {
        if (en.m != 1) return false;
        for (std::size_t j = 0; j < d1; ++j)
            if (std::abs(en.row[j] - static_cast<double>(scheme.valency(j))) > 1e-7) return false;
        return true;
    };
    auto trivial = std::find_if(entries.begin(), entries.end(), is_trivial);
    if (trivial == entries.end())
        throw Error(Errc::DegenerateSplit, "no eigenspace with eigenvalues equal to the valencies");
    std::iter_swap(entries.begin(), trivial);
    std::sort(entries.begin() + 1, entries.end(),
              [](const Entry& a, const Entry& b) { return rows_descending(a.row, b.row); });

    SpectralData out;
    out.P.resize(d1, d1);
    out.Q.resize(d1, d1);
    for (std::size_t k = 0; k < d1; ++k) {
        for (std::size_t j = 0; j < d1; ++j) out.P(k, j) = entries[k].row[j];
        out.multiplicities.push_back(entries[k].m);
        out.idempotents.push_back(std::move(entries[k].e));
    }
    // Q_{jk} = m_k P_{kj} / kappa_j
    for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t k = 0; k < d1; ++k)
            out.Q(j, k) = static_cast<double>(out.multiplicities[k]) * out.P(k, j) /
                          static_cast<double>(scheme.valency(j));

    const FloatMatrix j_over_n = FloatMatrix::Constant(n, n, 1.0 / static_cast<double>(n));
    const double e0 = max_abs(out.idempotents[0] - j_over_n);
    if (e0 > 1e-8) {
        std::ostringstream msg;
        msg << "|E_0 - J/N|_max = " << e0;
        throw Error(Errc::DegenerateSplit, msg.str());
    }
    const double pq = max_abs(out.P * out.Q - static_cast<double>(n) * FloatMatrix::Identity(d1, d1));
    if (pq > 1e-7) {
        std::ostringstream msg;
        msg << "|PQ - NI|_max = " << pq;
        throw Error(Errc::DegenerateSplit, msg.str());
    }
    return out;
}

SpectralResiduals check_spectral_invariants(const AssociationScheme& scheme,
                                            const SpectralData& spectral) {
    const std::size_t n = scheme.vertex_count();
    const std::size_t d1 = scheme.class_count() + 1;
    const auto& e = spectral.idempotents;
    SpectralResiduals r;

    r.pq_minus_ni = max_abs(spectral.P * spectral.Q - static_cast<double>(n) * FloatMatrix::Identity(d1, d1));
    r.e0_minus_j_over_n = max_abs(e[0] - FloatMatrix::Constant(n, n, 1.0 / static_cast<double>(n)));
    r.multiplicity_sum = std::accumulate(spectral.multiplicities.begin(), spectral.multiplicities.end(),
                                         std::size_t{0});

    FloatMatrix total = FloatMatrix::Zero(n, n);
    for (std::size_t j = 0; j < d1; ++j) {
        total += e[j];
        for (std::size_t k = 0; k < d1; ++k) {
            const FloatMatrix prod = e[j] * e[k];
            r.idempotent_products = std::max(r.idempotent_products, max_abs(j == k ? prod - e[j] : prod));
        }
    }
    r.resolution_of_identity = max_abs(total - FloatMatrix::Identity(n, n));

    for (std::size_t j = 0; j < d1; ++j) {
        const FloatMatrix a = scheme.relation(j).to_float();
        FloatMatrix rebuilt = FloatMatrix::Zero(n, n);
        for (std::size_t k = 0; k < d1; ++k) {
            rebuilt += spectral.P(k, j) * e[k];
            r.eigen_relation = std::max(r.eigen_relation, max_abs(a * e[k] - spectral.P(k, j) * e[k]));
        }
        r.reconstruction = std::max(r.reconstruction, max_abs(a - rebuilt));
    }
    return r;
}

Stratification stratify(const AssociationScheme& scheme, std::size_t reference) {
    const std::size_t n = scheme.vertex_count();
    const std::size_t d1 = scheme.class_count() + 1;
    if (reference >= n) throw Error(Errc::OutOfRange, "reference vertex " + std::to_string(reference));

    Stratification s;
    s.reference = reference;
    s.strata.resize(d1);
    for (std::size_t b = 0; b < n; ++b) s.strata[scheme.label(reference, b)].push_back(b);
    for (std::size_t i = 0; i < d1; ++i) {
        FloatVector v = FloatVector::Zero(static_cast<Eigen::Index>(n));
        const double w = 1.0 / std::sqrt(static_cast<double>(s.strata[i].size()));
        for (auto b : s.strata[i]) v(static_cast<Eigen::Index>(b)) = w;
        s.unit_vectors.push_back(std::move(v));
    }

    // <phi_l|A_i|phi_j> sqrt(k_l k_j) counts pairs (beta in Gamma_l, gamma in
    // Gamma_j) related by R_i; it must equal k_l p^l_{ij}.
    std::vector<std::int64_t> count(d1 * d1 * d1, 0);
    for (std::size_t b = 0; b < n; ++b) {
        const std::size_t l = scheme.label(reference, b);
        for (std::size_t g = 0; g < n; ++g)
            ++count[(l * d1 + scheme.label(b, g)) * d1 + scheme.label(reference, g)];
    }
    for (std::size_t l = 0; l < d1; ++l)
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) {
                const std::int64_t expect = static_cast<std::int64_t>(scheme.valency(l)) * scheme.p(i, j, l);
                if (count[(l * d1 + i) * d1 + j] != expect) {
                    std::ostringstream msg;
                    msg << "stratum matrix element (" << l << "," << i << "," << j << ") counts "
                        << count[(l * d1 + i) * d1 + j] << ", expected " << expect;
                    throw Error(Errc::NotClosed, msg.str());
                }
            }
    return s;
}

FloatMatrix stratified_action(const AssociationScheme& scheme, const Stratification& strat,
                              std::size_t relation) {
    const std::size_t d1 = scheme.class_count() + 1;
    const FloatMatrix a = scheme.relation(relation).to_float();
    FloatMatrix out(d1, d1);
    for (std::size_t j = 0; j < d1; ++j) {
        const FloatVector av = a * strat.unit_vectors[j];
        for (std::size_t l = 0; l < d1; ++l) out(l, j) = strat.unit_vectors[l].dot(av);
    }
    return out;
}

bool relations_connected(const AssociationScheme& scheme, const std::vector<bool>& use) {
    const std::size_t n = scheme.vertex_count();
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> stack{0};
    visited[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t l = scheme.label(a, b);
            if (l == 0 || visited[b] || l >= use.size() || !use[l]) continue;
            visited[b] = true;
            ++reached;
            stack.push_back(b);
        }
    }
    return reached == n;
}

std::optional<IntersectionArray> check_distance_regular(const AssociationScheme& scheme) {
    const std::size_t d = scheme.class_count();
    if (d == 0) return std::nullopt;
    std::vector<bool> use(d + 1, false);
    use[1] = true;
    if (!relations_connected(scheme, use)) return std::nullopt;

    // A A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t k = 0; k <= d; ++k) {
            const bool band = k + 1 >= i && k <= i + 1;
            if (!band && scheme.p(1, i, k) != 0) return std::nullopt;
        }
        if (i < d && scheme.p(1, i, i + 1) == 0) return std::nullopt;
    }

    IntersectionArray arr;
    for (std::size_t i = 0; i < d; ++i) arr.b.push_back(scheme.p(1, i + 1, i));
    for (std::size_t i = 1; i <= d; ++i) arr.c.push_back(scheme.p(1, i - 1, i));

    const auto kappa = static_cast<std::int64_t>(scheme.valency(1));
    for (std::size_t i = 0; i <= d; ++i) {
        if (arr.a_at(i) != scheme.p(1, i, i) || arr.a_at(i) < 0) return std::nullopt;
        if (i > 0 && static_cast<std::int64_t>(scheme.valency(i - 1)) * arr.b_at(i - 1) !=
                         static_cast<std::int64_t>(scheme.valency(i)) * arr.c_at(i))
            return std::nullopt;
    }
    if (arr.degree() != kappa) return std::nullopt;
    return arr;
}

}  // namespace assoc
