#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assoc/numerics.hpp"

namespace assoc {

/// Square zero/one matrix stored one byte per entry.
class RelationMatrix {
public:
    RelationMatrix() = default;
    explicit RelationMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

    static RelationMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
    std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const std::vector<std::uint8_t>& data() const { return data_; }
    std::vector<std::uint8_t>& data() { return data_; }

    bool operator==(const RelationMatrix&) const = default;

    FloatMatrix to_float() const;
    RationalMatrix to_rational() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Structure constants p^k_{ij}: A_i A_j = sum_k p^k_{ij} A_k.
class IntersectionNumbers {
public:
    IntersectionNumbers() = default;
    explicit IntersectionNumbers(std::size_t classes)
        : d1_(classes), data_(classes * classes * classes, 0) {}

    /// p^k_{ij}
    std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(k * d1_ + i) * d1_ + j];
    }
    std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(k * d1_ + i) * d1_ + j];
    }
    std::size_t classes() const { return d1_; }

    bool operator==(const IntersectionNumbers&) const = default;

private:
    std::size_t d1_ = 0;
    std::vector<std::int64_t> data_;
};

/// A verified commutative symmetric association scheme. Only verify_scheme
/// constructs one, so every instance satisfies the axioms.
class AssociationScheme {
public:
    std::size_t vertex_count() const { return n_; }
    /// Number of non-identity classes d.
    std::size_t class_count() const { return relations_.size() - 1; }

    const RelationMatrix& relation(std::size_t i) const { return relations_.at(i); }
    const std::vector<RelationMatrix>& relations() const { return relations_; }

    /// Index of the class containing (a, b).
    std::size_t label(std::size_t a, std::size_t b) const { return labels_[a * n_ + b]; }

    std::size_t valency(std::size_t i) const { return valencies_.at(i); }
    const std::vector<std::size_t>& valencies() const { return valencies_; }

    const IntersectionNumbers& intersection_numbers() const { return p_; }
    /// p^k_{ij}
    std::int64_t p(std::size_t i, std::size_t j, std::size_t k) const { return p_(i, j, k); }

    const std::vector<std::string>& class_names() const { return class_names_; }
    const std::string& name() const { return name_; }

    /// First vertex beta with (0, beta) in class i.
    std::size_t representative(std::size_t i) const { return representatives_.at(i); }

private:
    friend AssociationScheme verify_scheme(std::vector<RelationMatrix>, std::vector<std::string>,
                                           std::string);

    std::size_t n_ = 0;
    std::vector<RelationMatrix> relations_;
    std::vector<std::uint16_t> labels_;
    std::vector<std::size_t> valencies_;
    std::vector<std::size_t> representatives_;
    IntersectionNumbers p_;
    std::vector<std::string> class_names_;
    std::string name_;
};

/// Checks every axiom with exact integer arithmetic and computes the
/// intersection numbers. Errors name the violated condition: NotZeroOne,
/// ShapeMismatch, IdentityMissing, NotPartition, NotSymmetric, NotClosed,
/// NotCommutative.
AssociationScheme verify_scheme(std::vector<RelationMatrix> relations,
                                std::vector<std::string> class_names = {},
                                std::string name = {});

/// Eigenmatrices and primitive idempotents. P is indexed (eigenspace, class),
/// Q is indexed (class, eigenspace); PQ = NI.
struct SpectralData {
    FloatMatrix P;
    FloatMatrix Q;
    std::vector<std::size_t> multiplicities;
    std::vector<FloatMatrix> idempotents;
};

/// E_0 = J/N comes first; the rest are ordered by descending rows of P.
/// Throws Errc::DegenerateSplit when the common eigenspaces cannot be
/// separated into exactly d+1 projectors.
SpectralData spectral_data(const AssociationScheme& scheme);

struct SpectralResiduals {
    double pq_minus_ni = 0;           // |PQ - NI|_max
    double eigen_relation = 0;        // max_{j,k} |A_j E_k - P_kj E_k|_max
    double idempotent_products = 0;   // max_{j,k} |E_j E_k - delta_jk E_j|_max
    double resolution_of_identity = 0;
    double reconstruction = 0;        // max_j |A_j - sum_k P_kj E_k|_max
    double e0_minus_j_over_n = 0;
    std::size_t multiplicity_sum = 0;
};

/// Measures every SpectralData invariant. Costs O(d^2 N^3).
SpectralResiduals check_spectral_invariants(const AssociationScheme& scheme,
                                            const SpectralData& spectral);

struct Stratification {
    std::size_t reference = 0;
    std::vector<std::vector<std::size_t>> strata;
    std::vector<FloatVector> unit_vectors;
};

/// Strata Gamma_i(reference) and their normalised indicator vectors. Also
/// confirms <phi_l|A_i|phi_j> = sqrt(k_l/k_j) p^l_{ij} by exact counting.
Stratification stratify(const AssociationScheme& scheme, std::size_t reference);

/// (d+1)x(d+1) matrix of <phi_l|A_i|phi_j>, evaluated numerically.
FloatMatrix stratified_action(const AssociationScheme& scheme, const Stratification& strat,
                              std::size_t relation);

struct IntersectionArray {
    std::vector<std::int64_t> b;  // b_0 .. b_{d-1}
    std::vector<std::int64_t> c;  // c_1 .. c_d

    std::size_t diameter() const { return c.size(); }
    std::int64_t degree() const { return b.front(); }
    std::int64_t b_at(std::size_t i) const { return i < b.size() ? b[i] : 0; }
    std::int64_t c_at(std::size_t i) const { return i == 0 ? 0 : c.at(i - 1); }
    std::int64_t a_at(std::size_t i) const { return degree() - b_at(i) - c_at(i); }

    bool operator==(const IntersectionArray&) const = default;
};

/// Returns {b; c} when class i is exactly graph distance i from class 1.
std::optional<IntersectionArray> check_distance_regular(const AssociationScheme& scheme);

/// True when the union of relations flagged in `use` (index 1..d) connects all vertices.
bool relations_connected(const AssociationScheme& scheme, const std::vector<bool>& use);

}  // namespace assoc
