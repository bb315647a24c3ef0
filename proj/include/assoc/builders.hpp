#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assoc/lattice.hpp"
#include "assoc/scheme.hpp"

namespace assoc {

/// Finite group by multiplication table plus a partition of its elements.
struct GroupTable {
    std::size_t order = 0;
    std::vector<std::size_t> mult;     // mult[g * order + h] = g h
    std::vector<std::size_t> inverse;  // inverse[g] = g^{-1}
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> class_partition;  // class 0 = {identity}
    std::vector<std::string> class_names;

    std::size_t product(std::size_t g, std::size_t h) const { return mult[g * order + h]; }
};

/// One-line permutation of {0, ..., n-1}.
using Permutation = std::vector<std::size_t>;

/// Table of the group of the given permutations, composed as (gh)(i) = g(h(i)).
/// Identity and inverses are located; the partition is left empty.
GroupTable permutation_group(const std::vector<Permutation>& elements);

/// S4 in lexicographic one-line order, partitioned into its five conjugacy
/// classes: e, transpositions, 3-cycles, double transpositions, 4-cycles.
GroupTable symmetric_group_s4();

/// S4 with the seven-class partition that splits transpositions and 3-cycles
/// by whether they move point 1. With `four_cycles_first` the 4-cycles become
/// class 1 and the rest keep their order.
GroupTable symmetric_group_s4_refined(bool four_cycles_first = false);

/// Z_n with the given partition of residues.
GroupTable cyclic_group(std::size_t n, std::vector<std::vector<std::size_t>> partition);

/// A_i(x, y) = 1 iff x^{-1} y lies in class i. Throws NotLatinSquare,
/// NotAmbivalent (class not closed under inverse) or BadParameter (partition
/// malformed). Axioms are then checked by verify_scheme.
AssociationScheme build_group_scheme(const GroupTable& table, std::string name = "group");

/// Cycle C_N, N = 2k: A_i = S^i + S^{-i}, A_k = S^k.
AssociationScheme build_cycle(std::size_t n);

/// Binary Hamming scheme H(n, 2); class i is Hamming distance i.
AssociationScheme build_hypercube(std::size_t n);

/// Johnson scheme J(n, 2) on 2-subsets; class 1 = share one element.
AssociationScheme build_triangular(std::size_t n);

/// The Z5 x Z5 translation scheme with the six nearest triangular-lattice
/// shifts as class 1. Vertex (x, y) has index x + 5y.
AssociationScheme build_orbit_scheme_z5z5();

/// Translation scheme on Z_m x Z_m with the given difference sets; class 0
/// must be {(0,0)}.
AssociationScheme build_translation_scheme(long m, const std::vector<std::vector<LatticeVector>>& classes,
                                           std::vector<std::string> names, std::string name);

/// Orbits of the lattice point group on Z_m x Z_m; class 1 is the orbit of
/// (1,0), the rest sorted by lexicographically smallest member.
AssociationScheme build_square_lattice(long m);
AssociationScheme build_hexagonal_lattice(long m);

struct LatticeSpec {
    int dimension = 2;  // 1 gives the cycle C_m
    long period = 3;
    LatticeKind kind = LatticeKind::Square;
};

AssociationScheme build_lattice(const LatticeSpec& spec);

/// Difference sets of the orbit scheme, in class order.
std::vector<std::vector<LatticeVector>> lattice_orbit_classes(LatticeKind kind, long m);

/// K_l(x) = sum_{i>=0} (-1)^i C(x,i) C(n-x,l-i).
std::int64_t krawtchouk(std::size_t l, std::size_t x, std::size_t n);

/// Named constructors used by the CLI: cycle, hypercube, triangular, s4,
/// s4-refined-a, s4-refined-b, z5z5, square, hexagonal. `size` is n or m.
AssociationScheme build_named(const std::string& builder, std::optional<long> size);

const std::vector<std::string>& builder_names();

}  // namespace assoc
