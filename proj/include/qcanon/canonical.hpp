#pragma once

// The involutions psi (two factors, monomial side) and psi^c (any number of
// factors, dual-monomial side), the triangular fixed-point solver producing
// canonical and dual canonical bases, and singular-vector extraction.

#include <cstddef>
#include <vector>

#include "qcanon/linalg.hpp"
#include "qcanon/tensor.hpp"

namespace qcanon {

/// x |-> matrix * bar(x), bar acting coefficientwise.
struct AntilinearMap {
  WeightSpace space;
  QMatrix matrix;

  QVector operator()(const QVector& x) const { return matrix.apply(bar(x)); }
  /// matrix * bar(matrix) == identity.
  bool is_involution() const;
};

/// psi^c(x) = tau(Theta^(n)) bar(x) on a contragredient weight space.
AntilinearMap psi_c(const WeightSpace& wc);
/// psi(x) = bar(Theta) bar(x) on a two-factor weight space.
AntilinearMap psi_tensor2(const WeightSpace& w);

struct BasisVector {
  MultiIndex index;
  QVector coords;  // over the (dual) monomials of the weight space, lex order

  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// Upper: each vector is its monomial plus terms at lexicographically larger
/// indices (dual canonical basis).  Lower: plus terms at smaller indices.
enum class Triangularity { Upper, Lower };

/// The unique psi-fixed basis b_m = e_m + sum p_k e_k with p_k in q^-1 Z[q^-1],
/// built one index at a time in the order the triangularity dictates.  Throws
/// TriangularityViolation when psi(e_m) - e_m leaves the allowed support and
/// propagates BarAsymmetry/OddExponent from the scalar solver.
std::vector<BasisVector> triangular_fixed_basis(const AntilinearMap& psi, Triangularity shape);

/// Dual canonical basis of a contragredient weight space of simple modules.
std::vector<BasisVector> dual_canonical_basis(const WeightSpace& wc);
/// Convenience form on (V_lambda_1 (x) ... (x) V_lambda_n)^c at the given level.
std::vector<BasisVector> dual_canonical_basis(const std::vector<int>& lambda, int level);

/// Canonical basis of a weight space of V (x) V'.  Checks that every vector
/// is supported on indices (i - k, j + k), k >= 0, around its own index (i, j).
std::vector<BasisVector> canonical_basis_pair(const WeightSpace& w);

/// <c_i, b_j> under the pairing of dual monomials with monomials.
QMatrix pairing_matrix(const std::vector<BasisVector>& primal, const std::vector<BasisVector>& dual);

/// The tensor-product contragredient weight space (V_l1 (x) ...)^c at a level.
WeightSpace dual_weight_space(const std::vector<int>& lambda, int level);
WeightSpace simple_weight_space(const std::vector<int>& lambda, int level);

bool is_singular(const WeightSpace& w, const QVector& x);
/// dim ker(E) on w, through exact rank.
std::size_t kernel_dim_E(const WeightSpace& w);
/// Elements of the basis annihilated by E.  Throws CountMismatch if their
/// number differs from kernel_dim_E(w).
std::vector<BasisVector> singular_subset(const WeightSpace& w, const std::vector<BasisVector>& basis);

}  // namespace qcanon
