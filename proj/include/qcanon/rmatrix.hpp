#pragma once

// The quasi-R-matrix Theta, the Cartan factor C, R = C Theta, the braiding
// R-check = P R and their n-fold versions, as exact matrices on weight spaces.
//
//   Theta = sum_k q^{k(k-1)/2} (q - q^-1)^k / [k]!  E^k (x) F^k,
//   C     = q^{h (x) h / 2}   (v^{mu_1 mu_2} on factor weights mu_1, mu_2).
//
// Theta^(n) is built by the recursion
//   Theta^(n) = (1 (x) Theta^(n-1)) (1 (x) Delta^{n-2})(Theta)        (right form)
//             = (Theta^(n-1) (x) 1) (Delta^{n-2} (x) 1)(Theta)        (left form)
// where a split Theta acts by E^k through the coproduct on the head block and
// F^k through the coproduct on the tail block.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcanon/linalg.hpp"
#include "qcanon/tensor.hpp"

namespace qcanon {

enum class OperatorTag { Theta, Cartan, R, RCheck, TauTheta, Sigma };

std::string to_string(OperatorTag tag);

struct BraidOperator {
  WeightSpace source;
  WeightSpace target;
  QMatrix matrix;
  OperatorTag tag;
};

enum class RecursionForm { Right, Left };

/// q^{k(k-1)/2} (q - q^-1)^k, the numerator of the k-th Theta coefficient.
QScalar theta_numerator(int k);

/// Theta on a two-factor weight space.
BraidOperator theta_matrix(const WeightSpace& w);

/// C^(n): diagonal, v^{sum_{i<j} mu_i mu_j}.
BraidOperator cartan_factor(const WeightSpace& w);
BraidOperator cartan_factor_inverse(const WeightSpace& w);
/// C^(n) assembled by the same head/tail recursion as Theta^(n).
BraidOperator cartan_factor_recursive(const WeightSpace& w);

BraidOperator theta_n_matrix(const WeightSpace& w, RecursionForm form);
/// Computes both forms and throws CrossCheckFailure if they differ.
BraidOperator theta_n_matrix(const WeightSpace& w);

/// R^(n) by the recursion applied to R itself (split R = split C * split Theta).
BraidOperator r_n_matrix(const WeightSpace& w, RecursionForm form);

/// R-check on factors i, i+1 (1-based), from w to the weight space of the
/// product with those factors exchanged.
BraidOperator rcheck_matrix(const WeightSpace& w, int i);

/// sigma_0: m |-> reversed m, from w to the reversed product.
BraidOperator sigma0(const WeightSpace& w);

/// Throws NotReduced unless word (1-based s_i) is a reduced expression of the
/// longest permutation of n letters.
void validate_longest_word(const std::vector<int>& word, std::size_t n);
/// s_1 (s_2 s_1) (s_3 s_2 s_1) ...
std::vector<int> canonical_longest_word(std::size_t n);
/// All reduced words of the longest element, in lexicographic order, up to limit.
std::vector<std::vector<int>> reduced_longest_words(std::size_t n, std::size_t limit);
/// A reduced word reached from the canonical one by `moves` random braid or
/// commutation moves; deterministic in seed.
std::vector<int> random_longest_word(std::size_t n, std::uint64_t seed, int moves = 64);

/// R-check^(n) = R_{i_1} ... R_{i_L} (rightmost applied first), from w to the
/// reversed product.
BraidOperator rcheck_longest(const WeightSpace& w, const std::vector<int>& word);

/// tau(Theta^(n)) on a contragredient weight space.  Computed as the transpose
/// of Theta^(n) on the underlying product, and independently as
/// R-check^(n) (C^(n))^-1 sigma_0 from the contragredient modules' own
/// actions.  Throws CrossCheckFailure if the two differ.
BraidOperator tau_theta_n(const WeightSpace& wc);
BraidOperator tau_theta_n(const WeightSpace& wc, const std::vector<int>& word);

}  // namespace qcanon
