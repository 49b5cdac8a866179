#pragma once

// n-fold tensor products of weight modules and their weight spaces.
//
// A basis vector of V_1 (x) ... (x) V_n is a tuple m = (m_1, ..., m_n) of slot
// indices (the monomial F^(m) or, on the contragredient side, its dual).
// Tuples compare lexicographically with m_1 most significant, which is the
// order std::vector<int> already implements.
//
// Generators act through the iterated coproduct
//   Delta E = E (x) q^h + 1 (x) E,   Delta F = F (x) 1 + q^{-h} (x) F,
// i.e. E at position i is followed by q^h on every factor to its right and F
// at position i is preceded by q^{-h} on every factor to its left.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qcanon/linalg.hpp"
#include "qcanon/weightmod.hpp"

namespace qcanon {

using MultiIndex = std::vector<int>;
using TensorVector = std::map<MultiIndex, QScalar>;

void accumulate(TensorVector& into, const MultiIndex& m, const QScalar& c);
void accumulate(TensorVector& into, const TensorVector& x, const QScalar& scale = QScalar(1));

class WeightSpace;

class TensorModule {
public:
  explicit TensorModule(std::vector<WeightModule> factors);

  std::size_t size() const noexcept { return factors_.size(); }
  const WeightModule& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<WeightModule>& factors() const noexcept { return factors_; }
  std::vector<int> highest_weights() const;
  std::vector<int> slot_bounds() const;
  int total_highest_weight() const;
  std::size_t dim() const;
  bool is_dual() const;

  /// Weight of the basis vector m: sum(lambda_i) - 2 sum(m_i).
  int weight(const MultiIndex& m) const;
  std::vector<int> factor_weights(const MultiIndex& m) const;

  TensorModule slice(std::size_t first, std::size_t count) const;
  /// Factors i and i+1 (0-based) exchanged.
  TensorModule swapped(std::size_t i) const;
  TensorModule reversed() const;
  /// Factorwise contragredient; (M_1 (x) M_2)^c = M_1^c (x) M_2^c.
  TensorModule contragredient() const;

  WeightSpace weight_space(int level) const;

  /// Iterated-coproduct action of g on a tensor.  Throws TruncationTooSmall if
  /// F leaves a truncated factor.
  TensorVector apply(Generator g, const MultiIndex& m) const;
  TensorVector apply(Generator g, const TensorVector& x) const;
  /// g^power (plain powers, not divided).
  TensorVector apply_power(Generator g, int power, const TensorVector& x) const;

  /// Delta(g) on the two-block split head (x) tail, head = factors [0, split),
  /// each block acting through its own iterated coproduct.  Coassociativity
  /// makes this equal to apply(g, m) for every split.
  TensorVector apply_split(Generator g, std::size_t split, const MultiIndex& m) const;

  friend bool operator==(const TensorModule&, const TensorModule&) = default;

private:
  std::vector<WeightModule> factors_;
};

TensorModule tensor_product(std::vector<WeightModule> factors);

/// Lexicographically sorted tuples with 0 <= a_i <= bounds_i and sum a_i = level.
std::vector<MultiIndex> enumerate_P(const std::vector<int>& bounds, int level);

class WeightSpace {
public:
  WeightSpace(TensorModule module, int level);

  const TensorModule& module() const noexcept { return module_; }
  int level() const noexcept { return level_; }
  int weight() const noexcept { return module_.total_highest_weight() - 2 * level_; }
  std::size_t dim() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
  const MultiIndex& index(std::size_t pos) const { return indices_.at(pos); }
  std::optional<std::size_t> position(const MultiIndex& m) const;
  std::size_t position_of(const MultiIndex& m) const;

  QVector unit(std::size_t pos) const;
  QVector coords(const TensorVector& x) const;
  TensorVector tensor(const QVector& x) const;

private:
  TensorModule module_;
  int level_;
  std::vector<MultiIndex> indices_;
  std::map<MultiIndex, std::size_t> positions_;
};

/// Matrix of Delta^{n-1}(g) from the level-l weight space to the one g lands
/// in (l-1 for E, l+1 for F, l for the Cartan elements).
QMatrix coproduct_matrix(const TensorModule& t, Generator g, int level);

/// Same as coproduct_matrix but acting as Delta(g) on a two-block split.
QMatrix coproduct_matrix_split(const TensorModule& t, Generator g, int level, std::size_t split);

/// Level shift produced by a generator: -1 for E, +1 for F, 0 otherwise.
int level_shift(Generator g);

}  // namespace qcanon
