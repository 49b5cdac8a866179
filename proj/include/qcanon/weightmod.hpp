#pragma once

// Single-factor U_q(sl2) weight modules in the divided-power basis.
//
// Basis slot m stands for F^(m) v_lambda (or its dual (F^(m) v_lambda)* on the
// contragredient side) and has weight lambda - 2m.  E and F move one slot at a
// time, so each is stored as one coefficient per slot:
//
//   E slot m = e(m) * slot (m-1),   F slot m = f(m) * slot (m+1).
//
// In the generator conventions E = q^{h/2} e, F = f q^{-h/2}:
//
//   E F^(m) v = [lambda - m + 1] F^(m-1) v,   F F^(m) v = [m + 1] F^(m+1) v.
//
// Truncated Verma modules keep slots 0..L.  The true (nonzero) coefficient
// F would produce past slot L is remembered so that any computation leaving
// the truncation fails loudly instead of silently dropping terms.

#include <optional>
#include <string>
#include <vector>

#include "qcanon/linalg.hpp"
#include "qcanon/qring.hpp"

namespace qcanon {

enum class Generator { E, F, K, KInv, KHalf, KHalfInv };

std::string to_string(Generator g);

/// One letter of a word: E^(k), F^(k) (divided powers) or a Cartan element.
struct Letter {
  Generator gen;
  int divided_power = 1;  // only meaningful for E and F
};

enum class ModuleKind { Simple, VermaTruncated };

class WeightModule {
public:
  ModuleKind kind() const noexcept { return kind_; }
  bool is_dual() const noexcept { return dual_; }
  int highest_weight() const noexcept { return lambda_; }
  /// Index of the last basis slot; dim() == top_slot() + 1.
  int top_slot() const noexcept { return top_; }
  int dim() const noexcept { return top_ + 1; }
  int weight(int slot) const noexcept { return lambda_ - 2 * slot; }

  const QScalar& e_coeff(int slot) const { return e_.at(static_cast<std::size_t>(slot)); }
  const QScalar& f_coeff(int slot) const { return f_.at(static_cast<std::size_t>(slot)); }
  /// Coefficient F would produce from the top slot into the (absent) next one.
  const QScalar& f_overflow() const noexcept { return f_overflow_; }

  /// Exact matrix of a generator in the slot basis (F past the top slot is dropped).
  QMatrix matrix(Generator g) const;

  friend bool operator==(const WeightModule&, const WeightModule&) = default;

private:
  friend WeightModule make_simple(int);
  friend WeightModule make_verma_truncated(int, int);
  friend WeightModule contragredient(const WeightModule&);

  ModuleKind kind_ = ModuleKind::Simple;
  bool dual_ = false;
  int lambda_ = 0;
  int top_ = 0;
  std::vector<QScalar> e_;
  std::vector<QScalar> f_;
  QScalar f_overflow_;
  QScalar e_beyond_;  // E coefficient of the absent slot top+1, needed to dualize f_overflow_
};

/// V_lambda, dimension lambda + 1.  Throws NegativeWeight for lambda < 0.
WeightModule make_simple(int lambda);

/// M_lambda truncated to slots 0..level.
WeightModule make_verma_truncated(int lambda, int level);

/// M^c: the generator g acts by the transpose of tau(g) on M, where tau is the
/// anti-automorphism e <-> f fixing q^h.  From E = q^{h/2} e, F = f q^{-h/2}:
///   tau(E) = f q^{h/2} = F q^h,   tau(F) = q^{-h/2} e = q^{-h} E.
/// Applying it twice returns a module with identical matrices.
WeightModule contragredient(const WeightModule& m);

/// Evaluates a word right-to-left on a coordinate vector.
/// Throws DimensionMismatch, or TruncationTooSmall if F leaves a truncation.
QVector apply_generator(const WeightModule& m, const std::vector<Letter>& word, const QVector& x);

/// The module map V_lambda -> M_lambda^c with v_lambda |-> v_lambda*, computed
/// by applying F^(m) to v_lambda* inside the truncated contragredient Verma.
/// Column m is the image of F^(m) v_lambda.  Requires level >= lambda.
QMatrix shapovalov_embed(int lambda, int level);

}  // namespace qcanon
