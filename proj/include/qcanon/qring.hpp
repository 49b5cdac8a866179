#pragma once

// Exact Laurent polynomials in v over arbitrary-precision integers, with q = v^2.
//
// Exponents are always counted in units of v, so q^{1/2} = v is representable
// without a separate half-power flag.  Every value is kept in canonical form:
// the coefficient vector is trimmed so that its first and last entries are
// nonzero, and zero is the empty vector.

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qcanon {

using BigInt = mpz_class;

class QScalar {
public:
  QScalar() = default;
  QScalar(long constant);  // NOLINT(google-explicit-constructor): integers embed in the ring
  QScalar(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  /// coeff * v^v_exp
  static QScalar monomial(const BigInt& coeff, int v_exp);
  static QScalar v_power(int v_exp) { return monomial(1, v_exp); }
  static QScalar q_power(int q_exp) { return monomial(1, 2 * q_exp); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest / highest v-exponent.  Zero has neither; both return 0 for it.
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept;
  BigInt coefficient(int v_exp) const;
  /// (v-exponent, coefficient) pairs in ascending exponent order, zeros omitted.
  std::vector<std::pair<int, BigInt>> terms() const;
  std::size_t term_count() const;

  /// True iff the value is +-v^k for some k.
  bool is_monomial_unit() const;
  bool has_odd_exponent() const;

  /// this * v^v_exp
  QScalar shifted(int v_exp) const;

  QScalar& operator+=(const QScalar& rhs);
  QScalar& operator-=(const QScalar& rhs);
  QScalar& operator*=(const QScalar& rhs);
  QScalar operator-() const;

  friend QScalar operator+(QScalar lhs, const QScalar& rhs) { return lhs += rhs; }
  friend QScalar operator-(QScalar lhs, const QScalar& rhs) { return lhs -= rhs; }
  friend QScalar operator*(const QScalar& lhs, const QScalar& rhs);
  friend bool operator==(const QScalar& lhs, const QScalar& rhs) {
    return lhs.low_ == rhs.low_ && lhs.coeffs_ == rhs.coeffs_;
  }

private:
  void normalize();
  void add_scaled(const QScalar& rhs, int sign);

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// The bar involution q -> q^{-1} (exponent negation).
QScalar bar(const QScalar& p);

/// Exact quotient num / den in Z[v, v^-1]; throws InexactDivision otherwise.
QScalar exact_divide(const QScalar& num, const QScalar& den);

/// [n] = (q^n - q^-n)/(q - q^-1), defined for every integer n.
QScalar quantum_int(int n);
/// [n]! = [1][2]...[n], n >= 0.
QScalar quantum_factorial(int n);
/// Gaussian binomial [n]!/([k]![n-k]!), 0 <= k <= n.
QScalar quantum_binomial(int n, int k);

/// p lies in q^{-1} Z[q^{-1}]: only strictly negative even v-exponents.
bool in_qinv_ideal(const QScalar& p);

/// The unique p in q^{-1}Z[q^{-1}] with p - bar(p) = rho.
/// Requires bar(rho) = -rho (BarAsymmetry) and integer q-powers (OddExponent).
QScalar solve_bar_equation(const QScalar& rho);

/// Human-readable form in q, e.g. "-q^-1 + 2 + q^3"; odd v-powers print as q^{k/2}.
std::string to_string(const QScalar& p);
std::ostream& operator<<(std::ostream& os, const QScalar& p);

}  // namespace qcanon
