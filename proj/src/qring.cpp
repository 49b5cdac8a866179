#include "qcanon/qring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qcanon/error.hpp"

namespace qcanon {

QScalar::QScalar(long constant) : QScalar(BigInt(constant)) {}

QScalar::QScalar(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QScalar QScalar::monomial(const BigInt& coeff, int v_exp) {
  QScalar r;
  if (coeff != 0) {
    r.low_ = v_exp;
    r.coeffs_.push_back(coeff);
  }
  return r;
}

int QScalar::max_exponent() const noexcept {
  return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
}

BigInt QScalar::coefficient(int v_exp) const {
  const long offset = static_cast<long>(v_exp) - low_;
  if (offset < 0 || offset >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(offset)];
}

std::vector<std::pair<int, BigInt>> QScalar::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

std::size_t QScalar::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

bool QScalar::is_monomial_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

bool QScalar::has_odd_exponent() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && (low_ + static_cast<int>(i)) % 2 != 0) return true;
  }
  return false;
}

QScalar QScalar::shifted(int v_exp) const {
  QScalar r = *this;
  if (!r.is_zero()) r.low_ += v_exp;
  return r;
}

void QScalar::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

void QScalar::add_scaled(const QScalar& rhs, int sign) {
  if (rhs.is_zero()) return;
  if (is_zero()) {
    *this = rhs;
    if (sign < 0) {
      for (auto& c : coeffs_) c = -c;
    }
    return;
  }
  const int new_low = std::min(low_, rhs.low_);
  const int new_high = std::max(max_exponent(), rhs.max_exponent());
  if (new_low < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - new_low), BigInt(0));
    low_ = new_low;
  }
  coeffs_.resize(static_cast<std::size_t>(new_high - low_ + 1), BigInt(0));
  const std::size_t offset = static_cast<std::size_t>(rhs.low_ - low_);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    if (sign > 0) {
      coeffs_[offset + i] += rhs.coeffs_[i];
    } else {
      coeffs_[offset + i] -= rhs.coeffs_[i];
    }
  }
  normalize();
}

QScalar& QScalar::operator+=(const QScalar& rhs) {
  add_scaled(rhs, +1);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

QScalar operator*(const QScalar& lhs, const QScalar& rhs) {
  QScalar r;
  if (lhs.is_zero() || rhs.is_zero()) return r;
  r.low_ = lhs.low_ + rhs.low_;
  r.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

QScalar& QScalar::operator*=(const QScalar& rhs) {
  *this = *this * rhs;
  return *this;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QScalar bar(const QScalar& p) {
  QScalar r;
  for (const auto& [e, c] : p.terms()) r += QScalar::monomial(c, -e);
  return r;
}

QScalar exact_divide(const QScalar& num, const QScalar& den) {
  if (den.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero");
  if (num.is_zero()) return {};
  // Long division of the underlying polynomials from the top degree down.
  const int den_low = den.min_exponent();
  const int den_deg = den.max_exponent() - den_low;
  std::vector<BigInt> d(static_cast<std::size_t>(den_deg + 1));
  for (int i = 0; i <= den_deg; ++i) d[static_cast<std::size_t>(i)] = den.coefficient(den_low + i);

  const int num_low = num.min_exponent();
  const int num_deg = num.max_exponent() - num_low;
  std::vector<BigInt> rem(static_cast<std::size_t>(num_deg + 1));
  for (int i = 0; i <= num_deg; ++i) rem[static_cast<std::size_t>(i)] = num.coefficient(num_low + i);

  if (num_deg < den_deg) {
    throw Error(ErrorCode::InexactDivision, to_string(num) + " / " + to_string(den));
  }
  std::vector<BigInt> quot(static_cast<std::size_t>(num_deg - den_deg + 1));
  const BigInt& lead = d.back();
  for (int k = num_deg - den_deg; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + den_deg)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorCode::InexactDivision, to_string(num) + " / " + to_string(den));
    }
    BigInt qk = top / lead;
    for (int i = 0; i <= den_deg; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= qk * d[static_cast<std::size_t>(i)];
    }
    quot[static_cast<std::size_t>(k)] = std::move(qk);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw Error(ErrorCode::InexactDivision, to_string(num) + " / " + to_string(den));
  }
  QScalar r;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    r += QScalar::monomial(quot[i], num_low - den_low + static_cast<int>(i));
  }
  return r;
}

QScalar quantum_int(int n) {
  if (n < 0) return -quantum_int(-n);
  QScalar r;
  // q^{n-1} + q^{n-3} + ... + q^{1-n}
  for (int k = n - 1; k >= 1 - n; k -= 2) r += QScalar::q_power(k);
  return r;
}

QScalar quantum_factorial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "quantum_factorial of a negative integer");
  QScalar r(1);
  for (int k = 2; k <= n; ++k) r *= quantum_int(k);
  return r;
}

QScalar quantum_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorCode::InvalidArgument, "quantum_binomial requires 0 <= k <= n");
  }
  return exact_divide(quantum_factorial(n), quantum_factorial(k) * quantum_factorial(n - k));
}

bool in_qinv_ideal(const QScalar& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e >= 0 || e % 2 != 0) return false;
  }
  return true;
}

QScalar solve_bar_equation(const QScalar& rho) {
  if (bar(rho) != -rho) {
    throw Error(ErrorCode::BarAsymmetry, "bar(rho) != -rho for rho = " + to_string(rho));
  }
  if (rho.has_odd_exponent()) {
    throw Error(ErrorCode::OddExponent, "half-integer q-power in rho = " + to_string(rho));
  }
  QScalar p;
  for (const auto& [e, c] : rho.terms()) {
    if (e < 0) p += QScalar::monomial(c, e);
  }
  return p;
}

namespace {

std::string q_power_text(int v_exp) {
  if (v_exp % 2 != 0) return "q^{" + std::to_string(v_exp) + "/2}";
  const int k = v_exp / 2;
  if (k == 1) return "q";
  return "q^" + std::to_string(k);
}

}  // namespace

std::string to_string(const QScalar& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str();
      os << q_power_text(e);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QScalar& p) { return os << to_string(p); }

}  // namespace qcanon
