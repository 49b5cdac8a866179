#include "qcanon/weightmod.hpp"

#include "qcanon/error.hpp"

namespace qcanon {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::E: return "E";
    case Generator::F: return "F";
    case Generator::K: return "K";
    case Generator::KInv: return "KInv";
    case Generator::KHalf: return "KHalf";
    case Generator::KHalfInv: return "KHalfInv";
  }
  return "?";
}

WeightModule make_simple(int lambda) {
  if (lambda < 0) throw Error(ErrorCode::NegativeWeight, "simple module with lambda = " + std::to_string(lambda));
  WeightModule m;
  m.kind_ = ModuleKind::Simple;
  m.lambda_ = lambda;
  m.top_ = lambda;
  m.e_.resize(static_cast<std::size_t>(lambda + 1));
  m.f_.resize(static_cast<std::size_t>(lambda + 1));
  for (int s = 1; s <= lambda; ++s) m.e_[static_cast<std::size_t>(s)] = quantum_int(lambda - s + 1);
  for (int s = 0; s < lambda; ++s) m.f_[static_cast<std::size_t>(s)] = quantum_int(s + 1);
  // F^(lambda+1) v vanishes in the quotient, and so does E on that slot.
  return m;
}

WeightModule make_verma_truncated(int lambda, int level) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation level");
  WeightModule m;
  m.kind_ = ModuleKind::VermaTruncated;
  m.lambda_ = lambda;
  m.top_ = level;
  m.e_.resize(static_cast<std::size_t>(level + 1));
  m.f_.resize(static_cast<std::size_t>(level + 1));
  for (int s = 1; s <= level; ++s) m.e_[static_cast<std::size_t>(s)] = quantum_int(lambda - s + 1);
  for (int s = 0; s < level; ++s) m.f_[static_cast<std::size_t>(s)] = quantum_int(s + 1);
  m.f_overflow_ = quantum_int(level + 1);
  m.e_beyond_ = quantum_int(lambda - level);
  return m;
}

WeightModule contragredient(const WeightModule& m) {
  WeightModule c = m;
  c.dual_ = !m.dual_;
  const auto n = static_cast<std::size_t>(m.top_ + 1);
  c.e_.assign(n, QScalar());
  c.f_.assign(n, QScalar());
  // E^c = transpose(F q^h):   (slot s+1)* -> f(s) q^{wt(s)} (slot s)*
  // F^c = transpose(q^-h E):  (slot s)*   -> e(s+1) q^{-wt(s)} (slot s+1)*
  for (int s = 0; s < m.top_; ++s) {
    const auto i = static_cast<std::size_t>(s);
    c.e_[i + 1] = m.f_[i] * QScalar::q_power(m.weight(s));
    c.f_[i] = m.e_[i + 1] * QScalar::q_power(-m.weight(s));
  }
  c.f_overflow_ = m.e_beyond_ * QScalar::q_power(-m.weight(m.top_));
  c.e_beyond_ = m.f_overflow_ * QScalar::q_power(m.weight(m.top_));
  return c;
}

QMatrix WeightModule::matrix(Generator g) const {
  const auto n = static_cast<std::size_t>(dim());
  QMatrix mat(n, n);
  for (int s = 0; s <= top_; ++s) {
    const auto i = static_cast<std::size_t>(s);
    switch (g) {
      case Generator::E:
        if (s > 0) mat.set(i - 1, i, e_[i]);
        break;
      case Generator::F:
        if (s < top_) mat.set(i + 1, i, f_[i]);
        break;
      case Generator::K: mat.set(i, i, QScalar::q_power(weight(s))); break;
      case Generator::KInv: mat.set(i, i, QScalar::q_power(-weight(s))); break;
      case Generator::KHalf: mat.set(i, i, QScalar::v_power(weight(s))); break;
      case Generator::KHalfInv: mat.set(i, i, QScalar::v_power(-weight(s))); break;
    }
  }
  return mat;
}

namespace {

QVector apply_once(const WeightModule& m, Generator g, const QVector& x) {
  const auto n = static_cast<std::size_t>(m.dim());
  QVector y(n);
  for (int s = 0; s <= m.top_slot(); ++s) {
    const auto i = static_cast<std::size_t>(s);
    if (x[i].is_zero()) continue;
    switch (g) {
      case Generator::E:
        if (s > 0) y[i - 1] += m.e_coeff(s) * x[i];
        break;
      case Generator::F:
        if (s < m.top_slot()) {
          y[i + 1] += m.f_coeff(s) * x[i];
        } else if (!m.f_overflow().is_zero()) {
          throw Error(ErrorCode::TruncationTooSmall, "F leaves the truncated module at slot " + std::to_string(s));
        }
        break;
      case Generator::K: y[i] = QScalar::q_power(m.weight(s)) * x[i]; break;
      case Generator::KInv: y[i] = QScalar::q_power(-m.weight(s)) * x[i]; break;
      case Generator::KHalf: y[i] = QScalar::v_power(m.weight(s)) * x[i]; break;
      case Generator::KHalfInv: y[i] = QScalar::v_power(-m.weight(s)) * x[i]; break;
    }
  }
  return y;
}

}  // namespace

QVector apply_generator(const WeightModule& m, const std::vector<Letter>& word, const QVector& x) {
  if (x.size() != static_cast<std::size_t>(m.dim())) {
    throw Error(ErrorCode::DimensionMismatch, "vector of size " + std::to_string(x.size()) +
                                                  " on a module of dimension " + std::to_string(m.dim()));
  }
  QVector y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const bool divided = it->gen == Generator::E || it->gen == Generator::F;
    if (!divided) {
      y = apply_once(m, it->gen, y);
      continue;
    }
    if (it->divided_power < 0) throw Error(ErrorCode::InvalidArgument, "negative divided power");
    for (int k = 0; k < it->divided_power; ++k) y = apply_once(m, it->gen, y);
    const QScalar fact = quantum_factorial(it->divided_power);
    for (auto& c : y) c = exact_divide(c, fact);
  }
  return y;
}

QMatrix shapovalov_embed(int lambda, int level) {
  if (lambda < 0) throw Error(ErrorCode::NegativeWeight, "shapovalov_embed with lambda < 0");
  if (level < lambda) {
    throw Error(ErrorCode::TruncationTooSmall,
                "level " + std::to_string(level) + " cannot hold V_" + std::to_string(lambda));
  }
  const WeightModule dual_verma = contragredient(make_verma_truncated(lambda, level));
  const auto rows = static_cast<std::size_t>(level + 1);
  QMatrix out(rows, static_cast<std::size_t>(lambda + 1));
  QVector highest(rows);
  highest[0] = QScalar(1);
  for (int m = 0; m <= lambda; ++m) {
    out.set_column(static_cast<std::size_t>(m), apply_generator(dual_verma, {{Generator::F, m}}, highest));
  }
  return out;
}

}  // namespace qcanon
