#include "qcanon/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "qcanon/error.hpp"

namespace qcanon {

void accumulate(TensorVector& into, const MultiIndex& m, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

void accumulate(TensorVector& into, const TensorVector& x, const QScalar& scale) {
  for (const auto& [m, c] : x) accumulate(into, m, scale * c);
}

TensorModule::TensorModule(std::vector<WeightModule> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::InvalidArgument, "tensor product of zero factors");
}

TensorModule tensor_product(std::vector<WeightModule> factors) { return TensorModule(std::move(factors)); }

std::vector<int> TensorModule::highest_weights() const {
  std::vector<int> r;
  for (const auto& f : factors_) r.push_back(f.highest_weight());
  return r;
}

std::vector<int> TensorModule::slot_bounds() const {
  std::vector<int> r;
  for (const auto& f : factors_) r.push_back(f.top_slot());
  return r;
}

int TensorModule::total_highest_weight() const {
  int s = 0;
  for (const auto& f : factors_) s += f.highest_weight();
  return s;
}

std::size_t TensorModule::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= static_cast<std::size_t>(f.dim());
  return d;
}

bool TensorModule::is_dual() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const WeightModule& f) { return f.is_dual(); });
}

int TensorModule::weight(const MultiIndex& m) const {
  if (m.size() != factors_.size()) throw Error(ErrorCode::DimensionMismatch, "index length differs from factor count");
  return total_highest_weight() - 2 * std::accumulate(m.begin(), m.end(), 0);
}

std::vector<int> TensorModule::factor_weights(const MultiIndex& m) const {
  if (m.size() != factors_.size()) throw Error(ErrorCode::DimensionMismatch, "index length differs from factor count");
  std::vector<int> r;
  for (std::size_t i = 0; i < m.size(); ++i) r.push_back(factors_[i].weight(m[i]));
  return r;
}

TensorModule TensorModule::slice(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > factors_.size()) throw Error(ErrorCode::InvalidArgument, "bad tensor slice");
  return TensorModule({factors_.begin() + static_cast<std::ptrdiff_t>(first),
                       factors_.begin() + static_cast<std::ptrdiff_t>(first + count)});
}

TensorModule TensorModule::swapped(std::size_t i) const {
  if (i + 1 >= factors_.size()) throw Error(ErrorCode::InvalidArgument, "swap position out of range");
  auto f = factors_;
  std::swap(f[i], f[i + 1]);
  return TensorModule(std::move(f));
}

TensorModule TensorModule::reversed() const { return TensorModule({factors_.rbegin(), factors_.rend()}); }

TensorModule TensorModule::contragredient() const {
  std::vector<WeightModule> f;
  for (const auto& m : factors_) f.push_back(qcanon::contragredient(m));
  return TensorModule(std::move(f));
}

WeightSpace TensorModule::weight_space(int level) const { return WeightSpace(*this, level); }

TensorVector TensorModule::apply(Generator g, const MultiIndex& m) const {
  const std::vector<int> wt = factor_weights(m);
  const int total = std::accumulate(wt.begin(), wt.end(), 0);
  TensorVector out;
  switch (g) {
    case Generator::K: out[m] = QScalar::q_power(total); return out;
    case Generator::KInv: out[m] = QScalar::q_power(-total); return out;
    case Generator::KHalf: out[m] = QScalar::v_power(total); return out;
    case Generator::KHalfInv: out[m] = QScalar::v_power(-total); return out;
    case Generator::E: {
      int right = total;  // weight of the factors strictly right of i
      for (std::size_t i = 0; i < m.size(); ++i) {
        right -= wt[i];
        if (m[i] == 0) continue;
        MultiIndex k = m;
        --k[i];
        accumulate(out, k, factors_[i].e_coeff(m[i]) * QScalar::q_power(right));
      }
      return out;
    }
    case Generator::F: {
      int left = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const WeightModule& f = factors_[i];
        if (m[i] < f.top_slot()) {
          MultiIndex k = m;
          ++k[i];
          accumulate(out, k, f.f_coeff(m[i]) * QScalar::q_power(-left));
        } else if (!f.f_overflow().is_zero()) {
          throw Error(ErrorCode::TruncationTooSmall, "F leaves the truncation of factor " + std::to_string(i + 1));
        }
        left += wt[i];
      }
      return out;
    }
  }
  return out;
}

TensorVector TensorModule::apply(Generator g, const TensorVector& x) const {
  TensorVector out;
  for (const auto& [m, c] : x) accumulate(out, apply(g, m), c);
  return out;
}

TensorVector TensorModule::apply_power(Generator g, int power, const TensorVector& x) const {
  TensorVector y = x;
  for (int k = 0; k < power && !y.empty(); ++k) y = apply(g, y);
  return y;
}

TensorVector TensorModule::apply_split(Generator g, std::size_t split, const MultiIndex& m) const {
  if (split == 0 || split >= factors_.size()) throw Error(ErrorCode::InvalidArgument, "split must separate two blocks");
  if (g != Generator::E && g != Generator::F) return apply(g, m);
  const TensorModule head = slice(0, split);
  const TensorModule tail = slice(split, factors_.size() - split);
  const MultiIndex mh(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(split));
  const MultiIndex mt(m.begin() + static_cast<std::ptrdiff_t>(split), m.end());
  auto join = [](const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
  };
  TensorVector out;
  if (g == Generator::E) {
    // E (x) q^h + 1 (x) E
    const QScalar k_tail = QScalar::q_power(tail.weight(mt));
    for (const auto& [h, c] : head.apply(Generator::E, mh)) accumulate(out, join(h, mt), c * k_tail);
    for (const auto& [t, c] : tail.apply(Generator::E, mt)) accumulate(out, join(mh, t), c);
  } else {
    // F (x) 1 + q^{-h} (x) F
    const QScalar kinv_head = QScalar::q_power(-head.weight(mh));
    for (const auto& [h, c] : head.apply(Generator::F, mh)) accumulate(out, join(h, mt), c);
    for (const auto& [t, c] : tail.apply(Generator::F, mt)) accumulate(out, join(mh, t), c * kinv_head);
  }
  return out;
}

std::vector<MultiIndex> enumerate_P(const std::vector<int>& bounds, int level) {
  std::vector<MultiIndex> out;
  if (level < 0) return out;
  const std::size_t n = bounds.size();
  // suffix capacity, to prune branches that cannot reach the level
  std::vector<int> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + std::max(bounds[i], 0);
  MultiIndex cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int lo = std::max(0, remaining - suffix[i + 1]);
    const int hi = std::min(bounds[i], remaining);
    for (int a = lo; a <= hi; ++a) {
      cur[i] = a;
      self(self, i + 1, remaining - a);
    }
  };
  rec(rec, 0, level);
  return out;
}

WeightSpace::WeightSpace(TensorModule module, int level)
    : module_(std::move(module)), level_(level), indices_(enumerate_P(module_.slot_bounds(), level)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) positions_.emplace(indices_[i], i);
}

std::optional<std::size_t> WeightSpace::position(const MultiIndex& m) const {
  auto it = positions_.find(m);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightSpace::position_of(const MultiIndex& m) const {
  auto p = position(m);
  if (!p) throw Error(ErrorCode::NotInP, "index outside the weight space");
  return *p;
}

QVector WeightSpace::unit(std::size_t pos) const {
  QVector x(dim());
  x.at(pos) = QScalar(1);
  return x;
}

QVector WeightSpace::coords(const TensorVector& x) const {
  QVector r(dim());
  for (const auto& [m, c] : x) r[position_of(m)] += c;
  return r;
}

TensorVector WeightSpace::tensor(const QVector& x) const {
  if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector size");
  TensorVector r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) r.emplace(indices_[i], x[i]);
  }
  return r;
}

int level_shift(Generator g) {
  if (g == Generator::E) return -1;
  if (g == Generator::F) return 1;
  return 0;
}

namespace {

template <typename Act>
QMatrix slice_matrix(const TensorModule& t, Generator g, int level, Act act) {
  const WeightSpace src = t.weight_space(level);
  const WeightSpace dst = t.weight_space(level + level_shift(g));
  QMatrix mat(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    for (const auto& [k, c] : act(src.index(j))) mat.add(dst.position_of(k), j, c);
  }
  return mat;
}

}  // namespace

QMatrix coproduct_matrix(const TensorModule& t, Generator g, int level) {
  return slice_matrix(t, g, level, [&](const MultiIndex& m) { return t.apply(g, m); });
}

QMatrix coproduct_matrix_split(const TensorModule& t, Generator g, int level, std::size_t split) {
  return slice_matrix(t, g, level, [&](const MultiIndex& m) { return t.apply_split(g, split, m); });
}

}  // namespace qcanon
