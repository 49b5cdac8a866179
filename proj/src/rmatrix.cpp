#include "qcanon/rmatrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>

#include "qcanon/error.hpp"

namespace qcanon {

std::string to_string(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::Theta: return "theta";
    case OperatorTag::Cartan: return "cartan";
    case OperatorTag::R: return "r";
    case OperatorTag::RCheck: return "rcheck";
    case OperatorTag::TauTheta: return "tau_theta";
    case OperatorTag::Sigma: return "sigma0";
  }
  return "?";
}

QScalar theta_numerator(int k) {
  QScalar r = QScalar::q_power(k * (k - 1) / 2);
  const QScalar step = QScalar::q_power(1) - QScalar::q_power(-1);
  for (int i = 0; i < k; ++i) r *= step;
  return r;
}

namespace {

std::size_t factor_count(const WeightSpace& w) { return w.module().size(); }

MultiIndex sub(const MultiIndex& m, std::size_t first, std::size_t last) {
  return {m.begin() + static_cast<std::ptrdiff_t>(first), m.begin() + static_cast<std::ptrdiff_t>(last)};
}

// Theta (optionally R = C Theta) acting on head = [first, split) and
// tail = [split, end), identity on the other factors.
QMatrix split_block(const WeightSpace& w, std::size_t first, std::size_t split, std::size_t end, bool with_cartan) {
  const TensorModule& t = w.module();
  const TensorModule head = t.slice(first, split - first);
  const TensorModule tail = t.slice(split, end - split);
  QMatrix mat(w.dim(), w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) {
    const MultiIndex& m = w.index(j);
    TensorVector hv{{sub(m, first, split), QScalar(1)}};
    TensorVector tv{{sub(m, split, end), QScalar(1)}};
    for (int k = 0;; ++k) {
      if (k > 0) {
        hv = head.apply(Generator::E, hv);
        tv = tail.apply(Generator::F, tv);
        if (hv.empty() || tv.empty()) break;
      }
      const QScalar fact = quantum_factorial(k);
      const QScalar num = theta_numerator(k);
      for (const auto& [h, a] : hv) {
        const QScalar ha = num * exact_divide(a, fact);
        for (const auto& [tt, b] : tv) {
          MultiIndex r = m;
          std::copy(h.begin(), h.end(), r.begin() + static_cast<std::ptrdiff_t>(first));
          std::copy(tt.begin(), tt.end(), r.begin() + static_cast<std::ptrdiff_t>(split));
          QScalar c = ha * b;
          if (with_cartan) c = c.shifted(head.weight(h) * tail.weight(tt));
          mat.add(w.position_of(r), j, c);
        }
      }
    }
  }
  return mat;
}

QMatrix cartan_block(const WeightSpace& w, std::size_t first, std::size_t split, std::size_t end) {
  const TensorModule& t = w.module();
  const TensorModule head = t.slice(first, split - first);
  const TensorModule tail = t.slice(split, end - split);
  QMatrix mat(w.dim(), w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) {
    const MultiIndex& m = w.index(j);
    mat.set(j, j, QScalar::v_power(head.weight(sub(m, first, split)) * tail.weight(sub(m, split, end))));
  }
  return mat;
}

template <typename Block>
QMatrix recursive_product(const WeightSpace& w, RecursionForm form, Block block) {
  const std::size_t n = factor_count(w);
  QMatrix acc = QMatrix::identity(w.dim());
  if (form == RecursionForm::Right) {
    // (1 (x) X^(n-1)) (1 (x) Delta^{n-2})(X): the split at the first factor acts first
    for (std::size_t j = 0; j + 1 < n; ++j) acc = block(j, j + 1, n) * acc;
  } else {
    for (std::size_t e = n; e >= 2; --e) acc = block(0, e - 1, e) * acc;
  }
  return acc;
}

QMatrix diagonal_cartan(const WeightSpace& w, int sign) {
  QMatrix mat(w.dim(), w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) {
    const std::vector<int> mu = w.module().factor_weights(w.index(j));
    int e = 0;
    for (std::size_t a = 0; a < mu.size(); ++a) {
      for (std::size_t b = a + 1; b < mu.size(); ++b) e += mu[a] * mu[b];
    }
    mat.set(j, j, QScalar::v_power(sign * e));
  }
  return mat;
}

}  // namespace

BraidOperator theta_matrix(const WeightSpace& w) {
  if (factor_count(w) != 2) throw Error(ErrorCode::InvalidArgument, "theta_matrix needs exactly two factors");
  return {w, w, split_block(w, 0, 1, 2, false), OperatorTag::Theta};
}

BraidOperator cartan_factor(const WeightSpace& w) { return {w, w, diagonal_cartan(w, 1), OperatorTag::Cartan}; }

BraidOperator cartan_factor_inverse(const WeightSpace& w) {
  return {w, w, diagonal_cartan(w, -1), OperatorTag::Cartan};
}

BraidOperator cartan_factor_recursive(const WeightSpace& w) {
  QMatrix m = recursive_product(w, RecursionForm::Right, [&](std::size_t a, std::size_t b, std::size_t c) {
    return cartan_block(w, a, b, c);
  });
  return {w, w, std::move(m), OperatorTag::Cartan};
}

BraidOperator theta_n_matrix(const WeightSpace& w, RecursionForm form) {
  QMatrix m = recursive_product(w, form, [&](std::size_t a, std::size_t b, std::size_t c) {
    return split_block(w, a, b, c, false);
  });
  return {w, w, std::move(m), OperatorTag::Theta};
}

BraidOperator theta_n_matrix(const WeightSpace& w) {
  BraidOperator right = theta_n_matrix(w, RecursionForm::Right);
  if (!(theta_n_matrix(w, RecursionForm::Left).matrix == right.matrix)) {
    throw Error(ErrorCode::CrossCheckFailure, "left and right recursions for Theta^(n) disagree");
  }
  return right;
}

BraidOperator r_n_matrix(const WeightSpace& w, RecursionForm form) {
  QMatrix m = recursive_product(w, form, [&](std::size_t a, std::size_t b, std::size_t c) {
    return split_block(w, a, b, c, true);
  });
  return {w, w, std::move(m), OperatorTag::R};
}

BraidOperator rcheck_matrix(const WeightSpace& w, int i) {
  const std::size_t n = factor_count(w);
  if (i < 1 || static_cast<std::size_t>(i) >= n) {
    throw Error(ErrorCode::InvalidArgument, "R-check position " + std::to_string(i) + " out of range");
  }
  const auto p = static_cast<std::size_t>(i - 1);
  const WeightSpace target = w.module().swapped(p).weight_space(w.level());
  const QMatrix r = split_block(w, p, p + 1, p + 2, true);
  QMatrix mat(target.dim(), w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) {
    for (const auto& [row, c] : r.column(j)) {
      MultiIndex k = w.index(row);
      std::swap(k[p], k[p + 1]);
      mat.add(target.position_of(k), j, c);
    }
  }
  return {w, target, std::move(mat), OperatorTag::RCheck};
}

BraidOperator sigma0(const WeightSpace& w) {
  const WeightSpace target = w.module().reversed().weight_space(w.level());
  QMatrix mat(target.dim(), w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) {
    MultiIndex k = w.index(j);
    std::reverse(k.begin(), k.end());
    mat.set(target.position_of(k), j, QScalar(1));
  }
  return {w, target, std::move(mat), OperatorTag::Sigma};
}

void validate_longest_word(const std::vector<int>& word, std::size_t n) {
  const std::size_t length = n * (n - 1) / 2;
  if (word.size() != length) {
    throw Error(ErrorCode::NotReduced, "word of length " + std::to_string(word.size()) +
                                           " cannot be a reduced expression of length " + std::to_string(length));
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (int s : word) {
    if (s < 1 || static_cast<std::size_t>(s) >= n) {
      throw Error(ErrorCode::NotReduced, "generator s_" + std::to_string(s) + " out of range");
    }
    std::swap(perm[static_cast<std::size_t>(s - 1)], perm[static_cast<std::size_t>(s)]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] != n - 1 - i) throw Error(ErrorCode::NotReduced, "word does not represent the longest permutation");
  }
}

std::vector<int> canonical_longest_word(std::size_t n) {
  std::vector<int> w;
  for (int top = 1; static_cast<std::size_t>(top) < n; ++top) {
    for (int s = top; s >= 1; --s) w.push_back(s);
  }
  return w;
}

namespace {

// Every word obtained from w by one commutation or braid move.
std::vector<std::vector<int>> braid_neighbours(const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (std::abs(w[i] - w[i + 1]) >= 2) {
      auto v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
    if (i + 2 < w.size() && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
      auto v = w;
      v[i] = v[i + 2] = w[i + 1];
      v[i + 1] = w[i];
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> reduced_longest_words(std::size_t n, std::size_t limit) {
  std::set<std::vector<int>> seen{canonical_longest_word(n)};
  std::deque<std::vector<int>> queue{canonical_longest_word(n)};
  while (!queue.empty() && seen.size() < limit) {
    const auto w = queue.front();
    queue.pop_front();
    for (auto& v : braid_neighbours(w)) {
      if (seen.size() >= limit) break;
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> random_longest_word(std::size_t n, std::uint64_t seed, int moves) {
  std::mt19937_64 rng(seed);
  std::vector<int> w = canonical_longest_word(n);
  for (int i = 0; i < moves; ++i) {
    auto nb = braid_neighbours(w);
    if (nb.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
    w = std::move(nb[pick(rng)]);
  }
  return w;
}

BraidOperator rcheck_longest(const WeightSpace& w, const std::vector<int>& word) {
  validate_longest_word(word, factor_count(w));
  WeightSpace cur = w;
  QMatrix acc = QMatrix::identity(w.dim());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    BraidOperator step = rcheck_matrix(cur, *it);
    acc = step.matrix * acc;
    cur = std::move(step.target);
  }
  return {w, cur, std::move(acc), OperatorTag::RCheck};
}

BraidOperator tau_theta_n(const WeightSpace& wc) {
  return tau_theta_n(wc, canonical_longest_word(factor_count(wc)));
}

BraidOperator tau_theta_n(const WeightSpace& wc, const std::vector<int>& word) {
  if (!wc.module().is_dual()) throw Error(ErrorCode::InvalidArgument, "tau_theta_n expects a contragredient weight space");
  // (a) tau(x) acts on M^c by the transpose of x on M, factor by factor.
  const WeightSpace underlying = wc.module().contragredient().weight_space(wc.level());
  QMatrix a = theta_n_matrix(underlying).matrix.transpose();
  // (b) R-check^(n) (C^(n))^-1 sigma_0 with the contragredient actions.
  const WeightSpace rev = wc.module().reversed().weight_space(wc.level());
  const QMatrix b = rcheck_longest(rev, word).matrix * cartan_factor_inverse(rev).matrix * sigma0(wc).matrix;
  if (!(a == b)) {
    throw Error(ErrorCode::CrossCheckFailure, "tau(Theta^(n)) differs from R-check^(n) C^-1 sigma_0");
  }
  return {wc, wc, std::move(a), OperatorTag::TauTheta};
}

}  // namespace qcanon
