#include <doctest.h>

#include <numeric>

#include "oracle.hpp"
#include "qcanon/canonical.hpp"
#include "qcanon/rmatrix.hpp"

using namespace qcanon;
using oracle::full_coproduct;
using oracle::full_theta;
using oracle::kron;
using oracle::q;
using oracle::raises;
using oracle::restrict;
using oracle::simples;

namespace {

QScalar v(int k) { return QScalar::v_power(k); }

// Theta^(n) on the full product by the right-form recursion.
QMatrix full_theta_n_right(const std::vector<WeightModule>& f, std::size_t from = 0) {
  if (from + 1 == f.size()) return QMatrix::identity(f[from].dim());
  const QMatrix split = full_theta(f[from].matrix(Generator::E), full_coproduct(f, Generator::F, from + 1, f.size()));
  return kron(QMatrix::identity(f[from].dim()), full_theta_n_right(f, from + 1)) * split;
}

// Theta^(n) on the full product by the left-form recursion.
QMatrix full_theta_n_left(const std::vector<WeightModule>& f, std::size_t end) {
  if (end == 1) return QMatrix::identity(f[0].dim());
  const QMatrix split = full_theta(full_coproduct(f, Generator::E, 0, end - 1), f[end - 1].matrix(Generator::F));
  return kron(full_theta_n_left(f, end - 1), QMatrix::identity(f[end - 1].dim())) * split;
}

// Composes R-check_{i_1} ... R-check_{i_L}, rightmost first, chaining weight spaces.
QMatrix braid_word(const WeightSpace& w, const std::vector<int>& word) {
  WeightSpace cur = w;
  QMatrix acc = QMatrix::identity(w.dim());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const BraidOperator r = rcheck_matrix(cur, *it);
    acc = r.matrix * acc;
    cur = r.target;
  }
  return acc;
}

}  // namespace

TEST_CASE("Theta coefficients") {
  CHECK(theta_numerator(0) == QScalar(1));
  CHECK(theta_numerator(1) == q(1) - q(-1));
  CHECK(theta_numerator(2) == q(1) * (q(1) - q(-1)) * (q(1) - q(-1)));
}

TEST_CASE("Theta on (V1 (x) V1)[0]") {
  const WeightSpace w = simples({1, 1}).weight_space(1);  // (0,1), (1,0)
  const QMatrix t = theta_matrix(w).matrix;
  CHECK(t.at(0, 0) == QScalar(1));
  CHECK(t.at(1, 0).is_zero());
  CHECK(t.at(0, 1) == q(1) - q(-1));
  CHECK(t.at(1, 1) == QScalar(1));
}

TEST_CASE("Theta matches the Kronecker construction and intertwines Delta with bar-Delta") {
  for (const auto& t : {simples({1, 1}), simples({2, 1}), simples({2, 3}), simples({3, 3})}) {
    const WeightModule &a = t.factor(0), &b = t.factor(1);
    const QMatrix theta = full_theta(a.matrix(Generator::E), b.matrix(Generator::F));
    const QMatrix de = kron(a.matrix(Generator::E), b.matrix(Generator::K)) + kron(QMatrix::identity(a.dim()), b.matrix(Generator::E));
    const QMatrix bar_de = kron(a.matrix(Generator::E), b.matrix(Generator::KInv)) + kron(QMatrix::identity(a.dim()), b.matrix(Generator::E));
    const QMatrix df = kron(a.matrix(Generator::F), QMatrix::identity(b.dim())) + kron(a.matrix(Generator::KInv), b.matrix(Generator::F));
    const QMatrix bar_df = kron(a.matrix(Generator::F), QMatrix::identity(b.dim())) + kron(a.matrix(Generator::K), b.matrix(Generator::F));
    CHECK(theta * de == bar_de * theta);
    CHECK(theta * df == bar_df * theta);
    for (int l = 0; l <= t.total_highest_weight(); ++l) {
      CHECK(theta_matrix(t.weight_space(l)).matrix == restrict(t, theta, l, l));
    }
  }
}

TEST_CASE("Cartan factor") {
  const WeightSpace top2 = simples({1, 1}).weight_space(0);
  CHECK(cartan_factor(top2).matrix.at(0, 0) == v(1));
  const WeightSpace top3 = simples({1, 1, 1}).weight_space(0);
  CHECK(cartan_factor(top3).matrix.at(0, 0) == v(3));
  // Factor weights (0, -1) and (-2, 1): a weight-0 factor contributes nothing.
  const WeightSpace w = simples({2, 1}).weight_space(2);  // (1,1), (2,0)
  CHECK(cartan_factor(w).matrix.at(0, 0) == QScalar(1));
  CHECK(cartan_factor(w).matrix.at(1, 1) == v(-2));
  for (const auto& t : {simples({1, 2, 1}), simples({3, 1, 2})}) {
    for (int l = 0; l <= t.total_highest_weight(); ++l) {
      const WeightSpace s = t.weight_space(l);
      CHECK(cartan_factor(s).matrix * cartan_factor_inverse(s).matrix == QMatrix::identity(s.dim()));
      CHECK(cartan_factor_recursive(s).matrix == cartan_factor(s).matrix);
    }
  }
}

TEST_CASE("Theta^(n) against both Kronecker recursions") {
  CHECK(theta_n_matrix(simples({3}).weight_space(1)).matrix == QMatrix::identity(1));
  const WeightSpace w2 = simples({2, 1}).weight_space(1);
  CHECK(theta_n_matrix(w2).matrix == theta_matrix(w2).matrix);
  for (const auto& t : {simples({1, 1, 1}), simples({1, 2, 1}), simples({1, 1, 1, 1}), simples({2, 1, 2})}) {
    const QMatrix right = full_theta_n_right(t.factors());
    const QMatrix left = full_theta_n_left(t.factors(), t.size());
    CHECK(right == left);
    for (int l = 0; l <= t.total_highest_weight(); ++l) {
      const WeightSpace w = t.weight_space(l);
      CHECK(theta_n_matrix(w, RecursionForm::Right).matrix == restrict(t, right, l, l));
      CHECK(theta_n_matrix(w, RecursionForm::Left).matrix == restrict(t, right, l, l));
      CHECK(r_n_matrix(w, RecursionForm::Right).matrix == cartan_factor(w).matrix * theta_n_matrix(w).matrix);
      CHECK(r_n_matrix(w, RecursionForm::Left).matrix == r_n_matrix(w, RecursionForm::Right).matrix);
    }
  }
}

TEST_CASE("R-check") {
  const WeightSpace top = simples({1, 1}).weight_space(0);
  CHECK(rcheck_matrix(top, 1).matrix.at(0, 0) == v(1));
  for (int l = 0; l <= 3; ++l) {
    const WeightSpace w = simples({2, 1}).weight_space(l);
    if (w.dim() == 1) CHECK(rcheck_matrix(w, 1).matrix.at(0, 0).is_monomial_unit());
  }

  const TensorModule t = simples({1, 2});
  for (int l = 0; l <= 3; ++l) {
    const WeightSpace w = t.weight_space(l);
    const BraidOperator r = rcheck_matrix(w, 1);
    CHECK(r.target.module().highest_weights() == std::vector<int>{2, 1});
    if (l < 3) {
      CHECK(rcheck_matrix(t.weight_space(l + 1), 1).matrix * coproduct_matrix(t, Generator::F, l) ==
            coproduct_matrix(r.target.module(), Generator::F, l) * r.matrix);
    }
    if (l > 0) {
      CHECK(rcheck_matrix(t.weight_space(l - 1), 1).matrix * coproduct_matrix(t, Generator::E, l) ==
            coproduct_matrix(r.target.module(), Generator::E, l) * r.matrix);
    }
  }
}

TEST_CASE("Yang-Baxter") {
  for (const auto& t : {simples({1, 1, 1}), simples({1, 2, 1}), simples({2, 1, 3})}) {
    for (int l = 0; l <= t.total_highest_weight(); ++l) {
      const WeightSpace w = t.weight_space(l);
      CHECK(braid_word(w, {1, 2, 1}) == braid_word(w, {2, 1, 2}));
    }
  }
}

TEST_CASE("longest words") {
  CHECK(canonical_longest_word(2) == std::vector<int>{1});
  CHECK(canonical_longest_word(3) == std::vector<int>{1, 2, 1});
  CHECK(canonical_longest_word(4) == std::vector<int>{1, 2, 1, 3, 2, 1});
  CHECK(reduced_longest_words(3, 100) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
  CHECK(reduced_longest_words(4, 1000).size() == 16);
  CHECK(reduced_longest_words(5, 10000).size() == 768);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto word = random_longest_word(5, seed);
    CHECK_NOTHROW(validate_longest_word(word, 5));
    CHECK(word == random_longest_word(5, seed));
  }
  CHECK(raises(ErrorCode::NotReduced, [] { validate_longest_word({1, 1, 1}, 3); }));
  CHECK(raises(ErrorCode::NotReduced, [] { validate_longest_word({1, 2}, 3); }));
  CHECK(raises(ErrorCode::NotReduced, [] { validate_longest_word({1, 3, 1}, 3); }));
  const WeightSpace w = simples({1, 1, 2}).weight_space(1);
  CHECK(raises(ErrorCode::NotReduced, [&] { rcheck_longest(w, {1, 2}); }));
}

TEST_CASE("R-check^(n)") {
  const WeightSpace w2 = simples({2, 1}).weight_space(1);
  CHECK(rcheck_longest(w2, {1}).matrix == rcheck_matrix(w2, 1).matrix);

  const WeightSpace w = simples({1, 1, 2}).weight_space(1);
  CHECK(rcheck_longest(w, {1, 2, 1}).matrix == rcheck_longest(w, {2, 1, 2}).matrix);
  CHECK(rcheck_longest(w, {1, 2, 1}).target.module().highest_weights() == std::vector<int>{2, 1, 1});

  for (const auto& t : {simples({1, 2, 1}), simples({1, 1, 1, 2})}) {
    for (int l = 0; l <= t.total_highest_weight(); ++l) {
      const WeightSpace s = t.weight_space(l);
      const QMatrix rl = rcheck_longest(s, canonical_longest_word(t.size())).matrix;
      CHECK(rl == sigma0(s).matrix * r_n_matrix(s, RecursionForm::Right).matrix);
      for (const auto& word : reduced_longest_words(t.size(), 20)) CHECK(rcheck_longest(s, word).matrix == rl);
    }
  }
}

TEST_CASE("tau(Theta^(n))") {
  const WeightSpace wc = dual_weight_space({1, 1}, 1);  // (0,1), (1,0)
  const QMatrix t = tau_theta_n(wc).matrix;
  CHECK(t.at(0, 0) == QScalar(1));
  CHECK(t.at(1, 0) == q(1) - q(-1));
  CHECK(t.at(0, 1).is_zero());
  CHECK(t.at(1, 1) == QScalar(1));

  CHECK(tau_theta_n(dual_weight_space({4}, 2)).matrix == QMatrix::identity(1));

  for (const std::vector<int>& lambda : {std::vector<int>{1, 2, 1}, std::vector<int>{2, 2}, std::vector<int>{1, 1, 1, 1}}) {
    const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
    for (int l = 0; l <= total; ++l) {
      const WeightSpace d = dual_weight_space(lambda, l);
      const WeightSpace s = simple_weight_space(lambda, l);
      CHECK(tau_theta_n(d).matrix == theta_n_matrix(s).matrix.transpose());
    }
  }
}

TEST_CASE("sigma_0") {
  const WeightSpace w = simples({2, 1}).weight_space(1);  // (0,1), (1,0)
  const BraidOperator s = sigma0(w);                       // to (V1 (x) V2): (0,1), (1,0)
  CHECK(s.matrix.at(1, 0) == QScalar(1));
  CHECK(s.matrix.at(0, 1) == QScalar(1));
  CHECK(s.tag == OperatorTag::Sigma);
}
