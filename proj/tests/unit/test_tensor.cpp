#include <doctest.h>

#include "qcanon/error.hpp"
#include "qcanon/tensor.hpp"
#include "oracle.hpp"

using namespace qcanon;

using oracle::full_coproduct;
using oracle::q;
using oracle::restrict;
using oracle::simples;

TEST_CASE("dimensions and weights") {
  const TensorModule t11 = simples({1, 1});
  CHECK(t11.dim() == 4);
  CHECK(t11.weight(MultiIndex{0, 0}) == 2);
  CHECK(t11.weight(MultiIndex{0, 1}) == 0);
  CHECK(t11.weight(MultiIndex{1, 0}) == 0);
  CHECK(t11.weight(MultiIndex{1, 1}) == -2);

  const TensorModule t21 = simples({2, 1});
  std::vector<int> weights;
  for (int l = 0; l <= 3; ++l) {
    const WeightSpace w = t21.weight_space(l);
    for (const auto& m : w.indices()) weights.push_back(t21.weight(m));
  }
  CHECK(weights == std::vector<int>{3, 1, 1, -1, -1, -3});
  CHECK(t21.factor_weights(MultiIndex{1, 1}) == std::vector<int>{0, -1});
  CHECK(t21.highest_weights() == std::vector<int>{2, 1});
  CHECK(t21.total_highest_weight() == 3);
}

TEST_CASE("enumerate_P") {
  CHECK(enumerate_P({1, 1}, 1) == std::vector<MultiIndex>{{0, 1}, {1, 0}});
  CHECK(enumerate_P({2, 2}, 4) == std::vector<MultiIndex>{{2, 2}});
  CHECK(enumerate_P({2, 1, 1}, 2) == std::vector<MultiIndex>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}});
  CHECK(enumerate_P({1, 1}, 3).empty());
  CHECK(enumerate_P({3}, 0) == std::vector<MultiIndex>{{0}});
}

TEST_CASE("weight spaces") {
  const WeightSpace w = simples({1, 1}).weight_space(1);
  CHECK(w.dim() == 2);
  CHECK(w.weight() == 0);
  CHECK(w.indices() == std::vector<MultiIndex>{{0, 1}, {1, 0}});
  CHECK(w.position({1, 0}) == 1u);
  CHECK_FALSE(w.position({1, 1}).has_value());
  CHECK_THROWS_AS(w.position_of({1, 1}), Error);

  const WeightSpace w21 = simples({2, 1}).weight_space(2);
  CHECK(w21.indices() == std::vector<MultiIndex>{{1, 1}, {2, 0}});
  CHECK(simples({1, 1, 1, 1}).weight_space(2).dim() == 6);
  CHECK(simples({1, 1}).weight_space(3).empty());

  const QVector x{q(1), -q(-2)};
  CHECK(w.coords(w.tensor(x)) == x);
  CHECK(w.unit(0) == QVector{1, QScalar()});
}

TEST_CASE("coproduct on V1 (x) V1") {
  const TensorModule t = simples({1, 1});
  TensorVector expected;
  accumulate(expected, MultiIndex{1, 0}, 1);
  accumulate(expected, MultiIndex{0, 1}, q(-1));
  CHECK(t.apply(Generator::F, MultiIndex{0, 0}) == expected);
  const QMatrix f = coproduct_matrix(t, Generator::F, 0);
  CHECK(f.rows() == 2);
  CHECK(f.cols() == 1);
  CHECK(f.at(0, 0) == q(-1));
  CHECK(f.at(1, 0) == QScalar(1));
  for (int l = 0; l <= 2; ++l) {
    const QMatrix k = coproduct_matrix(t, Generator::K, l);
    CHECK(k == QMatrix::diagonal(QVector(k.rows(), q(2 - 2 * l))));
  }
}

TEST_CASE("one factor acts like the module itself") {
  const TensorModule t = simples({3});
  for (int l = 0; l < 3; ++l) {
    CHECK(coproduct_matrix(t, Generator::F, l).at(0, 0) == t.factor(0).f_coeff(l));
    CHECK(coproduct_matrix(t, Generator::E, l + 1).at(0, 0) == t.factor(0).e_coeff(l + 1));
  }
}

TEST_CASE("coproduct matches Kronecker products") {
  for (const auto& t : {simples({1, 1, 1}), simples({1, 2, 1}), simples({2, 3}), simples({1, 1, 2, 1})}) {
    const int top = t.total_highest_weight();
    for (Generator g : {Generator::E, Generator::F, Generator::K}) {
      const QMatrix full = full_coproduct(t.factors(), g);
      for (int l = 0; l <= top; ++l) {
        const int to = l + level_shift(g);
        if (to < 0 || to > top) continue;
        CHECK(coproduct_matrix(t, g, l) == restrict(t, full, l, to));
      }
    }
  }
}

TEST_CASE("[E, F] = [h] and coassociativity") {
  for (const auto& t : {simples({1, 1, 1}), simples({2, 1, 2}), simples({3, 1})}) {
    const int top = t.total_highest_weight();
    for (int l = 0; l <= top; ++l) {
      const WeightSpace w = t.weight_space(l);
      QMatrix ef(w.dim(), w.dim()), fe(w.dim(), w.dim());
      if (l < top) ef = coproduct_matrix(t, Generator::E, l + 1) * coproduct_matrix(t, Generator::F, l);
      if (l > 0) fe = coproduct_matrix(t, Generator::F, l - 1) * coproduct_matrix(t, Generator::E, l);
      CHECK(ef - fe == QMatrix::diagonal(QVector(w.dim(), quantum_int(w.weight()))));
      for (std::size_t split = 1; split < t.size(); ++split) {
        for (Generator g : {Generator::E, Generator::F}) {
          const int to = l + level_shift(g);
          if (to < 0 || to > top) continue;
          CHECK(coproduct_matrix_split(t, g, l, split) == coproduct_matrix(t, g, l));
        }
      }
    }
  }
}

TEST_CASE("derived module operations") {
  const TensorModule t = simples({1, 2, 3});
  CHECK(t.swapped(0).highest_weights() == std::vector<int>{2, 1, 3});
  CHECK(t.reversed().highest_weights() == std::vector<int>{3, 2, 1});
  CHECK(t.slice(1, 2).highest_weights() == std::vector<int>{2, 3});
  CHECK(t.contragredient().is_dual());
  CHECK_FALSE(t.is_dual());
  CHECK(t.contragredient().contragredient() == t);
  CHECK(level_shift(Generator::E) == -1);
  CHECK(level_shift(Generator::F) == 1);
  CHECK(level_shift(Generator::KHalf) == 0);
}
