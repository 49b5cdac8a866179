#include <doctest.h>

#include <functional>
#include <numeric>

#include "oracle.hpp"
#include "qcanon/canonical.hpp"

using namespace qcanon;
using oracle::q;
using oracle::raises;

namespace {

QVector vec(std::initializer_list<QScalar> xs) { return QVector(xs); }

// Candidates a q^-1 + b q^-2 + c q^-3 with a, b, c in {-1, 0, 1}.
std::vector<QScalar> small_ideal() {
  std::vector<QScalar> out;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) out.push_back(a * q(-1) + b * q(-2) + c * q(-3));
  return out;
}

// Every psi-fixed vector e_m + sum_{k > m} p_k e_k with p_k among the small
// candidates, found by exhaustive search.
std::vector<QVector> brute_force_fixed(const AntilinearMap& psi, std::size_t m) {
  const auto cands = small_ideal();
  const std::size_t dim = psi.space.dim();
  std::vector<QVector> found;
  QVector x(dim);
  x[m] = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == dim) {
      if (psi(x) == x) found.push_back(x);
      return;
    }
    for (const auto& c : cands) {
      x[k] = c;
      rec(k + 1);
    }
    x[k] = QScalar();
  };
  rec(m + 1);
  return found;
}

std::size_t weight_dim(const std::vector<int>& lambda, int level) {
  return level < 0 ? 0 : enumerate_P(lambda, level).size();
}

}  // namespace

TEST_CASE("golden dual canonical basis of (V1 (x) V1)[0]") {
  const auto basis = dual_canonical_basis({1, 1}, 1);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].index == MultiIndex{0, 1});
  CHECK(basis[0].coords == vec({1, -q(-1)}));
  CHECK(basis[1].index == MultiIndex{1, 0});
  CHECK(basis[1].coords == vec({QScalar(), 1}));
}

TEST_CASE("golden dual canonical basis of (V2 (x) V1)[-1]") {
  const auto basis = dual_canonical_basis({2, 1}, 2);  // (1,1), (2,0)
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].coords == vec({1, -q(-1)}));
  CHECK(basis[1].coords == vec({QScalar(), 1}));
}

TEST_CASE("psi^c") {
  const WeightSpace wc = dual_weight_space({1, 1}, 1);
  const AntilinearMap psi = psi_c(wc);
  CHECK(psi(vec({QScalar(), 1})) == vec({QScalar(), 1}));
  CHECK(psi(vec({1, QScalar()})) == vec({1, q(1) - q(-1)}));
  CHECK(psi(vec({q(2), QScalar()})) == vec({q(-2), q(-1) - q(-3)}));
  CHECK(psi.is_involution());
  for (int l = 0; l <= 4; ++l) CHECK(psi_c(dual_weight_space({1, 2, 1}, l)).is_involution());
  // One factor: psi^c is the coefficientwise bar on dual monomials.
  for (int l = 0; l <= 3; ++l) CHECK(psi_c(dual_weight_space({3}, l)).matrix == QMatrix::identity(1));
}

TEST_CASE("psi on two factors") {
  const WeightSpace w = simple_weight_space({1, 1}, 1);  // (0,1), (1,0)
  const AntilinearMap psi = psi_tensor2(w);
  CHECK(psi(vec({QScalar(), 1})) == vec({q(-1) - q(1), 1}));
  CHECK(psi(vec({1, QScalar()})) == vec({1, QScalar()}));
  CHECK(psi_tensor2(simple_weight_space({1, 1}, 0)).matrix == QMatrix::identity(1));
  for (int l = 0; l <= 3; ++l) CHECK(psi_tensor2(simple_weight_space({2, 1}, l)).is_involution());
}

TEST_CASE("solver agrees with exhaustive search") {
  const std::vector<std::pair<std::vector<int>, int>> cases = {
      {{1, 1}, 1}, {{2, 1}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}, {{1, 1, 1}, 2}, {{2, 2}, 2}, {{1, 2}, 1}, {{3, 1}, 2}};
  for (const auto& [lambda, level] : cases) {
    const WeightSpace wc = dual_weight_space(lambda, level);
    const AntilinearMap psi = psi_c(wc);
    const auto basis = dual_canonical_basis(wc);
    for (std::size_t m = 0; m < wc.dim(); ++m) {
      const auto found = brute_force_fixed(psi, m);
      REQUIRE(found.size() == 1);
      CHECK(found[0] == basis[m].coords);
    }
  }
}

TEST_CASE("basis shape") {
  for (const std::vector<int>& lambda : {std::vector<int>{1, 2, 1}, std::vector<int>{2, 2, 1}, std::vector<int>{1, 1, 1, 1}}) {
    const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
    for (int l = 0; l <= total; ++l) {
      const WeightSpace wc = dual_weight_space(lambda, l);
      const AntilinearMap psi = psi_c(wc);
      const auto basis = dual_canonical_basis(wc);
      REQUIRE(basis.size() == wc.dim());
      for (std::size_t m = 0; m < basis.size(); ++m) {
        CHECK(basis[m].index == wc.index(m));
        CHECK(psi(basis[m].coords) == basis[m].coords);
        CHECK(basis[m].coords[m] == QScalar(1));
        for (std::size_t k = 0; k < m; ++k) CHECK(basis[m].coords[k].is_zero());
        for (std::size_t k = m + 1; k < basis.size(); ++k) CHECK(in_qinv_ideal(basis[m].coords[k]));
      }
    }
  }
}

TEST_CASE("trivial cases") {
  for (const std::vector<int>& lambda : {std::vector<int>{2}, std::vector<int>{1, 3}, std::vector<int>{2, 1, 1}}) {
    const auto top = dual_canonical_basis(lambda, 0);
    REQUIRE(top.size() == 1);
    CHECK(top[0].coords == vec({1}));
  }
  for (int l = 0; l <= 4; ++l) {
    const auto b = dual_canonical_basis({4}, l);
    REQUIRE(b.size() == 1);
    CHECK(b[0].index == MultiIndex{l});
    CHECK(b[0].coords == vec({1}));
  }
}

TEST_CASE("canonical basis of V (x) V'") {
  const auto c = canonical_basis_pair(simple_weight_space({1, 1}, 1));  // (0,1), (1,0)
  REQUIRE(c.size() == 2);
  CHECK(c[0].coords == vec({1, QScalar()}));
  CHECK(c[1].coords == vec({q(-1), 1}));
  CHECK(canonical_basis_pair(simple_weight_space({2, 3}, 0))[0].coords == vec({1}));

  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int l = 0; l <= a + b; ++l) {
        const WeightSpace w = simple_weight_space({a, b}, l);
        const AntilinearMap psi = psi_tensor2(w);
        for (const auto& v : canonical_basis_pair(w)) {
          CHECK(psi(v.coords) == v.coords);
          // Support on (i - k, j + k), k >= 0.
          for (std::size_t k = 0; k < w.dim(); ++k) {
            if (v.coords[k].is_zero()) continue;
            CHECK(w.index(k)[0] <= v.index[0]);
            if (w.index(k) != v.index) CHECK(in_qinv_ideal(v.coords[k]));
          }
        }
      }
}

TEST_CASE("canonical and dual canonical bases are dual") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 5; ++b)
      for (int l = 0; l <= a + b; ++l) {
        const auto c = canonical_basis_pair(simple_weight_space({a, b}, l));
        const auto d = dual_canonical_basis({a, b}, l);
        CHECK(pairing_matrix(c, d).is_identity());
      }
}

TEST_CASE("solver contract errors") {
  const WeightSpace w = simple_weight_space({1, 1}, 1);
  CHECK(raises(ErrorCode::TriangularityViolation, [&] { triangular_fixed_basis(psi_tensor2(w), Triangularity::Upper); }));
  QMatrix m = QMatrix::identity(2);
  m.set(1, 0, q(1));
  const AntilinearMap skew{w, m};
  CHECK(raises(ErrorCode::BarAsymmetry, [&] { triangular_fixed_basis(skew, Triangularity::Upper); }));
}

TEST_CASE("singular vectors") {
  const WeightSpace wc = dual_weight_space({1, 1}, 1);
  const auto basis = dual_canonical_basis(wc);
  CHECK(is_singular(wc, basis[0].coords));
  CHECK_FALSE(is_singular(wc, basis[1].coords));
  CHECK(is_singular(dual_weight_space({1, 1}, 0), vec({1})));
  const auto sing = singular_subset(wc, basis);
  REQUIRE(sing.size() == 1);
  CHECK(sing[0].index == MultiIndex{0, 1});

  const WeightSpace w4 = dual_weight_space({1, 1, 1, 1}, 2);
  CHECK(singular_subset(w4, dual_canonical_basis(w4)).size() == 2);
  const WeightSpace w2 = dual_weight_space({2}, 1);
  CHECK(singular_subset(w2, dual_canonical_basis(w2)).empty());

  const std::vector<BasisVector> monomials = {{{0, 1}, vec({1, QScalar()})}, {{1, 0}, vec({QScalar(), 1})}};
  CHECK(raises(ErrorCode::CountMismatch, [&] { singular_subset(wc, monomials); }));
}

TEST_CASE("kernel of E matches Clebsch-Gordan multiplicities") {
  for (const std::vector<int>& lambda :
       {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1, 2}, std::vector<int>{1, 1, 1, 1, 1}, std::vector<int>{3, 2}}) {
    const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
    for (int l = 0; l <= total; ++l) {
      const std::size_t expected = 2 * l <= total ? weight_dim(lambda, l) - weight_dim(lambda, l - 1) : 0;
      CHECK(kernel_dim_E(dual_weight_space(lambda, l)) == expected);
      CHECK(kernel_dim_E(simple_weight_space(lambda, l)) == expected);
    }
  }
}
