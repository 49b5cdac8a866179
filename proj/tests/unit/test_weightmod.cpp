#include <doctest.h>

#include "qcanon/error.hpp"
#include "qcanon/weightmod.hpp"

using namespace qcanon;

namespace {

QScalar q(int k) { return QScalar::q_power(k); }

QVector slot(int dim, int m, QScalar c = 1) {
  QVector x(static_cast<std::size_t>(dim));
  x[static_cast<std::size_t>(m)] = c;
  return x;
}

// In the plain-power basis w_m = F^m v, commuting E past F with [E, F] = [h]
// gives E w_m = c_m w_{m-1} with c_m = c_{m-1} + [lambda - 2(m - 1)].
std::vector<QScalar> plain_e(int lambda, int top) {
  std::vector<QScalar> c(static_cast<std::size_t>(top) + 1);
  for (int m = 1; m <= top; ++m) c[m] = c[m - 1] + quantum_int(lambda - 2 * (m - 1));
  return c;
}

// E^(a) F^(b) v as a multiple of F^(b-a) v:
// c_b c_{b-1} ... c_{b-a+1} [b-a]! / ([a]! [b]!).
QScalar divided_oracle(int lambda, int a, int b) {
  const auto c = plain_e(lambda, b);
  QScalar num = quantum_factorial(b - a);
  for (int k = b - a + 1; k <= b; ++k) num *= c[k];
  return exact_divide(num, quantum_factorial(a) * quantum_factorial(b));
}

const Generator kAll[] = {Generator::E, Generator::F, Generator::K, Generator::KInv, Generator::KHalf,
                          Generator::KHalfInv};

}  // namespace

TEST_CASE("single-slot actions") {
  const WeightModule v2 = make_simple(2);
  CHECK(v2.dim() == 3);
  CHECK(apply_generator(v2, {{Generator::E}}, slot(3, 1)) == slot(3, 0, quantum_int(2)));
  const WeightModule v1 = make_simple(1);
  CHECK(apply_generator(v1, {{Generator::F}}, slot(2, 1)) == QVector(2));
  const WeightModule v3 = make_simple(3);
  CHECK(apply_generator(v3, {{Generator::K}}, slot(4, 2)) == slot(4, 2, q(-1)));
  CHECK(apply_generator(v3, {{Generator::KHalf}}, slot(4, 0)) == slot(4, 0, QScalar::v_power(3)));
  CHECK(v3.weight(3) == -3);
}

TEST_CASE("action coefficients match the commutation oracle") {
  for (int lambda = 0; lambda <= 7; ++lambda) {
    const WeightModule v = make_simple(lambda);
    const auto c = plain_e(lambda, lambda);
    for (int m = 1; m <= lambda; ++m) {
      CHECK(v.e_coeff(m) == exact_divide(c[m], quantum_int(m)));
      CHECK(v.e_coeff(m) == quantum_int(lambda - m + 1));
    }
    for (int m = 0; m < lambda; ++m) CHECK(v.f_coeff(m) == quantum_int(m + 1));
  }
}

TEST_CASE("divided powers E^(a) F^(b) match the oracle") {
  for (int lambda = 0; lambda <= 6; ++lambda) {
    const WeightModule v = make_simple(lambda);
    for (int b = 0; b <= lambda; ++b) {
      for (int a = 0; a <= b; ++a) {
        const QVector got = apply_generator(v, {{Generator::E, a}, {Generator::F, b}}, slot(v.dim(), 0));
        CHECK(got == slot(v.dim(), b - a, divided_oracle(lambda, a, b)));
      }
    }
  }
  const WeightModule m = make_verma_truncated(-3, 4);
  for (int b = 0; b <= 4; ++b) {
    for (int a = 0; a <= b; ++a) {
      const QVector got = apply_generator(m, {{Generator::E, a}, {Generator::F, b}}, slot(m.dim(), 0));
      CHECK(got == slot(m.dim(), b - a, divided_oracle(-3, a, b)));
    }
  }
}

TEST_CASE("words") {
  const WeightModule v2 = make_simple(2);
  CHECK(apply_generator(v2, {}, slot(3, 1, q(2))) == slot(3, 1, q(2)));
  const QVector ef = apply_generator(v2, {{Generator::E}, {Generator::F}}, slot(3, 1));
  const QVector fe = apply_generator(v2, {{Generator::F}, {Generator::E}}, slot(3, 1));
  CHECK(ef - fe == QVector(3));
  CHECK(apply_generator(v2, {{Generator::F, 2}}, slot(3, 0)) == slot(3, 2));
  CHECK(apply_generator(v2, {{Generator::K}, {Generator::KInv}}, slot(3, 2, 5)) == slot(3, 2, 5));
}

TEST_CASE("[E, F] = [h] on simple and truncated Verma modules") {
  for (int lambda = 0; lambda <= 6; ++lambda) {
    const WeightModule v = make_simple(lambda);
    const QMatrix e = v.matrix(Generator::E), f = v.matrix(Generator::F);
    QVector h;
    for (int m = 0; m <= lambda; ++m) h.push_back(quantum_int(v.weight(m)));
    CHECK(e * f - f * e == QMatrix::diagonal(h));
  }
  for (int lambda = -2; lambda <= 4; ++lambda) {
    const WeightModule m = make_verma_truncated(lambda, 3);
    for (int s = 0; s < 3; ++s) {
      const QVector x = slot(4, s);
      const QVector ef = apply_generator(m, {{Generator::E}, {Generator::F}}, x);
      const QVector fe = apply_generator(m, {{Generator::F}, {Generator::E}}, x);
      CHECK(ef - fe == slot(4, s, quantum_int(lambda - 2 * s)));
    }
  }
}

TEST_CASE("truncated Verma modules") {
  const WeightModule m = make_verma_truncated(2, 2);
  const WeightModule v = make_simple(2);
  CHECK(m.kind() == ModuleKind::VermaTruncated);
  CHECK(m.dim() == 3);
  for (int s = 1; s <= 2; ++s) CHECK(m.e_coeff(s) == v.e_coeff(s));
  CHECK(m.f_coeff(0) == v.f_coeff(0));
  CHECK(m.f_overflow() == quantum_int(3));
  CHECK(v.f_overflow().is_zero());
  CHECK_THROWS_AS(apply_generator(m, {{Generator::F}}, slot(3, 2)), Error);

  CHECK(make_verma_truncated(5, 2).e_coeff(2) == quantum_int(4));
  CHECK(make_verma_truncated(0, 1).e_coeff(1).is_zero());
}

TEST_CASE("contragredient") {
  const WeightModule v1c = contragredient(make_simple(1));
  CHECK(v1c.is_dual());
  CHECK(apply_generator(v1c, {{Generator::E}}, slot(2, 1)) == slot(2, 0, q(1)));

  for (int lambda = 0; lambda <= 5; ++lambda) {
    const WeightModule v = make_simple(lambda);
    const WeightModule vc = contragredient(v);
    for (int m = 0; m <= lambda; ++m) {
      CHECK(apply_generator(vc, {{Generator::K}}, slot(v.dim(), m)) == slot(v.dim(), m, q(lambda - 2 * m)));
    }
    // tau(E) = F q^h and tau(F) = q^-h E.
    const QMatrix k = v.matrix(Generator::K), kinv = v.matrix(Generator::KInv);
    CHECK(vc.matrix(Generator::E) == (v.matrix(Generator::F) * k).transpose());
    CHECK(vc.matrix(Generator::F) == (kinv * v.matrix(Generator::E)).transpose());
    const WeightModule back = contragredient(vc);
    for (Generator g : kAll) CHECK(back.matrix(g) == v.matrix(g));
  }
}

TEST_CASE("Shapovalov embedding") {
  const QMatrix s1 = shapovalov_embed(1, 1);
  CHECK(s1.at(0, 0) == QScalar(1));
  CHECK(s1.at(1, 1) == q(-1));
  CHECK(s1.at(0, 1).is_zero());
  CHECK(s1.at(1, 0).is_zero());

  for (int lambda = 0; lambda <= 4; ++lambda) {
    const QMatrix s = shapovalov_embed(lambda, lambda + 1);
    CHECK(s.at(0, 0) == QScalar(1));
    const WeightModule v = make_simple(lambda);
    const WeightModule mc = contragredient(make_verma_truncated(lambda, lambda + 1));
    CHECK(s * v.matrix(Generator::E) == mc.matrix(Generator::E) * s);
    CHECK(s * v.matrix(Generator::F) == mc.matrix(Generator::F) * s);
    // F (slot s)* = [lambda - s] q^{-(lambda - 2s)} (slot s+1)* in M^c, so the
    // diagonal is [lambda, m] q^{-sum_{s<m} (lambda - 2s)}.
    for (int m = 0; m <= lambda; ++m) {
      int exponent = 0;
      for (int t = 0; t < m; ++t) exponent -= lambda - 2 * t;
      CHECK(s.at(static_cast<std::size_t>(m), static_cast<std::size_t>(m)) ==
            quantum_binomial(lambda, m) * q(exponent));
      for (int r = 0; r <= lambda + 1; ++r) {
        if (r != m) CHECK(s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(m)).is_zero());
      }
    }
  }
  CHECK_THROWS_AS(shapovalov_embed(3, 1), Error);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(make_simple(-1), Error);
  CHECK_THROWS_AS(apply_generator(make_simple(2), {{Generator::E}}, QVector(2)), Error);
}
