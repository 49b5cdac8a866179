#include "qcanon/canonical.hpp"

#include "qcanon/error.hpp"
#include "qcanon/rmatrix.hpp"

namespace qcanon {

bool AntilinearMap::is_involution() const { return (matrix * matrix.bar()).is_identity(); }

AntilinearMap psi_c(const WeightSpace& wc) { return {wc, tau_theta_n(wc).matrix}; }

AntilinearMap psi_tensor2(const WeightSpace& w) {
  if (w.module().is_dual()) throw Error(ErrorCode::InvalidArgument, "psi acts on the monomial side");
  return {w, theta_matrix(w).matrix.bar()};
}

std::vector<BasisVector> triangular_fixed_basis(const AntilinearMap& psi, Triangularity shape) {
  const WeightSpace& w = psi.space;
  const std::size_t d = w.dim();
  const bool upper = shape == Triangularity::Upper;
  std::vector<QVector> built(d);
  // Upper processes the largest index first; Lower the smallest.
  for (std::size_t step = 0; step < d; ++step) {
    const std::size_t m = upper ? d - 1 - step : step;
    const QVector e = w.unit(m);
    QVector delta = psi(e) - e;
    for (std::size_t k = 0; k < d; ++k) {
      const bool allowed = upper ? k > m : k < m;
      if (!allowed && !delta[k].is_zero()) {
        throw Error(ErrorCode::TriangularityViolation, "psi(e_m) - e_m has a term at a forbidden index");
      }
    }
    // Peel delta in the basis already built, starting next to m.
    QVector b = e;
    for (std::size_t off = 1; off < d; ++off) {
      if (upper ? m + off >= d : off > m) break;
      const std::size_t k = upper ? m + off : m - off;
      if (delta[k].is_zero()) continue;
      const QScalar rho = delta[k];
      delta = delta - rho * built[k];
      b = b + solve_bar_equation(rho) * built[k];
    }
    if (!is_zero(delta)) throw Error(ErrorCode::TriangularityViolation, "residual left after peeling");
    built[m] = std::move(b);
  }
  std::vector<BasisVector> out;
  for (std::size_t m = 0; m < d; ++m) out.push_back({w.index(m), std::move(built[m])});
  return out;
}

namespace {

void require_simple(const TensorModule& t) {
  for (const auto& f : t.factors()) {
    if (f.kind() != ModuleKind::Simple) throw Error(ErrorCode::InvalidArgument, "canonical bases need simple factors");
  }
}

std::vector<WeightModule> simples(const std::vector<int>& lambda) {
  std::vector<WeightModule> f;
  for (int l : lambda) f.push_back(make_simple(l));
  return f;
}

}  // namespace

WeightSpace simple_weight_space(const std::vector<int>& lambda, int level) {
  return tensor_product(simples(lambda)).weight_space(level);
}

WeightSpace dual_weight_space(const std::vector<int>& lambda, int level) {
  return tensor_product(simples(lambda)).contragredient().weight_space(level);
}

std::vector<BasisVector> dual_canonical_basis(const WeightSpace& wc) {
  if (!wc.module().is_dual()) throw Error(ErrorCode::InvalidArgument, "dual canonical basis lives on the contragredient");
  require_simple(wc.module());
  return triangular_fixed_basis(psi_c(wc), Triangularity::Upper);
}

std::vector<BasisVector> dual_canonical_basis(const std::vector<int>& lambda, int level) {
  return dual_canonical_basis(dual_weight_space(lambda, level));
}

std::vector<BasisVector> canonical_basis_pair(const WeightSpace& w) {
  if (w.module().size() != 2) throw Error(ErrorCode::InvalidArgument, "canonical_basis_pair needs two factors");
  require_simple(w.module());
  auto basis = triangular_fixed_basis(psi_tensor2(w), Triangularity::Lower);
  for (const auto& b : basis) {
    for (std::size_t k = 0; k < w.dim(); ++k) {
      if (b.coords[k].is_zero()) continue;
      const MultiIndex& idx = w.index(k);
      const int shift = b.index[0] - idx[0];
      if (shift < 0 || idx[1] - b.index[1] != shift) {
        throw Error(ErrorCode::TriangularityViolation, "canonical vector has a term outside the k >= 0 shape");
      }
    }
  }
  return basis;
}

QMatrix pairing_matrix(const std::vector<BasisVector>& primal, const std::vector<BasisVector>& dual) {
  QMatrix p(primal.size(), dual.size());
  for (std::size_t i = 0; i < primal.size(); ++i) {
    for (std::size_t j = 0; j < dual.size(); ++j) {
      const auto& a = primal[i].coords;
      const auto& b = dual[j].coords;
      if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "pairing of different weight spaces");
      QScalar s;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
      }
      p.set(i, j, s);
    }
  }
  return p;
}

bool is_singular(const WeightSpace& w, const QVector& x) {
  if (x.size() != w.dim()) throw Error(ErrorCode::DimensionMismatch, "vector outside the weight space");
  return is_zero(coproduct_matrix(w.module(), Generator::E, w.level()).apply(x));
}

std::size_t kernel_dim_E(const WeightSpace& w) {
  return w.dim() - rank(coproduct_matrix(w.module(), Generator::E, w.level()));
}

std::vector<BasisVector> singular_subset(const WeightSpace& w, const std::vector<BasisVector>& basis) {
  const QMatrix e = coproduct_matrix(w.module(), Generator::E, w.level());
  std::vector<BasisVector> out;
  for (const auto& b : basis) {
    if (is_zero(e.apply(b.coords))) out.push_back(b);
  }
  const std::size_t expected = w.dim() - rank(e);
  if (out.size() != expected) {
    throw Error(ErrorCode::CountMismatch, std::to_string(out.size()) + " singular basis vectors but dim ker E = " +
                                              std::to_string(expected));
  }
  return out;
}

}  // namespace qcanon
