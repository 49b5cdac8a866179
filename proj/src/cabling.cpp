#include "qcanon/cabling.hpp"

#include <algorithm>
#include <numeric>

#include "qcanon/error.hpp"

namespace qcanon {

UnitEmbedding verma_unit_embedding(int lambda, int level) {
  if (lambda < 1) throw Error(ErrorCode::InvalidArgument, "unit embedding needs lambda >= 1");
  if (level < 0) throw Error(ErrorCode::TruncationTooSmall, "negative truncation level");
  std::vector<WeightModule> factors(static_cast<std::size_t>(lambda), make_verma_truncated(1, level));
  UnitEmbedding emb{lambda, level, TensorModule(std::move(factors)), {}};
  TensorVector x{{MultiIndex(static_cast<std::size_t>(lambda), 0), QScalar(1)}};
  for (int m = 0; m <= level; ++m) {
    if (m > 0) x = emb.target.apply(Generator::F, x);
    TensorVector divided;
    const QScalar fact = quantum_factorial(m);
    for (const auto& [k, c] : x) divided.emplace(k, exact_divide(c, fact));
    emb.images.push_back(std::move(divided));
  }
  return emb;
}

QMatrix dual_cabling_matrix(const std::vector<int>& lambda, int level) {
  const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  const WeightSpace source = simple_weight_space(std::vector<int>(static_cast<std::size_t>(total), 1), level);
  const WeightSpace target = simple_weight_space(lambda, level);
  // Per block: image of F^(m) restricted to unit slots 0, 1.
  std::vector<std::vector<TensorVector>> block_images;
  for (int li : lambda) {
    UnitEmbedding emb = verma_unit_embedding(li, level);
    std::vector<TensorVector> restricted;
    for (const auto& img : emb.images) {
      TensorVector r;
      for (const auto& [k, c] : img) {
        if (std::all_of(k.begin(), k.end(), [](int s) { return s <= 1; })) r.emplace(k, c);
      }
      restricted.push_back(std::move(r));
    }
    block_images.push_back(std::move(restricted));
  }
  QMatrix out(target.dim(), source.dim());
  // Every way of distributing the level over the blocks, including a_i > lambda_i.
  const std::vector<int> bounds(lambda.size(), level);
  for (const MultiIndex& a : enumerate_P(bounds, level)) {
    TensorVector image{{MultiIndex{}, QScalar(1)}};
    for (std::size_t i = 0; i < a.size() && !image.empty(); ++i) {
      TensorVector next;
      for (const auto& [k, c] : image) {
        for (const auto& [kb, cb] : block_images[i][static_cast<std::size_t>(a[i])]) {
          MultiIndex joined = k;
          joined.insert(joined.end(), kb.begin(), kb.end());
          accumulate(next, joined, c * cb);
        }
      }
      image = std::move(next);
    }
    const auto row = target.position(a);
    if (!row) {
      if (!image.empty()) {
        throw Error(ErrorCode::StructuralMismatch, "F^(a) with a_i > lambda_i has a nonzero unit-weight image");
      }
      continue;
    }
    for (const auto& [k, c] : image) out.add(*row, source.position_of(k), c);
  }
  return out;
}

namespace {

// Coordinates of x in an upper unitriangular basis (peeling from the smallest index).
QVector in_basis(QVector x, const std::vector<BasisVector>& basis) {
  QVector c(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (x[k].is_zero()) continue;
    c[k] = x[k];
    x = x - c[k] * basis[k].coords;
  }
  if (!is_zero(x)) throw Error(ErrorCode::StructuralMismatch, "image is not in the span of the dual canonical basis");
  return c;
}

}  // namespace

CablingReport theorem61_report(const std::vector<int>& lambda, int level) {
  const std::vector<int> pi = block_map(lambda);
  const std::vector<int> unit(pi.size(), 1);
  const WeightSpace target = dual_weight_space(lambda, level);
  const auto source_basis = dual_canonical_basis(unit, level);
  const auto target_basis = dual_canonical_basis(target);
  const QMatrix cable = dual_cabling_matrix(lambda, level);

  CablingReport report{lambda, level, {}, true, true, true};
  for (const auto& b : source_basis) {
    CablingEntry e;
    e.source = b.index;
    e.source_diagram = diagram_of_index(unit, b.index);
    const auto collapsed = cable_diagram(e.source_diagram, lambda);
    const QVector x = cable.apply(b.coords);
    e.killed = is_zero(x);
    if (e.killed != !collapsed.has_value()) {
      throw Error(ErrorCode::StructuralMismatch,
                  std::string("kill pattern disagrees with the diagram rule at a unit-weight index: image ") +
                      (e.killed ? "vanishes" : "survives"));
    }
    if (!e.killed) {
      e.expected_target = index_of_diagram(*collapsed);
      const QVector c = in_basis(x, target_basis);
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        if (hit) throw Error(ErrorCode::StructuralMismatch, "image spreads over several dual canonical vectors");
        hit = k;
      }
      e.target = target_basis[*hit].index;
      e.scalar = c[*hit];
      e.index_match = *e.target == *e.expected_target;
      e.unit_scalar = e.scalar.is_monomial_unit();
      report.all_index_match = report.all_index_match && e.index_match;
      report.all_scalars_unit = report.all_scalars_unit && e.unit_scalar;
      report.all_scalars_one = report.all_scalars_one && e.scalar == QScalar(1);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace qcanon
