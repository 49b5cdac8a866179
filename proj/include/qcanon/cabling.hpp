#pragma once

// Cabling: refine every weight lambda_i into lambda_i unit weights and compare
// the dual canonical basis of the refined product with the original one.
//
// Algebraically, v_lambda |-> v_1 (x) ... (x) v_1 extends to a module map
// M_lambda -> M_1^{(x) lambda}; on the unit-weight side only the slots 0, 1
// survive in V_1, so the map V_lambda_1 (x) ... -> V_1^{(x) sum lambda} is read
// off from Delta^{lambda-1}(F^(m)) (v_1 (x) ... (x) v_1).  Its transpose sends
// unit-weight dual monomials to dual monomials of the original product.

#include <optional>
#include <vector>

#include "qcanon/canonical.hpp"
#include "qcanon/diagrams.hpp"
#include "qcanon/linalg.hpp"
#include "qcanon/tensor.hpp"

namespace qcanon {

struct UnitEmbedding {
  int lambda;
  int level;
  TensorModule target;               // M_1^{(x) lambda}, each factor truncated at level
  std::vector<TensorVector> images;  // images[m] = image of F^(m) v_lambda, m = 0..level
};

/// Throws InvalidArgument for lambda < 1 and TruncationTooSmall if the
/// truncation cannot hold the requested images.
UnitEmbedding verma_unit_embedding(int lambda, int level);

/// Rows: P_lambda(l) (dual monomials of the original product); columns:
/// P_{1,...,1}(l) (unit-weight dual monomials).  Throws StructuralMismatch if
/// an index with a_i > lambda_i would receive a nonzero coefficient.
QMatrix dual_cabling_matrix(const std::vector<int>& lambda, int level);

struct CablingEntry {
  MultiIndex source;
  ArcDiagram source_diagram;
  bool killed = false;
  std::optional<MultiIndex> target;           // index of the image basis vector
  QScalar scalar;                             // image = scalar * b_target
  std::optional<MultiIndex> expected_target;  // from the collapsed diagram
  bool index_match = true;
  bool unit_scalar = true;
};

struct CablingReport {
  std::vector<int> lambda;
  int level = 0;
  std::vector<CablingEntry> entries;
  bool all_index_match = true;
  bool all_scalars_unit = true;
  bool all_scalars_one = true;
};

/// Maps every unit-weight dual canonical vector through dual_cabling_matrix
/// and matches the outcome with cable_diagram.  Throws StructuralMismatch if
/// an image is not a multiple of a single dual canonical vector or if the
/// zero pattern disagrees with the diagram rule.
CablingReport theorem61_report(const std::vector<int>& lambda, int level);

}  // namespace qcanon
