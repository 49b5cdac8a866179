#pragma once

// Exact matrices over QScalar.  Weight spaces stay small (tens of basis
// vectors), so matrices are stored column-wise as ordered sparse maps and
// vectors are dense.

#include <cstddef>
#include <map>
#include <vector>

#include "qcanon/qring.hpp"

namespace qcanon {

using QVector = std::vector<QScalar>;

QVector bar(const QVector& x);
bool is_zero(const QVector& x);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const QScalar& s, const QVector& x);

class QMatrix {
public:
  using Column = std::map<std::size_t, QScalar>;

  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const QVector& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  QScalar at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, QScalar value);
  void add(std::size_t row, std::size_t col, const QScalar& value);
  const Column& column(std::size_t col) const { return columns_.at(col); }
  void set_column(std::size_t col, const QVector& values);

  QVector apply(const QVector& x) const;
  QMatrix transpose() const;
  /// Entrywise bar involution.
  QMatrix bar() const;
  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Rank over the fraction field Q(v), by fraction-free (Bareiss) elimination
/// in Z[v, v^-1]; every division it performs is exact.
std::size_t rank(const QMatrix& m);

}  // namespace qcanon
