#include "qcanon/linalg.hpp"

#include <algorithm>

#include "qcanon/error.hpp"

namespace qcanon {

QVector bar(const QVector& x) {
  QVector r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(bar(c));
  return r;
}

bool is_zero(const QVector& x) {
  return std::all_of(x.begin(), x.end(), [](const QScalar& c) { return c.is_zero(); });
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  QVector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  QVector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

QVector operator*(const QScalar& s, const QVector& x) {
  QVector r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(s * c);
  return r;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i][i] = QScalar(1);
  return m;
}

QMatrix QMatrix::diagonal(const QVector& entries) {
  QMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

QScalar QMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  auto it = c.find(row);
  return it == c.end() ? QScalar() : it->second;
}

void QMatrix::set(std::size_t row, std::size_t col, QScalar value) {
  if (row >= rows_ || col >= columns_.size()) throw Error(ErrorCode::DimensionMismatch, "matrix set");
  auto& c = columns_[col];
  if (value.is_zero()) {
    c.erase(row);
  } else {
    c[row] = std::move(value);
  }
}

void QMatrix::add(std::size_t row, std::size_t col, const QScalar& value) {
  if (value.is_zero()) return;
  if (row >= rows_ || col >= columns_.size()) throw Error(ErrorCode::DimensionMismatch, "matrix add");
  auto& c = columns_[col];
  auto [it, inserted] = c.try_emplace(row, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) c.erase(it);
  }
}

void QMatrix::set_column(std::size_t col, const QVector& values) {
  if (values.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "matrix column");
  auto& c = columns_.at(col);
  c.clear();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) c[i] = values[i];
  }
}

QVector QMatrix::apply(const QVector& x) const {
  if (x.size() != cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  QVector r(rows_);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& [i, a] : columns_[j]) r[i] += a * x[j];
  }
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols(), rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, a] : columns_[j]) t.columns_[i][j] = a;
  }
  return t;
}

QMatrix QMatrix::bar() const {
  QMatrix b = *this;
  for (auto& c : b.columns_) {
    for (auto& [i, a] : c) a = qcanon::bar(a);
  }
  return b;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols() != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  QMatrix r(rows_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (const auto& [k, b] : rhs.columns_[j]) {
      for (const auto& [i, a] : columns_[k]) r.add(i, j, a * b);
    }
  }
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  QMatrix r = *this;
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (const auto& [i, a] : rhs.columns_[j]) r.add(i, j, -a);
  }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  QMatrix r = *this;
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (const auto& [i, a] : rhs.columns_[j]) r.add(i, j, a);
  }
  return r;
}

bool QMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

bool QMatrix::is_identity() const {
  if (rows_ != cols()) return false;
  for (std::size_t j = 0; j < cols(); ++j) {
    const auto& c = columns_[j];
    if (c.size() != 1 || c.begin()->first != j || c.begin()->second != QScalar(1)) return false;
  }
  return true;
}

bool QMatrix::is_diagonal() const {
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, a] : columns_[j]) {
      if (i != j) return false;
    }
  }
  return true;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

std::size_t rank(const QMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<QVector> a(nr, QVector(nc));
  for (std::size_t j = 0; j < nc; ++j) {
    for (const auto& [i, v] : m.column(j)) a[i][j] = v;
  }
  QScalar prev_pivot(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < nc && r < nr; ++col) {
    std::size_t pivot = r;
    while (pivot < nr && a[pivot][col].is_zero()) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        a[i][j] = exact_divide(a[r][col] * a[i][j] - a[i][col] * a[r][j], prev_pivot);
      }
      a[i][col] = QScalar();
    }
    prev_pivot = a[r][col];
    ++r;
  }
  return r;
}

}  // namespace qcanon
