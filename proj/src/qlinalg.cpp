#include "wonder/qlinalg.hpp"

#include <algorithm>

namespace wonder {

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix();
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ValidationError("rows of unequal length");
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  QVector out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

std::vector<QVector> QMatrix::row_list() const {
  std::vector<QVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw ValidationError("matrix dimension mismatch in product");
  QMatrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, j) += a * other.at(k, j);
    }
  return m;
}

QVector QMatrix::apply(const QVector& v) const {
  if (cols_ != v.size()) throw ValidationError("matrix/vector dimension mismatch");
  QVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

QMatrix QMatrix::operator-() const {
  QMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = -at(i, j);
  return m;
}

bool QMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool QMatrix::is_orthogonal() const {
  if (!is_square()) return false;
  return (transpose() * *this).is_identity();
}

bool matrix_less(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != b.at(i, j)) return a.at(i, j) < b.at(i, j);
    }
  return false;
}

std::pair<QMatrix, std::size_t> rref(const QMatrix& m) {
  QMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    const Rational inv = Rational(1) / a.at(rank, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(rank, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a.at(r, col) == 0) continue;
      const Rational factor = a.at(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(r, j) -= factor * a.at(rank, j);
    }
    ++rank;
  }
  QMatrix out(rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = a.at(i, j);
  return {out, rank};
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, QMatrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, QMatrix::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<QVector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw ValidationError("span: vector dimension mismatch");
  if (vectors.empty()) return zero(ambient_dim);
  auto [basis, rank] = rref(QMatrix::from_rows(vectors));
  (void)rank;
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::span_rows(const QMatrix& m) {
  auto [basis, rank] = rref(m);
  (void)rank;
  return Subspace(m.cols(), std::move(basis));
}

Subspace Subspace::line_through(const QVector& v) {
  if (is_zero_vector(v)) throw ValidationError("line_through: zero vector");
  return span(v.size(), {v});
}

QVector Subspace::line_generator() const {
  if (dim() != 1) throw ValidationError("line_generator: subspace is not a line");
  return basis_.row(0);
}

bool Subspace::contains_vector(const QVector& v) const {
  if (v.size() != ambient_dim_) throw ValidationError("contains_vector: dimension mismatch");
  // Reduce v against the RREF basis; membership iff the residual vanishes.
  QVector residual = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t pivot = 0;
    while (pivot < ambient_dim_ && basis_.at(i, pivot) == 0) ++pivot;
    if (pivot == ambient_dim_) continue;
    const Rational factor = residual[pivot];
    if (factor == 0) continue;
    for (std::size_t j = pivot; j < ambient_dim_; ++j) residual[j] -= factor * basis_.at(i, j);
  }
  return is_zero_vector(residual);
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  return matrix_less(a.basis(), b.basis());
}

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t, const char* op) {
  if (s.ambient_dim() != t.ambient_dim())
    throw ValidationError(std::string(op) + ": ambient dimension mismatch");
}

}  // namespace

Subspace kernel(const QMatrix& m) {
  const std::size_t n = m.cols();
  auto [r, rank] = rref(m);
  std::vector<std::size_t> pivot_col(rank);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t c = 0;
    while (r.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace orthogonal_complement(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel(s.basis());
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "intersect");
  // (S ∩ T) = (S^⊥ + T^⊥)^⊥ under the standard dot product.
  return orthogonal_complement(
      subspace_sum(orthogonal_complement(s), orthogonal_complement(t)));
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "subspace_sum");
  std::vector<QVector> rows = s.basis().row_list();
  for (auto& r : t.basis().row_list()) rows.push_back(std::move(r));
  return Subspace::span(s.ambient_dim(), rows);
}

bool subspace_leq(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "subspace_leq");
  if (s.dim() > t.dim()) return false;
  for (std::size_t i = 0; i < s.basis().rows(); ++i)
    if (!t.contains_vector(s.basis().row(i))) return false;
  return true;
}

Subspace apply_matrix(const QMatrix& g, const Subspace& s) {
  std::vector<QVector> rows;
  rows.reserve(s.dim());
  for (std::size_t i = 0; i < s.basis().rows(); ++i) rows.push_back(g.apply(s.basis().row(i)));
  return Subspace::span(s.ambient_dim(), rows);
}

QVector orthogonal_part(const QVector& v, const Subspace& s) {
  if (v.size() != s.ambient_dim()) throw ValidationError("orthogonal_part: dimension mismatch");
  if (s.is_zero()) return v;
  // Solve the Gram system B Bᵀ x = B v, then subtract the projection Bᵀ x.
  const QMatrix& b = s.basis();
  const std::size_t k = b.rows();
  QMatrix gram(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram.at(i, j) = dot(b.row(i), b.row(j));
    gram.at(i, k) = dot(b.row(i), v);
  }
  auto [solved, rank] = rref(gram);
  if (rank != k) throw Error("orthogonal_part: singular Gram matrix (basis not independent)");
  QVector out = v;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& coeff = solved.at(i, k);
    if (coeff == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[j] -= coeff * b.at(i, j);
  }
  return out;
}

}  // namespace wonder
