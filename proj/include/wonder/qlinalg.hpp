#pragma once

#include "wonder/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace wonder {

/// Dense rational matrix, row-major. Dimensions are fixed at construction;
/// a 0xN matrix is valid and keeps its column count.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  /// Builds from explicit rows; all rows must have equal length.
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  std::vector<QVector> row_list() const;

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& other) const;
  /// Matrix applied to a column vector.
  QVector apply(const QVector& v) const;
  QMatrix operator-() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;
  /// True iff the matrix is square with transpose(m) * m = identity.
  bool is_orthogonal() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Strict total order on matrices: dimensions first, then entries
/// lexicographically. Used for canonical element ordering and dedup.
bool matrix_less(const QMatrix& a, const QMatrix& b);

struct QMatrixLess {
  bool operator()(const QMatrix& a, const QMatrix& b) const { return matrix_less(a, b); }
};

/// Reduced row-echelon form with zero rows dropped; second component is the
/// rank. The RREF with unit pivots is unique, so it doubles as a canonical
/// form for row spaces.
std::pair<QMatrix, std::size_t> rref(const QMatrix& m);

/// Linear subspace of R^n held as its unique RREF basis (no zero rows).
/// Two subspaces are equal iff their representations are identical; the zero
/// subspace has an empty basis and an explicit ambient dimension.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Smallest subspace containing all the given vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<QVector>& vectors);
  static Subspace span_rows(const QMatrix& m);
  /// Dim-1 subspace through a nonzero vector; the RREF basis row is the
  /// canonical generator (first nonzero coordinate scaled to 1).
  static Subspace line_through(const QVector& v);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient_dim_ - dim(); }
  const QMatrix& basis() const { return basis_; }
  /// Canonical generator of a dim-1 subspace.
  QVector line_generator() const;

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }

  bool contains_vector(const QVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  Subspace(std::size_t ambient_dim, QMatrix rref_basis)
      : ambient_dim_(ambient_dim), basis_(std::move(rref_basis)) {}

  std::size_t ambient_dim_ = 0;
  QMatrix basis_;  // RREF, no zero rows
};

/// Strict total order: ambient dim, then dim descending (larger spaces
/// first, so the full space sorts ahead of everything), then basis entries.
bool subspace_less(const Subspace& a, const Subspace& b);

struct SubspaceLess {
  bool operator()(const Subspace& a, const Subspace& b) const { return subspace_less(a, b); }
};

Subspace intersect(const Subspace& s, const Subspace& t);
Subspace subspace_sum(const Subspace& s, const Subspace& t);
/// s <= t as sets, i.e. s is contained in t.
bool subspace_leq(const Subspace& s, const Subspace& t);
/// Orthogonal complement under the standard dot product.
Subspace orthogonal_complement(const Subspace& s);
/// Image of the matrix acting on the subspace (rows mapped through g).
Subspace apply_matrix(const QMatrix& g, const Subspace& s);
/// Component of v orthogonal to s (v minus its projection onto s).
QVector orthogonal_part(const QVector& v, const Subspace& s);

/// Kernel of m as a subspace of R^cols.
Subspace kernel(const QMatrix& m);

}  // namespace wonder
