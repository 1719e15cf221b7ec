#pragma once

#include "wonder/qlinalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wonder {

constexpr std::size_t kDefaultElementCap = 10000;
constexpr std::size_t kDefaultSubgroupCap = 100000;

/// Sign vector (+1/-1 entries), the image of a group element under the
/// homomorphism that records how it scales each line of an invariant basis.
using SignVector = std::vector<int>;

/// Permutation of {0,...,n-1} stored as its image list: i maps to p[i].
using Permutation = std::vector<std::size_t>;

QMatrix permutation_matrix(const Permutation& p);
/// Inverse of permutation_matrix; empty if the matrix is not a permutation.
std::optional<Permutation> as_permutation(const QMatrix& m);
/// Builds a permutation of {0,...,n-1} from 1-based disjoint cycles.
Permutation permutation_from_cycles(std::size_t n,
                                    const std::vector<std::vector<std::size_t>>& cycles);

/// Finite group of exact orthogonal matrices. Immutable after construction;
/// the element list is complete, deduplicated, identity first and the rest
/// sorted entry-lexicographically, so equal groups compare equal.
class MatrixGroup {
public:
  MatrixGroup() = default;

  static MatrixGroup trivial(std::size_t degree);

  /// Product closure of the generators. Generators must be orthogonal
  /// matrices of one degree; a closure larger than element_cap raises
  /// BudgetError (the group may be infinite or too large).
  static MatrixGroup from_generators(std::vector<QMatrix> generators,
                                     std::size_t element_cap = kDefaultElementCap);

  /// Wraps an already-closed element set (as produced by stabilizer and
  /// subgroup computations) and derives a small generating set for it.
  static MatrixGroup from_elements(std::size_t degree, std::vector<QMatrix> elements);

  /// S_n as permutation matrices.
  static MatrixGroup symmetric(std::size_t n);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<QMatrix>& elements() const { return elements_; }
  const std::vector<QMatrix>& generators() const { return generators_; }
  const QMatrix& identity() const { return elements_.front(); }

  bool contains(const QMatrix& m) const;
  bool is_subgroup_of(const MatrixGroup& g) const;

  friend bool operator==(const MatrixGroup& a, const MatrixGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

private:
  friend class GroupTable;

  MatrixGroup(std::size_t degree, std::vector<QMatrix> generators,
              std::vector<QMatrix> elements)
      : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

  std::size_t degree_ = 0;
  std::vector<QMatrix> generators_;
  std::vector<QMatrix> elements_;
};

struct SubgroupBudget {
  std::size_t subgroup_cap = kDefaultSubgroupCap;
};

/// All subgroups (including the trivial and full ones), enumerated by
/// layered closure of pair unions over the seed of cyclic subgroups.
/// Deterministic order: by order, then element-wise.
std::vector<MatrixGroup> subgroups(const MatrixGroup& g, const SubgroupBudget& budget = {});

/// Span of all lines invariant (fixed or flipped) under every element of h,
/// computed as the sum over sign assignments e to the generators of the
/// kernels of the stacked (g - e_g I). Any nonzero vector of such a kernel is
/// a common eigenvector of the whole group, so no relation check is needed.
Subspace invariant_line_span(const MatrixGroup& h);

/// Same span restricted to lines lying inside `carrier`.
Subspace invariant_line_span_within(const MatrixGroup& h, const Subspace& carrier);

/// A basis of invariant_line_span(h) consisting of simultaneous +1/-1
/// eigenvectors of every element of h.
std::vector<QVector> invariant_eigenbasis(const MatrixGroup& h);

/// Points fixed by every element of h.
Subspace fixed_subspace(const MatrixGroup& h);

/// ker(g - sign*I); sign must be +1 or -1.
Subspace eigenspace(const QMatrix& g, int sign);

/// Subgroup of g fixing every vector of s pointwise.
MatrixGroup fixing_subgroup(const MatrixGroup& g, const Subspace& s);

struct AlphaHomomorphism {
  /// Sign vectors aligned with h.elements().
  std::vector<SignVector> images;
  bool injective = false;
};

/// The homomorphism h -> {+1,-1}^k recording the sign with which each element
/// acts on each basis line. Every basis line must be invariant under every
/// element of h; a violation raises ValidationError.
AlphaHomomorphism alpha_homomorphism(const MatrixGroup& h, const std::vector<QVector>& basis);

/// True iff every element squares to the identity (which forces the group to
/// be abelian of exponent at most 2).
bool is_elementary_abelian_2(const MatrixGroup& g);

MatrixGroup stabilizer_of_point(const MatrixGroup& g, const QVector& x);
/// Elements preserving the line as a set (acting on its generator by +1 or
/// -1). The line must have dimension 1.
MatrixGroup stabilizer_of_line(const MatrixGroup& g, const Subspace& line);

/// Multiplication/inverse table of a group, with elements addressed by their
/// position in g.elements(). Backs the subgroup enumeration.
class GroupTable {
public:
  explicit GroupTable(const MatrixGroup& g);

  const MatrixGroup& group() const { return *group_; }
  std::size_t order() const { return order_; }
  std::uint16_t multiply(std::uint16_t a, std::uint16_t b) const {
    return table_[a * order_ + b];
  }
  std::uint16_t inverse(std::uint16_t a) const { return inverse_[a]; }
  std::optional<std::uint16_t> index_of(const QMatrix& m) const;

  /// Closure of a seed index set under products (identity always included).
  std::vector<std::uint16_t> close(std::vector<std::uint16_t> seed) const;

  /// Greedy small generating set of a closed index set.
  std::vector<std::uint16_t> minimal_generators(const std::vector<std::uint16_t>& closed) const;

  /// Materializes a closed index set as a MatrixGroup with minimal generators.
  MatrixGroup subgroup(const std::vector<std::uint16_t>& closed) const;

private:
  const MatrixGroup* group_;
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::uint16_t> sorted_index_;  // element positions sorted by matrix_less
};

}  // namespace wonder
