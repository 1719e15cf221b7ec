#pragma once

#include "wonder/matgroup.hpp"
#include "wonder/qlinalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wonder {

/// Partition of {1,...,n} into disjoint nonempty blocks, kept canonical:
/// blocks sorted internally and ordered by smallest member.
class SetPartition {
public:
  static SetPartition discrete(std::size_t n);
  /// Validates disjointness and coverage of {1,...,n}, then canonicalizes.
  static SetPartition from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  std::size_t ground_size() const { return n_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  /// rank = n - number of blocks (the codimension of the braid space).
  std::size_t rank() const { return n_ - blocks_.size(); }

  /// True iff every block of this partition is contained in a block of
  /// `coarser` (this refines coarser; coarser is above in reversed refinement).
  bool refines(const SetPartition& coarser) const;

  /// "12|34|5" style display, blocks of sorted 1-based members. Members are
  /// comma-separated once the ground set goes past 9.
  std::string display() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) = default;
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ < b.blocks_;
  }

private:
  SetPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
      : n_(n), blocks_(std::move(blocks)) {}

  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// All set partitions of {1,...,n}, deterministic order.
std::vector<SetPartition> all_set_partitions(std::size_t n);

/// Braid space U_pi: the subspace of R^n where coordinates agree within each
/// block; dim = number of blocks.
Subspace braid_space(const SetPartition& pi);

/// Partition recovered from a braid space (coordinates equal on generic
/// points), empty if the subspace is not of that form.
std::optional<SetPartition> braid_space_partition(const Subspace& s);

/// Finite set of proper subspaces of a common ambient space, deduplicated
/// and canonically sorted.
struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Subspace> subspaces;

  static Arrangement of(std::size_t ambient_dim, std::vector<Subspace> subspaces);
  bool operator==(const Arrangement&) const = default;
};

/// A(G): the proper invariant-line spans L(H) over all subgroups H of g.
Arrangement build_arrangement(const MatrixGroup& g, const SubgroupBudget& budget = {});

/// All braid spaces of rank >= 2 (the braid arrangement without its
/// hyperplanes). Empty for n < 3.
Arrangement rank2_truncation(std::size_t n);

/// Intersection closure of an arrangement plus the ambient space, ordered by
/// reverse inclusion: X <= Y iff X contains Y; the minimum is the ambient
/// space. Elements are sorted by dimension descending, so the ambient space
/// is elements()[0].
class IntersectionLattice {
public:
  static IntersectionLattice build(const Arrangement& a);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Subspace>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  const Subspace& full_space() const { return elements_.front(); }
  /// Intersection of every element (the lattice maximum).
  const Subspace& center() const { return elements_.back(); }

  bool has_element(const Subspace& s) const;
  std::optional<std::size_t> index_of(const Subspace& s) const;

  /// Lattice order: x <= y iff x contains y as a subspace.
  bool leq(const Subspace& x, const Subspace& y) const { return subspace_leq(y, x); }

  /// The inclusion-smallest lattice element containing s (well defined since
  /// the element set is intersection-closed; the ambient space always
  /// qualifies).
  const Subspace& minimal_containing(const Subspace& s) const;

  /// Materialized order relation as index pairs (i, j) with
  /// elements()[i] <= elements()[j].
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const;

  /// True iff all given lattice elements are totally ordered by inclusion.
  bool chain_is_nested(const std::vector<Subspace>& elems) const;

  friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.elements_ == b.elements_;
  }

private:
  std::size_t ambient_dim_ = 0;
  std::vector<Subspace> elements_;  // sorted: dim descending, then basis
};

IntersectionLattice intersection_lattice(const Arrangement& a);

/// Equality in the sense that matters for the wonderful model: the two
/// arrangements have identical intersection lattices.
bool arrangements_equal_as_lattices(const Arrangement& a, const Arrangement& b);

}  // namespace wonder
