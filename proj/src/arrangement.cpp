#include "wonder/arrangement.hpp"

#include <algorithm>
#include <set>

namespace wonder {

SetPartition SetPartition::discrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_blocks(std::size_t n,
                                       std::vector<std::vector<std::size_t>> blocks) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw ValidationError("set partition with an empty block");
    for (std::size_t member : block) {
      if (member < 1 || member > n) throw ValidationError("partition member out of range");
      if (seen[member - 1]) throw ValidationError("partition blocks are not disjoint");
      seen[member - 1] = true;
      ++covered;
    }
    std::sort(block.begin(), block.end());
  }
  if (covered != n) throw ValidationError("partition does not cover {1,...,n}");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return SetPartition(n, std::move(blocks));
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (n_ != coarser.n_) throw ValidationError("refines: ground sets differ");
  std::vector<std::size_t> block_of(n_ + 1, 0);
  for (std::size_t b = 0; b < coarser.blocks_.size(); ++b)
    for (std::size_t member : coarser.blocks_[b]) block_of[member] = b;
  for (const auto& block : blocks_) {
    const std::size_t home = block_of[block.front()];
    for (std::size_t member : block)
      if (block_of[member] != home) return false;
  }
  return true;
}

std::string SetPartition::display() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i && n_ > 9) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

std::vector<SetPartition> all_set_partitions(std::size_t n) {
  // Restricted-growth strings: assign each of 1..n to an existing or new block.
  std::vector<SetPartition> out;
  std::vector<std::size_t> assignment(n, 0);
  auto emit = [&]() {
    std::size_t block_count = 0;
    for (std::size_t a : assignment) block_count = std::max(block_count, a + 1);
    std::vector<std::vector<std::size_t>> blocks(block_count);
    for (std::size_t i = 0; i < n; ++i) blocks[assignment[i]].push_back(i + 1);
    out.push_back(SetPartition::from_blocks(n, std::move(blocks)));
  };
  auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      assignment[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) recurse(recurse, 0, 0);
  return out;
}

Subspace braid_space(const SetPartition& pi) {
  const std::size_t n = pi.ground_size();
  std::vector<QVector> rows;
  rows.reserve(pi.block_count());
  for (const auto& block : pi.blocks()) {
    QVector indicator(n, Rational(0));
    for (std::size_t member : block) indicator[member - 1] = 1;
    rows.push_back(std::move(indicator));
  }
  return Subspace::span(n, rows);
}

std::optional<SetPartition> braid_space_partition(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  // Coordinates i, j agree on all of s iff e_i - e_j is orthogonal to it,
  // i.e. columns i and j of the basis coincide.
  std::vector<std::size_t> block_of(n, n);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (block_of[i] != n) continue;
    block_of[i] = blocks.size();
    blocks.push_back({i + 1});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (block_of[j] != n) continue;
      bool same = true;
      for (std::size_t r = 0; r < s.basis().rows() && same; ++r)
        same = (s.basis().at(r, i) == s.basis().at(r, j));
      if (same) {
        block_of[j] = block_of[i];
        blocks[block_of[i]].push_back(j + 1);
      }
    }
  }
  auto candidate = SetPartition::from_blocks(n, std::move(blocks));
  if (braid_space(candidate) == s) return candidate;
  return std::nullopt;
}

Arrangement Arrangement::of(std::size_t ambient_dim, std::vector<Subspace> subspaces) {
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != ambient_dim)
      throw ValidationError("arrangement subspace with wrong ambient dimension");
    if (s.is_full()) throw ValidationError("arrangement subspace equals the ambient space");
  }
  std::sort(subspaces.begin(), subspaces.end(), SubspaceLess{});
  subspaces.erase(std::unique(subspaces.begin(), subspaces.end()), subspaces.end());
  return Arrangement{ambient_dim, std::move(subspaces)};
}

Arrangement build_arrangement(const MatrixGroup& g, const SubgroupBudget& budget) {
  std::vector<Subspace> spans;
  for (const MatrixGroup& h : subgroups(g, budget)) {
    Subspace span = invariant_line_span(h);
    if (!span.is_full()) spans.push_back(std::move(span));
  }
  return Arrangement::of(g.degree(), std::move(spans));
}

Arrangement rank2_truncation(std::size_t n) {
  std::vector<Subspace> spaces;
  if (n >= 3) {
    for (const SetPartition& pi : all_set_partitions(n))
      if (pi.rank() >= 2) spaces.push_back(braid_space(pi));
  }
  return Arrangement::of(n, std::move(spaces));
}

IntersectionLattice IntersectionLattice::build(const Arrangement& a) {
  std::set<Subspace, SubspaceLess> closed(a.subspaces.begin(), a.subspaces.end());
  closed.insert(Subspace::full(a.ambient_dim));
  std::vector<Subspace> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    const std::vector<Subspace> snapshot(closed.begin(), closed.end());
    for (const Subspace& s : frontier)
      for (const Subspace& t : snapshot) {
        Subspace meet = intersect(s, t);
        if (closed.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  IntersectionLattice lattice;
  lattice.ambient_dim_ = a.ambient_dim;
  lattice.elements_.assign(closed.begin(), closed.end());
  return lattice;
}

bool IntersectionLattice::has_element(const Subspace& s) const {
  return index_of(s).has_value();
}

std::optional<std::size_t> IntersectionLattice::index_of(const Subspace& s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s, SubspaceLess{});
  if (it == elements_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

const Subspace& IntersectionLattice::minimal_containing(const Subspace& s) const {
  if (s.ambient_dim() != ambient_dim_)
    throw ValidationError("minimal_containing: ambient dimension mismatch");
  Subspace meet = full_space();
  for (const Subspace& e : elements_)
    if (subspace_leq(s, e)) meet = intersect(meet, e);
  auto idx = index_of(meet);
  if (!idx) throw Error("lattice is not intersection-closed");
  return elements_[*idx];
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionLattice::order_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = 0; j < elements_.size(); ++j)
      if (i != j && leq(elements_[i], elements_[j])) pairs.emplace_back(i, j);
  return pairs;
}

bool IntersectionLattice::chain_is_nested(const std::vector<Subspace>& elems) const {
  for (const Subspace& e : elems)
    if (!has_element(e)) throw ValidationError("chain element is not in the lattice");
  std::vector<Subspace> sorted = elems;
  std::sort(sorted.begin(), sorted.end(),
            [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (!subspace_leq(sorted[i], sorted[i + 1])) return false;
  return true;
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
  return IntersectionLattice::build(a);
}

bool arrangements_equal_as_lattices(const Arrangement& a, const Arrangement& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw ValidationError("arrangements_equal_as_lattices: ambient dimension mismatch");
  return intersection_lattice(a) == intersection_lattice(b);
}

}  // namespace wonder
