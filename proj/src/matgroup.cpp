#include "wonder/matgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace wonder {

namespace {

// Elements are kept identity-first, remainder sorted entry-lexicographically.
std::vector<QMatrix> canonical_element_order(std::size_t degree, std::vector<QMatrix> elements) {
  std::sort(elements.begin(), elements.end(), QMatrixLess{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const QMatrix id = QMatrix::identity(degree);
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end()) throw ValidationError("element set does not contain the identity");
  std::rotate(elements.begin(), it, it + 1);
  return elements;
}

std::set<QMatrix, QMatrixLess> close_matrices(std::size_t degree,
                                              const std::vector<QMatrix>& generators,
                                              std::size_t element_cap) {
  std::set<QMatrix, QMatrixLess> seen;
  std::vector<QMatrix> worklist;
  const QMatrix id = QMatrix::identity(degree);
  seen.insert(id);
  worklist.push_back(id);
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    for (const QMatrix& g : generators) {
      QMatrix next = worklist[i] * g;
      if (seen.insert(next).second) {
        if (seen.size() > element_cap)
          throw BudgetError("group closure exceeded the element cap of " +
                            std::to_string(element_cap) +
                            " (group may be infinite or too large)");
        worklist.push_back(std::move(next));
      }
    }
  }
  return seen;
}

std::vector<QMatrix> greedy_generators(std::size_t degree, const std::vector<QMatrix>& elements) {
  std::vector<QMatrix> gens;
  std::set<QMatrix, QMatrixLess> closed = close_matrices(degree, gens, elements.size());
  for (const QMatrix& e : elements) {
    if (closed.count(e)) continue;
    gens.push_back(e);
    closed = close_matrices(degree, gens, elements.size());
    if (closed.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace

QMatrix permutation_matrix(const Permutation& p) {
  const std::size_t n = p.size();
  QMatrix m(n, n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] >= n || hit[p[i]]) throw ValidationError("not a permutation");
    hit[p[i]] = true;
    m.at(p[i], i) = 1;
  }
  return m;
}

std::optional<Permutation> as_permutation(const QMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  Permutation p(m.rows());
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t ones = 0, image = 0;
    for (std::size_t row = 0; row < m.rows(); ++row) {
      const Rational& v = m.at(row, col);
      if (v == 1) {
        ++ones;
        image = row;
      } else if (v != 0) {
        return std::nullopt;
      }
    }
    if (ones != 1) return std::nullopt;
    p[col] = image;
  }
  return p;
}

Permutation permutation_from_cycles(std::size_t n,
                                    const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const std::size_t a = cycle[j];
      if (a < 1 || a > n) throw ValidationError("cycle entry out of range [1, n]");
      if (used[a - 1]) throw ValidationError("cycles are not disjoint");
      used[a - 1] = true;
      p[a - 1] = cycle[(j + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

MatrixGroup MatrixGroup::trivial(std::size_t degree) {
  if (degree == 0) throw ValidationError("degree must be positive");
  return MatrixGroup(degree, {}, {QMatrix::identity(degree)});
}

MatrixGroup MatrixGroup::from_generators(std::vector<QMatrix> generators,
                                         std::size_t element_cap) {
  if (generators.empty())
    throw ValidationError("cannot infer the degree from an empty generator list");
  const std::size_t degree = generators[0].rows();
  if (degree == 0) throw ValidationError("degree must be positive");
  for (const QMatrix& g : generators) {
    if (g.rows() != degree || g.cols() != degree)
      throw ValidationError("generators must be square matrices of one degree");
    if (!g.is_orthogonal()) throw ValidationError("generator is not orthogonal");
  }
  auto closed = close_matrices(degree, generators, element_cap);
  std::vector<QMatrix> elements(closed.begin(), closed.end());
  return MatrixGroup(degree, std::move(generators),
                     canonical_element_order(degree, std::move(elements)));
}

MatrixGroup MatrixGroup::from_elements(std::size_t degree, std::vector<QMatrix> elements) {
  if (degree == 0) throw ValidationError("degree must be positive");
  for (const QMatrix& e : elements)
    if (e.rows() != degree || e.cols() != degree)
      throw ValidationError("element of wrong degree");
  auto ordered = canonical_element_order(degree, std::move(elements));
  auto gens = greedy_generators(degree, ordered);
  return MatrixGroup(degree, std::move(gens), std::move(ordered));
}

MatrixGroup MatrixGroup::symmetric(std::size_t n) {
  if (n == 0) throw ValidationError("degree must be positive");
  if (n == 1) return trivial(1);
  if (n > 8) throw BudgetError("symmetric group of degree > 8 exceeds the dense closure budget");
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  Permutation swap01(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return from_generators({permutation_matrix(swap01), permutation_matrix(cycle)}, factorial);
}

bool MatrixGroup::contains(const QMatrix& m) const {
  if (elements_.empty()) return false;
  if (m == identity()) return true;
  return std::binary_search(elements_.begin() + 1, elements_.end(), m, QMatrixLess{});
}

bool MatrixGroup::is_subgroup_of(const MatrixGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const QMatrix& e : elements_)
    if (!g.contains(e)) return false;
  return true;
}

GroupTable::GroupTable(const MatrixGroup& g) : group_(&g), order_(g.order()) {
  if (order_ > 4096)
    throw BudgetError("group of order " + std::to_string(order_) +
                      " exceeds the multiplication-table budget (4096)");
  sorted_index_.resize(order_);
  for (std::size_t i = 0; i < order_; ++i) sorted_index_[i] = static_cast<std::uint16_t>(i);
  std::sort(sorted_index_.begin(), sorted_index_.end(), [&](std::uint16_t a, std::uint16_t b) {
    return matrix_less(g.elements()[a], g.elements()[b]);
  });

  // Multiply matrices only against the generators; every other product is an
  // index composition along a factorization b = parent * generator found by
  // BFS from the identity.
  const std::vector<QMatrix>& gens = g.generators();
  const std::size_t gen_count = gens.size();
  std::vector<std::uint16_t> times_gen(order_ * std::max<std::size_t>(gen_count, 1), 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t j = 0; j < gen_count; ++j) {
      auto idx = index_of(g.elements()[a] * gens[j]);
      if (!idx) throw ValidationError("element set is not closed under products");
      times_gen[a * gen_count + j] = *idx;
    }

  std::vector<std::uint16_t> bfs_order;
  std::vector<std::pair<std::uint16_t, std::uint16_t>> factor(order_, {0, 0});
  std::vector<bool> reached(order_, false);
  bfs_order.push_back(0);
  reached[0] = true;
  for (std::size_t head = 0; head < bfs_order.size(); ++head) {
    const std::uint16_t c = bfs_order[head];
    for (std::size_t j = 0; j < gen_count; ++j) {
      const std::uint16_t child = times_gen[c * gen_count + j];
      if (!reached[child]) {
        reached[child] = true;
        factor[child] = {c, static_cast<std::uint16_t>(j)};
        bfs_order.push_back(child);
      }
    }
  }
  if (bfs_order.size() != order_)
    throw ValidationError("generators do not generate the element set");

  table_.assign(order_ * order_, 0);
  for (std::size_t a = 0; a < order_; ++a) table_[a * order_ + 0] = static_cast<std::uint16_t>(a);
  for (std::size_t head = 1; head < bfs_order.size(); ++head) {
    const std::uint16_t b = bfs_order[head];
    const auto [c, j] = factor[b];
    for (std::size_t a = 0; a < order_; ++a)
      table_[a * order_ + b] = times_gen[table_[a * order_ + c] * gen_count + j];
  }

  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b)
      if (multiply(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)) == 0) {
        inverse_[a] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    if (!found) throw ValidationError("element without inverse");
  }
}

std::optional<std::uint16_t> GroupTable::index_of(const QMatrix& m) const {
  auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), m,
                             [&](std::uint16_t a, const QMatrix& value) {
                               return matrix_less(group_->elements()[a], value);
                             });
  if (it == sorted_index_.end() || group_->elements()[*it] != m) return std::nullopt;
  return *it;
}

std::vector<std::uint16_t> GroupTable::close(std::vector<std::uint16_t> seed) const {
  // Words in the seed elements; finiteness supplies the inverses.
  std::vector<bool> in(order_, false);
  std::vector<std::uint16_t> members;
  auto add = [&](std::uint16_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  add(0);  // identity
  for (auto s : seed) add(s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto s : seed) add(multiply(members[i], s));
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::uint16_t> GroupTable::minimal_generators(
    const std::vector<std::uint16_t>& closed) const {
  std::vector<std::uint16_t> gens;
  std::vector<std::uint16_t> span = close({});
  while (span.size() < closed.size()) {
    std::uint16_t next = 0;
    bool found = false;
    for (auto e : closed) {
      if (!std::binary_search(span.begin(), span.end(), e)) {
        next = e;
        found = true;
        break;
      }
    }
    if (!found) break;
    gens.push_back(next);
    span = close(gens);
  }
  return gens;
}

MatrixGroup GroupTable::subgroup(const std::vector<std::uint16_t>& closed) const {
  std::vector<QMatrix> elems;
  elems.reserve(closed.size());
  for (auto i : closed) elems.push_back(group_->elements()[i]);
  std::vector<QMatrix> gens;
  for (auto i : minimal_generators(closed)) gens.push_back(group_->elements()[i]);
  return MatrixGroup(group_->degree(), std::move(gens),
                     canonical_element_order(group_->degree(), std::move(elems)));
}

std::vector<MatrixGroup> subgroups(const MatrixGroup& g, const SubgroupBudget& budget) {
  GroupTable table(g);
  const std::size_t order = table.order();

  std::set<std::vector<std::uint16_t>> known;
  std::map<std::vector<std::uint16_t>, std::vector<std::uint16_t>> gens_of;
  auto remember = [&](const std::vector<std::uint16_t>& sub) -> bool {
    auto [it, fresh] = known.insert(sub);
    if (fresh) {
      if (known.size() > budget.subgroup_cap)
        throw BudgetError("subgroup enumeration exceeded the cap of " +
                          std::to_string(budget.subgroup_cap));
      gens_of[*it] = table.minimal_generators(*it);
    }
    return fresh;
  };

  // Seed: every cyclic subgroup.
  std::vector<std::vector<std::uint16_t>> frontier;
  for (std::size_t i = 0; i < order; ++i) {
    auto cyc = table.close({static_cast<std::uint16_t>(i)});
    if (remember(cyc)) frontier.push_back(std::move(cyc));
  }

  // Layered closure: close unions of pairs until no new subgroup appears.
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint16_t>> next;
    const std::vector<std::vector<std::uint16_t>> snapshot(known.begin(), known.end());
    for (const auto& a : frontier) {
      for (const auto& b : snapshot) {
        if (a == b) continue;
        if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
            std::includes(b.begin(), b.end(), a.begin(), a.end()))
          continue;  // closure of the union is just the larger one
        std::vector<std::uint16_t> seed = gens_of[a];
        const auto& gb = gens_of[b];
        seed.insert(seed.end(), gb.begin(), gb.end());
        auto closed = table.close(std::move(seed));
        if (remember(closed)) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<std::uint16_t>> ordered(known.begin(), known.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<MatrixGroup> out;
  out.reserve(ordered.size());
  for (const auto& sub : ordered) out.push_back(table.subgroup(sub));
  return out;
}

namespace {

// Stacks the blocks (g - sign_g I) for the chosen sign assignment; the kernel
// is the space of simultaneous eigenvectors with those signs.
Subspace sign_assignment_kernel(const std::vector<QMatrix>& gens, std::size_t mask,
                                std::size_t degree) {
  QMatrix stacked(gens.size() * degree, degree);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int sign = (mask >> i) & 1 ? -1 : 1;
    for (std::size_t r = 0; r < degree; ++r)
      for (std::size_t c = 0; c < degree; ++c) {
        Rational v = gens[i].at(r, c);
        if (r == c) v -= sign;
        stacked.at(i * degree + r, c) = v;
      }
  }
  return kernel(stacked);
}

}  // namespace

Subspace invariant_line_span_within(const MatrixGroup& h, const Subspace& carrier) {
  const std::size_t n = h.degree();
  if (carrier.ambient_dim() != n)
    throw ValidationError("invariant_line_span_within: carrier dimension mismatch");
  const auto& gens = h.generators();
  if (gens.size() > 16) throw BudgetError("too many generators for sign-assignment enumeration");
  Subspace result = Subspace::zero(n);
  for (std::size_t mask = 0; mask < (std::size_t(1) << gens.size()); ++mask) {
    Subspace k = sign_assignment_kernel(gens, mask, n);
    if (!carrier.is_full()) k = intersect(k, carrier);
    if (!k.is_zero()) result = subspace_sum(result, k);
    if (result == carrier) break;
  }
  return result;
}

Subspace invariant_line_span(const MatrixGroup& h) {
  return invariant_line_span_within(h, Subspace::full(h.degree()));
}

std::vector<QVector> invariant_eigenbasis(const MatrixGroup& h) {
  const std::size_t n = h.degree();
  const auto& gens = h.generators();
  if (gens.size() > 16) throw BudgetError("too many generators for sign-assignment enumeration");
  std::vector<QVector> basis;
  Subspace span_so_far = Subspace::zero(n);
  for (std::size_t mask = 0; mask < (std::size_t(1) << gens.size()); ++mask) {
    const Subspace k = sign_assignment_kernel(gens, mask, n);
    for (std::size_t r = 0; r < k.basis().rows(); ++r) {
      QVector v = k.basis().row(r);
      if (!span_so_far.contains_vector(v)) {
        basis.push_back(v);
        std::vector<QVector> rows = basis;
        span_so_far = Subspace::span(n, rows);
      }
    }
  }
  return basis;
}

Subspace fixed_subspace(const MatrixGroup& h) {
  return sign_assignment_kernel(h.generators(), 0, h.degree());
}

Subspace eigenspace(const QMatrix& g, int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("eigenspace: sign must be +1 or -1");
  if (!g.is_square()) throw ValidationError("eigenspace: matrix must be square");
  QMatrix shifted = g;
  for (std::size_t i = 0; i < g.rows(); ++i) shifted.at(i, i) -= sign;
  return kernel(shifted);
}

MatrixGroup fixing_subgroup(const MatrixGroup& g, const Subspace& s) {
  if (s.ambient_dim() != g.degree())
    throw ValidationError("fixing_subgroup: ambient dimension mismatch");
  std::vector<QMatrix> kept;
  for (const QMatrix& e : g.elements()) {
    bool fixes = true;
    for (std::size_t r = 0; r < s.basis().rows() && fixes; ++r) {
      const QVector row = s.basis().row(r);
      fixes = (e.apply(row) == row);
    }
    if (fixes) kept.push_back(e);
  }
  return MatrixGroup::from_elements(g.degree(), std::move(kept));
}

AlphaHomomorphism alpha_homomorphism(const MatrixGroup& h, const std::vector<QVector>& basis) {
  AlphaHomomorphism out;
  out.images.reserve(h.order());
  for (const QMatrix& e : h.elements()) {
    SignVector signs;
    signs.reserve(basis.size());
    for (const QVector& v : basis) {
      if (v.size() != h.degree()) throw ValidationError("alpha: basis vector dimension mismatch");
      if (is_zero_vector(v)) throw ValidationError("alpha: zero basis vector");
      const QVector image = e.apply(v);
      if (image == v) {
        signs.push_back(1);
      } else if (image == Rational(-1) * v) {
        signs.push_back(-1);
      } else {
        throw ValidationError("alpha: basis line is not invariant under the group");
      }
    }
    out.images.push_back(std::move(signs));
  }
  std::set<SignVector> distinct(out.images.begin(), out.images.end());
  out.injective = distinct.size() == out.images.size();
  return out;
}

bool is_elementary_abelian_2(const MatrixGroup& g) {
  for (const QMatrix& e : g.elements())
    if (!(e * e).is_identity()) return false;
  return true;
}

MatrixGroup stabilizer_of_point(const MatrixGroup& g, const QVector& x) {
  if (x.size() != g.degree()) throw ValidationError("stabilizer_of_point: dimension mismatch");
  std::vector<QMatrix> kept;
  for (const QMatrix& e : g.elements())
    if (e.apply(x) == x) kept.push_back(e);
  return MatrixGroup::from_elements(g.degree(), std::move(kept));
}

MatrixGroup stabilizer_of_line(const MatrixGroup& g, const Subspace& line) {
  if (line.dim() != 1) throw ValidationError("stabilizer_of_line: subspace is not a line");
  if (line.ambient_dim() != g.degree())
    throw ValidationError("stabilizer_of_line: dimension mismatch");
  const QVector v = line.line_generator();
  const QVector minus_v = Rational(-1) * v;
  std::vector<QMatrix> kept;
  for (const QMatrix& e : g.elements()) {
    const QVector image = e.apply(v);
    if (image == v || image == minus_v) kept.push_back(e);
  }
  return MatrixGroup::from_elements(g.degree(), std::move(kept));
}

}  // namespace wonder
