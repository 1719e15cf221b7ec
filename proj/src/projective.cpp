#include "wonder/projective.hpp"

#include <algorithm>
#include <set>

namespace wonder {

namespace {

std::vector<std::vector<std::size_t>> cycles_of(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      cycle.push_back(i);
      i = sigma[i];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

SetPartition cycle_partition(const Permutation& sigma) {
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& cycle : cycles_of(sigma)) {
    std::vector<std::size_t> block;
    block.reserve(cycle.size());
    for (std::size_t i : cycle) block.push_back(i + 1);
    blocks.push_back(std::move(block));
  }
  return SetPartition::from_blocks(sigma.size(), std::move(blocks));
}

Subspace flipped_line_span(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<QVector> rows;
  for (const auto& cycle : cycles_of(sigma)) {
    if (cycle.size() % 2 != 0) continue;
    QVector v(n, Rational(0));
    int sign = 1;
    for (std::size_t i : cycle) {
      v[i] = sign;
      sign = -sign;
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(n, rows);
}

FixedSetDecomposition projective_fixed_set(const Permutation& sigma) {
  FixedSetDecomposition out{braid_space(cycle_partition(sigma)), flipped_line_span(sigma)};
  const QMatrix m = permutation_matrix(sigma);
  if (out.plus_part != eigenspace(m, 1) || out.minus_part != eigenspace(m, -1))
    throw Error("projective fixed set disagrees with the eigenspace decomposition");
  return out;
}

const Subspace& FixedComponent::carrier() const {
  if (carriers.size() != 1) throw Error("component has multiple maximal carriers");
  return carriers.front();
}

bool FixedComponent::contains_line(const Subspace& line) const {
  for (const Subspace& c : carriers)
    if (subspace_leq(line, c)) return true;
  return false;
}

std::vector<FixedComponent> fixed_components(const MatrixGroup& f) {
  const std::size_t n = f.degree();
  const auto& gens = f.generators();
  if (gens.size() > 16) throw BudgetError("too many generators for sign-assignment enumeration");

  std::vector<Subspace> carriers;
  for (std::size_t mask = 0; mask < (std::size_t(1) << gens.size()); ++mask) {
    QMatrix stacked(gens.size() * n, n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int sign = (mask >> i) & 1 ? -1 : 1;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Rational v = gens[i].at(r, c);
          if (r == c) v -= sign;
          stacked.at(i * n + r, c) = v;
        }
    }
    Subspace k = kernel(stacked);
    if (!k.is_zero()) carriers.push_back(std::move(k));
  }
  std::sort(carriers.begin(), carriers.end(), SubspaceLess{});
  carriers.erase(std::unique(carriers.begin(), carriers.end()), carriers.end());

  // Merge carriers whose projectivizations meet (nonzero intersection).
  std::vector<std::size_t> component(carriers.size());
  for (std::size_t i = 0; i < carriers.size(); ++i) component[i] = i;
  auto root = [&](std::size_t i) {
    while (component[i] != i) i = component[i] = component[component[i]];
    return i;
  };
  for (std::size_t i = 0; i < carriers.size(); ++i)
    for (std::size_t j = i + 1; j < carriers.size(); ++j)
      if (!intersect(carriers[i], carriers[j]).is_zero()) component[root(i)] = root(j);

  std::vector<FixedComponent> out;
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < carriers.size(); ++i) roots.insert(root(i));
  for (std::size_t r : roots) {
    FixedComponent comp;
    for (std::size_t i = 0; i < carriers.size(); ++i)
      if (root(i) == r) comp.carriers.push_back(carriers[i]);
    // Keep only the maximal carriers of the class.
    std::vector<Subspace> maximal;
    for (const Subspace& c : comp.carriers) {
      bool dominated = false;
      for (const Subspace& d : comp.carriers)
        if (!(c == d) && subspace_leq(c, d)) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(c);
    }
    comp.carriers = std::move(maximal);
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const FixedComponent& a, const FixedComponent& b) {
    return subspace_less(a.carriers.front(), b.carriers.front());
  });
  return out;
}

QMatrix tangent_action(const ProjectivePoint& l, const QMatrix& h) {
  const QVector v = l.generator();
  const QVector image = h.apply(v);
  if (image == v) return h;
  if (image == Rational(-1) * v) return -h;
  throw ValidationError("tangent_action: element does not stabilize the line");
}

MatrixGroup tangent_group(const ProjectivePoint& l, const MatrixGroup& h) {
  std::vector<QMatrix> actions;
  actions.reserve(h.order());
  for (const QMatrix& e : h.elements()) actions.push_back(tangent_action(l, e));
  return MatrixGroup::from_elements(h.degree(), std::move(actions));
}

Subspace invariant_tangent_span(const ProjectivePoint& l, const MatrixGroup& h) {
  const Subspace tangent_space = orthogonal_complement(l.line);
  return invariant_line_span_within(tangent_group(l, h), tangent_space);
}

MatrixGroup tangent_fixing_subgroup(const ProjectivePoint& l, const MatrixGroup& h) {
  const Subspace span = invariant_tangent_span(l, h);
  std::vector<QMatrix> kept;
  for (const QMatrix& e : h.elements()) {
    const QMatrix action = tangent_action(l, e);
    bool fixes = true;
    for (std::size_t r = 0; r < span.basis().rows() && fixes; ++r) {
      const QVector row = span.basis().row(r);
      fixes = (action.apply(row) == row);
    }
    if (fixes) kept.push_back(e);
  }
  return MatrixGroup::from_elements(h.degree(), std::move(kept));
}

FixedComponent stratum_through(const ProjectivePoint& l, const MatrixGroup& h) {
  const MatrixGroup fixer = tangent_fixing_subgroup(l, h);
  for (FixedComponent& comp : fixed_components(fixer))
    if (comp.contains_line(l.line)) return comp;
  throw Error("stratum_through: base point not contained in any fixed component");
}

QVector bochner_chart(const ProjectivePoint& l, const ProjectivePoint& u) {
  if (l.ambient_dim() != u.ambient_dim())
    throw ValidationError("bochner_chart: ambient dimension mismatch");
  const QVector v = l.generator();
  const QVector w = u.generator();
  const Rational scale = dot(w, v);
  if (scale == 0) throw ValidationError("bochner_chart: point outside the chart domain");
  return (dot(v, v) / scale) * w - v;
}

namespace {

constexpr int kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
constexpr std::size_t kSmallPrimeCount = sizeof(kSmallPrimes) / sizeof(kSmallPrimes[0]);

/// Generic rational point of a carrier: prime-coefficient combination of the
/// basis, re-verified to avoid every braid space that does not contain the
/// whole carrier.
QVector generic_point_in(const Subspace& carrier, const std::vector<Subspace>& braid_spaces) {
  for (std::size_t attempt = 0; attempt + carrier.dim() <= kSmallPrimeCount; ++attempt) {
    QVector point(carrier.ambient_dim(), Rational(0));
    for (std::size_t r = 0; r < carrier.basis().rows(); ++r) {
      const Rational coeff = kSmallPrimes[attempt + r];
      for (std::size_t j = 0; j < point.size(); ++j)
        point[j] += coeff * carrier.basis().at(r, j);
    }
    bool generic = true;
    for (const Subspace& b : braid_spaces) {
      if (subspace_leq(carrier, b)) continue;
      if (b.contains_vector(point)) {
        generic = false;
        break;
      }
    }
    if (generic) return point;
  }
  throw SamplingError("failed to find a generic point in a fixed-set carrier");
}

Permutation three_cycle(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  return permutation_from_cycles(n, {{a, b, c}});
}

}  // namespace

ProjectiveStratificationReport verify_projective_stratification(
    std::size_t n, const SubgroupBudget& budget, const std::function<void()>& checkpoint) {
  if (n < 3) throw ValidationError("projective stratification check requires n >= 3");

  ProjectiveStratificationReport report;
  report.n = n;
  const Arrangement truncation = rank2_truncation(n);
  report.expected_carriers = truncation.subspaces;

  const ProjectivePoint ones = ProjectivePoint::through(QVector(n, Rational(1)));

  // Realization direction: every type (3,1,...) and (2,2,1,...) braid space is
  // an actual stratum, witnessed by a cyclic subgroup at the all-ones point.
  // A 3-cycle (a b c) realizes U_{abc}; the 4-cycle (a c b d) fixes the
  // alternating vector pattern whose span with the diagonal is U_{ab|cd}.
  auto run_witness = [&](const MatrixGroup& h, const SetPartition& target) {
    ProjectiveWitnessRecord rec;
    rec.partition = target.display();
    rec.expected_rank = target.rank();
    const FixedComponent stratum = stratum_through(ones, h);
    rec.ok = !stratum.multi_carrier() && stratum.carrier() == braid_space(target);
    report.witnesses.push_back(rec);
  };
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      for (std::size_t c = b + 1; c <= n; ++c) {
        std::vector<std::vector<std::size_t>> blocks = {{a, b, c}};
        for (std::size_t i = 1; i <= n; ++i)
          if (i != a && i != b && i != c) blocks.push_back({i});
        run_witness(MatrixGroup::from_generators({permutation_matrix(three_cycle(n, a, b, c))}),
                    SetPartition::from_blocks(n, std::move(blocks)));
      }
  if (n >= 4) {
    // Unordered pairs of disjoint 2-blocks {a,b}, {c,d} with a the overall
    // smallest member.
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = a + 1; b <= n; ++b)
        for (std::size_t c = a + 1; c <= n; ++c)
          for (std::size_t d = c + 1; d <= n; ++d) {
            if (c == b || d == b) continue;
            std::vector<std::vector<std::size_t>> blocks = {{a, b}, {c, d}};
            for (std::size_t i = 1; i <= n; ++i)
              if (i != a && i != b && i != c && i != d) blocks.push_back({i});
            run_witness(
                MatrixGroup::from_generators(
                    {permutation_matrix(permutation_from_cycles(n, {{a, c, b, d}}))}),
                SetPartition::from_blocks(n, std::move(blocks)));
          }
  }
  report.realization_ok =
      std::all_of(report.witnesses.begin(), report.witnesses.end(),
                  [](const ProjectiveWitnessRecord& w) { return w.ok; });

  // Classification direction: for every subgroup and every component of its
  // projective fixed set, the stratum through a generic point of the
  // component is the whole space or a projectivized braid space of rank >= 2.
  // Base points avoid every braid space (hyperplanes included) that does not
  // contain their carrier.
  std::vector<Subspace> avoid;
  for (const SetPartition& pi : all_set_partitions(n))
    if (pi.rank() >= 1) avoid.push_back(braid_space(pi));
  std::set<Subspace, SubspaceLess> nontrivial;
  const MatrixGroup sym = MatrixGroup::symmetric(n);
  report.classification_ok = true;
  for (const MatrixGroup& h : subgroups(sym, budget)) {
    if (checkpoint) checkpoint();
    for (const FixedComponent& comp : fixed_components(h)) {
      ProjectiveStratumRecord rec;
      rec.subgroup_order = h.order();
      rec.component = comp;
      rec.base_point = generic_point_in(comp.carriers.front(), avoid);
      const ProjectivePoint base = ProjectivePoint::through(rec.base_point);
      rec.stratum = stratum_through(base, h);
      if (!rec.stratum.multi_carrier() && rec.stratum.carrier().is_full()) {
        rec.whole_space = true;
      } else if (!rec.stratum.multi_carrier()) {
        const auto pi = braid_space_partition(rec.stratum.carrier());
        if (pi && pi->rank() >= 2) {
          rec.is_braid_space = true;
          rec.partition = pi->display();
          nontrivial.insert(rec.stratum.carrier());
        }
      }
      if (!rec.whole_space && !rec.is_braid_space) report.classification_ok = false;
      report.census.push_back(std::move(rec));
    }
  }
  report.nontrivial_carriers.assign(nontrivial.begin(), nontrivial.end());

  report.carriers_match = (report.nontrivial_carriers == report.expected_carriers);
  report.verdict = report.realization_ok && report.classification_ok &&
                   arrangements_equal_as_lattices(
                       Arrangement::of(n, report.nontrivial_carriers), truncation);
  return report;
}

}  // namespace wonder
