#pragma once

#include "support/random_gen.hpp"

#include "wonder/arrangement.hpp"
#include "wonder/matgroup.hpp"
#include "wonder/model.hpp"
#include "wonder/projective.hpp"
#include "wonder/qlinalg.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Property laws shared by the unit tests (small case counts) and the
// acceptance suite (>= 1000 cases per law). Each law draws one random
// instance and returns a failure description, or nothing on success.

namespace wonder::laws {

using testsupport::Rng;
using Failure = std::optional<std::string>;

struct Law {
  std::string name;
  std::function<Failure(Rng&)> run;
};

inline std::string subspace_str(const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.basis().rows(); ++i) {
    if (i) out += ", ";
    out += format_vector(s.basis().row(i));
  }
  return out + "} in R^" + std::to_string(s.ambient_dim());
}

// ---- qlinalg ----

inline Failure intersect_commutes(Rng& rng) {
  const std::size_t n = rng.integer(1, 5);
  const Subspace s = rng.subspace(n), t = rng.subspace(n);
  if (!(intersect(s, t) == intersect(t, s)))
    return "intersect not symmetric for " + subspace_str(s) + " and " + subspace_str(t);
  return std::nullopt;
}

inline Failure intersection_and_sum_bounds(Rng& rng) {
  const std::size_t n = rng.integer(1, 5);
  const Subspace s = rng.subspace(n), t = rng.subspace(n);
  if (!subspace_leq(intersect(s, t), s)) return "s∩t not inside s";
  if (!subspace_leq(s, subspace_sum(s, t))) return "s not inside s+t";
  return std::nullopt;
}

inline Failure modular_dimension_law(Rng& rng) {
  const std::size_t n = rng.integer(1, 5);
  const Subspace s = rng.subspace(n), t = rng.subspace(n);
  const std::size_t lhs = s.dim() + t.dim();
  const std::size_t rhs = intersect(s, t).dim() + subspace_sum(s, t).dim();
  if (lhs != rhs)
    return "dim law failed: " + std::to_string(lhs) + " != " + std::to_string(rhs) + " for " +
           subspace_str(s) + ", " + subspace_str(t);
  return std::nullopt;
}

/// Canonicity: the RREF basis is unchanged by invertible row operations on a
/// spanning set.
inline Failure span_canonical_under_row_ops(Rng& rng) {
  const std::size_t n = rng.integer(1, 5);
  const std::size_t k = rng.integer(1, static_cast<int>(n) + 1);
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(rng.vector(n));
  const Subspace before = Subspace::span(n, rows);
  for (int op = 0; op < 8; ++op) {
    const std::size_t i = rng.integer(0, static_cast<int>(k) - 1);
    const std::size_t j = rng.integer(0, static_cast<int>(k) - 1);
    switch (rng.integer(0, 2)) {
      case 0:
        std::swap(rows[i], rows[j]);
        break;
      case 1: {
        Rational c = rng.rational();
        if (c == 0) c = 1;
        rows[i] = c * rows[i];
        break;
      }
      default:
        if (i != j) rows[i] = rows[i] + rng.rational() * rows[j];
        break;
    }
  }
  if (!(Subspace::span(n, rows) == before)) return "row operations changed the canonical span";
  return std::nullopt;
}

inline Failure complement_is_order_reversing_involution(Rng& rng) {
  const std::size_t n = rng.integer(1, 5);
  const Subspace s = rng.subspace(n), t = rng.subspace(n);
  if (!(orthogonal_complement(orthogonal_complement(s)) == s))
    return "complement not involutive on " + subspace_str(s);
  if (s.dim() + orthogonal_complement(s).dim() != n) return "complement dimension defect";
  const bool leq = subspace_leq(s, t);
  const bool reversed = subspace_leq(orthogonal_complement(t), orthogonal_complement(s));
  if (leq != reversed) return "complement does not reverse inclusion";
  return std::nullopt;
}

// ---- matgroup ----

inline Failure closure_is_closed(Rng& rng) {
  const MatrixGroup g = rng.signed_permutation_group(rng.integer(2, 3));
  for (int trial = 0; trial < 8; ++trial) {
    const QMatrix& a = g.elements()[rng.integer(0, static_cast<int>(g.order()) - 1)];
    const QMatrix& b = g.elements()[rng.integer(0, static_cast<int>(g.order()) - 1)];
    if (!g.contains(a * b)) return "product of elements escaped the closure";
  }
  return std::nullopt;
}

inline Failure lagrange_for_enumerated_subgroups(Rng& rng) {
  const MatrixGroup g = rng.signed_permutation_group(2, 2);
  for (const MatrixGroup& h : subgroups(g))
    if (g.order() % h.order() != 0)
      return "subgroup order " + std::to_string(h.order()) + " does not divide " +
             std::to_string(g.order());
  return std::nullopt;
}

/// L(H) is H-invariant and decomposes into invariant lines: alpha on the
/// simultaneous eigenbasis must succeed and the basis must span L(H).
inline Failure invariant_span_decomposes(Rng& rng) {
  const MatrixGroup g = rng.signed_permutation_group(rng.integer(2, 4));
  const Subspace span = invariant_line_span(g);
  for (const QMatrix& gen : g.generators())
    if (!(apply_matrix(gen, span) == span)) return "L(H) is not H-invariant";
  const std::vector<QVector> basis = invariant_eigenbasis(g);
  alpha_homomorphism(g, basis);  // throws if a basis line is not invariant
  if (!(Subspace::span(g.degree(), basis) == span))
    return "eigenbasis does not span the invariant line span";
  return std::nullopt;
}

/// Brute force over lines with coordinates in {-1,0,1}: every invariant line
/// lies in L(H), and L(H) = Fix(F(H)).
inline Failure invariant_span_matches_brute_force(Rng& rng) {
  const std::size_t n = rng.integer(2, 4);
  const MatrixGroup g = rng.signed_permutation_group(n);
  const Subspace span = invariant_line_span(g);

  std::vector<QVector> candidates;
  QVector v(n, Rational(0));
  auto enumerate = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (!is_zero_vector(v)) candidates.push_back(v);
      return;
    }
    for (int c = -1; c <= 1; ++c) {
      v[i] = c;
      self(self, i + 1);
    }
  };
  enumerate(enumerate, 0);
  for (const QVector& cand : candidates) {
    bool invariant = true;
    for (const QMatrix& e : g.elements()) {
      const QVector image = e.apply(cand);
      if (image != cand && image != Rational(-1) * cand) {
        invariant = false;
        break;
      }
    }
    if (invariant && !span.contains_vector(cand))
      return "invariant line " + format_vector(cand) + " missing from L(H)";
  }

  const MatrixGroup fixer = fixing_subgroup(g, span);
  if (!(fixed_subspace(fixer) == span)) return "L(H) != Fix(F(H))";
  return std::nullopt;
}

/// F(H) is normal in H and the quotient has exponent at most 2.
inline Failure fixing_subgroup_normal_exponent_2(Rng& rng) {
  const MatrixGroup g = rng.signed_permutation_group(rng.integer(2, 3));
  if (g.order() > 64) return std::nullopt;  // the conjugation loop below is quadratic
  const Subspace span = invariant_line_span(g);
  const MatrixGroup fixer = fixing_subgroup(g, span);
  for (const QMatrix& h : g.elements()) {
    if (!fixer.contains(h * h)) return "square of an element is outside F(H)";
    for (const QMatrix& f : fixer.elements())
      if (!fixer.contains(h * f * h.transpose()))
        return "F(H) is not normal (conjugation escaped)";
  }
  return std::nullopt;
}

/// Elementary-abelian-2 test agrees with injectivity of alpha on a full
/// invariant eigenbasis whenever L(H) is everything.
inline Failure ea2_iff_alpha_injective(Rng& rng) {
  const MatrixGroup g = rng.signed_permutation_group(rng.integer(2, 3));
  if (!invariant_line_span(g).is_full()) return std::nullopt;  // vacuous draw
  const auto alpha = alpha_homomorphism(g, invariant_eigenbasis(g));
  if (is_elementary_abelian_2(g) != alpha.injective)
    return "ea2 flag disagrees with alpha injectivity";
  return std::nullopt;
}

// ---- arrangement ----

inline Failure lattice_closure_idempotent(Rng& rng) {
  const std::size_t n = rng.integer(2, 4);
  std::vector<Subspace> spaces;
  const int k = rng.integer(0, 3);
  for (int i = 0; i < k; ++i) {
    const Subspace s = rng.subspace(n);
    if (!s.is_full()) spaces.push_back(s);
  }
  const IntersectionLattice lattice = intersection_lattice(Arrangement::of(n, spaces));
  std::vector<Subspace> proper;
  for (const Subspace& e : lattice.elements())
    if (!e.is_full()) proper.push_back(e);
  const IntersectionLattice again = intersection_lattice(Arrangement::of(n, proper));
  if (!(lattice == again)) return "closing a closed lattice added elements";
  return std::nullopt;
}

inline Failure braid_inclusion_matches_refinement(Rng& rng) {
  const std::size_t n = rng.integer(2, 6);
  const auto partitions = all_set_partitions(n);
  const SetPartition& a = partitions[rng.integer(0, static_cast<int>(partitions.size()) - 1)];
  const SetPartition& b = partitions[rng.integer(0, static_cast<int>(partitions.size()) - 1)];
  const bool subspace_side = subspace_leq(braid_space(b), braid_space(a));
  const bool partition_side = a.refines(b);
  if (subspace_side != partition_side)
    return "U_" + a.display() + " vs U_" + b.display() + ": inclusion " +
           std::to_string(subspace_side) + " but refinement " + std::to_string(partition_side);
  return std::nullopt;
}

// ---- model ----

namespace detail {

inline const MatrixGroup& symmetric_cached(std::size_t n) {
  static std::map<std::size_t, MatrixGroup> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, MatrixGroup::symmetric(n)).first;
  return it->second;
}

inline const std::vector<MatrixGroup>& symmetric_subgroups_cached(std::size_t n) {
  static std::map<std::size_t, std::vector<MatrixGroup>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, subgroups(symmetric_cached(n))).first;
  return it->second;
}

inline const MatrixGroup& corpus_group(Rng& rng) {
  static const std::vector<MatrixGroup> corpus = [] {
    std::vector<MatrixGroup> out;
    out.push_back(MatrixGroup::symmetric(3));
    out.push_back(MatrixGroup::symmetric(4));
    // rational rotation of order 4
    QMatrix rot(2, 2);
    rot.at(0, 1) = -1;
    rot.at(1, 0) = 1;
    out.push_back(MatrixGroup::from_generators({rot}));
    // diagonal sign group
    QMatrix d1 = QMatrix::identity(2), d2 = QMatrix::identity(2);
    d1.at(0, 0) = -1;
    d2.at(1, 1) = -1;
    out.push_back(MatrixGroup::from_generators({d1, d2}));
    // wreath-type group of degree 4
    out.push_back(MatrixGroup::from_generators(
        {permutation_matrix(permutation_from_cycles(4, {{1, 2}})),
         permutation_matrix(permutation_from_cycles(4, {{3, 4}})),
         permutation_matrix(permutation_from_cycles(4, {{1, 3}, {2, 4}}))}));
    return out;
  }();
  return corpus[rng.integer(0, static_cast<int>(corpus.size()) - 1)];
}

struct ModelFixture {
  const MatrixGroup* group;
  IntersectionLattice lattice;
  std::vector<std::vector<Subspace>> chains;
};

inline const ModelFixture& model_fixture(const MatrixGroup& g) {
  static std::vector<std::pair<const MatrixGroup*, ModelFixture>> cache;
  for (const auto& [key, fixture] : cache)
    if (key == &g) return fixture;
  ModelFixture fixture;
  fixture.group = &g;
  fixture.lattice = intersection_lattice(build_arrangement(g));
  fixture.chains = lattice_chains(fixture.lattice);
  cache.emplace_back(&g, std::move(fixture));
  return cache.back().second;
}

inline ModelPoint random_model_point(Rng& rng, const ModelFixture& fixture) {
  const auto& chain =
      fixture.chains[rng.integer(0, static_cast<int>(fixture.chains.size()) - 1)];
  ModelPointSampler sampler(fixture.lattice, rng.engine()());
  return sampler.sample(chain);
}

}  // namespace detail

/// The chain is a function of (x, lines): re-encoding reproduces the point.
inline Failure encoding_unique(Rng& rng) {
  const MatrixGroup& g = detail::corpus_group(rng);
  const auto& fixture = detail::model_fixture(g);
  const ModelPoint omega = detail::random_model_point(rng, fixture);
  const ModelPoint again = encode_point(fixture.lattice, omega.point, omega.lines);
  if (!(again == omega)) return "re-encoding changed the model point";
  return std::nullopt;
}

/// Componentwise group action sends valid points to valid points, and the
/// stabilizer formula agrees with the brute-force fixed-point set.
inline Failure model_point_equivariance(Rng& rng) {
  const MatrixGroup& g = detail::corpus_group(rng);
  const auto& fixture = detail::model_fixture(g);
  const ModelPoint omega = detail::random_model_point(rng, fixture);

  const QMatrix& mover = g.elements()[rng.integer(0, static_cast<int>(g.order()) - 1)];
  const ModelPoint moved = apply_to_model_point(mover, omega);
  const ModelPoint revalidated = encode_point(fixture.lattice, moved.point, moved.lines);
  if (!(revalidated.chain == moved.chain)) return "transformed point has a different chain";

  const MatrixGroup stab = stabilizer_of_model_point(g, omega);
  std::vector<QMatrix> brute;
  for (const QMatrix& e : g.elements())
    if (apply_to_model_point(e, omega) == omega) brute.push_back(e);
  if (!(MatrixGroup::from_elements(g.degree(), brute) == stab))
    return "stabilizer formula disagrees with brute force";
  return std::nullopt;
}

/// For complement points the stabilizer degenerates to the point stabilizer
/// and every recovered coordinate is the orthogonal part of x.
inline Failure complement_point_degeneration(Rng& rng) {
  const MatrixGroup& g = detail::corpus_group(rng);
  const auto& fixture = detail::model_fixture(g);
  ModelPointSampler sampler(fixture.lattice, rng.engine()());
  const ModelPoint omega = sampler.sample({});
  if (!(stabilizer_of_model_point(g, omega) == stabilizer_of_point(g, omega.point)))
    return "complement stabilizer differs from the point stabilizer";
  for (const Subspace& h : fixture.lattice.elements()) {
    if (h.is_full()) continue;
    const Subspace coord = recover_coordinate(omega, fixture.lattice, h);
    if (!(coord == Subspace::line_through(orthogonal_part(omega.point, h))))
      return "recovered coordinate differs from the projection of x";
  }
  return std::nullopt;
}

/// Proof-step invariant: every chain element lies in L(stab), and L(stab) is
/// everything; alpha is injective on the stabilizer.
inline Failure stabilizer_span_is_full(Rng& rng) {
  const MatrixGroup& g = detail::corpus_group(rng);
  const auto& fixture = detail::model_fixture(g);
  const ModelPoint omega = detail::random_model_point(rng, fixture);
  const MatrixGroup stab = stabilizer_of_model_point(g, omega);
  const Subspace span = invariant_line_span(stab);
  for (const Subspace& h : omega.chain)
    if (!subspace_leq(h, span)) return "chain element escapes L(stab)";
  if (!span.is_full()) return "L(stab) is a proper subspace";
  if (!alpha_homomorphism(stab, invariant_eigenbasis(stab)).injective)
    return "alpha is not injective on the stabilizer";
  return std::nullopt;
}

// ---- projective ----

inline Failure projective_fixed_set_oracle(Rng& rng) {
  const std::size_t n = rng.integer(2, 6);
  Permutation sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  std::shuffle(sigma.begin(), sigma.end(), rng.engine());
  const FixedSetDecomposition fix = projective_fixed_set(sigma);  // checks the oracle inside
  if (!intersect(fix.plus_part, fix.minus_part).is_zero())
    return "fixed-set parts are not disjoint";
  for (std::size_t i = 0; i < fix.plus_part.basis().rows(); ++i)
    for (std::size_t j = 0; j < fix.minus_part.basis().rows(); ++j)
      if (dot(fix.plus_part.basis().row(i), fix.minus_part.basis().row(j)) != 0)
        return "fixed-set parts are not orthogonal";
  return std::nullopt;
}

/// g(stratum(l, H)) = stratum(g l, g H g^-1).
inline Failure stratification_equivariance(Rng& rng) {
  const std::size_t n = rng.integer(3, 4);
  const MatrixGroup& sym = detail::symmetric_cached(n);
  const auto& subs = detail::symmetric_subgroups_cached(n);
  const MatrixGroup& h = subs[rng.integer(0, static_cast<int>(subs.size()) - 1)];
  const auto comps = fixed_components(h);
  const FixedComponent& comp = comps[rng.integer(0, static_cast<int>(comps.size()) - 1)];

  // a point of the component (generic enough for equivariance)
  QVector point(n, Rational(0));
  const Subspace& carrier = comp.carriers.front();
  for (std::size_t r = 0; r < carrier.basis().rows(); ++r)
    point = point + Rational(2 * static_cast<int>(r) + 3) * carrier.basis().row(r);
  const ProjectivePoint l = ProjectivePoint::through(point);

  const QMatrix& mover = sym.elements()[rng.integer(0, static_cast<int>(sym.order()) - 1)];
  std::vector<QMatrix> conjugates;
  for (const QMatrix& e : h.elements()) conjugates.push_back(mover * e * mover.transpose());
  const MatrixGroup moved_h = MatrixGroup::from_elements(n, conjugates);
  const ProjectivePoint moved_l = ProjectivePoint::through(mover.apply(point));

  const FixedComponent stratum = stratum_through(l, h);
  const FixedComponent moved_stratum = stratum_through(moved_l, moved_h);
  if (stratum.multi_carrier() || moved_stratum.multi_carrier())
    return "unexpected multi-carrier stratum";
  if (!(apply_matrix(mover, stratum.carrier()) == moved_stratum.carrier()))
    return "stratum carrier is not equivariant";
  return std::nullopt;
}

/// At the all-ones point the tangent span plus the base line recovers the
/// ambient invariant-line span.
inline Failure tangent_ambient_comparison(Rng& rng) {
  const std::size_t n = rng.integer(3, 5);
  const auto& subs = detail::symmetric_subgroups_cached(n);
  const MatrixGroup& h = subs[rng.integer(0, static_cast<int>(subs.size()) - 1)];
  const ProjectivePoint ones = ProjectivePoint::through(QVector(n, Rational(1)));
  const Subspace tangent = invariant_tangent_span(ones, h);
  const Subspace with_line = subspace_sum(tangent, ones.line);
  if (!(with_line == invariant_line_span(h)))
    return "L(l,H) ⊕ <v> differs from the ambient invariant span";
  return std::nullopt;
}

/// The chart is equivariant under the stabilizer of its center.
inline Failure chart_equivariance(Rng& rng) {
  const std::size_t n = rng.integer(3, 5);
  const MatrixGroup& sym = detail::symmetric_cached(n);
  const ProjectivePoint center = ProjectivePoint::through(QVector(n, Rational(1)));
  QVector w = rng.nonzero_vector(n);
  if (dot(w, center.generator()) == 0) return std::nullopt;  // outside the chart domain
  const ProjectivePoint u = ProjectivePoint::through(w);

  const QMatrix& g = sym.elements()[rng.integer(0, static_cast<int>(sym.order()) - 1)];
  const QVector lhs = bochner_chart(center, ProjectivePoint::through(g.apply(u.generator())));
  const QVector rhs = tangent_action(center, g).apply(bochner_chart(center, u));
  if (lhs != rhs) return "chart not equivariant";
  return std::nullopt;
}

inline std::vector<Law> all_laws() {
  return {
      {"qlinalg/intersect-commutes", intersect_commutes},
      {"qlinalg/intersection-and-sum-bounds", intersection_and_sum_bounds},
      {"qlinalg/modular-dimension-law", modular_dimension_law},
      {"qlinalg/span-canonical-under-row-ops", span_canonical_under_row_ops},
      {"qlinalg/complement-order-reversing-involution",
       complement_is_order_reversing_involution},
      {"matgroup/closure-is-closed", closure_is_closed},
      {"matgroup/lagrange", lagrange_for_enumerated_subgroups},
      {"matgroup/invariant-span-decomposes", invariant_span_decomposes},
      {"matgroup/invariant-span-brute-force", invariant_span_matches_brute_force},
      {"matgroup/fixing-subgroup-normal-exponent-2", fixing_subgroup_normal_exponent_2},
      {"matgroup/ea2-iff-alpha-injective", ea2_iff_alpha_injective},
      {"arrangement/lattice-closure-idempotent", lattice_closure_idempotent},
      {"arrangement/braid-inclusion-matches-refinement", braid_inclusion_matches_refinement},
      {"model/encoding-unique", encoding_unique},
      {"model/equivariance-and-stabilizer-oracle", model_point_equivariance},
      {"model/complement-point-degeneration", complement_point_degeneration},
      {"model/stabilizer-span-full", stabilizer_span_is_full},
      {"projective/fixed-set-oracle", projective_fixed_set_oracle},
      {"projective/stratification-equivariance", stratification_equivariance},
      {"projective/tangent-ambient-comparison", tangent_ambient_comparison},
      {"projective/chart-equivariance", chart_equivariance},
  };
}

}  // namespace wonder::laws
