#pragma once

#include "wonder/arrangement.hpp"
#include "wonder/matgroup.hpp"
#include "wonder/qlinalg.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace wonder {

/// Point of RP^{n-1}: a line of R^n with its canonical generator.
struct ProjectivePoint {
  Subspace line;

  static ProjectivePoint through(const QVector& v) { return {Subspace::line_through(v)}; }
  std::size_t ambient_dim() const { return line.ambient_dim(); }
  QVector generator() const { return line.line_generator(); }

  bool operator==(const ProjectivePoint&) const = default;
};

/// The set partition of {1,...,n} given by the cycles of a permutation
/// (fixed points become singleton blocks).
SetPartition cycle_partition(const Permutation& sigma);

/// Span of the lines flipped by the permutation: one alternating +/-1 vector
/// per even-length cycle, signs following the iteration order of the cycle.
Subspace flipped_line_span(const Permutation& sigma);

/// Fixed points of a permutation acting on RP^{n-1}, as the disjoint union
/// P(plus_part) ∪ P(minus_part) with plus_part = braid_space(cycle partition)
/// and minus_part = flipped_line_span. Both parts are cross-checked against
/// the +1/-1 eigenspaces of the permutation matrix; a mismatch raises Error.
struct FixedSetDecomposition {
  Subspace plus_part;
  Subspace minus_part;
};

FixedSetDecomposition projective_fixed_set(const Permutation& sigma);

/// Connected component of a fixed-point set in RP^{n-1}: the union of the
/// projectivized carriers listed here. The construction merges carriers with
/// nonzero intersection; a component with several maximal carriers is kept
/// explicit (multi_carrier), never collapsed.
struct FixedComponent {
  std::vector<Subspace> carriers;  // pairwise-maximal, canonically sorted

  bool multi_carrier() const { return carriers.size() > 1; }
  /// The unique carrier of a single-carrier component.
  const Subspace& carrier() const;
  bool contains_line(const Subspace& line) const;

  bool operator==(const FixedComponent&) const = default;
};

/// Components of the common projective fixed set of a group: enumerate sign
/// assignments over the generators, keep the nonzero kernels as carriers, and
/// merge overlapping ones.
std::vector<FixedComponent> fixed_components(const MatrixGroup& f);

/// The action induced on the tangent space at a fixed projective point,
/// realized as the ambient matrix s_h * h where h maps the canonical
/// generator v to s_h v. The result fixes v and preserves v^⊥, where it acts
/// as the tangent map. Requires h to stabilize the line.
QMatrix tangent_action(const ProjectivePoint& l, const QMatrix& h);

/// The group {s_h h : h in H} of tangent actions; requires H ≤ stab(l).
MatrixGroup tangent_group(const ProjectivePoint& l, const MatrixGroup& h);

/// Span of the H-invariant lines of the tangent space at l, carried as a
/// subspace of R^n inside l^⊥.
Subspace invariant_tangent_span(const ProjectivePoint& l, const MatrixGroup& h);

/// Kernel of the sign homomorphism at l: the elements of H whose tangent
/// action fixes invariant_tangent_span(l, H) pointwise.
MatrixGroup tangent_fixing_subgroup(const ProjectivePoint& l, const MatrixGroup& h);

/// The stratum through l for the subgroup H: the connected component of the
/// projective fixed set of tangent_fixing_subgroup(l, H) that contains l.
FixedComponent stratum_through(const ProjectivePoint& l, const MatrixGroup& h);

/// Chart at l sending a nearby projective point u to the intersection of u
/// with the affine slice l^⊥ + v, translated back to l^⊥:
/// w |-> w <v,v>/<w,v> - v. Points with <w,v> = 0 are outside the chart
/// domain and raise ValidationError.
QVector bochner_chart(const ProjectivePoint& l, const ProjectivePoint& u);

/// One row of the projective stratification census.
struct ProjectiveStratumRecord {
  std::size_t subgroup_order = 0;
  FixedComponent component;       // the component the base point was drawn from
  QVector base_point;             // generic generator used as l
  FixedComponent stratum;
  bool whole_space = false;
  bool is_braid_space = false;
  std::string partition;          // display of the braid partition when applicable
};

struct ProjectiveWitnessRecord {
  std::string partition;  // realized braid partition
  std::size_t expected_rank = 0;
  bool ok = false;
};

struct ProjectiveStratificationReport {
  std::size_t n = 0;
  std::vector<ProjectiveWitnessRecord> witnesses;     // realization direction
  std::vector<ProjectiveStratumRecord> census;        // classification direction
  std::vector<Subspace> nontrivial_carriers;          // deduplicated stratum carriers
  std::vector<Subspace> expected_carriers;            // rank-2 truncation subspaces
  bool realization_ok = false;
  bool classification_ok = false;
  bool carriers_match = false;
  bool verdict = false;
};

/// Verifies that the stratification of RP^{n-1} under the permutation action
/// matches the rank-2 truncation of the projectivized braid arrangement:
/// every codimension-2 braid space is realized as a stratum by a cyclic
/// witness at the all-ones point, every stratum arising from any subgroup is
/// the whole space or a projectivized braid space of rank >= 2, and the
/// stratum carriers generate the same intersection lattice as the truncation.
/// `checkpoint` (when set) runs once per subgroup; it may throw to abort.
ProjectiveStratificationReport verify_projective_stratification(
    std::size_t n, const SubgroupBudget& budget = {},
    const std::function<void()>& checkpoint = {});

}  // namespace wonder
