#pragma once

#include "wonder/arrangement.hpp"
#include "wonder/matgroup.hpp"
#include "wonder/qlinalg.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace wonder {

/// Point of the maximal wonderful model in point/line form: the blowdown
/// image x together with lines l_1,...,l_t and the chain H_1 ⊊ ... ⊊ H_t of
/// proper lattice elements they induce. The chain is determined by (x, lines):
/// H_1 is the inclusion-smallest lattice element containing x, and each
/// H_{i+1} is the inclusion-smallest element containing <H_i, l_i>. Each l_i
/// is orthogonal to H_i, and <H_t, l_t> lies in no proper lattice element.
/// t = 0 encodes a point of the arrangement complement.
struct ModelPoint {
  QVector point;
  std::vector<Subspace> chain;
  std::vector<Subspace> lines;  // dim-1, canonical generators

  bool operator==(const ModelPoint&) const = default;
};

/// Validates (x, lines) against the lattice and builds the induced chain.
/// Raises ValidationError when a line is not orthogonal to its chain element,
/// when lines continue past the termination condition, or when the lines are
/// exhausted while <H_t, l_t> still lies in a proper lattice element.
ModelPoint encode_point(const IntersectionLattice& lattice, const QVector& x,
                        const std::vector<Subspace>& lines);

/// The model-point coordinate indexed by a proper lattice element h: with the
/// conventions H_0 = center of the lattice, l_0 = <x> and H_{t+1} = R^n, picks
/// the unique j with H_j ⊆ h and H_{j+1} ⊄ h and returns the image of l_j in
/// V/h as the orthogonal representative line inside h^⊥.
Subspace recover_coordinate(const ModelPoint& omega, const IntersectionLattice& lattice,
                            const Subspace& h);

/// The chain indexing the open stratum containing the point (empty for the
/// big open stratum).
inline const std::vector<Subspace>& open_stratum(const ModelPoint& omega) { return omega.chain; }

/// Stabilizer of the model point: stab(x) intersected with the setwise
/// line stabilizers of l_1,...,l_t.
MatrixGroup stabilizer_of_model_point(const MatrixGroup& g, const ModelPoint& omega);

/// Componentwise action of a group element on a model point (x, lines and
/// chain all mapped through g, lines re-canonicalized).
ModelPoint apply_to_model_point(const QMatrix& g, const ModelPoint& omega);

/// All chains of proper lattice elements, totally ordered by inclusion,
/// including the empty chain. Deterministic order.
std::vector<std::vector<Subspace>> lattice_chains(const IntersectionLattice& lattice);

/// Deterministic generic-point sampler for model points. For a target chain
/// it draws x generically in H_1 and each l_i generically in the orthogonal
/// slice H_i^⊥ ∩ H_{i+1} (H_{t+1} = R^n), then re-validates through
/// encode_point that the induced chain is exactly the target. A failure after
/// the retry budget raises SamplingError.
class ModelPointSampler {
public:
  ModelPointSampler(const IntersectionLattice& lattice, std::uint64_t seed)
      : lattice_(&lattice), rng_(seed) {}

  ModelPoint sample(const std::vector<Subspace>& chain, int retries = 64);

private:
  QVector random_vector_in(const Subspace& s);

  const IntersectionLattice* lattice_;
  std::mt19937_64 rng_;
};

/// One certified stratum: the chain, a sampled witness point, and the two
/// digitalization checks for its stabilizer.
struct StratumCertificate {
  std::vector<Subspace> chain;
  ModelPoint sample;
  std::size_t stabilizer_order = 0;
  bool elementary_abelian_2 = false;
  bool invariant_span_full = false;

  bool passed() const { return elementary_abelian_2 && invariant_span_full; }
};

struct DigitalizationReport {
  std::size_t degree = 0;
  std::size_t group_order = 0;
  std::size_t arrangement_size = 0;
  std::size_t lattice_size = 0;
  std::size_t samples_per_chain = 0;
  std::uint64_t seed = 0;
  std::vector<StratumCertificate> strata;
  bool verdict = false;
};

/// Samples every lattice chain and checks that each witness stabilizer is an
/// elementary abelian 2-group whose invariant-line span is all of R^n.
/// `checkpoint` (when set) runs once per chain; it may throw to abort.
DigitalizationReport certify_digitalization(const MatrixGroup& g, std::size_t samples_per_chain,
                                            std::uint64_t seed,
                                            const SubgroupBudget& budget = {},
                                            const std::function<void()>& checkpoint = {});

}  // namespace wonder
