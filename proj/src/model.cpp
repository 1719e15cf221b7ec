#include "wonder/model.hpp"

#include <algorithm>
#include <string>

namespace wonder {

namespace {

void require_line(const Subspace& line, std::size_t ambient, std::size_t position) {
  if (line.ambient_dim() != ambient)
    throw ValidationError("line " + std::to_string(position) + ": ambient dimension mismatch");
  if (line.dim() != 1)
    throw ValidationError("line " + std::to_string(position) + ": not one-dimensional");
}

bool orthogonal_to(const QVector& v, const Subspace& s) {
  for (std::size_t r = 0; r < s.basis().rows(); ++r)
    if (dot(v, s.basis().row(r)) != 0) return false;
  return true;
}

}  // namespace

ModelPoint encode_point(const IntersectionLattice& lattice, const QVector& x,
                        const std::vector<Subspace>& lines) {
  const std::size_t n = lattice.ambient_dim();
  if (x.size() != n) throw ValidationError("encode: point dimension mismatch");

  ModelPoint out;
  out.point = x;

  Subspace current = lattice.minimal_containing(Subspace::span(n, {x}));
  bool terminated = current.is_full();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    require_line(lines[i], n, i + 1);
    if (terminated)
      throw ValidationError("premature termination: line " + std::to_string(i + 1) +
                            " supplied after the termination condition was already met");
    if (!orthogonal_to(lines[i].line_generator(), current))
      throw ValidationError("line " + std::to_string(i + 1) +
                            " is not orthogonal to its chain element");
    out.chain.push_back(current);
    out.lines.push_back(lines[i]);
    const Subspace next = lattice.minimal_containing(subspace_sum(current, lines[i]));
    if (next.is_full()) {
      terminated = true;
    } else {
      // l_i ⊆ H_{i+1} holds by construction of the minimal containing element.
      if (!subspace_leq(lines[i], next))
        throw Error("internal: line escaped the next chain element");
      current = next;
    }
  }
  if (!terminated)
    throw ValidationError(
        "non-termination: lines exhausted but the last span still lies in the proper lattice "
        "element of dimension " +
        std::to_string(current.dim()));
  return out;
}

Subspace recover_coordinate(const ModelPoint& omega, const IntersectionLattice& lattice,
                            const Subspace& h) {
  if (h.is_full()) throw ValidationError("recover_coordinate: element must be proper");
  if (!lattice.has_element(h))
    throw ValidationError("recover_coordinate: subspace is not a lattice element");

  // Conventions: H_0 = lattice center, l_0 = <x>, H_{t+1} = R^n. The chain is
  // increasing, so the wanted j is the largest with H_j ⊆ h.
  std::size_t j = 0;
  for (std::size_t i = 0; i < omega.chain.size(); ++i) {
    if (subspace_leq(omega.chain[i], h))
      j = i + 1;
    else
      break;
  }
  QVector generator;
  if (j == 0) {
    if (is_zero_vector(omega.point))
      throw ValidationError("recover_coordinate: undefined for x = 0 at this element");
    generator = omega.point;
  } else {
    generator = omega.lines[j - 1].line_generator();
  }
  if (h.contains_vector(generator))
    throw ValidationError("recover_coordinate: degenerate quotient (invalid encoding)");
  return Subspace::line_through(orthogonal_part(generator, h));
}

MatrixGroup stabilizer_of_model_point(const MatrixGroup& g, const ModelPoint& omega) {
  if (omega.point.size() != g.degree())
    throw ValidationError("stabilizer_of_model_point: dimension mismatch");
  std::vector<QMatrix> kept;
  for (const QMatrix& e : g.elements()) {
    if (e.apply(omega.point) != omega.point) continue;
    bool preserves_lines = true;
    for (const Subspace& line : omega.lines) {
      const QVector v = line.line_generator();
      const QVector image = e.apply(v);
      if (image != v && image != Rational(-1) * v) {
        preserves_lines = false;
        break;
      }
    }
    if (preserves_lines) kept.push_back(e);
  }
  return MatrixGroup::from_elements(g.degree(), std::move(kept));
}

ModelPoint apply_to_model_point(const QMatrix& g, const ModelPoint& omega) {
  ModelPoint out;
  out.point = g.apply(omega.point);
  out.chain.reserve(omega.chain.size());
  for (const Subspace& h : omega.chain) out.chain.push_back(apply_matrix(g, h));
  out.lines.reserve(omega.lines.size());
  for (const Subspace& line : omega.lines)
    out.lines.push_back(Subspace::line_through(g.apply(line.line_generator())));
  return out;
}

std::vector<std::vector<Subspace>> lattice_chains(const IntersectionLattice& lattice) {
  std::vector<Subspace> proper;
  for (const Subspace& e : lattice.elements())
    if (!e.is_full()) proper.push_back(e);
  std::sort(proper.begin(), proper.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return matrix_less(a.basis(), b.basis());
  });

  std::vector<std::vector<Subspace>> out;
  std::vector<Subspace> chain;
  auto grow = [&](auto&& self) -> void {
    out.push_back(chain);
    for (const Subspace& e : proper) {
      if (!chain.empty() &&
          (e.dim() <= chain.back().dim() || !subspace_leq(chain.back(), e)))
        continue;
      chain.push_back(e);
      self(self);
      chain.pop_back();
    }
  };
  grow(grow);
  return out;
}

QVector ModelPointSampler::random_vector_in(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  if (s.is_zero()) return QVector(n, Rational(0));
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int tries = 0; tries < 64; ++tries) {
    QVector v(n, Rational(0));
    bool nonzero = false;
    for (std::size_t r = 0; r < s.basis().rows(); ++r) {
      const int c = coeff(rng_);
      if (c == 0) continue;
      nonzero = true;
      for (std::size_t j = 0; j < n; ++j) v[j] += Rational(c) * s.basis().at(r, j);
    }
    if (nonzero) return v;
  }
  throw SamplingError("failed to draw a nonzero vector");
}

ModelPoint ModelPointSampler::sample(const std::vector<Subspace>& chain, int retries) {
  const std::size_t n = lattice_->ambient_dim();
  const Subspace full = Subspace::full(n);
  for (int attempt = 0; attempt < retries; ++attempt) {
    const QVector x = random_vector_in(chain.empty() ? full : chain.front());
    std::vector<Subspace> lines;
    bool drew_all = true;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const Subspace& target = (i + 1 < chain.size()) ? chain[i + 1] : full;
      Subspace slice = intersect(orthogonal_complement(chain[i]), target);
      if (slice.is_zero()) {
        drew_all = false;  // not a chain of this lattice
        break;
      }
      lines.push_back(Subspace::line_through(random_vector_in(slice)));
    }
    if (!drew_all) break;
    try {
      ModelPoint candidate = encode_point(*lattice_, x, lines);
      if (candidate.chain == chain) return candidate;
    } catch (const ValidationError&) {
      // non-generic draw; retry
    }
  }
  throw SamplingError("failed to sample a generic model point for a chain of length " +
                      std::to_string(chain.size()));
}

DigitalizationReport certify_digitalization(const MatrixGroup& g, std::size_t samples_per_chain,
                                            std::uint64_t seed, const SubgroupBudget& budget,
                                            const std::function<void()>& checkpoint) {
  if (samples_per_chain == 0)
    throw ValidationError("certify_digitalization: samples_per_chain must be positive");
  const Arrangement arrangement = build_arrangement(g, budget);
  const IntersectionLattice lattice = intersection_lattice(arrangement);

  DigitalizationReport report;
  report.degree = g.degree();
  report.group_order = g.order();
  report.arrangement_size = arrangement.subspaces.size();
  report.lattice_size = lattice.size();
  report.samples_per_chain = samples_per_chain;
  report.seed = seed;

  ModelPointSampler sampler(lattice, seed);
  for (const auto& chain : lattice_chains(lattice)) {
    if (checkpoint) checkpoint();
    for (std::size_t s = 0; s < samples_per_chain; ++s) {
      StratumCertificate cert;
      cert.chain = chain;
      cert.sample = sampler.sample(chain);
      const MatrixGroup stab = stabilizer_of_model_point(g, cert.sample);
      cert.stabilizer_order = stab.order();
      cert.elementary_abelian_2 = is_elementary_abelian_2(stab);
      cert.invariant_span_full = invariant_line_span(stab).is_full();
      report.strata.push_back(std::move(cert));
    }
  }
  report.verdict =
      std::all_of(report.strata.begin(), report.strata.end(),
                  [](const StratumCertificate& c) { return c.passed(); });
  return report;
}

}  // namespace wonder
