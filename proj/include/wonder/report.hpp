#pragma once

#include "wonder/arrangement.hpp"
#include "wonder/model.hpp"
#include "wonder/projective.hpp"

#include "json.hpp"

#include <string>

namespace wonder {

/// Insertion-ordered JSON so reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

Json json_of(const Rational& value);
Json json_of(const QVector& v);
Json json_of(const QMatrix& m);
/// Subspace as {"dim", "basis"}; a braid space additionally carries its
/// partition label.
Json json_of(const Subspace& s);
Json json_of(const IntersectionLattice& lattice);
Json json_of(const ModelPoint& omega);
Json json_of(const StratumCertificate& cert);
Json json_of(const DigitalizationReport& report);
Json json_of(const FixedComponent& comp);
Json json_of(const ProjectiveStratificationReport& report);

std::string describe_subspace(const Subspace& s);
std::string describe_chain(const std::vector<Subspace>& chain);

}  // namespace wonder
