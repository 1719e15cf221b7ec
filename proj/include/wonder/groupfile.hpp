#pragma once

#include "wonder/matgroup.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace wonder {

/// Parsed group description: a name, a degree and generator matrices, each
/// given either as disjoint 1-based cycles or as a rational matrix.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<QMatrix> generator_matrices;

  /// Closure of the generators; zero generators denote the trivial group of
  /// the declared degree.
  MatrixGroup close(std::size_t element_cap = kDefaultElementCap) const;
};

/// Parses the versioned group JSON ("schema": 1). Validates the schema
/// version, the degree, cycle ranges/disjointness and matrix shapes; matrix
/// entries are rational strings like "1/2" (plain JSON integers are also
/// accepted).
GroupSpec parse_group_spec(const nlohmann::json& doc);

GroupSpec load_group_spec(const std::filesystem::path& path);

/// True iff only the identity element acts as the identity map. Holds for
/// every deduplicated matrix group; kept as an explicit load-time check.
bool action_is_effective(const MatrixGroup& g);

}  // namespace wonder
