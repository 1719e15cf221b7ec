#include "wonder/groupfile.hpp"

#include "wonder/rational.hpp"

#include <fstream>

namespace wonder {

namespace {

Rational entry_to_rational(const nlohmann::json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ValidationError("matrix entry must be a rational string or an integer");
}

QMatrix parse_generator(const nlohmann::json& gen, std::size_t degree, std::size_t position) {
  const std::string where = "generator " + std::to_string(position);
  if (!gen.is_object()) throw ValidationError(where + ": expected an object");
  if (gen.contains("perm")) {
    const auto& cycles_json = gen.at("perm");
    if (!cycles_json.is_array()) throw ValidationError(where + ": 'perm' must be a cycle list");
    std::vector<std::vector<std::size_t>> cycles;
    for (const auto& cyc : cycles_json) {
      if (!cyc.is_array()) throw ValidationError(where + ": each cycle must be an array");
      std::vector<std::size_t> cycle;
      for (const auto& m : cyc) {
        if (!m.is_number_integer() || m.get<long long>() < 1)
          throw ValidationError(where + ": cycle entries must be positive integers");
        cycle.push_back(m.get<std::size_t>());
      }
      cycles.push_back(std::move(cycle));
    }
    try {
      return permutation_matrix(permutation_from_cycles(degree, cycles));
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  if (gen.contains("matrix")) {
    const auto& rows_json = gen.at("matrix");
    if (!rows_json.is_array()) throw ValidationError(where + ": 'matrix' must be a row list");
    std::vector<QVector> rows;
    for (const auto& row_json : rows_json) {
      if (!row_json.is_array()) throw ValidationError(where + ": each row must be an array");
      QVector row;
      for (const auto& e : row_json) row.push_back(entry_to_rational(e));
      rows.push_back(std::move(row));
    }
    if (rows.size() != degree)
      throw ValidationError(where + ": matrix must have exactly 'degree' rows");
    for (const auto& r : rows)
      if (r.size() != degree)
        throw ValidationError(where + ": matrix must have exactly 'degree' columns");
    return QMatrix::from_rows(rows);
  }
  throw ValidationError(where + ": expected a 'perm' or 'matrix' key");
}

}  // namespace

GroupSpec parse_group_spec(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("group file: top level must be an object");
  if (doc.contains("schema")) {
    if (!doc.at("schema").is_number_integer() || doc.at("schema").get<int>() != 1)
      throw ValidationError("group file: unsupported schema version (expected 1)");
  }
  GroupSpec spec;
  spec.name = doc.value("name", std::string("unnamed"));
  if (!doc.contains("degree") || !doc.at("degree").is_number_integer() ||
      doc.at("degree").get<long long>() < 1)
    throw ValidationError("group file: 'degree' must be a positive integer");
  spec.degree = doc.at("degree").get<std::size_t>();
  if (doc.contains("generators")) {
    const auto& gens = doc.at("generators");
    if (!gens.is_array()) throw ValidationError("group file: 'generators' must be an array");
    for (std::size_t i = 0; i < gens.size(); ++i)
      spec.generator_matrices.push_back(parse_generator(gens[i], spec.degree, i + 1));
  }
  return spec;
}

GroupSpec load_group_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open group file: " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("group file " + path.string() + ": " + e.what());
  }
  GroupSpec spec = parse_group_spec(doc);
  if (spec.name == "unnamed") spec.name = path.stem().string();
  return spec;
}

MatrixGroup GroupSpec::close(std::size_t element_cap) const {
  if (generator_matrices.empty()) return MatrixGroup::trivial(degree);
  return MatrixGroup::from_generators(generator_matrices, element_cap);
}

bool action_is_effective(const MatrixGroup& g) {
  std::size_t identities = 0;
  for (const QMatrix& e : g.elements())
    if (e.is_identity()) ++identities;
  return identities == 1;
}

}  // namespace wonder
