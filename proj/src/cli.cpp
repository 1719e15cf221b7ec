#include "wonder/cli.hpp"

#include "wonder/groupfile.hpp"
#include "wonder/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <sstream>

namespace wonder {

namespace {

struct Budgets {
  std::size_t max_group_order = kDefaultElementCap;
  std::size_t max_subgroups = kDefaultSubgroupCap;
  double timeout_seconds = 0.0;

  SubgroupBudget subgroup_budget() const { return SubgroupBudget{max_subgroups}; }
};

class Deadline {
public:
  explicit Deadline(double seconds)
      : limit_(seconds), start_(std::chrono::steady_clock::now()) {}

  void check() const {
    if (limit_ <= 0) return;
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > limit_)
      throw BudgetError("timeout budget of " + std::to_string(limit_) + "s exceeded");
  }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  double limit_;
  std::chrono::steady_clock::time_point start_;
};

Json envelope(const std::string& command, const std::string& claim, Json inputs, Json payload,
              bool verdict) {
  Json e;
  e["tool"] = "wonder";
  e["version"] = kToolVersion;
  e["command"] = command;
  if (!claim.empty()) e["claim"] = claim;
  e["inputs"] = std::move(inputs);
  e["payload"] = std::move(payload);
  e["verdict"] = verdict ? "pass" : "fail";
  return e;
}

// JSON reports are byte-identical for identical inputs and seed; the elapsed
// line is human-output only.
void emit(std::ostream& out, bool as_json, const Json& report, const std::string& human,
          const Deadline& deadline) {
  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    out << human;
    std::ostringstream elapsed;
    elapsed.setf(std::ios::fixed);
    elapsed.precision(2);
    elapsed << deadline.elapsed_seconds();
    out << "elapsed: " << elapsed.str() << "s\n";
  }
}

QVector parse_vector_arg(const std::string& text) {
  QVector out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) throw ValidationError("empty coordinate in '" + text + "'");
    out.push_back(parse_rational(token));
  }
  if (out.empty()) throw ValidationError("empty vector argument");
  return out;
}

std::vector<QVector> parse_lines_args(const std::vector<std::string>& specs) {
  std::vector<QVector> out;
  for (const std::string& spec : specs) {
    std::string part;
    std::istringstream in(spec);
    while (std::getline(in, part, ';'))
      if (!part.empty()) out.push_back(parse_vector_arg(part));
  }
  return out;
}

std::string verdict_word(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_group_info(const std::string& file, const Budgets& budgets, bool as_json,
                   std::ostream& out) {
  const Deadline deadline(budgets.timeout_seconds);
  const GroupSpec spec = load_group_spec(file);
  const MatrixGroup group = spec.close(budgets.max_group_order);
  deadline.check();
  const bool effective = action_is_effective(group);
  const auto subs = subgroups(group, budgets.subgroup_budget());
  deadline.check();

  Json payload;
  payload["name"] = spec.name;
  payload["degree"] = group.degree();
  payload["order"] = group.order();
  payload["generator_count"] = group.generators().size();
  payload["subgroup_count"] = subs.size();
  payload["effective"] = effective;
  payload["elementary_abelian_2"] = is_elementary_abelian_2(group);

  std::ostringstream human;
  human << "group " << spec.name << " (degree " << group.degree() << ")\n"
        << "  order:                " << group.order() << "\n"
        << "  generators:           " << group.generators().size() << "\n"
        << "  subgroups:            " << subs.size() << "\n"
        << "  effective:            " << (effective ? "yes" : "no (warning)") << "\n"
        << "  elementary abelian 2: " << (is_elementary_abelian_2(group) ? "yes" : "no") << "\n";

  Json inputs;
  inputs["file"] = file;
  emit(out, as_json, envelope("group-info", "", inputs, payload, true), human.str(), deadline);
  return 0;
}

int cmd_arrangement(const std::string& file, const Budgets& budgets, bool as_json,
                    std::ostream& out) {
  const Deadline deadline(budgets.timeout_seconds);
  const GroupSpec spec = load_group_spec(file);
  const MatrixGroup group = spec.close(budgets.max_group_order);
  deadline.check();
  const Arrangement arrangement = build_arrangement(group, budgets.subgroup_budget());
  deadline.check();
  const IntersectionLattice lattice = intersection_lattice(arrangement);
  deadline.check();

  Json payload;
  payload["name"] = spec.name;
  payload["degree"] = group.degree();
  payload["group_order"] = group.order();
  payload["subspace_count"] = arrangement.subspaces.size();
  Json spaces = Json::array();
  for (const Subspace& s : arrangement.subspaces) spaces.push_back(json_of(s));
  payload["subspaces"] = spaces;
  Json census;
  {
    std::map<std::size_t, std::size_t> by_codim;
    for (const Subspace& s : arrangement.subspaces) ++by_codim[s.codim()];
    for (auto [codim, count] : by_codim) census["codim_" + std::to_string(codim)] = count;
  }
  payload["census_by_codim"] = census;
  payload["lattice"] = json_of(lattice);

  std::ostringstream human;
  human << "arrangement A(" << spec.name << ") in R^" << group.degree() << "\n"
        << "  proper invariant-line spans: " << arrangement.subspaces.size() << "\n";
  for (const Subspace& s : arrangement.subspaces)
    human << "    [codim " << s.codim() << "] " << describe_subspace(s) << "\n";
  human << "  intersection lattice: " << lattice.size() << " elements\n";
  for (const Subspace& e : lattice.elements())
    human << "    " << describe_subspace(e) << "\n";

  Json inputs;
  inputs["file"] = file;
  emit(out, as_json, envelope("arrangement", "", inputs, payload, true), human.str(), deadline);
  return 0;
}

int cmd_digitalize(const std::string& file, std::size_t samples, std::uint64_t seed,
                   const Budgets& budgets, bool as_json, std::ostream& out) {
  const Deadline deadline(budgets.timeout_seconds);
  const GroupSpec spec = load_group_spec(file);
  const MatrixGroup group = spec.close(budgets.max_group_order);
  deadline.check();
  const DigitalizationReport report = certify_digitalization(
      group, samples, seed, budgets.subgroup_budget(), [&] { deadline.check(); });

  Json payload = json_of(report);
  payload["name"] = spec.name;

  std::ostringstream human;
  human << "digitalization certificate for " << spec.name << " (order " << group.order()
        << ", degree " << group.degree() << ")\n"
        << "  arrangement size: " << report.arrangement_size << "; lattice size: "
        << report.lattice_size << "; samples/chain: " << report.samples_per_chain
        << "; seed: " << report.seed << "\n";
  for (const StratumCertificate& cert : report.strata)
    human << "  stratum " << describe_chain(cert.chain) << ": stabilizer order "
          << cert.stabilizer_order << ", involutions-only "
          << (cert.elementary_abelian_2 ? "yes" : "NO") << ", invariant span full "
          << (cert.invariant_span_full ? "yes" : "NO") << "\n";
  human << "verdict: " << verdict_word(report.verdict) << "\n";

  Json inputs;
  inputs["file"] = file;
  inputs["samples"] = samples;
  inputs["seed"] = seed;
  emit(out, as_json,
       envelope("digitalize", "stabilizers-elementary-abelian-2", inputs, payload,
                report.verdict),
       human.str(), deadline);
  return report.verdict ? 0 : 1;
}

int cmd_verify_asn(std::size_t n, const Budgets& budgets, bool as_json, std::ostream& out) {
  const Deadline deadline(budgets.timeout_seconds);
  if (n < 2) throw ValidationError("verify-asn requires n >= 2");
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  if (factorial > budgets.max_group_order)
    throw BudgetError("S_" + std::to_string(n) + " exceeds --max-group-order");
  const MatrixGroup sym = MatrixGroup::symmetric(n);
  deadline.check();
  const Arrangement arrangement = build_arrangement(sym, budgets.subgroup_budget());
  deadline.check();
  const Arrangement truncation = rank2_truncation(n);
  const bool equal = arrangements_equal_as_lattices(arrangement, truncation);
  deadline.check();

  const IntersectionLattice la = intersection_lattice(arrangement);
  const IntersectionLattice lb = intersection_lattice(truncation);

  Json payload;
  payload["n"] = n;
  payload["arrangement_subspaces"] = arrangement.subspaces.size();
  payload["truncation_subspaces"] = truncation.subspaces.size();
  payload["arrangement_lattice_size"] = la.size();
  payload["truncation_lattice_size"] = lb.size();
  payload["lattices_equal"] = equal;
  Json spans = Json::array();
  for (const Subspace& s : arrangement.subspaces) spans.push_back(json_of(s));
  payload["arrangement"] = spans;
  if (!equal) {
    // Evidence: elements on one side of the lattice only.
    Json missing = Json::array(), extra = Json::array();
    for (const Subspace& e : lb.elements())
      if (!la.has_element(e)) missing.push_back(json_of(e));
    for (const Subspace& e : la.elements())
      if (!lb.has_element(e)) extra.push_back(json_of(e));
    payload["missing_from_arrangement_lattice"] = missing;
    payload["extra_in_arrangement_lattice"] = extra;
  }

  std::ostringstream human;
  human << "arrangement of S_" << n << " vs rank-2 braid truncation\n"
        << "  raw subspaces: " << arrangement.subspaces.size() << " vs "
        << truncation.subspaces.size() << "\n"
        << "  lattice sizes: " << la.size() << " vs " << lb.size() << "\n"
        << "  lattices equal: " << (equal ? "yes" : "no") << "\n"
        << "verdict: " << verdict_word(equal) << "\n";

  Json inputs;
  inputs["n"] = n;
  emit(out, as_json,
       envelope("verify-asn", "arrangement-lattice-equals-rank2-braid-truncation", inputs,
                payload, equal),
       human.str(), deadline);
  return equal ? 0 : 1;
}

int cmd_verify_lpn(std::size_t n, const Budgets& budgets, bool as_json, std::ostream& out) {
  const Deadline deadline(budgets.timeout_seconds);
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  if (factorial > budgets.max_group_order)
    throw BudgetError("S_" + std::to_string(n) + " exceeds --max-group-order");
  const ProjectiveStratificationReport report = verify_projective_stratification(
      n, budgets.subgroup_budget(), [&] { deadline.check(); });

  const Json payload = json_of(report);

  std::ostringstream human;
  human << "projective stratification of RP^" << (n - 1) << " under S_" << n << "\n"
        << "  realization witnesses: " << report.witnesses.size() << " (all ok: "
        << (report.realization_ok ? "yes" : "no") << ")\n"
        << "  census rows: " << report.census.size() << " (all braid or whole space: "
        << (report.classification_ok ? "yes" : "no") << ")\n"
        << "  nontrivial stratum carriers: " << report.nontrivial_carriers.size() << "\n";
  for (const Subspace& s : report.nontrivial_carriers)
    human << "    " << describe_subspace(s) << "\n";
  human << "  rank-2 truncation subspaces: " << report.expected_carriers.size() << "\n"
        << "  carrier sets equal: " << (report.carriers_match ? "yes" : "no") << "\n"
        << "verdict: " << verdict_word(report.verdict) << "\n";

  Json inputs;
  inputs["n"] = n;
  emit(out, as_json,
       envelope("verify-lpn", "projective-stratification-equals-rank2-braid-truncation",
                inputs, payload, report.verdict),
       human.str(), deadline);
  return report.verdict ? 0 : 1;
}

int cmd_encode(const std::string& file, const std::string& point_arg,
               const std::vector<std::string>& lines_args, const Budgets& budgets, bool as_json,
               std::ostream& out) {
  const Deadline deadline(budgets.timeout_seconds);
  const GroupSpec spec = load_group_spec(file);
  const MatrixGroup group = spec.close(budgets.max_group_order);
  deadline.check();
  const Arrangement arrangement = build_arrangement(group, budgets.subgroup_budget());
  const IntersectionLattice lattice = intersection_lattice(arrangement);
  deadline.check();

  const QVector x = parse_vector_arg(point_arg);
  if (x.size() != group.degree())
    throw ValidationError("--point has " + std::to_string(x.size()) +
                          " coordinates, expected " + std::to_string(group.degree()));
  std::vector<Subspace> lines;
  for (const QVector& g : parse_lines_args(lines_args)) {
    if (g.size() != group.degree())
      throw ValidationError("--lines entry has wrong dimension");
    lines.push_back(Subspace::line_through(g));
  }

  const ModelPoint omega = encode_point(lattice, x, lines);
  const MatrixGroup stab = stabilizer_of_model_point(group, omega);

  Json payload;
  payload["name"] = spec.name;
  payload["model_point"] = json_of(omega);
  payload["stratum_chain_length"] = omega.chain.size();
  payload["stabilizer_order"] = stab.order();
  payload["stabilizer_elementary_abelian_2"] = is_elementary_abelian_2(stab);
  Json coords;
  {
    Json rows = Json::array();
    for (const Subspace& h : lattice.elements()) {
      if (h.is_full()) continue;
      Json row;
      row["element"] = json_of(h);
      row["coordinate"] = json_of(recover_coordinate(omega, lattice, h).line_generator());
      rows.push_back(row);
    }
    coords = rows;
  }
  payload["coordinates"] = coords;

  std::ostringstream human;
  human << "model point over A(" << spec.name << ")\n"
        << "  x = " << format_vector(omega.point) << "\n"
        << "  open stratum: " << describe_chain(omega.chain) << "\n";
  for (std::size_t i = 0; i < omega.lines.size(); ++i)
    human << "  line " << (i + 1) << ": " << format_vector(omega.lines[i].line_generator())
          << "\n";
  human << "  stabilizer order: " << stab.order() << " (involutions only: "
        << (is_elementary_abelian_2(stab) ? "yes" : "no") << ")\n"
        << "verdict: PASS\n";

  Json inputs;
  inputs["file"] = file;
  inputs["point"] = point_arg;
  inputs["lines"] = lines_args;
  emit(out, as_json, envelope("encode", "model-point-encoding", inputs, payload, true),
       human.str(), deadline);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arrangement models and digitalization certificates for finite "
               "orthogonal group actions"};
  app.name("wonder");
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand
  app.set_version_flag("--version", kToolVersion);

  bool as_json = false;
  Budgets budgets;
  app.add_flag("--json", as_json, "emit the machine-readable JSON report");
  app.add_option("--max-group-order", budgets.max_group_order,
                 "cap on the group closure size")
      ->capture_default_str();
  app.add_option("--max-subgroups", budgets.max_subgroups,
                 "cap on the subgroup enumeration")
      ->capture_default_str();
  app.add_option("--timeout", budgets.timeout_seconds,
                 "wall-clock budget in seconds (0 = unlimited)")
      ->capture_default_str();

  std::string file;
  std::size_t samples = 2;
  std::uint64_t seed = 1;
  std::size_t n = 4;
  std::string point_arg;
  std::vector<std::string> lines_args;

  CLI::App* info = app.add_subcommand("group-info", "order, subgroup count and validation");
  info->add_option("file", file, "group JSON file")->required();

  CLI::App* arr = app.add_subcommand(
      "arrangement", "invariant-line-span arrangement and its intersection lattice");
  arr->add_option("file", file, "group JSON file")->required();

  CLI::App* dig = app.add_subcommand(
      "digitalize", "sample every stratum and certify the stabilizer properties");
  dig->add_option("file", file, "group JSON file")->required();
  dig->add_option("--samples", samples, "sample points per lattice chain")
      ->capture_default_str();
  dig->add_option("--seed", seed, "pseudorandom seed")->capture_default_str();

  CLI::App* asn = app.add_subcommand(
      "verify-asn", "check A(S_n) against the rank-2 braid truncation (lattice equality)");
  asn->add_option("--n", n, "degree of the symmetric group")->required();

  CLI::App* lpn = app.add_subcommand(
      "verify-lpn", "check the projective stratification against the rank-2 braid truncation");
  lpn->add_option("--n", n, "degree of the symmetric group")->required();

  CLI::App* enc = app.add_subcommand(
      "encode", "validate a point/line encoding, report its stratum and stabilizer");
  enc->add_option("file", file, "group JSON file")->required();
  enc->add_option("--point", point_arg, "comma-separated rational coordinates")->required();
  enc->add_option("--lines", lines_args,
                  "semicolon-separated list of comma-separated line generators");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(info)) return cmd_group_info(file, budgets, as_json, out);
    if (app.got_subcommand(arr)) return cmd_arrangement(file, budgets, as_json, out);
    if (app.got_subcommand(dig))
      return cmd_digitalize(file, samples, seed, budgets, as_json, out);
    if (app.got_subcommand(asn)) return cmd_verify_asn(n, budgets, as_json, out);
    if (app.got_subcommand(lpn)) return cmd_verify_lpn(n, budgets, as_json, out);
    if (app.got_subcommand(enc))
      return cmd_encode(file, point_arg, lines_args, budgets, as_json, out);
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SamplingError& e) {
    err << "sampling error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace wonder
