#include "toric/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>

#include "toric/errors.hpp"
#include "toric/io.hpp"

namespace toric::cli {

namespace {

using io::Json;

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err), on_(std::getenv("TORIC_VERBOSE") != nullptr) {}
  void operator()(const std::string& message) const {
    if (on_) err_ << "toric: " << message << '\n';
  }

 private:
  std::ostream& err_;
  bool on_;
};

Json config_json(const RunConfig& c) {
  Json out;
  out["command"] = c.command;
  if (c.command == "local") {
    out["model"] = {c.k, c.l};
  } else {
    out["input"] = c.input;
  }
  if (c.command == "classify" || c.command == "torsor") out["n"] = c.n;
  out["seed"] = c.seed;
  out["samples"] = c.samples;
  out["h"] = c.h;
  return out;
}

// "0", or summands such as "Z^2 + Z/2 + R".
std::string group_text(const CohGroupPresentation& p) {
  std::vector<std::string> parts;
  if (p.free_rank) parts.push_back(p.free_rank == 1 ? "Z" : "Z^" + std::to_string(p.free_rank));
  for (const auto& t : p.torsion) parts.push_back("Z/" + t.str());
  if (p.real_dim) parts.push_back(p.real_dim == 1 ? "R" : "R^" + std::to_string(p.real_dim));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

struct Outcome {
  Json report;
  int code;
};

Outcome cmd_check(const RunConfig& c, const Log& log) {
  const io::Input input = io::load_input(c.input);
  const auto* domain = std::get_if<PolyhedralDomain>(&input);
  if (!domain) throw InputError("check needs a polyhedral domain, not an abstract complex");
  log("checking " + std::to_string(domain->cells().size()) + " cells");
  const auto strata = check_unimodular_local_embedding(*domain);
  Json list = Json::array();
  for (const auto& s : strata) list.push_back(io::to_json(s));
  const bool pass = all_unimodular(strata);
  Json report;
  report["ambient_dim"] = domain->ambient_dim();
  report["strata_count"] = strata.size();
  report["all_pass"] = pass;
  report["strata"] = std::move(list);
  return {std::move(report), pass ? kPass : kFailure};
}

// Picard group of the input, or nullopt (with a failing report) when a
// domain does not pass the embedding check.
std::optional<PicardGroup> classify_input(const RunConfig& c, const Log& log, Json& report) {
  const io::Input input = io::load_input(c.input);
  if (const auto* domain = std::get_if<PolyhedralDomain>(&input)) {
    const auto strata = check_unimodular_local_embedding(*domain);
    report["unimodular"] = all_unimodular(strata);
    if (!all_unimodular(strata)) {
      Json failing = Json::array();
      for (const auto& s : strata)
        if (!s.unimodular) failing.push_back(io::to_json(s));
      report["failing_strata"] = std::move(failing);
      return std::nullopt;
    }
    log("triangulating the domain");
    return picard_group(*domain, c.n);
  }
  return picard_group(std::get<SimplicialComplex>(input), c.n);
}

Outcome cmd_classify(const RunConfig& c, const Log& log) {
  Json report;
  const auto group = classify_input(c, log, report);
  if (!group) return {std::move(report), kFailure};
  const StmTorsor torsor(*group);
  report["picard"] = io::to_json(group->presentation());
  report["provenance"] = group->provenance();
  if (const auto count = torsor.count()) {
    report["stm_count"] = io::to_json(LatticeVector{*count})[0];
    if (auto all = group->elements(kExhaustiveLimit)) {
      Json classes = Json::array();
      for (const auto& p : *all) classes.push_back(io::to_json(act(p, torsor.base_point()).offset));
      report["classes"] = std::move(classes);
    }
  } else {
    report["stm_count"] = "infinite";
  }
  report["description"] = "torsor over " + group_text(group->presentation()) +
                          ", based at the class of the trivial bundle";
  return {std::move(report), kPass};
}

Outcome cmd_torsor(const RunConfig& c, const Log& log) {
  Json report;
  const auto group = classify_input(c, log, report);
  if (!group) return {std::move(report), kFailure};
  log("verifying torsor axioms");
  const TorsorReport r = verify_torsor(StmTorsor(*group), c.seed, c.samples);
  const Json axioms = io::to_json(r);
  for (const auto& [key, value] : axioms.items()) report[key] = value;
  return {std::move(report), r.all_pass() ? kPass : kFailure};
}

Outcome cmd_local(const RunConfig& c, const Log& log) {
  using namespace local;
  const NumericConfig config{c.seed, c.samples, c.h};
  const std::size_t n = c.k + c.l;
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> coordinate(-1, 1);
  Vector xi(static_cast<Eigen::Index>(n));
  for (auto& x : xi) x = coordinate(rng);

  Json report;
  bool pass = true;
  auto section = [&](const std::string& name, const LocalReport& r) {
    pass = pass && r.pass();
    report[name] = io::to_json(r);
  };
  const auto fixed = [](const Matrix& w) -> TwoForm { return [w](const Vector&) { return w; }; };

  Json xi_json = Json::array();
  for (auto x : xi) xi_json.push_back(x);
  report["xi"] = std::move(xi_json);

  log("moment convention");
  LocalReport moment;
  moment.add("moment_residual", moment_residual(ToricModel(c.k, c.l), xi, config),
             kFiniteDifferenceTolerance);
  if (c.k > 0) {
    // The unit chart constant must be caught.
    moment.add("miscalibrated_residual", moment_residual(ToricModel(c.k, c.l, 1.0), xi, config), 1e-2,
               /*upper_bound=*/false);
  }
  section("moment", moment);

  log("trivial bundle");
  section("trivial_bundle", trivial_bundle_checks(n, config));

  log("tensor reduction");
  const Matrix canonical = canonical_form(n);
  section("tensor_reduction", tensor_reduction_check(n, fixed(canonical), fixed(canonical), config));
  if (n >= 2)
    section("tensor_reduction_basic_term",
            tensor_reduction_check(n, fixed(canonical), fixed(canonical + dp_dp(n, 0, 1)), config));
  {
    const LocalReport broken =
        tensor_reduction_check(n, fixed(canonical), fixed(canonical + dp_dtheta(n, 0, 0)), config);
    Json control = io::to_json(broken);
    // Failing checks are the expected outcome here.
    control.erase("pass");
    control["detected"] = !broken.pass();
    pass = pass && !broken.pass();
    report["tensor_reduction_non_basic_control"] = std::move(control);
  }

  log("star chart");
  section("star_chart", star_chart_check(c.k, c.l, config));

  log("form decomposition");
  const Connection maurer_cartan = constant_connection(Matrix::Zero(static_cast<Eigen::Index>(n),
                                                                    static_cast<Eigen::Index>(n)));
  section("form_decomposition",
          form_decomposition_check(n, fixed(canonical), maurer_cartan, config,
                                   fixed(Matrix::Zero(canonical.rows(), canonical.cols()))));
  if (n >= 2)
    section("form_decomposition_basic_term",
            form_decomposition_check(n, fixed(canonical + dp_dp(n, 0, 1)), maurer_cartan, config,
                                     fixed(dp_dp(n, 0, 1))));

  report["pass"] = pass;
  return {std::move(report), pass ? kPass : kFailure};
}

std::pair<std::size_t, std::size_t> parse_model(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--model expects k,l");
  try {
    std::size_t used = 0;
    const long k = std::stol(text.substr(0, comma), &used);
    if (used != comma) throw InputError("");
    const std::string rest = text.substr(comma + 1);
    const long l = std::stol(rest, &used);
    if (used != rest.size() || k < 0 || l < 0 || k + l < 1) throw InputError("");
    return {static_cast<std::size_t>(k), static_cast<std::size_t>(l)};
  } catch (const std::exception&) {
    throw InputError("--model expects k,l with k, l >= 0 and k + l >= 1, got '" + text + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unimodular embeddings, toric bundle classes and local-model checks."};
  app.name("toric");
  app.require_subcommand(1);
  // --h is the finite-difference step, so help keeps only its long form.
  app.set_help_flag("--help", "print this help");
  RunConfig config;
  std::string model;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_option("--samples", config.samples, "sample count")->capture_default_str();
    sub->add_option("-o,--output", config.output, "write the report here instead of stdout");
  };
  CLI::App* check = app.add_subcommand("check", "stratum-by-stratum unimodularity of a domain");
  check->add_option("file", config.input, "domain JSON")->required();
  add_common(check);
  CLI::App* classify = app.add_subcommand("classify", "Picard group and manifold classes");
  classify->add_option("file", config.input, "domain or complex JSON")->required();
  classify->add_option("--n", config.n, "torus dimension")->required()->check(CLI::PositiveNumber);
  add_common(classify);
  CLI::App* torsor = app.add_subcommand("torsor", "verify the torsor axioms");
  torsor->add_option("file", config.input, "domain or complex JSON")->required();
  torsor->add_option("--n", config.n, "torus dimension")->required()->check(CLI::PositiveNumber);
  add_common(torsor);
  CLI::App* local = app.add_subcommand("local", "numeric local-model suite");
  local->set_help_flag("--help", "print this help");
  local->add_option("--model", model, "k,l")->required();
  local->add_option("--h", config.h, "finite-difference step")->capture_default_str()->check(CLI::PositiveNumber);
  add_common(local);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "toric: " << e.what() << '\n';
    return kInputError;
  }

  const Log log(err);
  Outcome outcome;
  try {
    if (check->parsed()) {
      config.command = "check";
      outcome = cmd_check(config, log);
    } else if (classify->parsed()) {
      config.command = "classify";
      outcome = cmd_classify(config, log);
    } else if (torsor->parsed()) {
      config.command = "torsor";
      outcome = cmd_torsor(config, log);
    } else {
      config.command = "local";
      std::tie(config.k, config.l) = parse_model(model);
      outcome = cmd_local(config, log);
    }
  } catch (const InputError& e) {
    err << "toric: " << e.what() << '\n';
    return kInputError;
  }

  Json report;
  report["config"] = config_json(config);
  for (auto& [key, value] : outcome.report.items()) report[key] = value;
  const std::string text = report.dump(2) + "\n";
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output);
    if (!(file << text)) {
      err << "toric: cannot write " << config.output << '\n';
      return kInputError;
    }
  }
  return outcome.code;
}

}  // namespace toric::cli
