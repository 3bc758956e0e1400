#include "permfix/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "permfix/characters.hpp"
#include "permfix/errors.hpp"
#include "permfix/moments.hpp"
#include "permfix/multiplicity.hpp"
#include "permfix/parallel.hpp"
#include "permfix/report.hpp"
#include "permfix/setpartitions.hpp"
#include "permfix/simulate.hpp"
#include "permfix/verify.hpp"

namespace permfix {

namespace {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string model;
  std::string format = "json";
  std::optional<int> threads;
  unsigned precision = kDefaultPrecisionBits;

  std::optional<int> n;
  int r = 1;
  int r_max = 4;
  std::optional<int> i;
  std::optional<double> c;
  std::optional<std::uint64_t> k;
  std::optional<std::string> x;
  std::optional<std::string> lambda;
  std::string alg = "skew";
  std::string samples = "1e6";
  std::uint64_t seed = 0;
  std::string suite = "all";
  bool exact = false;
  std::optional<int> t;
  std::optional<std::string> n_list;

  int resolved_threads = 1;
  std::uint64_t resolved_samples = 0;

  Json to_json() const {
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"command", command},   {"model", model.empty() ? Json(nullptr) : Json(model)},
                {"format", format},     {"threads", resolved_threads},
                {"precision", precision}, {"n", opt(n)},
                {"r", r},               {"r_max", r_max},
                {"i", opt(i)},          {"c", opt(c)},
                {"k", opt(k)},          {"x", opt(x)},
                {"lambda", opt(lambda)}, {"alg", alg},
                {"samples", resolved_samples}, {"seed", seed},
                {"suite", suite},       {"exact", exact},
                {"t", opt(t)},          {"n_list", opt(n_list)}};
  }
};

template <typename T>
const T& require(const std::optional<T>& v, const char* flag) {
  if (!v) throw ValidationError(std::string("missing required flag ") + flag);
  return *v;
}

std::uint64_t parse_sample_count(const std::string& text) {
  double value = 0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw ValidationError("bad sample count");
  } catch (const std::logic_error&) {
    throw ValidationError("bad sample count '" + text + "'");
  }
  if (!(value >= 1) || value > 1e15 || std::floor(value) != value) {
    throw ValidationError("sample count must be a positive integer");
  }
  return static_cast<std::uint64_t>(value);
}

Json envelope(const RunConfig& cfg, Json result) {
  return Json{{"schema_version", kSchemaVersion}, {"command", cfg.command}, {"config", cfg.to_json()},
              {"result", std::move(result)}};
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// ---- mult ----------------------------------------------------------------

int cmd_mult(const RunConfig& cfg, std::ostream& out) {
  const Partition lambda = parse_partition(require(cfg.lambda, "--lambda"));
  if (cfg.r < 0) throw ValidationError("--r must be >= 0");
  std::vector<std::pair<std::string, Json>> values;
  std::optional<BigInt> agreed;
  bool agree = true;
  auto record = [&](MultAlgorithm alg) {
    const BigInt v = multiplicity(lambda, cfg.r, alg);
    if (agreed && *agreed != v) agree = false;
    if (!agreed) agreed = v;
    values.emplace_back(std::string(to_string(alg)), to_json(v));
  };
  if (cfg.alg == "all") {
    record(MultAlgorithm::kSkew);
    record(MultAlgorithm::kUpDown);
    if (ding_applies(lambda, cfg.r)) {
      record(MultAlgorithm::kDing);
    } else {
      values.emplace_back("ding", Json("not applicable: needs 1 <= r <= n - lambda_2"));
    }
    if (lambda.size() <= kMultOracleMaxN) {
      record(MultAlgorithm::kOracle);
    } else {
      values.emplace_back("oracle", Json("not applicable: n > 7"));
    }
  } else if (cfg.alg == "skew") {
    record(MultAlgorithm::kSkew);
  } else if (cfg.alg == "updown") {
    record(MultAlgorithm::kUpDown);
  } else if (cfg.alg == "ding") {
    record(MultAlgorithm::kDing);
  } else if (cfg.alg == "oracle") {
    record(MultAlgorithm::kOracle);
  } else {
    throw ValidationError("unknown --alg '" + cfg.alg + "'");
  }

  if (cfg.format == "csv") {
    out << "algorithm,value\n";
    for (const auto& [name, v] : values) out << name << ',' << csv_field(v.get<std::string>()) << '\n';
  } else {
    Json by_alg = Json::object();
    for (const auto& [name, v] : values) by_alg[name] = v;
    emit_json(out, envelope(cfg, Json{{"lambda", to_json(lambda)},
                                      {"n", lambda.size()},
                                      {"r", cfg.r},
                                      {"value", to_json(*agreed)},
                                      {"algorithms", by_alg},
                                      {"agree", agree}}));
  }
  if (!agree) throw CrossCheckFailure("multiplicity algorithms disagree");
  return kExitOk;
}

// ---- moments -------------------------------------------------------------

std::uint64_t walk_steps(const RunConfig& cfg, int n, int i) {
  if (cfg.k && cfg.c) throw ValidationError("give either --k or --c, not both");
  if (cfg.k) return *cfg.k;
  if (cfg.c) return cutoff_steps(n, i, *cfg.c);
  throw ValidationError("walk needs --k or --c");
}

void emit_moment_report(const RunConfig& cfg, const MomentReport& report, std::ostream& out) {
  if (cfg.format == "csv") {
    out << "r,value,reference,formula\n";
    for (const MomentEntry& e : report.moments) {
      out << e.r << ',' << csv_value(e.value) << ',' << csv_value(e.reference) << ',' << csv_field(e.formula)
          << '\n';
    }
    return;
  }
  emit_json(out, envelope(cfg, to_json(report)));
}

int cmd_moments(const RunConfig& cfg, std::ostream& out) {
  const int n = require(cfg.n, "--n");
  if (n < 1) throw ValidationError("--n must be >= 1");
  if (cfg.r_max < 1) throw ValidationError("--r-max must be >= 1");
  MomentReport report;
  if (cfg.model == "commutator-random") {
    report = commutator_random_report(n, cfg.r_max);
  } else if (cfg.model == "commutator-fixed") {
    const CycleType x = parse_cycle_type(require(cfg.x, "--x"));
    if (x.n() != n) throw ValidationError("--x has size " + std::to_string(x.n()) + ", expected " + std::to_string(n));
    report = commutator_fixed_report(x, cfg.r_max);
  } else if (cfg.model == "walk") {
    const int i = require(cfg.i, "--i");
    if (i < 2 || i > n) throw ValidationError("walk needs 2 <= i <= n");
    report = walk_report(n, i, walk_steps(cfg, n, i), cfg.r_max, cfg.precision, cfg.exact, cfg.c);
  } else {
    throw ValidationError("unknown moments model '" + cfg.model + "'");
  }
  emit_moment_report(cfg, report, out);
  return kExitOk;
}

// ---- simulate ------------------------------------------------------------

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const int n = require(cfg.n, "--n");
  if (n < 1) throw ValidationError("--n must be >= 1");
  SimulationModel model;
  model.n = n;
  double poisson_mean = 1;
  // Exact moments r = 0..r_max where an engine exists.
  std::vector<Json> exact(static_cast<std::size_t>(cfg.r_max) + 1);
  std::vector<double> exact_d(static_cast<std::size_t>(cfg.r_max) + 1, NAN);
  if (cfg.model == "uniform") {
    model.kind = SimulationModel::Kind::kUniform;
    for (int r = 0; r <= cfg.r_max; ++r) {
      BigInt m = 0;
      for (int a = 0; a <= std::min(r, n); ++a) m += stirling(r, a);
      exact[static_cast<std::size_t>(r)] = to_json(Rational(m));
      exact_d[static_cast<std::size_t>(r)] = m.get_d();
    }
  } else if (cfg.model == "commutator") {
    model.kind = SimulationModel::Kind::kCommutator;
    if (cfg.x) {
      model.x = parse_cycle_type(*cfg.x);
      if (model.x->n() != n) throw ValidationError("--x size does not match --n");
    }
    const std::vector<Rational> m =
        model.x ? commutator_fixed_moments(*model.x, cfg.r_max) : commutator_random_moments(n, cfg.r_max);
    for (int r = 0; r <= cfg.r_max; ++r) {
      exact[static_cast<std::size_t>(r)] = to_json(m[static_cast<std::size_t>(r)]);
      exact_d[static_cast<std::size_t>(r)] = m[static_cast<std::size_t>(r)].get_d();
    }
  } else if (cfg.model == "walk") {
    model.kind = SimulationModel::Kind::kWalk;
    model.i = require(cfg.i, "--i");
    if (model.i < 2 || model.i > n) throw ValidationError("walk needs 2 <= i <= n");
    model.k = walk_steps(cfg, n, model.i);
    const double c_eff = cfg.c ? *cfg.c : static_cast<double>(model.k) / n - std::log(static_cast<double>(n)) / model.i;
    poisson_mean = 1 + std::exp(-model.i * c_eff);
    const std::vector<Real> m = walk_moments(n, model.i, model.k, cfg.r_max, cfg.precision);
    for (int r = 0; r <= cfg.r_max; ++r) {
      exact[static_cast<std::size_t>(r)] = to_json(m[static_cast<std::size_t>(r)]);
      exact_d[static_cast<std::size_t>(r)] = m[static_cast<std::size_t>(r)].to_double();
    }
  } else {
    throw ValidationError("unknown --model '" + cfg.model + "'");
  }

  const EmpiricalDistribution dist = simulate_fixed_points(model, cfg.resolved_samples, cfg.seed);
  const double tv = tv_to_poisson(dist, poisson_mean);

  if (cfg.format == "csv") {
    out << "fixed_points,count\n";
    for (std::size_t j = 0; j < dist.histogram.size(); ++j) out << j << ',' << dist.histogram[j] << '\n';
    return kExitOk;
  }
  Json moments = Json::array();
  for (int r = 1; r <= cfg.r_max; ++r) {
    const double emp = dist.moment(r);
    const double se = dist.moment_stderr(r);
    const double ex = exact_d[static_cast<std::size_t>(r)];
    Json row{{"r", r}, {"empirical", emp}, {"stderr", se}, {"exact", exact[static_cast<std::size_t>(r)]}};
    row["z"] = se > 0 ? Json((emp - ex) / se) : Json(nullptr);
    row["within_4_sigma"] = se > 0 ? std::abs(emp - ex) <= 4 * se : emp == ex;
    moments.push_back(std::move(row));
  }
  emit_json(out, envelope(cfg, Json{{"model", dist.model},
                                    {"samples", dist.samples},
                                    {"seed", dist.seed},
                                    {"histogram", dist.histogram},
                                    {"moments", moments},
                                    {"poisson_mean", poisson_mean},
                                    {"tv_to_poisson", tv}}));
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const VerifySuite suite = parse_verify_suite(cfg.suite);
  if (cfg.format == "csv") out << "suite,gate,passed,seconds\n";
  int failed = 0;
  int total = 0;
  run_verify(suite, [&](const GateResult& g) {
    ++total;
    if (!g.passed) ++failed;
    err << (g.passed ? "[pass] " : "[FAIL] ") << g.suite << '/' << g.gate << '\n';
    if (cfg.format == "csv") {
      out << g.suite << ',' << g.gate << ',' << (g.passed ? "true" : "false") << ',' << g.seconds << '\n';
    } else {
      out << Json{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"suite", g.suite},
                  {"gate", g.gate},       {"passed", g.passed},          {"seconds", g.seconds},
                  {"detail", g.detail}}
                 .dump()
          << '\n';
    }
    out.flush();
  });
  if (cfg.format != "csv") {
    out << Json{{"schema_version", kSchemaVersion},
                {"command", "verify"},
                {"config", cfg.to_json()},
                {"summary", {{"gates", total}, {"failed", failed}, {"passed", failed == 0}}}}
               .dump()
        << '\n';
  }
  return failed == 0 ? kExitOk : kExitGateFailure;
}

// ---- ratio ---------------------------------------------------------------

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw ValidationError("bad integer list '" + text + "'");
    }
  }
  return out;
}

int cmd_ratio(const RunConfig& cfg, std::ostream& out) {
  const int i = require(cfg.i, "--i");
  if (cfg.lambda) {
    const Partition lambda = parse_partition(*cfg.lambda);
    if (i < 2 || i > lambda.size()) throw ValidationError("--i must satisfy 2 <= i <= |lambda|");
    const Rational ratio = char_ratio_icycle(lambda, i);
    const BigInt d = dim(lambda);
    const Rational chi = ratio * Rational(d);
    if (cfg.format == "csv") {
      out << "lambda,i,ratio,character,dim\n"
          << csv_field(lambda.to_string()) << ',' << i << ',' << to_string(ratio) << ',' << to_string(chi) << ','
          << d.get_str() << '\n';
      return kExitOk;
    }
    emit_json(out, envelope(cfg, Json{{"lambda", to_json(lambda)},
                                      {"i", i},
                                      {"ratio", to_json(ratio)},
                                      {"character", chi.get_num().get_str()},
                                      {"dim", d.get_str()}}));
    return kExitOk;
  }
  const int t = require(cfg.t, "--t (or --lambda)");
  if (t < 0 || i < 2) throw ValidationError("need t >= 0 and i >= 2");
  const std::vector<int> grid = parse_int_list(cfg.n_list.value_or("200,400,800,1600,3200"));
  for (int n : grid) {
    if (n < t + i + 2) throw ValidationError("every n must be >= t + i + 2");
  }
  const RatioAsymptoticsReport rep = verify_ratio_asymptotics(i, t, grid);
  if (cfg.format == "csv") {
    out << "n,worst_shape,ratio,scaled_error\n";
    for (const auto& row : rep.rows) {
      out << row.n << ',' << csv_field(row.worst_shape.to_string()) << ',' << to_string(row.worst_ratio) << ','
          << to_string(row.scaled_error) << '\n';
    }
    return kExitOk;
  }
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"worst_shape", to_json(row.worst_shape)},
                        {"ratio", to_json(row.worst_ratio)},
                        {"scaled_error", to_json(row.scaled_error)},
                        {"scaled_error_value", row.scaled_error.get_d()}});
  }
  emit_json(out, envelope(cfg, Json{{"i", i},
                                    {"t", t},
                                    {"rows", rows},
                                    {"max_scaled_error", rep.max_scaled_error},
                                    {"non_increasing", rep.non_increasing}}));
  return kExitOk;
}

// ---- dist ----------------------------------------------------------------

int cmd_dist(const RunConfig& cfg, std::ostream& out) {
  const int n = require(cfg.n, "--n");
  ExactDistribution dist;
  Json params{{"n", n}};
  if (cfg.model == "walk") {
    const int i = require(cfg.i, "--i");
    const std::uint64_t k = require(cfg.k, "--k");
    if (i < 2 || i > n) throw ValidationError("walk needs 2 <= i <= n");
    dist = walk_exact_distribution(n, i, k);
    params["i"] = i;
    params["k"] = k;
  } else if (cfg.model == "commutator") {
    std::optional<CycleType> x;
    if (cfg.x) {
      x = parse_cycle_type(*cfg.x);
      if (x->n() != n) throw ValidationError("--x size does not match --n");
      params["x"] = to_json(x->cycles());
    }
    dist = enumerate_commutator_distribution(n, x);
  } else {
    throw ValidationError("unknown dist model '" + cfg.model + "'");
  }
  if (cfg.format == "csv") {
    out << "fixed_points,probability\n";
    for (std::size_t j = 0; j < dist.prob.size(); ++j) out << j << ',' << to_string(dist.prob[j]) << '\n';
    return kExitOk;
  }
  Json moments = Json::array();
  for (int r = 1; r <= cfg.r_max; ++r) moments.push_back(Json{{"r", r}, {"value", to_json(dist.moment(r))}});
  Json result = to_json(dist);
  result["model"] = cfg.model;
  result["params"] = params;
  result["moments"] = moments;
  emit_json(out, envelope(cfg, result));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact moments and Monte Carlo checks for fixed points of non-uniform permutations", "permfix"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads (default: PERMFIX_THREADS or all cores)");
  app.add_option("--precision", cfg.precision, "Bits of floating precision for real-valued moments")
      ->check(CLI::Range(kMinPrecisionBits, 65536u));

  auto* mult = app.add_subcommand("mult", "Multiplicity m_{lambda,r} of lambda in the rth tensor power");
  mult->add_option("--lambda", cfg.lambda, "Partition, e.g. 4,1 or 3^2")->required();
  mult->add_option("--r", cfg.r, "Tensor power");
  mult->add_option("--alg", cfg.alg, "skew | updown | ding | oracle | all")
      ->check(CLI::IsMember({"skew", "updown", "ding", "oracle", "all"}));

  auto* moments = app.add_subcommand("moments", "Exact moments of the number of fixed points");
  moments->add_option("model", cfg.model, "commutator-random | commutator-fixed | walk")
      ->required()
      ->check(CLI::IsMember({"commutator-random", "commutator-fixed", "walk"}));
  moments->add_option("--n", cfg.n, "Degree of the symmetric group");
  moments->add_option("--r-max", cfg.r_max, "Highest moment");
  moments->add_option("--x", cfg.x, "Cycle type of the fixed element, e.g. 8 or 2^4");
  moments->add_option("--i", cfg.i, "Cycle length of each walk step");
  moments->add_option("--k", cfg.k, "Number of walk steps");
  moments->add_option("--c", cfg.c, "Cutoff offset: k = round(n ln n / i + c n)");
  moments->add_flag("--exact", cfg.exact, "Exact rational walk moments");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo histogram of fixed points");
  simulate->add_option("--model", cfg.model, "uniform | commutator | walk")
      ->required()
      ->check(CLI::IsMember({"uniform", "commutator", "walk"}));
  simulate->add_option("--n", cfg.n, "Degree");
  simulate->add_option("--x", cfg.x, "Fixed cycle type for the commutator (default: uniform x)");
  simulate->add_option("--i", cfg.i, "Cycle length of each walk step");
  simulate->add_option("--k", cfg.k, "Number of walk steps");
  simulate->add_option("--c", cfg.c, "Cutoff offset");
  simulate->add_option("--samples", cfg.samples, "Sample count, e.g. 1e6");
  simulate->add_option("--seed", cfg.seed, "64-bit seed");
  simulate->add_option("--r-max", cfg.r_max, "Highest moment to report");

  auto* verify = app.add_subcommand("verify", "Run verification gates");
  verify->add_option("suite", cfg.suite, "identities | asymptotics | oracles | all")
      ->check(CLI::IsMember({"identities", "asymptotics", "oracles", "all"}));

  auto* ratio = app.add_subcommand("ratio", "Character ratio on an i-cycle");
  ratio->add_option("--lambda", cfg.lambda, "Partition");
  ratio->add_option("--i", cfg.i, "Cycle length")->required();
  ratio->add_option("--t", cfg.t, "Without --lambda: scan all lambda with lambda_1 = n - t");
  ratio->add_option("--n-list", cfg.n_list, "Comma-separated n values for the scan");

  auto* dist = app.add_subcommand("dist", "Exact fixed-point distribution at small n");
  dist->add_option("model", cfg.model, "walk | commutator")->required()->check(CLI::IsMember({"walk", "commutator"}));
  dist->add_option("--n", cfg.n, "Degree");
  dist->add_option("--i", cfg.i, "Cycle length");
  dist->add_option("--k", cfg.k, "Number of walk steps");
  dist->add_option("--x", cfg.x, "Fixed cycle type for the commutator");
  dist->add_option("--r-max", cfg.r_max, "Highest moment to report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    cfg.resolved_threads = resolve_thread_count(cfg.threads);
    set_thread_count(cfg.resolved_threads);
    for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (cfg.command == "simulate") cfg.resolved_samples = parse_sample_count(cfg.samples);
    if (cfg.command == "mult") return cmd_mult(cfg, out);
    if (cfg.command == "moments") return cmd_moments(cfg, out);
    if (cfg.command == "simulate") return cmd_simulate(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "ratio") return cmd_ratio(cfg, out);
    if (cfg.command == "dist") return cmd_dist(cfg, out);
    err << "unknown command\n";
    return kExitValidation;
  } catch (const CrossCheckFailure& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const GuardViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace permfix
