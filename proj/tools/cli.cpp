#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lozenge/binomial_matrix.hpp"
#include "lozenge/exactnum.hpp"
#include "lozenge/kernel.hpp"
#include "lozenge/path_ensemble.hpp"
#include "lozenge/render.hpp"
#include "lozenge/verify.hpp"

namespace lozenge::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::optional<std::size_t> halfhex;
  std::optional<std::size_t> n;
  std::optional<Int> steps;
  std::vector<Int> ends;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out_path;
  std::uint64_t cap = kDefaultEnumerationCap;
  bool decimal = false;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EnsembleSpec resolve_spec(const RunConfig& cfg) {
  if (cfg.halfhex) {
    if (cfg.n || cfg.steps || !cfg.ends.empty()) {
      throw InvalidInput("--halfhex cannot be combined with --n/--steps/--ends");
    }
    return EnsembleSpec::halfhex(*cfg.halfhex);
  }
  if (!cfg.steps || cfg.ends.empty()) {
    throw InvalidInput("give either --halfhex <n> or --steps <N> --ends <list>");
  }
  if (cfg.n && *cfg.n != cfg.ends.size()) {
    throw InvalidInput("--n does not match the number of --ends");
  }
  return EnsembleSpec::with_ends(*cfg.steps, cfg.ends);
}

Json spec_json(const EnsembleSpec& spec) {
  return Json{{"n", spec.n}, {"steps", spec.steps}, {"ends", spec.ends}};
}

Json point_json(const SpaceTimePoint& p) { return Json{{"t", p.t}, {"x", p.x}}; }

Json value_record(const EnsembleSpec& spec, Json query, const Rational& value, bool decimal) {
  Json rec{{"spec", spec_json(spec)}, {"query", std::move(query)}, {"value", to_string(value)}};
  if (decimal) rec["decimal"] = to_decimal(value);
  return rec;
}

std::string text_value(const Rational& q, bool decimal) {
  return decimal ? to_string(q) + " (" + to_decimal(q) + ")" : to_string(q);
}

SpaceTimePoint parse_point(const std::string& token) {
  auto sep = token.find_first_of(":,");
  if (sep == std::string::npos) throw InvalidInput("point '" + token + "' is not of the form t:x");
  try {
    std::size_t used_t = 0, used_x = 0;
    const std::string ts = token.substr(0, sep), xs = token.substr(sep + 1);
    SpaceTimePoint p{std::stoll(ts, &used_t), std::stoll(xs, &used_x)};
    if (used_t != ts.size() || used_x != xs.size()) throw std::invalid_argument(token);
    return p;
  } catch (const std::logic_error&) {
    throw InvalidInput("point '" + token + "' is not of the form t:x");
  }
}

void add_spec_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--halfhex", cfg.halfhex, "Order of the half-hexagon (N = n+1, y_i = 2i)");
  cmd->add_option("--n", cfg.n, "Number of walkers");
  cmd->add_option("--steps", cfg.steps, "Number of time steps N");
  cmd->add_option("--ends", cfg.ends, "Comma-separated end positions")
      ->delimiter(',')
      ->allow_extra_args(false);
}

void add_output_options(CLI::App* cmd, RunConfig& cfg, std::vector<std::string> formats) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--out", cfg.out_path, "Write output to this file");
  cmd->add_flag("--decimal", cfg.decimal, "Also show rationals as decimals (display only)");
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const auto spec = resolve_spec(cfg);
  const Integer count = count_lgv(spec);
  std::optional<Integer> predicted;
  if (cfg.halfhex) {
    predicted = 1;
    *predicted <<= static_cast<mp_bitcnt_t>(spec.n * (spec.n + 1) / 2);
  }
  if (cfg.format == "json") {
    Json rec{{"spec", spec_json(spec)}, {"query", Json::array()}, {"value", to_string(count)}};
    if (predicted) {
      rec["predicted"] = to_string(*predicted);
      rec["match"] = (*predicted == count);
    }
    out << rec.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << (predicted ? "count,predicted,match\n" : "count\n") << count;
    if (predicted) out << ',' << *predicted << ',' << (*predicted == count ? "true" : "false");
    out << '\n';
  } else {
    out << "count " << count << '\n';
    if (predicted) {
      out << "predicted " << *predicted << '\n'
          << "match " << (*predicted == count ? "true" : "false") << '\n';
    }
  }
  return kSuccess;
}

int cmd_invert(const RunConfig& cfg, std::ostream& out) {
  const auto spec = resolve_spec(cfg);
  const ExactMatrix inv = closed_form_inverse(BinomialMatrixSpec{spec.steps, spec.ends});
  const std::size_t n = inv.rows();
  if (cfg.format == "json") {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        out << value_record(spec, Json{{"i", i}, {"j", j}}, inv.at(i, j), cfg.decimal).dump()
            << '\n';
  } else if (cfg.format == "csv") {
    out << "i,j,value\n";
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) out << i << ',' << j << ',' << to_string(inv.at(i, j)) << '\n';
  } else {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j)
        out << (j > 1 ? " " : "") << text_value(inv.at(i, j), cfg.decimal);
      out << '\n';
    }
  }
  return kSuccess;
}

int cmd_kernel(const RunConfig& cfg, const std::vector<Int>& args, const std::string& variant,
               std::ostream& out) {
  const auto spec = resolve_spec(cfg);
  if (args.size() != 4) throw InvalidInput("kernel expects four integers: r x s y");
  const Int r = args[0], x = args[1], s = args[2], y = args[3];
  Rational value;
  if (variant == "em") {
    value = em_kernel(KernelContext(spec), r, x, s, y);
  } else if (variant == "general") {
    value = general_kernel(spec, r, x, s, y);
  } else {
    if (!cfg.halfhex) throw InvalidInput("--variant halfhex needs --halfhex");
    value = halfhex_kernel(spec.n, r, x, s, y);
  }
  if (cfg.format == "json") {
    out << value_record(spec, Json{{"r", r}, {"x", x}, {"s", s}, {"y", y}}, value, cfg.decimal).dump()
        << '\n';
  } else if (cfg.format == "csv") {
    out << "r,x,s,y,value\n" << r << ',' << x << ',' << s << ',' << y << ',' << to_string(value) << '\n';
  } else {
    out << text_value(value, cfg.decimal) << '\n';
  }
  return kSuccess;
}

int cmd_correlate(const RunConfig& cfg, const std::vector<std::string>& tokens, bool empirical,
                  std::ostream& out) {
  const auto spec = resolve_spec(cfg);
  std::vector<SpaceTimePoint> query;
  for (const auto& tok : tokens) query.push_back(parse_point(tok));
  const Rational value = correlation(KernelContext(spec), query);
  std::optional<Rational> counted;
  if (empirical) counted = empirical_correlation(spec, query, cfg.cap);

  Json q = Json::array();
  for (const auto& p : query) q.push_back(point_json(p));
  if (cfg.format == "json") {
    Json rec = value_record(spec, q, value, cfg.decimal);
    if (counted) {
      rec["empirical"] = to_string(*counted);
      rec["match"] = (*counted == value);
    }
    out << rec.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "query,value" << (counted ? ",empirical,match" : "") << '\n';
    for (std::size_t i = 0; i < query.size(); ++i)
      out << (i ? " " : "") << query[i].t << ':' << query[i].x;
    out << ',' << to_string(value);
    if (counted) out << ',' << to_string(*counted) << ',' << (*counted == value ? "true" : "false");
    out << '\n';
  } else {
    out << text_value(value, cfg.decimal) << '\n';
    if (counted) {
      out << "empirical " << text_value(*counted, cfg.decimal) << '\n'
          << "match " << (*counted == value ? "true" : "false") << '\n';
    }
  }
  return kSuccess;
}

Json configuration_json(const Configuration& c) { return Json(c.slices); }

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto spec = resolve_spec(cfg);
  std::size_t index = 0;
  if (cfg.format == "csv") out << "config,t,positions\n";
  for_each_configuration(
      spec,
      [&](const Configuration& c) {
        if (cfg.format == "json") {
          out << Json{{"spec", spec_json(spec)}, {"index", index},
                      {"configuration", configuration_json(c)}}.dump()
              << '\n';
        } else if (cfg.format == "csv") {
          for (Int t = 0; t <= c.steps(); ++t) {
            out << index << ',' << t << ',';
            const auto& s = c.slices[static_cast<std::size_t>(t)];
            for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
            out << '\n';
          }
        } else {
          if (index > 0) out << '\n';
          out << serialize(c);
        }
        ++index;
      },
      cfg.cap);
  return kSuccess;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const auto spec = resolve_spec(cfg);
  const auto result = sample_with_probability(spec, cfg.seed);
  if (cfg.format == "json") {
    Json rec{{"spec", spec_json(spec)},
             {"seed", cfg.seed},
             {"configuration", configuration_json(result.config)},
             {"probability", to_string(result.probability)}};
    out << rec.dump() << '\n';
  } else if (cfg.format == "svg") {
    out << render(spec, result.config, RenderMode::lozenges, RenderFormat::svg);
  } else if (cfg.format == "csv") {
    out << "t,positions\n";
    for (Int t = 0; t <= result.config.steps(); ++t) {
      const auto& s = result.config.slices[static_cast<std::size_t>(t)];
      out << t << ',';
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
      out << '\n';
    }
  } else {
    out << serialize(result.config);
  }
  return kSuccess;
}

int cmd_render(const RunConfig& cfg, const std::string& mode, const std::string& in_path,
               std::ostream& out) {
  const auto spec = resolve_spec(cfg);
  Configuration c;
  if (in_path.empty()) {
    c = sample(spec, cfg.seed);
  } else {
    std::ifstream in(in_path);
    if (!in) throw InvalidInput("cannot read " + in_path);
    std::stringstream buf;
    buf << in.rdbuf();
    c = parse_configuration(buf.str());
  }
  out << render(spec, c, mode == "paths" ? RenderMode::paths : RenderMode::lozenges,
                cfg.format == "svg" ? RenderFormat::svg : RenderFormat::ascii);
  return kSuccess;
}

int cmd_verify(const VerifyOptions& options, const RunConfig& cfg, std::ostream& out) {
  const auto results = run_verification(options);
  bool all = true;
  if (cfg.format == "csv") out << "suite,passed,cases,counterexample\n";
  for (const auto& r : results) {
    all = all && r.passed;
    if (cfg.format == "json") {
      Json rec{{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}};
      if (!r.passed) rec["counterexample"] = r.counterexample;
      out << rec.dump() << '\n';
    } else if (cfg.format == "csv") {
      out << r.name << ',' << (r.passed ? "true" : "false") << ',' << r.cases << ",\""
          << r.counterexample << "\"\n";
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
      if (!r.passed) out << ": " << r.counterexample;
      out << '\n';
    }
  }
  return all ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact correlation functions for stay/step-right nonintersecting path ensembles"};
  app.require_subcommand(1);

  RunConfig cfg;
  const std::vector<std::string> rational_formats{"text", "json", "csv"};

  auto* count = app.add_subcommand("count", "Count configurations with the LGV determinant");
  add_spec_options(count, cfg);
  add_output_options(count, cfg, rational_formats);

  auto* invert = app.add_subcommand("invert", "Closed-form inverse of the LGV matrix");
  add_spec_options(invert, cfg);
  add_output_options(invert, cfg, rational_formats);

  VerifyOptions vopts;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Run the property sweeps");
  verify->add_option("--n-max", vopts.n_max, "Sweep size (3 = quick)")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.seed, "Seed of the random sweeps");
  verify->add_flag("--inject-fault", inject_fault, "Negate one term of the inverse (self-test)");
  add_output_options(verify, cfg, rational_formats);

  std::vector<Int> kernel_args;
  std::string variant = "em";
  auto* kernel = app.add_subcommand("kernel", "Evaluate K(r,x; s,y)");
  add_spec_options(kernel, cfg);
  add_output_options(kernel, cfg, rational_formats);
  kernel->add_option("args", kernel_args, "r x s y")->expected(4);
  kernel->add_option("--variant", variant, "Kernel formula")
      ->check(CLI::IsMember({"em", "general", "halfhex"}));

  std::vector<std::string> points;
  bool empirical = false;
  auto* correlate = app.add_subcommand("correlate", "Occupation probability of t:x points");
  add_spec_options(correlate, cfg);
  add_output_options(correlate, cfg, rational_formats);
  correlate->add_option("points", points, "Points as t:x");
  correlate->add_flag("--empirical", empirical, "Also count by enumeration");
  correlate->add_option("--cap", cfg.cap, "Enumeration cap")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List every configuration");
  add_spec_options(enumerate, cfg);
  add_output_options(enumerate, cfg, rational_formats);
  enumerate->add_option("--cap", cfg.cap, "Enumeration cap")->check(CLI::PositiveNumber);

  auto* sample_cmd = app.add_subcommand("sample", "Exact uniform random configuration");
  add_spec_options(sample_cmd, cfg);
  add_output_options(sample_cmd, cfg, {"text", "json", "csv", "svg"});
  sample_cmd->add_option("--seed", cfg.seed, "Random seed");

  std::string mode = "lozenges";
  std::string in_path;
  auto* render_cmd = app.add_subcommand("render", "Draw a configuration as paths or lozenges");
  add_spec_options(render_cmd, cfg);
  add_output_options(render_cmd, cfg, {"text", "svg"});
  render_cmd->add_option("--seed", cfg.seed, "Seed used when no --in is given");
  render_cmd->add_option("--mode", mode, "paths or lozenges")
      ->check(CLI::IsMember({"paths", "lozenges"}));
  render_cmd->add_option("--in", in_path, "Configuration file (N+1 rows of n integers)");

  std::vector<std::string> argv_store{"lozenge-cli"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    if (*count) code = cmd_count(cfg, buffer);
    else if (*invert) code = cmd_invert(cfg, buffer);
    else if (*verify) {
      if (inject_fault) vopts.fault = InverseFault::negate_first_term;
      code = cmd_verify(vopts, cfg, buffer);
    }
    else if (*kernel) code = cmd_kernel(cfg, kernel_args, variant, buffer);
    else if (*correlate) code = cmd_correlate(cfg, points, empirical, buffer);
    else if (*enumerate) code = cmd_enumerate(cfg, buffer);
    else if (*sample_cmd) code = cmd_sample(cfg, buffer);
    else if (*render_cmd) code = cmd_render(cfg, mode, in_path, buffer);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << '\n';
      return kInvalidInput;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace lozenge::cli
