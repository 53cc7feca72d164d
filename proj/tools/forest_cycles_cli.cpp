// forest-cycles: command-line front end.
//
// Exit status: 0 pass, 1 verification failure, 2 usage or out-of-class input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forest_cycles.hpp"

using namespace forest_cycles;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::size_t m = 0;
  std::vector<std::string> decorations;
  std::string format = "text";
  std::vector<double> x;
  std::vector<double> z;
  double tol = 1e-6;
  unsigned seed = 1;
  std::string fixture = "double-log";
  std::string tree_file;
  std::string suite;
  std::string eval_mode;
};

int log_level() {
  const char* v = std::getenv("FOREST_CYCLES_LOG");
  if (v == nullptr) return 0;
  std::string s(v);
  if (s == "debug" || s == "2") return 2;
  if (s.empty() || s == "0" || s == "off") return 0;
  return 1;
}

void log(int level, const std::string& msg) {
  if (log_level() >= level) std::cerr << "[forest-cycles] " << msg << "\n";
}

Style style_of(const RunConfig& cfg) { return cfg.format == "latex" ? Style::Latex : Style::Text; }

TauSpec tau_spec(const RunConfig& cfg, std::size_t fallback_m) {
  if (!cfg.decorations.empty()) {
    std::vector<Deco> ds;
    for (const auto& d : cfg.decorations) ds.push_back(deco(d));
    return TauSpec(std::move(ds));
  }
  return TauSpec::standard(cfg.m == 0 ? fallback_m : cfg.m);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

void print_pass(const std::string& suite, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << suite << ": " << detail << "\n";
}

// ---------------------------------------------------------------------------

int cmd_tau(const RunConfig& cfg) {
  TauSpec spec = tau_spec(cfg, 3);
  auto trees = tau_trees(spec);
  if (cfg.format == "json") {
    std::cout << to_json(tau(spec)).dump(2) << "\n";
    return kPass;
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (cfg.format == "latex")
      std::cout << (i == 0 ? "  " : "+ ") << "\\left[" << render(trees[i], Style::Latex) << "\\right]\n";
    else
      std::cout << render(trees[i]) << "\n";
  }
  return kPass;
}

int cmd_phi(const RunConfig& cfg) {
  ForestSum input;
  if (!cfg.tree_file.empty()) {
    Json j = read_json_file(cfg.tree_file);
    input = j.is_array() ? forest_sum_from_json(j) : tree_sum(tree_from_json(j));
  } else {
    input = tau(tau_spec(cfg, 2));
  }
  for (const auto& f : non_generic_terms(input))
    std::cerr << "warning: non-generic term " << render(f) << "; admissibility of its image is not guaranteed\n";

  if (cfg.format == "json") {
    std::cout << to_json(phi(input)).dump(2) << "\n";
    return kPass;
  }
  // Images in depth-first coordinate order, one forest per line.
  Style st = style_of(cfg);
  bool first = true;
  for (const auto& [f, c] : input) {
    std::string coeff = c == 1 ? (first ? "" : "+ ") : (c == -1 ? "- " : c.str() + " ");
    std::cout << coeff << render(phi_forest_raw(f), st) << "\n";
    first = false;
  }
  return kPass;
}

// ---------------------------------------------------------------------------

bool suite_d2(const RunConfig& cfg) {
  ForestGenerator gen(cfg.seed);
  for (int i = 0; i < 200; ++i) {
    ForestSum f(gen.forest(8));
    if (!d(d(f)).is_zero()) {
      print_pass("d2", false, "d(d F) != 0 for " + render(f));
      return false;
    }
  }
  print_pass("d2", true, "d(d F) = 0 on 200 random forests with at most 8 edges");
  return true;
}

bool suite_leibniz(const RunConfig& cfg) {
  ForestGenerator gen(cfg.seed);
  for (int i = 0; i < 200; ++i) {
    Forest fa = gen.forest(4), fb = gen.forest(4);
    ForestSum a(fa), b(fb);
    Rational sign = fa.edge_count() % 2 == 0 ? 1 : -1;
    if (d(star(a, b)) != star(d(a), b) + sign * star(a, d(b))) {
      print_pass("leibniz", false, "fails for " + render(fa) + " and " + render(fb));
      return false;
    }
  }
  print_pass("leibniz", true, "graded Leibniz rule on 200 random pairs");
  return true;
}

bool suite_del2(const RunConfig& cfg) {
  std::size_t top = cfg.m == 0 ? 5 : cfg.m;
  std::size_t count = 0;
  for (std::size_t k = 2; k <= top; ++k) {
    for (const auto& t : tau_trees(TauSpec::standard(k))) {
      CycleSum z = phi(t);
      if (!boundary(boundary(z)).is_zero()) {
        print_pass("del2", false, "boundary squared nonzero on the image of " + render(t));
        return false;
      }
      ++count;
    }
  }
  print_pass("del2", true, "boundary squared vanishes on " + std::to_string(count) + " tree images");
  return true;
}

bool suite_chain_map(const RunConfig& cfg) {
  std::size_t top = cfg.m == 0 ? 4 : cfg.m;
  std::size_t count = 0;
  for (std::size_t k = 2; k <= top; ++k) {
    for (const auto& t : tau_trees(TauSpec::standard(k))) {
      auto rep = verify_chain_map(t);
      if (!rep.holds) {
        print_pass("chain-map", false, render(t) + (rep.error.empty() ? "" : " (" + rep.error + ")"));
        log(1, "phi(dT) = " + render(rep.phi_d));
        log(1, "d(phi T) = " + render(rep.d_phi));
        return false;
      }
      log(2, render(t) + ": ok");
      ++count;
    }
  }
  print_pass("chain-map", true, "phi(dT) = d(phi T) for " + std::to_string(count) + " trees");
  return true;
}

bool suite_cancellation(const RunConfig& cfg) {
  std::size_t top = cfg.m == 0 ? 5 : cfg.m;
  for (std::size_t k = 3; k <= top; ++k) {
    auto c = check_internal_cancellation(TauSpec::standard(k));
    auto dec = check_decomposable(TauSpec::standard(k));
    if (!c.cancels || !dec.all_two_trees) {
      print_pass("cancellation", false, "m = " + std::to_string(k));
      return false;
    }
    log(1, "m = " + std::to_string(k) + ": " + std::to_string(c.pairs.size()) + " cancelling pairs, " +
               std::to_string(dec.d_tau.size()) + " two-tree terms");
  }
  print_pass("cancellation", true, "internal contributions cancel and d(tau) is decomposable up to m = " +
                                       std::to_string(top));
  return true;
}

bool suite_admissibility(const RunConfig& cfg) {
  std::size_t top = cfg.m == 0 ? 4 : cfg.m;
  std::size_t faces = 0;
  for (std::size_t k = 2; k <= top; ++k) {
    for (const auto& [term, c] : phi(tau(TauSpec::standard(k)))) {
      auto rep = is_admissible(term);
      faces += rep.faces_checked;
      if (!rep.admissible) {
        print_pass("admissibility", false, render(term) + ": " + rep.violations.front());
        return false;
      }
    }
  }
  print_pass("admissibility", true, "all tau images admissible up to m = " + std::to_string(top) + " (" +
                                        std::to_string(faces) + " faces)");
  return true;
}

struct Fixture {
  HybridSum chain;
  CycleSum target;
};

Fixture load_fixture(const std::string& name) {
  if (name == "double-log") return {fixtures::double_log_chain(), fixtures::double_log_target()};
  if (name == "triple-log") return {fixtures::triple_log_chain(), fixtures::triple_log_target()};
  Json j = read_json_file(name);
  if (!j.is_object() || !j.contains("chain") || !j.contains("target"))
    throw JsonFormatError("fixture file needs \"chain\" and \"target\"");
  return {cycle_sum_from_json(j.at("chain")), cycle_sum_from_json(j.at("target"))};
}

bool suite_bounding(const RunConfig& cfg) {
  Fixture fx = load_fixture(cfg.fixture);
  auto rep = verify_bounding(fx.chain, fx.target);
  if (!rep.error.empty()) throw UnsupportedClass(rep.error);
  if (cfg.format == "json") {
    std::cout << Json{{"passes", rep.passes},
                      {"essential_residual", to_json(rep.essential_residual)},
                      {"negligible_residual", to_json(rep.negligible_residual)},
                      {"topological_part", to_json(topological_part(fx.chain))}}
                     .dump(2)
              << "\n";
  }
  std::string detail = std::to_string(rep.negligible_residual.size()) + " negligible residual terms";
  if (!rep.passes) detail = "essential residual " + render(rep.essential_residual);
  print_pass("bounding " + cfg.fixture, rep.passes, detail);
  log(1, "negligible residual: " + render(rep.negligible_residual));
  log(1, "topological part: " + render(topological_part(fx.chain)));
  return rep.passes;
}

bool suite_numeric(const RunConfig& cfg) {
  std::vector<double> x = cfg.x;
  if (x.empty()) {
    std::size_t m = cfg.m == 0 ? 3 : cfg.m;
    std::vector<double> base{12.0, 6.0, 2.0};
    if (m > base.size()) throw std::invalid_argument("give --x for m > 3");
    x.assign(base.end() - static_cast<std::ptrdiff_t>(m), base.end());
  }
  if (cfg.m != 0 && cfg.m != x.size()) throw std::invalid_argument("--m does not match the length of --x");
  NumericContext ctx;
  ctx.tolerance = std::min(ctx.tolerance, cfg.tol);
  auto c = compare_series_integral(x, ctx);
  bool ok = c.difference < cfg.tol;
  std::ostringstream os;
  os.precision(15);
  os << "I = " << c.integral << ", (-1)^m Li = " << c.expected_integral << ", |diff| = " << c.difference;
  print_pass("numeric", ok, os.str());
  return ok;
}

int cmd_verify(const RunConfig& cfg) {
  bool ok = false;
  const std::string& s = cfg.suite;
  if (s == "d2") ok = suite_d2(cfg);
  else if (s == "leibniz") ok = suite_leibniz(cfg);
  else if (s == "del2") ok = suite_del2(cfg);
  else if (s == "chain-map") ok = suite_chain_map(cfg);
  else if (s == "cancellation") ok = suite_cancellation(cfg);
  else if (s == "admissibility") ok = suite_admissibility(cfg);
  else if (s == "bounding") ok = suite_bounding(cfg);
  else if (s == "numeric") ok = suite_numeric(cfg);
  else {
    std::cerr << "unknown suite: " << s << "\n";
    return kUsage;
  }
  return ok ? kPass : kFail;
}

// ---------------------------------------------------------------------------

int cmd_eval(const RunConfig& cfg) {
  NumericContext ctx;
  ctx.tolerance = std::min(ctx.tolerance, cfg.tol);
  Json report;
  std::ostringstream os;
  os.precision(15);
  if (cfg.eval_mode == "series") {
    std::vector<double> z = cfg.z.empty() ? z_from_x(cfg.x) : cfg.z;
    if (z.empty()) throw std::invalid_argument("series needs --z or --x");
    auto r = multiple_log_series(z, ctx);
    report = {{"value", r.value.real()},
              {"error_estimate", r.tail_bound},
              {"comparison", {{"reverse_order", r.value_reverse.real()}}}};
    os << "Li = " << r.value.real() << "  (tail bound " << r.tail_bound << ")";
  } else if (cfg.eval_mode == "integral") {
    if (cfg.x.empty()) throw std::invalid_argument("integral needs --x");
    auto r = simplex_integral(cfg.x, ctx);
    report = {{"value", r.value}, {"error_estimate", r.error_estimate}, {"comparison", nullptr}};
    os << "I = " << r.value << "  (error estimate " << r.error_estimate << ")";
  } else {
    if (cfg.x.empty()) throw std::invalid_argument("compare needs --x");
    auto c = compare_series_integral(cfg.x, ctx);
    report = {{"value", c.integral},
              {"error_estimate", c.integral_error},
              {"comparison",
               {{"series", c.series}, {"signed_series", c.expected_integral}, {"difference", c.difference},
                {"within_tolerance", c.difference < cfg.tol}}}};
    os << "I = " << c.integral << ", Li = " << c.series << ", |I - (-1)^m Li| = " << c.difference;
    if (cfg.format == "json")
      std::cout << report.dump(2) << "\n";
    else
      std::cout << os.str() << "\n";
    return c.difference < cfg.tol ? kPass : kFail;
  }
  if (cfg.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << os.str() << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forests of decorated trees, monomial algebraic cycles and multiple logarithms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  };

  CLI::App* tau_cmd = app.add_subcommand("tau", "Print the multiple-logarithm tree sum");
  tau_cmd->add_option("--m", cfg.m, "Number of leaves")->check(CLI::Range(2, 12));
  tau_cmd->add_option("--decorations", cfg.decorations, "Leaf decorations, left to right")->delimiter(',');
  add_common(tau_cmd);

  CLI::App* phi_cmd = app.add_subcommand("phi", "Image of the tree sum or of a tree file under the cycling map");
  phi_cmd->add_option("--m", cfg.m, "Number of leaves of the tree sum")->check(CLI::Range(1, 9));
  phi_cmd->add_option("--decorations", cfg.decorations, "Leaf decorations")->delimiter(',');
  phi_cmd->add_option("--tree", cfg.tree_file, "JSON tree or forest sum")->check(CLI::ExistingFile);
  add_common(phi_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", cfg.suite, "d2 | leibniz | del2 | chain-map | cancellation | admissibility | "
                                             "bounding | numeric")
      ->required();
  verify_cmd->add_option("--m", cfg.m, "Size parameter of the suite")->check(CLI::Range(1, 9));
  verify_cmd->add_option("--x", cfg.x, "Comma-separated real arguments")->delimiter(',');
  verify_cmd->add_option("--tol", cfg.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", cfg.seed, "Seed for randomized suites");
  verify_cmd->add_option("--fixture", cfg.fixture, "double-log | triple-log | path to a chain file");
  add_common(verify_cmd);

  CLI::App* eval_cmd = app.add_subcommand("eval", "Numeric evaluation");
  eval_cmd->add_option("mode", cfg.eval_mode, "series | integral | compare")
      ->required()
      ->check(CLI::IsMember({"series", "integral", "compare"}));
  eval_cmd->add_option("--m", cfg.m, "Depth (checked against the argument list)");
  eval_cmd->add_option("--x", cfg.x, "Comma-separated integral arguments")->delimiter(',');
  eval_cmd->add_option("--z", cfg.z, "Comma-separated series arguments")->delimiter(',');
  eval_cmd->add_option("--tol", cfg.tol, "Comparison tolerance")->check(CLI::PositiveNumber);
  add_common(eval_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (cfg.m != 0 && eval_cmd->parsed()) {
      std::size_t len = cfg.z.empty() ? cfg.x.size() : cfg.z.size();
      if (len != cfg.m) throw std::invalid_argument("--m does not match the number of arguments");
    }
    auto start = std::chrono::steady_clock::now();
    int code = kUsage;
    if (tau_cmd->parsed()) code = cmd_tau(cfg);
    else if (phi_cmd->parsed()) code = cmd_phi(cfg);
    else if (verify_cmd->parsed()) code = cmd_verify(cfg);
    else if (eval_cmd->parsed()) code = cmd_eval(cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    log(1, "finished in " + std::to_string(ms.count()) + " ms");
    return code;
  } catch (const UnsupportedClass& e) {
    std::cerr << "out of class: " << e.what() << "\n";
  } catch (const ImproperFace& e) {
    std::cerr << "improper face: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
