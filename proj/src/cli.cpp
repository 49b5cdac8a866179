#include "qcanon/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "qcanon/cabling.hpp"
#include "qcanon/canonical.hpp"
#include "qcanon/diagrams.hpp"
#include "qcanon/error.hpp"
#include "qcanon/json_io.hpp"
#include "qcanon/rmatrix.hpp"
#include "qcanon/verify.hpp"

namespace qcanon::cli {

namespace {

struct JobConfig {
  std::vector<int> lambda;
  int level = 0;
  std::string format = "json";
  std::string output;
  std::string filter = "none";
  std::string render = "none";
  std::string op = "theta_n";
  int position = 1;
  std::vector<int> word;
  std::string suite = "all";
  int max_weight_sum = 6;
  int max_sum = 12;
  bool timing = false;
};

// Thrown for flag combinations CLI11 cannot express; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_job(const JobConfig& c, bool needs_lambda) {
  if (!needs_lambda) return;
  if (c.lambda.empty()) throw UsageError("--lambda is required");
  for (int l : c.lambda) {
    if (l < 0) throw UsageError("--lambda entries must be nonnegative");
  }
  if (c.level < 0) throw UsageError("--level must be nonnegative");
  const int total = std::accumulate(c.lambda.begin(), c.lambda.end(), 0);
  if (total > c.max_sum) {
    throw UsageError("sum of --lambda is " + std::to_string(total) + ", above the limit " + std::to_string(c.max_sum) +
                     " (raise it with --max-sum)");
  }
}

void check_dim(const WeightSpace& w) {
  const char* cap = std::getenv("QCANON_MAX_DIM");
  if (cap == nullptr || *cap == '\0') return;
  char* end = nullptr;
  const unsigned long limit = std::strtoul(cap, &end, 10);
  if (end == cap || *end != '\0') throw UsageError("QCANON_MAX_DIM must be a nonnegative integer");
  if (w.dim() > limit) {
    throw UsageError("weight space of dimension " + std::to_string(w.dim()) + " exceeds QCANON_MAX_DIM=" + cap);
  }
}

std::string text_basis(const WeightSpace& w, const std::vector<BasisVector>& basis) {
  std::ostringstream os;
  auto idx = [](const MultiIndex& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
  };
  for (const auto& b : basis) {
    os << "b" << idx(b.index) << " =";
    bool first = true;
    for (std::size_t k = 0; k < b.coords.size(); ++k) {
      if (b.coords[k].is_zero()) continue;
      os << (first ? " " : " + ") << "(" << to_string(b.coords[k]) << ") e" << idx(w.index(k));
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_basis(const JobConfig& c) {
  const WeightSpace wc = dual_weight_space(c.lambda, c.level);
  check_dim(wc);
  const auto basis = dual_canonical_basis(wc);
  return c.format == "text" ? text_basis(wc, basis) : emit(basis_to_json(wc, basis));
}

std::string cmd_canonical2(const JobConfig& c) {
  if (c.lambda.size() != 2) throw UsageError("canonical2 needs exactly two weights in --lambda");
  const WeightSpace w = simple_weight_space(c.lambda, c.level);
  check_dim(w);
  const auto basis = canonical_basis_pair(w);
  if (c.format == "text") return text_basis(w, basis);
  Json j = basis_to_json(w, basis);
  j["side"] = "monomial";
  return emit(j);
}

std::string cmd_diagrams(const JobConfig& c) {
  auto diagrams = enumerate_B(c.lambda, c.level);
  if (c.filter == "singular") diagrams = filter_singular(diagrams);
  if (c.filter == "invariant") diagrams = filter_invariant(diagrams, c.lambda, c.level);
  if (c.render == "ascii") {
    std::string s;
    for (const auto& d : diagrams) s += render(d, RenderFormat::Ascii) + "\n";
    return s;
  }
  Json list = Json::array();
  std::size_t k = 0;
  for (const auto& d : diagrams) {
    Json item = diagram_to_json(d);
    item["index"] = index_of_diagram(d);
    if (c.render == "svg") {
      const std::string svg = render(d, RenderFormat::Svg);
      if (c.output.empty()) {
        item["svg"] = svg;
      } else {
        std::filesystem::create_directories(c.output);
        const std::string name = "diagram_" + std::to_string(k) + ".svg";
        std::ofstream(std::filesystem::path(c.output) / name) << svg;
        item["svg_file"] = name;
      }
    }
    list.push_back(std::move(item));
    ++k;
  }
  return emit({{"schema", kSchema},
               {"lambda", c.lambda},
               {"level", c.level},
               {"filter", c.filter},
               {"diagrams", std::move(list)}});
}

std::string cmd_rmatrix(const JobConfig& c) {
  const WeightSpace w = simple_weight_space(c.lambda, c.level);
  check_dim(w);
  const std::vector<int> word = c.word.empty() ? canonical_longest_word(c.lambda.size()) : c.word;
  std::optional<BraidOperator> op;
  if (c.op == "theta") {
    op = theta_matrix(w);
  } else if (c.op == "theta_n") {
    op = theta_n_matrix(w);
  } else if (c.op == "cartan") {
    op = cartan_factor(w);
  } else if (c.op == "r_n") {
    op = r_n_matrix(w, RecursionForm::Right);
  } else if (c.op == "rcheck") {
    op = rcheck_matrix(w, c.position);
  } else if (c.op == "rcheck_longest") {
    op = rcheck_longest(w, word);
  } else if (c.op == "sigma0") {
    op = sigma0(w);
  } else {
    op = tau_theta_n(dual_weight_space(c.lambda, c.level), word);
  }
  return emit(operator_to_json(*op));
}

std::string cmd_cable(const JobConfig& c) { return emit(report_to_json(theorem61_report(c.lambda, c.level))); }

std::string cmd_verify(const JobConfig& c, bool& failed) {
  Json suites = Json::array();
  failed = false;
  for (const auto& s : run_suites(c.suite, c.max_weight_sum)) {
    Json checks = Json::array();
    for (const auto& ch : s.checks) {
      Json item = {{"name", ch.name}, {"cases", ch.cases}, {"failures", ch.failures}, {"passed", ch.passed()}};
      if (!ch.first_failure.empty()) item["first_failure"] = ch.first_failure;
      checks.push_back(std::move(item));
    }
    Json item = {{"name", s.name}, {"passed", s.passed()}, {"checks", std::move(checks)}};
    if (c.timing) item["seconds"] = s.seconds;
    failed = failed || !s.passed();
    suites.push_back(std::move(item));
  }
  return emit({{"schema", kSchema},
               {"max_weight_sum", c.max_weight_sum},
               {"passed", !failed},
               {"suites", std::move(suites)}});
}

void add_common(CLI::App* sub, JobConfig& c) {
  sub->add_option("--lambda", c.lambda, "highest weights, e.g. 2,1")->delimiter(',')->required();
  sub->add_option("--level", c.level, "level l; the weight is sum(lambda) - 2l")->required();
  sub->add_option("-o,--output", c.output, "write the output here instead of stdout");
  sub->add_option("--max-sum", c.max_sum, "upper bound on sum(lambda)")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig c;
  CLI::App app{"Exact canonical and dual canonical bases of U_q(sl2) tensor products", "qcanon"};
  app.require_subcommand(1);

  auto* basis = app.add_subcommand("basis", "dual canonical basis of (V_l1 (x) ... (x) V_ln)^c at a level");
  add_common(basis, c);
  basis->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* canonical2 = app.add_subcommand("canonical2", "canonical basis of V (x) V' at a level");
  add_common(canonical2, c);
  canonical2->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* diagrams = app.add_subcommand("diagrams", "admissible arc diagrams");
  add_common(diagrams, c);
  diagrams->add_option("--filter", c.filter)->check(CLI::IsMember({"none", "singular", "invariant"}))->capture_default_str();
  diagrams->add_option("--render", c.render, "ascii, or svg (files under -o DIR)")
      ->check(CLI::IsMember({"none", "ascii", "svg"}))
      ->capture_default_str();

  auto* rmatrix = app.add_subcommand("rmatrix", "R-matrix operators on a weight space");
  add_common(rmatrix, c);
  rmatrix
      ->add_option("--op", c.op)
      ->check(CLI::IsMember({"theta", "theta_n", "cartan", "r_n", "rcheck", "rcheck_longest", "sigma0", "tau_theta_n"}))
      ->capture_default_str();
  rmatrix->add_option("--position", c.position, "factor i of R-check on factors i, i+1")->capture_default_str();
  rmatrix->add_option("--word", c.word, "reduced word of the longest permutation, e.g. 1,2,1")->delimiter(',');

  auto* cable = app.add_subcommand("cable", "compare cabling of dual canonical bases with cabling of diagrams");
  add_common(cable, c);

  auto* verify = app.add_subcommand("verify", "run the property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", c.suite)->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--max-weight-sum", c.max_weight_sum)->check(CLI::Range(1, 12))->capture_default_str();
  verify->add_option("-o,--output", c.output, "write the report here instead of stdout");
  verify->add_flag("--timing", c.timing, "include per-suite wall time");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string text;
  bool failed = false;
  try {
    check_job(c, !verify->parsed());
    if (basis->parsed()) text = cmd_basis(c);
    if (canonical2->parsed()) text = cmd_canonical2(c);
    if (diagrams->parsed()) text = cmd_diagrams(c);
    if (rmatrix->parsed()) text = cmd_rmatrix(c);
    if (cable->parsed()) text = cmd_cable(c);
    if (verify->parsed()) text = cmd_verify(c, failed);
  } catch (const UsageError& e) {
    err << "qcanon: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    text = emit({{"schema", kSchema}, {"status", "failure"}, {"error", std::string(to_string(e.code()))},
                 {"message", e.what()}});
    failed = true;
  }

  if (!c.output.empty() && !(diagrams->parsed() && c.render == "svg")) {
    std::ofstream f(c.output);
    if (!f) {
      err << "qcanon: cannot write " << c.output << '\n';
      return kExitFailure;
    }
    f << text;
  } else {
    out << text;
  }
  return failed ? kExitFailure : kExitOk;
}

}  // namespace qcanon::cli
