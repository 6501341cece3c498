// decomatch: generators, online algorithms, bound machinery, and experiment
// drivers for max-weight online assignment with free disposal and
// speed-times-size weights.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "decomatch/adversary.hpp"
#include "decomatch/analysis.hpp"
#include "decomatch/errors.hpp"
#include "decomatch/harness.hpp"
#include "decomatch/io.hpp"
#include "decomatch/online.hpp"

namespace {

using namespace decomatch;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out = "-";

  bool to_stdout() const { return out == "-" || out.empty(); }
};

// Flat key/value document rendered as a JSON object or a two-line CSV.
class KvDoc {
 public:
  void add(const std::string& key, double value) { fields_.emplace_back(key, format_double(value)); }
  void add_int(const std::string& key, long long value) {
    fields_.emplace_back(key, std::to_string(value));
  }
  void add_bool(const std::string& key, bool value) {
    fields_.emplace_back(key, value ? "true" : "false");
  }
  void add_null(const std::string& key) { fields_.emplace_back(key, std::string()); }

  std::string json() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) out += ',';
      out += '"' + fields_[i].first + "\":";
      out += fields_[i].second.empty() ? "null" : fields_[i].second;
    }
    out += '}';
    return out;
  }

  std::string csv() const {
    std::string head, row;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) {
        head += ',';
        row += ',';
      }
      head += fields_[i].first;
      row += fields_[i].second.empty() ? "nan" : fields_[i].second;
    }
    return head + "\n" + row;
  }

  std::string render(const std::string& format) const {
    return format == "csv" ? csv() : json();
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

void emit(const GlobalOpts& global, const std::string& text) {
  const std::string payload = text.empty() || text.back() != '\n' ? text + "\n" : text;
  if (global.to_stdout())
    std::cout << payload;
  else
    write_text_file(global.out, payload);
}

std::string sidecar_path(const std::string& out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
    return out.substr(0, out.size() - suffix.size()) + ".params.json";
  return out + ".params.json";
}

void add_report(KvDoc& doc, const ValueReport& report) {
  doc.add("alg_value", report.alg_value);
  doc.add("opt_value", report.opt_value);
  if (report.ratio)
    doc.add("ratio", *report.ratio);
  else
    doc.add_null("ratio");
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts global;
  CLI::App app{"online assignment with free disposal: algorithms, bounds, adversarial families"};
  app.require_subcommand(1);
  app.add_option("--seed", global.seed, "stream seed for randomized runs")->capture_default_str();
  app.add_option("--format", global.format, "output format for reports")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", global.out, "output path, - for stdout")->capture_default_str();

  const std::map<std::string, TieRule> tie_names{
      {"prefer-fastest", TieRule::prefer_fastest},
      {"prefer-slowest", TieRule::prefer_slowest},
      {"prefer-lowest-index", TieRule::prefer_lowest_index}};

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "write an adversarial instance file");
  gen->require_subcommand(1);
  gen->fallthrough();

  double eps = 0.2;
  auto* gen_greedy = gen->add_subcommand("greedy-hard", "hard instance for greedy");
  gen_greedy->fallthrough();
  gen_greedy->add_option("--eps", eps, "parameter in (0,1]")->required();
  gen_greedy->callback([&] { emit(global, instance_to_json(greedy_hard_instance(eps))); });

  double gen_delta = 1e-3;
  auto* gen_det = gen->add_subcommand("det-ub", "oscillatory recurrence family");
  gen_det->fallthrough();
  gen_det->add_option("--delta", gen_delta, "recurrence parameter > 0")->capture_default_str();
  gen_det->callback([&] {
    if (global.to_stdout())
      throw CLI::ValidationError("gen det-ub", "--out FILE is required (a sidecar is written next to it)");
    const RecurrenceParams seq = det_ub_sequence(gen_delta);
    save_instance(seq.instance(), global.out);
    write_text_file(sidecar_path(global.out),
                    recurrence_sidecar_json(seq.a, seq.r, seq.delta, seq.w) + "\n");
  });

  int gen_n = 16;
  auto* gen_rand = gen->add_subcommand("rand-ub", "doubling prefix-distribution family");
  gen_rand->fallthrough();
  gen_rand->add_option("--n", gen_n, "number of doubling jobs (1..60)")->required();
  gen_rand->callback([&] { emit(global, instance_to_json(rand_ub_family(gen_n).instance())); });

  // ---- opt ----------------------------------------------------------------
  std::string instance_path;
  auto* opt_cmd = app.add_subcommand("opt", "offline optimum of an instance file");
  opt_cmd->fallthrough();
  opt_cmd->add_option("--instance", instance_path, "instance JSON file")->required();
  opt_cmd->callback([&] {
    KvDoc doc;
    doc.add("opt_value", sorted_opt(load_instance(instance_path)).value);
    emit(global, doc.render(global.format));
  });

  // ---- run ----------------------------------------------------------------
  std::string run_instance, run_algorithm = "interval";
  std::string run_tie = "prefer-fastest";
  double run_c = kDefaultIntervalBase;
  std::vector<double> run_x;
  std::uint64_t run_trial = 0;
  auto* run_cmd = app.add_subcommand("run", "run an online algorithm over an instance file");
  run_cmd->fallthrough();
  run_cmd->add_option("--instance", run_instance, "instance JSON file")->required();
  run_cmd->add_option("--algorithm", run_algorithm, "greedy or interval")
      ->check(CLI::IsMember({"greedy", "interval"}))
      ->required();
  run_cmd->add_option("--tie", run_tie, "greedy tie rule")
      ->check(CLI::IsMember({"prefer-fastest", "prefer-slowest", "prefer-lowest-index"}));
  run_cmd->add_option("--c", run_c, "interval base > 1")->capture_default_str();
  run_cmd->add_option("--x", run_x, "explicit x values, one per machine")->delimiter(',');
  run_cmd->add_option("--trial", run_trial, "trial index for the random stream")
      ->capture_default_str();
  run_cmd->callback([&] {
    const Instance inst = load_instance(run_instance);
    RunResult result;
    if (run_algorithm == "greedy") {
      result = run_greedy(inst, tie_names.at(run_tie));
    } else if (!run_x.empty()) {
      result = run_interval(inst, IntervalParams{run_c, run_x});
    } else {
      result = run_interval_random(inst, run_c, global.seed, run_trial);
    }
    KvDoc doc;
    add_report(doc, result.report);
    emit(global, doc.render(global.format));
  });

  // ---- bound / cstar / certify ---------------------------------------------
  double bound_c = kDefaultIntervalBase;
  bool below_e = false;
  auto* bound_cmd = app.add_subcommand("bound", "competitive bound at a given base");
  bound_cmd->fallthrough();
  bound_cmd->add_option("--c", bound_c, "interval base")->capture_default_str();
  bound_cmd->add_flag("--allow-below-e", below_e, "explore bases below e");
  bound_cmd->callback([&] {
    KvDoc doc;
    doc.add("c", bound_c);
    doc.add("bound", bound_of_c(bound_c, below_e));
    doc.add("first_branch", (bound_c - 1.0) / (bound_c * std::log(bound_c)));
    doc.add("h", h_of_c(bound_c));
    emit(global, doc.render(global.format));
  });

  double lo = 2.718281828459045, hi = 6.0, tol = 1e-6;
  auto* cstar_cmd = app.add_subcommand("cstar", "maximize the bound over [lo, hi]");
  cstar_cmd->fallthrough();
  cstar_cmd->add_option("--lo", lo, "lower end (>= e)")->capture_default_str();
  cstar_cmd->add_option("--hi", hi, "upper end")->capture_default_str();
  cstar_cmd->add_option("--tol", tol, "search tolerance")->capture_default_str();
  cstar_cmd->callback([&] {
    const CStarResult res = find_cstar(lo, hi, tol);
    KvDoc doc;
    doc.add("cstar", res.cstar);
    doc.add("bound", res.bound);
    emit(global, doc.render(global.format));
  });

  double cert_c = kDefaultIntervalBase;
  std::size_t cert_grid = 10000;
  auto* cert_cmd = app.add_subcommand("certify", "grid-certify the bound inequalities");
  cert_cmd->fallthrough();
  cert_cmd->add_option("--c", cert_c, "interval base >= e")->capture_default_str();
  cert_cmd->add_option("--grid", cert_grid, "grid points for u0")->capture_default_str();
  cert_cmd->callback([&] {
    const double ratio_viol = verify_ratio_all1(cert_c, cert_grid);
    const double ft_viol = max_ft_violation(cert_c, 1000);
    KvDoc doc;
    doc.add("c", cert_c);
    doc.add_int("grid", static_cast<long long>(cert_grid));
    doc.add("ratio_all1_max_violation", ratio_viol);
    doc.add("ft_max_violation", ft_viol);
    doc.add_bool("pass", ratio_viol <= 1e-9 && ft_viol <= 1e-9);
    emit(global, doc.render(global.format));
  });

  // ---- mc -----------------------------------------------------------------
  std::string mc_instance;
  double mc_c = kDefaultIntervalBase;
  std::uint64_t mc_trials = 10000;
  unsigned mc_threads = 1;
  auto* mc_cmd = app.add_subcommand("mc", "Monte-Carlo estimate of the randomized algorithm");
  mc_cmd->fallthrough();
  mc_cmd->add_option("--instance", mc_instance, "instance JSON file")->required();
  mc_cmd->add_option("--c", mc_c, "interval base > 1")->capture_default_str();
  mc_cmd->add_option("--trials", mc_trials, "number of trials")->capture_default_str();
  mc_cmd->add_option("--threads", mc_threads, "worker threads (results are identical)")
      ->capture_default_str();
  mc_cmd->callback([&] {
    const McStats stats =
        monte_carlo(load_instance(mc_instance), mc_c, mc_trials, global.seed, mc_threads);
    emit(global, mc_csv(stats));
    // per-trial CSV goes to --out; the summary goes to whichever standard
    // stream does not carry the CSV
    (global.to_stdout() ? std::cerr : std::cout) << mc_summary_json(stats) << "\n";
  });

  // ---- lb-det / lb-rand -----------------------------------------------------
  double lbd_delta = 1e-3;
  std::string lbd_algorithm = "greedy";
  std::string lbd_tie = "prefer-fastest";
  double lbd_c = kDefaultIntervalBase;
  std::vector<double> lbd_x;
  auto* lbd_cmd = app.add_subcommand("lb-det", "worst prefix ratio on the recurrence family");
  lbd_cmd->fallthrough();
  lbd_cmd->add_option("--delta", lbd_delta, "recurrence parameter > 0")->capture_default_str();
  lbd_cmd->add_option("--algorithm", lbd_algorithm, "greedy or interval")
      ->check(CLI::IsMember({"greedy", "interval"}));
  lbd_cmd->add_option("--tie", lbd_tie, "greedy tie rule")
      ->check(CLI::IsMember({"prefer-fastest", "prefer-slowest", "prefer-lowest-index"}));
  lbd_cmd->add_option("--c", lbd_c, "interval base > 1")->capture_default_str();
  lbd_cmd->add_option("--x", lbd_x, "explicit x values (default: all ones)")->delimiter(',');
  lbd_cmd->callback([&] {
    const RecurrenceParams seq = det_ub_sequence(lbd_delta);
    const Instance inst = seq.instance();
    PrefixWorstRatio worst;
    if (lbd_algorithm == "greedy") {
      GreedyRunner runner(inst, tie_names.at(lbd_tie));
      worst = prefix_worst_ratio(inst, runner);
    } else {
      std::vector<double> x = lbd_x.empty() ? std::vector<double>(inst.machines(), 1.0) : lbd_x;
      IntervalRunner runner(inst, IntervalParams{lbd_c, std::move(x)});
      worst = prefix_worst_ratio(inst, runner);
    }
    KvDoc doc;
    doc.add("delta", seq.delta);
    doc.add("a", seq.a);
    doc.add("r", seq.r);
    doc.add_int("jobs", static_cast<long long>(seq.w.size()));
    doc.add("min_ratio", worst.min_ratio);
    doc.add_int("argmin_prefix", static_cast<long long>(worst.argmin_prefix));
    emit(global, doc.render(global.format));
  });

  int lbr_n = 16;
  auto* lbr_cmd = app.add_subcommand("lb-rand", "exact analysis of the prefix distribution");
  lbr_cmd->fallthrough();
  lbr_cmd->add_option("--n", lbr_n, "number of doubling jobs (1..60)")->required();
  lbr_cmd->callback([&] {
    const double dp = dp_best_det(lbr_n);
    const double c = rand_ub_family(lbr_n).normalizer;
    const double expected = expected_opt_prefix(lbr_n);
    KvDoc doc;
    doc.add_int("n", lbr_n);
    doc.add("dp_value", dp);
    doc.add("cn_plus_1", c * lbr_n + 1.0);
    doc.add("expected_opt", expected);
    doc.add("ratio", dp / expected);
    emit(global, doc.render(global.format));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const decomatch::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 3 : 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
