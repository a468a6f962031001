#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqc/gtc.hpp"
#include "dqc/io.hpp"

namespace dqc::cli {

using nlohmann::json;

namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_complex(const Complex& z) {
  return "[" + fmt_real(z.real()) + ", " + fmt_real(z.imag()) + "]";
}

std::string join_order(const std::vector<std::size_t>& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(order[i]);
  }
  return out;
}

json jmatrix(const ComplexMatrix& a) { return json::parse(io::encode_matrix(a)); }
json jvector(const ComplexVector& v) { return json::parse(io::encode_vector(v)); }

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void print_matrix(std::ostringstream& out, const std::string& label, const ComplexMatrix& a) {
  out << label << " (" << a.rows() << "x" << a.cols() << "):\n";
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    out << " ";
    for (Eigen::Index c = 0; c < a.cols(); ++c) out << " " << fmt_complex(a(r, c));
    out << "\n";
  }
}

void print_vector(std::ostringstream& out, const std::string& label, const ComplexVector& v) {
  out << label << ":";
  for (Eigen::Index i = 0; i < v.size(); ++i) out << " " << fmt_complex(v[i]);
  out << "\n";
}

double env_tolerance() {
  const char* raw = std::getenv("DQC_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0))
    throw UsageError(std::string("BadFlagValue: DQC_TOLERANCE=") + raw);
  return value;
}

std::vector<std::size_t> parse_order_string(const std::string& text) {
  std::vector<std::size_t> order;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t pos = 0;
      const unsigned long value = std::stoul(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      order.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("BadFlagValue: --order expects comma-separated indices, got '" + text +
                       "'");
    }
  }
  if (order.empty())
    throw UsageError("BadFlagValue: --order expects comma-separated indices");
  return order;
}

struct ParseState {
  std::string format_name = "table";
  std::string order_text;
  bool exhaustive = false;
  bool greedy = false;
};

void add_common(CLI::App* sub, RunConfig& cfg, ParseState& state) {
  sub->add_option("-o,--output", cfg.output_path, "Write the report to this file instead of stdout");
  sub->add_option("-f,--format", state.format_name, "Report format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  sub->add_option("--tolerance", cfg.tolerance,
                  "Structural-check tolerance (default 1e-9; DQC_TOLERANCE overrides)");
}

void build_app(CLI::App& app, RunConfig& cfg, ParseState& state) {
  app.description("Duality quantum computing simulator and analysis toolkit");
  app.require_subcommand(1);

  auto* dec = app.add_subcommand(
      "decompose", "Split a contraction matrix into the average of two unitaries.\n"
                   "CSV columns: metric,value");
  dec->add_option("--matrix", cfg.input_path, "JSON matrix file")->required();
  dec->callback([&cfg] { cfg.command = Command::decompose; });
  add_common(dec, cfg, state);

  auto* run = app.add_subcommand(
      "run", "Execute a program exactly with per-step projections.\n"
             "CSV columns: step,closed_form_p,simulated_p,cumulative_product,restarts,"
             "elapsed_time");
  run->add_option("--program", cfg.input_path, "JSON program file")->required();
  run->add_option("--order", state.order_text, "Gate order override, e.g. \"2,0,1\"");
  run->callback([&cfg] {
    cfg.command = Command::run;
    cfg.mode = RunConfig::Mode::exact;
  });
  add_common(run, cfg, state);

  auto* mc = app.add_subcommand(
      "montecarlo", "Sample the restart process of a program.\n"
                    "CSV columns: step,exact_p,empirical_p,reached,successes; then metric,value");
  mc->add_option("--program", cfg.input_path, "JSON program file")->required();
  mc->add_option("--seed", cfg.seed, "RNG seed (default 0)");
  mc->add_option("--trials", cfg.trials, "Number of trials (default 1000)")
      ->check(CLI::PositiveNumber);
  mc->callback([&cfg] {
    cfg.command = Command::montecarlo;
    cfg.mode = RunConfig::Mode::mc;
  });
  add_common(mc, cfg, state);

  auto* search = app.add_subcommand(
      "order-search", "Minimize the expected run time over gate orders.\n"
                      "CSV columns: order,p_0..p_M,et,et_prime,ratio,best");
  search->add_option("--program", cfg.input_path, "JSON program file")->required();
  auto* ex = search->add_flag("--exhaustive", state.exhaustive, "Force exhaustive search");
  auto* gr = search->add_flag("--greedy", state.greedy, "Force the greedy heuristic");
  ex->excludes(gr);
  gr->excludes(ex);
  search->callback([&cfg] { cfg.command = Command::order_search; });
  add_common(search, cfg, state);

  auto* gs = app.add_subcommand(
      "ground-state", "Run the Chebyshev ground-state preparation pipeline.\n"
                      "CSV columns: metric,value");
  gs->add_option("--problem", cfg.input_path, "JSON problem file")->required();
  gs->callback([&cfg] { cfg.command = Command::ground_state; });
  add_common(gs, cfg, state);

  auto* sweep = app.add_subcommand(
      "sweep", "Uniform-model expected-time comparison over M = 1,2,4,... <= m-max.\n"
               "CSV columns: M,p,et,et_prime,ratio");
  sweep->add_option("--p", cfg.sweep_p, "Per-step success probability in (0,1)");
  sweep->add_option("--m-max", cfg.sweep_m_max, "Largest M (default 16)")
      ->check(CLI::PositiveNumber);
  sweep->callback([&cfg] { cfg.command = Command::sweep; });
  add_common(sweep, cfg, state);
}

void finalize(RunConfig& cfg, const ParseState& state) {
  if (state.format_name == "csv")
    cfg.format = Format::csv;
  else if (state.format_name == "json")
    cfg.format = Format::json;
  else
    cfg.format = Format::table;
  if (!state.order_text.empty()) cfg.order_override = parse_order_string(state.order_text);
  if (state.exhaustive) cfg.force_method = SearchMethod::exhaustive;
  if (state.greedy) cfg.force_method = SearchMethod::greedy;
  if (!(cfg.tolerance > 0.0)) throw UsageError("BadFlagValue: tolerance must be positive");
}

// ---------------------------------------------------------------------------
// reports

std::string report_decompose(const RunConfig& cfg) {
  const ComplexMatrix a = io::load_matrix(cfg.input_path);
  const TwoUnitaryDecomposition d = decompose_contraction(a, cfg.tolerance);
  const Eigen::Index n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const double recombine = (a - 0.5 * (d.u0 + d.u1)).norm();
  const double unit0 = (d.u0.adjoint() * d.u0 - id).norm();
  const double unit1 = (d.u1.adjoint() * d.u1 - id).norm();

  switch (cfg.format) {
    case Format::json: {
      json j;
      j["u0"] = jmatrix(d.u0);
      j["u1"] = jmatrix(d.u1);
      j["recombine_residual"] = recombine;
      j["unitarity_residual_u0"] = unit0;
      j["unitarity_residual_u1"] = unit1;
      return dump_json(j);
    }
    case Format::csv: {
      std::ostringstream out;
      out << "metric,value\n";
      out << "recombine_residual," << fmt_real(recombine) << "\n";
      out << "unitarity_residual_u0," << fmt_real(unit0) << "\n";
      out << "unitarity_residual_u1," << fmt_real(unit1) << "\n";
      return out.str();
    }
    case Format::table:
    default: {
      std::ostringstream out;
      print_matrix(out, "u0", d.u0);
      print_matrix(out, "u1", d.u1);
      out << "recombine_residual: " << fmt_real(recombine) << "\n";
      out << "unitarity_residual_u0: " << fmt_real(unit0) << "\n";
      out << "unitarity_residual_u1: " << fmt_real(unit1) << "\n";
      return out.str();
    }
  }
}

std::string report_run(const RunConfig& cfg) {
  io::ProgramFile file = io::load_program(cfg.input_path, cfg.tolerance);
  if (cfg.order_override) file.program.order = *cfg.order_override;
  const RunTrace trace = run_swp_exact(file.program, file.initial_state, cfg.tolerance);
  if (trace.annihilated)
    raise("ZeroProbabilityProjection",
          "projection at step " + std::to_string(trace.annihilated_step) +
              " annihilated the state");

  const std::vector<double> b = survival_probs(file.program, file.initial_state);
  const double a_dag_a =
      (file.program.combined_operator() * file.initial_state).squaredNorm();
  const std::vector<double> closed = closed_form_step_probs(
      file.program.divider_combiner.weights, b, file.program.order, a_dag_a);

  std::vector<double> cumulative(trace.step_probabilities.size());
  double prod = 1.0;
  for (std::size_t i = 0; i < trace.step_probabilities.size(); ++i) {
    prod *= trace.step_probabilities[i];
    cumulative[i] = prod;
  }

  switch (cfg.format) {
    case Format::json: {
      json j;
      j["order"] = file.program.order;
      j["step_probabilities"] = trace.step_probabilities;
      j["closed_form_probabilities"] = closed;
      j["cumulative_products"] = cumulative;
      j["overall_probability"] = trace.overall_probability;
      j["a_dag_a_expectation"] = a_dag_a;
      j["restarts"] = trace.restarts;
      j["elapsed_time"] = trace.elapsed_time;
      j["final_state"] = jvector(trace.final_state);
      return dump_json(j);
    }
    case Format::csv: {
      std::ostringstream out;
      out << "step,closed_form_p,simulated_p,cumulative_product,restarts,elapsed_time\n";
      for (std::size_t i = 0; i < trace.step_probabilities.size(); ++i)
        out << i << "," << fmt_real(closed[i]) << "," << fmt_real(trace.step_probabilities[i])
            << "," << fmt_real(cumulative[i]) << "," << trace.restarts << ","
            << fmt_real(trace.elapsed_time) << "\n";
      return out.str();
    }
    case Format::table:
    default: {
      std::ostringstream out;
      out << "order: " << join_order(file.program.order) << "\n";
      out << "step  closed_form_p      simulated_p        cumulative_product\n";
      for (std::size_t i = 0; i < trace.step_probabilities.size(); ++i) {
        char line[160];
        std::snprintf(line, sizeof line, "%-5zu %-18s %-18s %-18s\n", i,
                      fmt_real(closed[i]).c_str(), fmt_real(trace.step_probabilities[i]).c_str(),
                      fmt_real(cumulative[i]).c_str());
        out << line;
      }
      out << "overall_probability: " << fmt_real(trace.overall_probability) << "\n";
      out << "a_dag_a_expectation: " << fmt_real(a_dag_a) << "\n";
      out << "elapsed_time: " << fmt_real(trace.elapsed_time) << "\n";
      print_vector(out, "final_state", trace.final_state);
      return out.str();
    }
  }
}

std::string report_montecarlo(const RunConfig& cfg) {
  io::ProgramFile file = io::load_program(cfg.input_path, cfg.tolerance);
  const RunTrace exact = run_swp_exact(file.program, file.initial_state, cfg.tolerance);
  if (exact.annihilated)
    raise("ZeroProbabilityProjection", "program can never succeed on this input");
  const MonteCarloSummary summary =
      run_swp_montecarlo(file.program, file.initial_state, cfg.seed, cfg.trials, cfg.tolerance);
  const double et_model =
      mean_time_swp(exact.step_probabilities, file.program.times, file.program.order);
  const double et_final_model =
      mean_time_final(exact.overall_probability, file.program.times);

  switch (cfg.format) {
    case Format::json: {
      json j;
      j["seed"] = cfg.seed;
      j["trials"] = summary.trials;
      json steps = json::array();
      for (std::size_t i = 0; i < summary.steps.size(); ++i) {
        steps.push_back(json{{"step", i},
                             {"exact_p", exact.step_probabilities[i]},
                             {"empirical_p", summary.steps[i].empirical_p()},
                             {"reached", summary.steps[i].reached},
                             {"successes", summary.steps[i].succeeded}});
      }
      j["steps"] = steps;
      j["mean_restarts"] = summary.mean_restarts;
      j["mean_attempts"] = summary.mean_attempts;
      j["attempts_stddev"] = summary.attempts_stddev;
      j["mean_elapsed_time"] = summary.mean_elapsed;
      j["elapsed_stddev"] = summary.elapsed_stddev;
      j["expected_time_model"] = et_model;
      j["expected_time_final_model"] = et_final_model;
      return dump_json(j);
    }
    case Format::csv: {
      std::ostringstream out;
      out << "step,exact_p,empirical_p,reached,successes\n";
      for (std::size_t i = 0; i < summary.steps.size(); ++i)
        out << i << "," << fmt_real(exact.step_probabilities[i]) << ","
            << fmt_real(summary.steps[i].empirical_p()) << "," << summary.steps[i].reached << ","
            << summary.steps[i].succeeded << "\n";
      out << "metric,value\n";
      out << "trials," << summary.trials << "\n";
      out << "mean_restarts," << fmt_real(summary.mean_restarts) << "\n";
      out << "mean_attempts," << fmt_real(summary.mean_attempts) << "\n";
      out << "attempts_stddev," << fmt_real(summary.attempts_stddev) << "\n";
      out << "mean_elapsed_time," << fmt_real(summary.mean_elapsed) << "\n";
      out << "elapsed_stddev," << fmt_real(summary.elapsed_stddev) << "\n";
      out << "expected_time_model," << fmt_real(et_model) << "\n";
      out << "expected_time_final_model," << fmt_real(et_final_model) << "\n";
      return out.str();
    }
    case Format::table:
    default: {
      std::ostringstream out;
      out << "step  exact_p            empirical_p        reached    successes\n";
      for (std::size_t i = 0; i < summary.steps.size(); ++i) {
        char line[160];
        std::snprintf(line, sizeof line, "%-5zu %-18s %-18s %-10zu %zu\n", i,
                      fmt_real(exact.step_probabilities[i]).c_str(),
                      fmt_real(summary.steps[i].empirical_p()).c_str(),
                      summary.steps[i].reached, summary.steps[i].succeeded);
        out << line;
      }
      out << "trials: " << summary.trials << "\n";
      out << "mean_restarts: " << fmt_real(summary.mean_restarts) << "\n";
      out << "mean_attempts: " << fmt_real(summary.mean_attempts) << "\n";
      out << "mean_elapsed_time: " << fmt_real(summary.mean_elapsed) << "\n";
      out << "expected_time_model: " << fmt_real(et_model) << "\n";
      out << "expected_time_final_model: " << fmt_real(et_final_model) << "\n";
      return out.str();
    }
  }
}

std::string report_order_search(const RunConfig& cfg) {
  io::ProgramFile file = io::load_program(cfg.input_path, cfg.tolerance);
  const OrderSearchResult result = order_search(file.program, file.initial_state,
                                                cfg.force_method, true, cfg.tolerance);
  const char* method = result.method == SearchMethod::exhaustive ? "exhaustive" : "greedy";

  switch (cfg.format) {
    case Format::json: {
      json j;
      j["method"] = method;
      j["evaluated"] = result.evaluated;
      j["best_order"] = result.best_order;
      j["best_et"] = result.best_et;
      json rows = json::array();
      for (const OrderEvaluation& e : result.evaluations) {
        double overall = 1.0;
        for (double p : e.step_probs) overall *= p;
        rows.push_back(json{{"order", e.order},
                            {"step_probabilities", e.step_probs},
                            {"et", e.et},
                            {"et_prime", mean_time_final(overall, file.program.times)},
                            {"best", e.order == result.best_order}});
      }
      j["rows"] = rows;
      return dump_json(j);
    }
    case Format::csv: {
      std::ostringstream out;
      out << "order";
      for (std::size_t i = 0; i <= file.program.term_count(); ++i) out << ",p_" << i;
      out << ",et,et_prime,ratio,best\n";
      for (const OrderEvaluation& e : result.evaluations) {
        double overall = 1.0;
        for (double p : e.step_probs) overall *= p;
        const double et_prime = mean_time_final(overall, file.program.times);
        out << join_order(e.order);
        for (double p : e.step_probs) out << "," << fmt_real(p);
        out << "," << fmt_real(e.et) << "," << fmt_real(et_prime) << ","
            << fmt_real(et_prime / e.et) << "," << (e.order == result.best_order ? 1 : 0)
            << "\n";
      }
      return out.str();
    }
    case Format::table:
    default: {
      std::ostringstream out;
      out << "method: " << method << "\n";
      out << "evaluated: " << result.evaluated << "\n";
      out << "best_order: " << join_order(result.best_order) << "\n";
      out << "best_et: " << fmt_real(result.best_et) << "\n";
      out << "order | et\n";
      for (const OrderEvaluation& e : result.evaluations)
        out << join_order(e.order) << " | " << fmt_real(e.et)
            << (e.order == result.best_order ? "  <- best" : "") << "\n";
      return out.str();
    }
  }
}

std::string report_ground_state(const RunConfig& cfg) {
  io::ProblemFile file = io::load_problem(cfg.input_path, cfg.tolerance);
  const GroundStateResult result =
      prepare_ground_state(file.problem, file.options, cfg.tolerance);
  if (result.trace.annihilated)
    raise("ZeroProbabilityProjection", "pipeline annihilated the trial state");
  const TimingModel timing = compute_timing(result.trace.step_probabilities,
                                            result.plan.program.times,
                                            result.plan.program.order);
  const RegisterLayout& layout = result.plan.program.layout;

  switch (cfg.format) {
    case Format::json: {
      json j;
      j["m0"] = result.plan.m0;
      j["power"] = result.plan.power;
      j["terms"] = result.plan.terms;
      j["alphas"] = result.plan.alphas;
      j["alpha_sum"] = result.plan.alpha_sum;
      j["qubits"] = json{{"m", layout.m}, {"p", layout.p}, {"n", layout.n},
                         {"total", layout.total_qubits()}};
      j["lambda0"] = file.problem.lambda0;
      j["gap"] = file.problem.gap;
      j["delta_e"] = file.problem.delta_e;
      j["phi0"] = file.problem.phi0;
      j["step_probabilities"] = result.trace.step_probabilities;
      j["overall_probability"] = result.trace.overall_probability;
      j["fidelity"] = result.fidelity;
      j["et_swp"] = timing.et_swp;
      j["et_final"] = timing.et_final;
      j["final_state"] = jvector(result.state);
      return dump_json(j);
    }
    case Format::csv: {
      std::ostringstream out;
      out << "metric,value\n";
      out << "m0," << result.plan.m0 << "\n";
      out << "power," << result.plan.power << "\n";
      out << "terms," << result.plan.terms << "\n";
      for (std::size_t i = 0; i < result.plan.alphas.size(); ++i)
        out << "alpha_" << i << "," << fmt_real(result.plan.alphas[i]) << "\n";
      out << "alpha_sum," << fmt_real(result.plan.alpha_sum) << "\n";
      out << "qubits_total," << layout.total_qubits() << "\n";
      out << "lambda0," << fmt_real(file.problem.lambda0) << "\n";
      out << "gap," << fmt_real(file.problem.gap) << "\n";
      out << "delta_e," << fmt_real(file.problem.delta_e) << "\n";
      out << "phi0," << fmt_real(file.problem.phi0) << "\n";
      for (std::size_t i = 0; i < result.trace.step_probabilities.size(); ++i)
        out << "p_" << i << "," << fmt_real(result.trace.step_probabilities[i]) << "\n";
      out << "overall_probability," << fmt_real(result.trace.overall_probability) << "\n";
      out << "fidelity," << fmt_real(result.fidelity) << "\n";
      out << "et_swp," << fmt_real(timing.et_swp) << "\n";
      out << "et_final," << fmt_real(timing.et_final) << "\n";
      return out.str();
    }
    case Format::table:
    default: {
      std::ostringstream out;
      out << "power (M0): " << result.plan.power << "   terms (M): " << result.plan.terms
          << "\n";
      out << "alphas:";
      for (double a : result.plan.alphas) out << " " << fmt_real(a);
      out << "   sum: " << fmt_real(result.plan.alpha_sum) << "\n";
      out << "register: m=" << layout.m << " p=" << layout.p << " n=" << layout.n
          << " (total " << layout.total_qubits() << " qubits, dimension "
          << layout.total_dim() << ")\n";
      out << "lambda0: " << fmt_real(file.problem.lambda0)
          << "   gap: " << fmt_real(file.problem.gap)
          << "   delta_e: " << fmt_real(file.problem.delta_e)
          << "   phi0: " << fmt_real(file.problem.phi0) << "\n";
      out << "step_probabilities:";
      for (double p : result.trace.step_probabilities) out << " " << fmt_real(p);
      out << "\n";
      out << "overall_probability: " << fmt_real(result.trace.overall_probability) << "\n";
      out << "fidelity: " << fmt_real(result.fidelity) << "\n";
      out << "et_swp: " << fmt_real(timing.et_swp)
          << "   et_final: " << fmt_real(timing.et_final) << "\n";
      print_vector(out, "final_state", result.state);
      return out.str();
    }
  }
}

std::string report_sweep(const RunConfig& cfg) {
  std::vector<int> m_values;
  for (int m = 1; m <= cfg.sweep_m_max; m *= 2) m_values.push_back(m);
  const std::vector<SweepRow> rows = speedup_sweep(cfg.sweep_p, m_values);

  switch (cfg.format) {
    case Format::json: {
      json j = json::array();
      for (const SweepRow& r : rows)
        j.push_back(json{{"M", r.terms},
                         {"p", r.p},
                         {"et", r.et},
                         {"et_prime", r.et_final},
                         {"ratio", r.ratio}});
      return dump_json(j);
    }
    case Format::csv: {
      std::ostringstream out;
      out << "M,p,et,et_prime,ratio\n";
      for (const SweepRow& r : rows)
        out << r.terms << "," << fmt_real(r.p) << "," << fmt_real(r.et) << ","
            << fmt_real(r.et_final) << "," << fmt_real(r.ratio) << "\n";
      return out.str();
    }
    case Format::table:
    default: {
      std::ostringstream out;
      out << "M      et                 et_prime           ratio\n";
      for (const SweepRow& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-6d %-18s %-18s %s\n", r.terms,
                      fmt_real(r.et).c_str(), fmt_real(r.et_final).c_str(),
                      fmt_real(r.ratio).c_str());
        out << line;
      }
      return out.str();
    }
  }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.tolerance = env_tolerance();
  ParseState state;
  CLI::App app{"dqc"};
  build_app(app, cfg, state);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), 0);
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.get_name()) + ": " + e.what() + "\n" + app.help());
  }
  finalize(cfg, state);
  return cfg;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  std::string report;
  switch (cfg.command) {
    case Command::decompose: report = report_decompose(cfg); break;
    case Command::run: report = report_run(cfg); break;
    case Command::montecarlo: report = report_montecarlo(cfg); break;
    case Command::order_search: report = report_order_search(cfg); break;
    case Command::ground_state: report = report_ground_state(cfg); break;
    case Command::sweep: report = report_sweep(cfg); break;
  }
  if (cfg.output_path)
    io::write_file(*cfg.output_path, report);
  else
    out << report;
  return 0;
}

int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    if (e.exit_code() == 0) {
      out << e.what() << "\n";
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }
  try {
    return execute(cfg, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dqc::cli
