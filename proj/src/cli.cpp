#include "gaf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "gaf/bounds.hpp"
#include "gaf/json_io.hpp"

namespace gaf::cli {

namespace {

using nlohmann::json;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out = kToolName;
  for (const std::string& a : args) {
    out += ' ';
    out += a;
  }
  return out;
}

json make_manifest(const std::vector<std::string>& args) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", join_args(args)}};
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  file << content;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

struct PartitionFlags {
  std::string scheme = "gaf";
  double r = 0.0;
  double d = 0.0;
  int k = 4;
  double width = 0.0;
  double height = 0.0;
  double radio_range = 1.0;

  SchemeParams params() const {
    SchemeParams p;
    p.scheme = scheme_from_name(scheme);
    p.r = r;
    p.d = d;
    p.k = p.scheme == Scheme::ehgaf_twotype ? k : 0;
    return p;
  }
  FieldSpec field() const { return {width, height, radio_range}; }
};

void add_partition_flags(CLI::App* cmd, PartitionFlags& flags,
                         bool require_scheme) {
  auto* scheme = cmd->add_option(
      "--scheme", flags.scheme,
      "gaf, hgaf, ehgaf, ehgaf-triangle or ehgaf-twotype");
  if (require_scheme) scheme->required();
  cmd->add_option("--r", flags.r,
                  "cell edge (square schemes) or cell height (triangles)");
  cmd->add_option("--d", flags.d, "subcell edge; 0 for the point-subcell limit");
  cmd->add_option("--k", flags.k, "type-B column period (ehgaf-twotype)");
  cmd->add_option("--width", flags.width, "field width")->required();
  cmd->add_option("--height", flags.height, "field height")->required();
  cmd->add_option("--radio-range", flags.radio_range, "radio range R");
}

json backbone_summary(const Partition& partition) {
  std::map<int, ActivePlacement> actives;
  for (const Cell& c : partition.cells) {
    actives[c.id] = {c.id, active_position(partition, c.id, 0)};
  }
  const BackboneGraph graph =
      build_backbone(partition, actives, partition.field.radio_range);

  double max_edge = 0.0;
  for (const BackboneEdge& e : graph.edges) max_edge = std::max(max_edge, e.length);
  for (const BackboneEdge& e : graph.violations) {
    max_edge = std::max(max_edge, e.length);
  }
  json degrees = json::object();
  for (const auto& [degree, count] : degree_histogram(graph)) {
    degrees[std::to_string(degree)] = count;
  }
  return {{"connected", is_connected(graph)},
          {"component_count", graph.component_count},
          {"violation_count", graph.violations.size()},
          {"max_edge_length", max_edge},
          {"degree_histogram", std::move(degrees)}};
}

int cmd_partition(const PartitionFlags& flags, const std::string& out_path,
                  const std::vector<std::string>& args, std::ostream& out) {
  const Partition partition = build_partition(flags.field(), flags.params());
  json j = partition_to_json(partition);
  j["manifest"] = make_manifest(args);
  write_output(out_path, j.dump(2) + "\n", out);
  return 0;
}

int cmd_verify(const PartitionFlags& flags, bool flags_given,
               const std::string& in_path, double resolution, long rounds,
               const std::string& out_path,
               const std::vector<std::string>& args, std::ostream& out) {
  Partition partition;
  if (!in_path.empty()) {
    std::ifstream file(in_path);
    if (!file) throw std::invalid_argument("cannot read '" + in_path + "'");
    json j;
    file >> j;
    partition = partition_from_json(j);
  } else if (flags_given) {
    partition = build_partition(flags.field(), flags.params());
  } else {
    throw std::invalid_argument("verify needs --in or inline scheme flags");
  }

  const double R = partition.field.radio_range;
  ReqReport report;
  report.params = partition.params;
  report.radio_range = R;
  report.req1_worst = worst_adjacent_distance(partition.params, R);
  report.req2_worst = worst_intracell_distance(partition.params, R);
  const double limit = R * (1.0 + kFeasibilityTol);
  report.feasible = report.req1_worst <= limit && report.req2_worst <= limit;
  const bool tight1 = report.req1_worst >= R * (1.0 - kFeasibilityTol);
  const bool tight2 = report.req2_worst >= R * (1.0 - kFeasibilityTol);
  report.binding = tight1 && tight2 ? BindingConstraint::both
                   : tight1        ? BindingConstraint::req1
                   : tight2        ? BindingConstraint::req2
                                   : BindingConstraint::none;

  json j = {{"manifest", make_manifest(args)},
            {"report", req_report_to_json(report)},
            {"backbone", backbone_summary(partition)}};
  if (resolution > 0.0) {
    const WorstDistances brute =
        brute_force_worst_distances(partition, resolution, rounds);
    j["brute"] = {{"resolution", resolution},
                  {"rounds", rounds},
                  {"req1_worst", brute.req1_worst},
                  {"req2_worst", brute.req2_worst}};
  }
  write_output(out_path, j.dump(2) + "\n", out);

  const bool connected = j["backbone"]["connected"].get<bool>();
  return report.feasible && connected ? 0 : 1;
}

struct SimulateFlags {
  PartitionFlags partition;
  bool all_schemes = false;
  int nodes = 0;
  double initial_energy = 10.0;
  double e_active = 1.0;
  double e_sleep = 0.0;
  std::uint64_t seed = 1;
  int seeds = 1;
  int epoch_length = 1;
  std::string criterion = "first-cell-dead";
};

int cmd_simulate(const SimulateFlags& flags, const std::string& out_path,
                 const std::vector<std::string>& args, std::ostream& out) {
  const double R = flags.partition.radio_range;
  std::vector<SchemeParams> runs;
  if (flags.all_schemes) {
    for (Scheme s : all_schemes()) {
      SchemeParams p;
      p.scheme = s;
      p.r = max_cell_dims(s, 0.0, R).r_max;
      p.k = s == Scheme::ehgaf_twotype ? flags.partition.k : 0;
      runs.push_back(p);
    }
  } else {
    SchemeParams p = flags.partition.params();
    if (p.r == 0.0 && p.scheme != Scheme::ehgaf_twotype) {
      p.r = max_cell_dims(p.scheme, 0.0, R).r_max;
    }
    runs.push_back(p);
  }

  SimConfig base;
  base.field = flags.partition.field();
  base.node_count = flags.nodes;
  base.initial_energy = flags.initial_energy;
  base.e_active = flags.e_active;
  base.e_sleep = flags.e_sleep;
  base.epoch_length = flags.epoch_length;
  base.criterion = lifetime_criterion_from_name(flags.criterion);

  struct Job {
    std::size_t run = 0;
    std::uint64_t seed = 0;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (int s = 0; s < flags.seeds; ++s) {
      jobs.push_back({i, flags.seed + static_cast<std::uint64_t>(s)});
    }
  }
  for (const SchemeParams& p : runs) validate_params(base.field, p);

  // independent runs, deterministic row order by (scheme, seed)
  std::vector<SimResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u,
      std::min<unsigned>(std::thread::hardware_concurrency(),
                         static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        SimConfig config = base;
        config.params = runs[jobs[i].run];
        config.seed = jobs[i].seed;
        results[i] = run_simulation(config);
      }
    });
  }
  for (std::thread& t : pool) t.join();

  std::ostringstream csv;
  csv << "# " << join_args(args) << "\n";
  csv << "scheme,seed,lifetime,mean_active_count\n";
  std::vector<std::pair<double, std::string>> summaries;
  std::size_t row = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::vector<double> lifetimes, means;
    for (int s = 0; s < flags.seeds; ++s, ++row) {
      const SimResult& r = results[row];
      csv << scheme_name(runs[i].scheme) << ',' << jobs[row].seed << ','
          << r.lifetime << ',' << fmt("%.4f", r.mean_active_count) << "\n";
      lifetimes.push_back(static_cast<double>(r.lifetime));
      means.push_back(r.mean_active_count);
    }
    const double med = median(lifetimes);
    std::ostringstream line;
    line << scheme_name(runs[i].scheme) << ",median," << fmt("%.1f", med)
         << ',' << fmt("%.4f", median(means)) << "\n";
    summaries.emplace_back(med, line.str());
  }
  std::stable_sort(summaries.begin(), summaries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [med, line] : summaries) csv << line;

  write_output(out_path, csv.str(), out);
  return 0;
}

int cmd_tables(double R, const std::string& out_path,
               const std::vector<std::string>& args, std::ostream& out) {
  const double upper = std::numbers::pi * R * R - delta(R);
  const int reference[] = {11, 26, 52, 68, 91};

  std::ostringstream csv;
  csv << "# " << join_args(args) << "\n";
  csv << "scheme,max_cell_area,pct_of_bound,reference_pct\n";
  int i = 0;
  for (Scheme s : all_schemes()) {
    const double area = scheme_max_area(s, R);
    csv << scheme_name(s) << ',' << fmt("%.7f", area) << ','
        << fmt("%.2f", 100.0 * area / upper) << ',' << reference[i++] << "\n";
  }
  csv << "bound," << fmt("%.7f", upper) << ",100.00,100\n";
  write_output(out_path, csv.str(), out);
  return 0;
}

int cmd_bounds(double R, int max_n, std::int64_t samples, std::uint64_t seed,
               const std::string& out_path,
               const std::vector<std::string>& args, std::ostream& out) {
  if (max_n < 2) throw std::invalid_argument("--max-n must be >= 2");
  json chain = json::array();
  json avg = json::array();
  for (int n = 1; n <= max_n; ++n) {
    chain.push_back({{"n", n}, {"area", chain_max_area(n, R)}});
    avg.push_back({{"n", n}, {"area", avg_cell_bound(n, R)}});
  }
  json verification = json::array();
  for (int n = 2; n <= max_n; ++n) {
    verification.push_back(
        chain_verification_to_json(verify_chain_construction(n, R, samples, seed)));
  }
  const json j = {{"manifest", make_manifest(args)},
                  {"delta", delta(R)},
                  {"upper_bound", std::numbers::pi * R * R - delta(R)},
                  {"chain", std::move(chain)},
                  {"avg_cell_bound", std::move(avg)},
                  {"chain_verification", std::move(verification)}};
  write_output(out_path, j.dump(2) + "\n", out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"cell-partitioning toolkit for geographic sleep scheduling"};
  app.name(kToolName);
  app.require_subcommand(1);

  PartitionFlags part_flags;
  std::string part_out = "-";
  auto* partition_cmd =
      app.add_subcommand("partition", "generate a cell partition as JSON");
  add_partition_flags(partition_cmd, part_flags, true);
  partition_cmd->add_option("--out", part_out, "output path, - for stdout");

  PartitionFlags verify_flags;
  verify_flags.width = verify_flags.height = 1.0;  // replaced when given
  std::string verify_in;
  std::string verify_out = "-";
  double verify_resolution = 0.0;
  long verify_rounds = 0;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check communication requirements and backbone connectivity");
  verify_cmd->add_option("--scheme", verify_flags.scheme, "scheme name");
  verify_cmd->add_option("--r", verify_flags.r, "cell edge / height");
  verify_cmd->add_option("--d", verify_flags.d, "subcell edge");
  verify_cmd->add_option("--k", verify_flags.k, "type-B column period");
  verify_cmd->add_option("--width", verify_flags.width, "field width");
  verify_cmd->add_option("--height", verify_flags.height, "field height");
  verify_cmd->add_option("--radio-range", verify_flags.radio_range, "radio range R");
  verify_cmd->add_option("--in", verify_in, "partition JSON produced by `partition`");
  verify_cmd->add_option("--resolution", verify_resolution,
                         "sampling pitch for the brute-force check (0 = skip)");
  verify_cmd->add_option("--rounds", verify_rounds,
                         "rotation steps for the brute-force check (0 = full period)");
  verify_cmd->add_option("--out", verify_out, "output path, - for stdout");

  SimulateFlags sim_flags;
  std::string sim_out = "-";
  auto* simulate_cmd =
      app.add_subcommand("simulate", "run energy-drain lifetime simulations");
  simulate_cmd->add_option("--scheme", sim_flags.partition.scheme, "scheme name");
  simulate_cmd->add_flag("--all-schemes", sim_flags.all_schemes,
                         "simulate every scheme at its maximal cell size");
  simulate_cmd->add_option("--r", sim_flags.partition.r,
                           "cell edge / height (0 = scheme maximum)");
  simulate_cmd->add_option("--d", sim_flags.partition.d, "subcell edge");
  simulate_cmd->add_option("--k", sim_flags.partition.k, "type-B column period");
  simulate_cmd->add_option("--width", sim_flags.partition.width, "field width")
      ->required();
  simulate_cmd->add_option("--height", sim_flags.partition.height, "field height")
      ->required();
  simulate_cmd->add_option("--radio-range", sim_flags.partition.radio_range,
                           "radio range R");
  simulate_cmd->add_option("--nodes", sim_flags.nodes, "deployed node count")
      ->required();
  simulate_cmd->add_option("--initial-energy", sim_flags.initial_energy,
                           "initial energy per node");
  simulate_cmd->add_option("--e-active", sim_flags.e_active,
                           "energy drained per active round");
  simulate_cmd->add_option("--e-sleep", sim_flags.e_sleep,
                           "energy drained per sleeping round");
  simulate_cmd->add_option("--seed", sim_flags.seed, "base random seed");
  simulate_cmd->add_option("--seeds", sim_flags.seeds, "number of seeds to sweep");
  simulate_cmd->add_option("--epoch-length", sim_flags.epoch_length,
                           "rounds per rotation/sliding epoch");
  simulate_cmd->add_option("--criterion", sim_flags.criterion,
                           "first-cell-dead or backbone-disconnected");
  simulate_cmd->add_option("--out", sim_out, "output path, - for stdout");

  double tables_R = 1.0;
  std::string tables_out = "-";
  auto* tables_cmd = app.add_subcommand(
      "tables", "emit maximal cell sizes and lifetime percentages as CSV");
  tables_cmd->add_option("--radio-range", tables_R, "radio range R");
  tables_cmd->add_option("--out", tables_out, "output path, - for stdout");

  double bounds_R = 1.0;
  int bounds_max_n = 5;
  std::int64_t bounds_samples = 1000000;
  std::uint64_t bounds_seed = 12345;
  std::string bounds_out = "-";
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "print the overlap bound values and the chain validation");
  bounds_cmd->add_option("--radio-range", bounds_R, "radio range R");
  bounds_cmd->add_option("--max-n", bounds_max_n, "largest chain length");
  bounds_cmd->add_option("--samples", bounds_samples, "Monte Carlo samples");
  bounds_cmd->add_option("--seed", bounds_seed, "Monte Carlo seed");
  bounds_cmd->add_option("--out", bounds_out, "output path, - for stdout");

  // CLI11 wants a mutable argv
  std::vector<std::string> argv_strings = args;
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>(kToolName));
  for (std::string& s : argv_strings) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (app.got_subcommand(partition_cmd)) {
      return cmd_partition(part_flags, part_out, args, out);
    }
    if (app.got_subcommand(verify_cmd)) {
      const bool flags_given = verify_cmd->count("--scheme") > 0;
      return cmd_verify(verify_flags, flags_given, verify_in, verify_resolution,
                        verify_rounds, verify_out, args, out);
    }
    if (app.got_subcommand(simulate_cmd)) {
      return cmd_simulate(sim_flags, sim_out, args, out);
    }
    if (app.got_subcommand(tables_cmd)) {
      return cmd_tables(tables_R, tables_out, args, out);
    }
    if (app.got_subcommand(bounds_cmd)) {
      return cmd_bounds(bounds_R, bounds_max_n, bounds_samples, bounds_seed,
                        bounds_out, args, out);
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gaf::cli
