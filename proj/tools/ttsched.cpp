// Command-line front end: closed-form analysis, sequence dumps, reference
// table verification, reuse-lattice sizing, and the simulation experiment
// presets, all deterministic under --seed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttsched/analytics.hpp"
#include "ttsched/reuse.hpp"
#include "ttsched/schemes.hpp"
#include "ttsched/simulator.hpp"
#include "ttsched/topology.hpp"

namespace {

using nlohmann::json;
using namespace ttsched;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitGenerationTimeout = 3;

std::string format_double(double v, int precision = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw CLI::ValidationError("expected a comma-separated number list");
  return out;
}

// "0.1..0.5" sweeps in steps of 0.1; otherwise a comma list.
std::vector<double> parse_sweep(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return parse_double_list(text);
  const double lo = std::stod(text.substr(0, dots));
  const double hi = std::stod(text.substr(dots + 2));
  std::vector<double> out;
  for (double v = lo; v <= hi + 1e-9; v += 0.1) out.push_back(v);
  return out;
}

Scheme parse_scheme(const std::string& name) {
  if (name == "aloha") return Scheme::Aloha;
  if (name == "tdma") return Scheme::Tdma;
  if (name == "gf") return Scheme::Gf;
  if (name == "combination") return Scheme::Combination;
  throw CLI::ValidationError("unknown scheme: " + name);
}

struct OutputSink {
  std::string path;    // empty: stdout
  bool json_lines = false;
  std::ofstream file;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
    return file;
  }
};

void write_rows(OutputSink& sink, const std::vector<ExperimentRow>& rows) {
  auto& os = sink.stream();
  if (sink.json_lines) {
    for (const auto& r : rows) {
      json obj{{"experiment", r.experiment},
               {"scheme", r.scheme},
               {"n", r.n},
               {"d_design", r.d_design},
               {"d_measured", r.d_measured},
               {"t", r.t},
               {"p_summary", r.p_summary},
               {"traffic", r.traffic},
               {"feedback", r.feedback},
               {"avg_throughput", r.avg},
               {"stderr", r.stderr_},
               {"topologies", r.topologies},
               {"runs", r.runs}};
      os << obj.dump() << "\n";
    }
  } else {
    os << "experiment,scheme,n,d_design,d_measured,t,p_summary,traffic,feedback,"
          "avg_throughput,stderr,topologies,runs\n";
    for (const auto& r : rows) {
      os << r.experiment << ',' << r.scheme << ',' << r.n << ',' << r.d_design << ','
         << format_double(r.d_measured, 6) << ',' << r.t << ',' << r.p_summary << ','
         << r.traffic << ',' << (r.feedback ? 1 : 0) << ',' << format_double(r.avg) << ','
         << format_double(r.stderr_) << ',' << r.topologies << ',' << r.runs << "\n";
    }
  }
  os.flush();
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string scheme = "tdma";
  int density = 1;
  long n = 1;
  long t = 1;
  std::string p = "1.0";
};

int cmd_analyze(const AnalyzeArgs& args, OutputSink& sink) {
  const Scheme scheme = parse_scheme(args.scheme);
  auto ps = parse_double_list(args.p);
  if (ps.size() == 1) ps.assign(static_cast<std::size_t>(args.n), ps[0]);
  if (ps.size() != static_cast<std::size_t>(args.n))
    throw CLI::ValidationError("--p needs 1 value or exactly n values");
  for (double p : ps)
    if (!(p > 0.0) || p > 1.0) throw CLI::ValidationError("success probabilities must be in (0,1]");

  double value = 0;
  std::string kind;
  long period = 0;
  switch (scheme) {
    case Scheme::Tdma:
      value = tdma_average(args.n, args.t, ps);
      kind = "exact";
      period = args.n;
      std::cout << "tdma: N=" << args.n << " T=" << args.t << " L=" << period
                << " average=" << format_double(value) << " (exact)\n";
      break;
    case Scheme::Aloha: {
      value = aloha_average_lb(args.density, args.n, args.t, ps);
      kind = "lower_bound";
      std::cout << "aloha: D=" << args.density << " delta*=" << format_double(1.0 / (args.density + 1))
                << " N=" << args.n << " T=" << args.t << " average>=" << format_double(value)
                << " (lower bound)\n";
      break;
    }
    case Scheme::Gf: {
      const auto params = gf_params(args.density, args.n);
      period = static_cast<long>(params.q) * params.q;
      value = gf_average_lb(args.density, args.n, args.t, ps);
      kind = "lower_bound";
      std::cout << "gf: D=" << args.density << " N=" << args.n << " q=" << params.q
                << " k=" << params.k << " L=" << period << " T=" << args.t
                << " average>=" << format_double(value) << " (lower bound)\n";
      break;
    }
    case Scheme::Combination: {
      if (args.density != 1)
        std::cout << "warning: the combination scheme is designed for density 1; "
                     "with D="
                  << args.density << " no collision-free slot is guaranteed\n";
      period = combination_min_length(args.n);
      value = combination_average_lb(args.n, args.t, ps);
      kind = "lower_bound";
      std::cout << "combination: N=" << args.n << " L=" << period << " T=" << args.t
                << " average>=" << format_double(value) << " (lower bound)\n";
      break;
    }
  }

  const std::string p_summary = ps.size() == 1 || std::all_of(ps.begin(), ps.end(), [&](double v) {
                                  return v == ps[0];
                                })
                                    ? format_double(ps[0], 6)
                                    : "mixed";
  auto& os = sink.stream();
  if (sink.json_lines) {
    os << json{{"scheme", args.scheme}, {"d", args.density}, {"n", args.n},
               {"t", args.t},           {"p_summary", p_summary}, {"value", value},
               {"kind", kind}}
              .dump()
       << "\n";
  } else {
    os << "scheme,d,n,t,p_summary,value,kind\n";
    os << args.scheme << ',' << args.density << ',' << args.n << ',' << args.t << ','
       << p_summary << ',' << format_double(value) << ',' << kind << "\n";
  }
  os.flush();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables() {
  // q(D, 100) for D = 1..16 and q(1, N) over the reference N grid.
  const std::vector<unsigned> table1{4, 5, 7, 9, 11, 11, 11, 11, 11, 11, 13, 13, 16, 16, 16, 17};
  const std::vector<long> table2_n{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  const std::vector<unsigned> table2_q{2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4};

  bool ok = true;
  std::cout << "q(D,100) for D = 1..16:\n  D        :";
  for (int d = 1; d <= 16; ++d) std::cout << ' ' << d;
  std::cout << "\n  q(D,100) :";
  for (int d = 1; d <= 16; ++d) {
    const unsigned q = gf_params(d, 100).q;
    std::cout << ' ' << q;
    ok &= q == table1[static_cast<std::size_t>(d - 1)];
  }
  std::cout << "\n\nq(1,N) over the reference grid:\n  N      :";
  for (long n : table2_n) std::cout << ' ' << n;
  std::cout << "\n  q(1,N) :";
  for (std::size_t i = 0; i < table2_n.size(); ++i) {
    const unsigned q = gf_params(1, table2_n[i]).q;
    std::cout << ' ' << q;
    ok &= q == table2_q[i];
  }
  std::cout << "\n\n" << (ok ? "all cells match the reference tables" : "MISMATCH against reference tables")
            << "\n";
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// sequences

int cmd_sequences(const std::string& scheme_name_arg, int density, long n, OutputSink& sink) {
  const Scheme scheme = parse_scheme(scheme_name_arg);
  SequenceSet set;
  switch (scheme) {
    case Scheme::Tdma: set = tdma_sequences(n); break;
    case Scheme::Gf: set = gf_sequences(density, n); break;
    case Scheme::Combination: set = combination_sequences(n); break;
    case Scheme::Aloha: throw CLI::ValidationError("aloha has no sequence set");
  }
  sink.stream() << sequence_lines(set);
  sink.stream().flush();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// reuse

int cmd_reuse(double range, double d_min, int density, bool strict, long grid, OutputSink& sink) {
  const auto lat = reuse_factor(range, d_min, strict);
  const auto sizing = reuse_scheme_params(density, lat);
  std::cout << "reuse factor G=" << lat.g << " (b1=" << lat.b1 << ", b2=" << lat.b2
            << (strict ? ", strict" : ", >=") << ") threshold=(2R/d_min)^2="
            << format_double(std::pow(2.0 * range / d_min, 2), 6) << "\n";
  std::cout << "gps-enabled tdma period: " << sizing.tdma_period << "\n";
  std::cout << "gps-enabled gf: q=" << sizing.gf.q << " k=" << sizing.gf.k
            << " period=" << sizing.gf_period << "\n";
  if (grid > 0) {
    auto& os = sink.stream();
    os << "m,n,color\n";
    for (long m = -grid; m <= grid; ++m)
      for (long n = -grid; n <= grid; ++n) os << m << ',' << n << ',' << cell_index(m, n, lat) << "\n";
    os.flush();
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string preset;
  std::string scheme = "tdma";
  int density = 1;
  long n = 10;
  long t = 0;  // 0: preset default
  double p = 0.8;
  int topologies = 10;
  int runs = 10;
  long frames = 200;
  bool feedback = false;
  bool exact_density = true;
  std::string power;          // practical-manet sweep override
  std::string topology_file;  // custom point: replay an imported topology
};

GenOptions fixed_gen(long n, int density, double p, double area, double delta = 200.0) {
  GenOptions gen;
  gen.n = n;
  gen.delta = delta;
  gen.density_cap = density;
  gen.exact_density = true;  // presets sweep the density itself
  gen.area_w = gen.area_h = area;
  gen.channel = ChannelSpec::fixed(p);
  return gen;
}

// Side of a square area in which the generated max interferer count lands
// near the design density (the rejection step then trims the upper tail to
// <= density). The mean per-receiver interferer count is
// (n-1)*pi*delta^2/side^2 before edge effects; aiming it a factor below the
// density keeps rejection cheap while the sample maximum tracks the target.
double area_for(long n, int density, double delta = 200.0) {
  const double factor = density <= 3 ? 0.55 : density <= 10 ? 0.75 : 0.85;
  const double mean_target = factor * density;
  const double side =
      std::sqrt(static_cast<double>(std::max<long>(1, n - 1)) * M_PI * delta * delta / mean_target);
  return std::max(side, 2.0 * delta);
}

ExperimentPoint make_point(const std::string& experiment, Scheme scheme, long n, int density,
                           long t, double p, long frames, bool feedback = false) {
  ExperimentPoint pt;
  pt.experiment = experiment;
  pt.config.scheme = scheme;
  pt.config.n = n;
  pt.config.density = density;
  pt.config.frame_len = t;
  pt.config.horizon_frames = frames;
  pt.config.feedback = feedback;
  pt.gen = fixed_gen(n, density, p, area_for(n, density));
  pt.p_summary = format_double(p, 6);
  return pt;
}

std::vector<ExperimentPoint> build_preset(const SimulateArgs& args) {
  std::vector<ExperimentPoint> points;
  const auto schemes3 = {Scheme::Aloha, Scheme::Tdma, Scheme::Gf};

  if (args.preset == "effect-d") {
    const long t = args.t > 0 ? args.t : 30;
    for (Scheme s : schemes3)
      for (int d = 1; d <= 29; d += 2)
        points.push_back(make_point("effect-d", s, 50, d, t, args.p, args.frames));
  } else if (args.preset == "effect-p") {
    const long t = args.t > 0 ? args.t : 30;
    for (int d : {3, 30})
      for (Scheme s : schemes3)
        for (int pi = 1; pi <= 10; ++pi)
          points.push_back(make_point("effect-p", s, 50, d, t, pi / 10.0, args.frames));
  } else if (args.preset == "effect-t") {
    for (int d : {1, 10})
      for (Scheme s : schemes3)
        for (long t = 5; t <= 50; t += 5)
          points.push_back(make_point("effect-t", s, 20, d, t, args.p, args.frames));
  } else if (args.preset == "d1-compare") {
    const auto schemes4 = {Scheme::Aloha, Scheme::Tdma, Scheme::Gf, Scheme::Combination};
    for (Scheme s : schemes4) {
      for (long n = 2; n <= 20; n += 2)
        points.push_back(make_point("d1-compare-fixed-t", s, n, 1, 10, args.p, args.frames));
      for (long t = 2; t <= 20; t += 2)
        points.push_back(make_point("d1-compare-fixed-n", s, 10, 1, t, args.p, args.frames));
    }
  } else if (args.preset == "robustness-n") {
    for (Scheme s : schemes3) {
      for (long live = 50; live <= 75; live += 5) {
        auto pt = make_point("robustness-n", s, live, 10, 50, args.p, args.frames);
        pt.config.design_n = 50;  // sequence space stays sized for 50
        points.push_back(pt);
      }
    }
  } else if (args.preset == "robustness-d") {
    for (Scheme s : schemes3) {
      for (int actual = 10; actual <= 15; ++actual) {
        auto pt = make_point("robustness-d", s, 50, 10, 50, args.p, args.frames);
        pt.gen.density_cap = actual;  // design stays 10, environment denser
        points.push_back(pt);
      }
    }
  } else if (args.preset == "robustness-nd") {
    for (Scheme s : schemes3) {
      auto pt = make_point("robustness-nd", s, 50, 10, 50, args.p, args.frames);
      RefreshSpec refresh;
      refresh.every_frames = 50;
      refresh.gen = pt.gen;
      refresh.n_min = 50;
      refresh.n_max = 75;
      refresh.d_min = 10;
      refresh.d_max = 15;
      pt.config.design_n = 50;
      pt.config.refresh = refresh;
      points.push_back(pt);
    }
  } else if (args.preset == "poisson") {
    const long t = args.t > 0 ? args.t : 10;
    for (double p : {0.8, 0.1}) {
      for (Scheme s : schemes3) {
        for (int d = 1; d <= 19; d += 2) {
          auto pt = make_point("poisson", s, 20, d, t, p, args.frames);
          pt.config.traffic.poisson = true;
          pt.config.traffic.mean_interarrival = 10.0;
          points.push_back(pt);
        }
      }
    }
  } else if (args.preset == "feedback-gain") {
    const long t = args.t > 0 ? args.t : 30;
    for (Scheme s : schemes3)
      for (int d = 1; d <= 19; d += 2)
        for (bool fb : {false, true})
          points.push_back(make_point("feedback-gain", s, 20, d, t, args.p, args.frames, fb));
  } else if (args.preset == "practical-manet") {
    const long t = args.t > 0 ? args.t : 30;
    const auto powers = args.power.empty() ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5}
                                           : parse_sweep(args.power);
    struct Regime {
      const char* name;
      double area;
      int density;
    };
    for (const Regime regime : {Regime{"sparse", 2000.0, 4}, Regime{"dense", 500.0, 27}}) {
      for (double power : powers) {
        for (Scheme s : schemes3) {
          ExperimentPoint pt;
          pt.experiment = std::string("practical-manet-") + regime.name;
          pt.config.scheme = s;
          pt.config.n = 50;
          pt.config.density = regime.density;
          pt.config.frame_len = t;
          pt.config.horizon_frames = args.frames;
          pt.config.mobility = MobilitySpec{30.0, 0.0008};
          pt.gen.n = 50;
          pt.gen.delta = 200;
          pt.gen.density_cap = regime.density;
          pt.gen.enforce_density = false;  // free mode, measured density reported
          pt.gen.area_w = pt.gen.area_h = regime.area;
          pt.gen.channel = ChannelSpec::physical_model(PhysicalChannel{power, 3.0, 1e-7, 1.0});
          pt.p_summary = "P=" + format_double(power, 6);
          points.push_back(pt);
        }
      }
    }
  } else if (args.preset.empty()) {
    const long t = args.t > 0 ? args.t : 30;
    auto pt = make_point("custom", parse_scheme(args.scheme), args.n, args.density, t, args.p,
                         args.frames, args.feedback);
    pt.gen.exact_density = args.exact_density;
    points.push_back(pt);
  } else {
    throw CLI::ValidationError("unknown preset: " + args.preset);
  }
  return points;
}

// Replay a single imported topology instead of generating placements.
ExperimentRow run_on_imported(const SimulateArgs& args, std::uint64_t seed) {
  std::ifstream in(args.topology_file);
  if (!in) throw std::runtime_error("cannot open topology file: " + args.topology_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Topology topo = topology_from_text(buffer.str());

  SimConfig cfg;
  cfg.scheme = parse_scheme(args.scheme);
  cfg.n = topo.size();
  cfg.density = args.density;
  cfg.frame_len = args.t > 0 ? args.t : 30;
  cfg.horizon_frames = args.frames;
  cfg.feedback = args.feedback;
  cfg.replications = args.runs;
  cfg.seed = seed;
  const SimResult res = run(cfg, topo);

  ExperimentRow row;
  row.experiment = "imported";
  row.scheme = args.scheme;
  row.n = topo.size();
  row.d_design = args.density;
  row.d_measured = max_interferer_count(topo);
  row.t = cfg.frame_len;
  double p_lo = 1.0, p_hi = 0.0;
  for (double p : topo.success_probs) {
    p_lo = std::min(p_lo, p);
    p_hi = std::max(p_hi, p);
  }
  row.p_summary = p_lo == p_hi ? format_double(p_lo, 6)
                               : format_double(p_lo, 4) + ".." + format_double(p_hi, 4);
  row.traffic = "frame-sync";
  row.feedback = args.feedback;
  row.avg = res.average;
  row.stderr_ = res.stderr_;
  row.topologies = 1;
  row.runs = args.runs;
  return row;
}

int cmd_simulate(const SimulateArgs& args, std::uint64_t seed, int jobs, OutputSink& sink) {
  if (!args.topology_file.empty()) {
    if (!args.preset.empty())
      throw CLI::ValidationError("--topology replays one placement; drop --preset");
    write_rows(sink, {run_on_imported(args, seed)});
    return kExitOk;
  }
  const auto points = build_preset(args);
  const auto rows = run_experiment(points, args.topologies, args.runs, seed, jobs);
  write_rows(sink, rows);
  if (!sink.path.empty())
    std::cout << rows.size() << " rows written to " << sink.path << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// topology export

int cmd_topology(long n, int density, double p, bool exact, std::uint64_t seed,
                 OutputSink& sink) {
  GenOptions gen = fixed_gen(n, density, p, area_for(n, density));
  gen.exact_density = exact;
  const Topology topo = generate_topology(gen, seed);
  sink.stream() << topology_to_text(topo);
  sink.stream().flush();
  std::cerr << "generated topology: n=" << topo.size()
            << " measured density=" << max_interferer_count(topo) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topology-transparent delay-constrained scheduling toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  std::uint64_t seed = 1;
  int jobs = 1;
  OutputSink sink;
  std::string format = "csv";
  app.add_option("--seed", seed, "root seed for all randomized work");
  app.add_option("--jobs", jobs, "parallel grid points")->check(CLI::PositiveNumber);
  app.add_option("--out", sink.path, "output file (default: stdout)");
  app.add_option("--format", format, "csv | json-lines")
      ->check(CLI::IsMember({"csv", "json-lines"}));

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "closed-form value or lower bound");
  analyze->add_option("--scheme", analyze_args.scheme)->required()
      ->check(CLI::IsMember({"aloha", "tdma", "gf", "combination"}));
  analyze->add_option("--d", analyze_args.density, "network density");
  analyze->add_option("--n", analyze_args.n, "pair count")->required();
  analyze->add_option("--t", analyze_args.t, "frame length")->required();
  analyze->add_option("--p", analyze_args.p, "success probability (single value or n-entry list)");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo experiment grid");
  simulate->add_option("--preset", sim_args.preset,
                       "effect-d | effect-p | effect-t | d1-compare | robustness-n | "
                       "robustness-d | robustness-nd | poisson | feedback-gain | practical-manet");
  simulate->add_option("--scheme", sim_args.scheme, "custom-point scheme");
  simulate->add_option("--d", sim_args.density, "custom-point density");
  simulate->add_option("--n", sim_args.n, "custom-point pair count");
  simulate->add_option("--t", sim_args.t, "frame length override");
  simulate->add_option("--p", sim_args.p, "success probability override");
  simulate->add_option("--topologies", sim_args.topologies)->check(CLI::PositiveNumber);
  simulate->add_option("--runs", sim_args.runs)->check(CLI::PositiveNumber);
  simulate->add_option("--frames", sim_args.frames, "frames per run")->check(CLI::PositiveNumber);
  simulate->add_flag("--feedback", sim_args.feedback, "custom-point delivery feedback");
  simulate->add_flag("--exact-density,!--no-exact-density", sim_args.exact_density,
                     "custom-point topologies hit the density exactly (default) or only bound it");
  simulate->add_option("--power", sim_args.power, "practical-manet power sweep, e.g. 0.1..0.5");
  simulate->add_option("--topology", sim_args.topology_file,
                       "replay a topology text file instead of generating placements");

  auto* tables = app.add_subcommand("tables", "recompute and verify the reference q tables");

  std::string seq_scheme = "gf";
  int seq_density = 1;
  long seq_n = 4;
  auto* sequences = app.add_subcommand("sequences", "dump a sequence set as 0/1 lines");
  sequences->add_option("--scheme", seq_scheme)->required()
      ->check(CLI::IsMember({"tdma", "gf", "combination"}));
  sequences->add_option("--d", seq_density);
  sequences->add_option("--n", seq_n)->required();

  long topo_n = 10;
  int topo_density = 1;
  double topo_p = 0.8;
  bool topo_exact = true;
  auto* topology = app.add_subcommand("topology", "generate and export a placement as text");
  topology->add_option("--n", topo_n)->required();
  topology->add_option("--d", topo_density);
  topology->add_option("--p", topo_p);
  topology->add_flag("--exact-density,!--no-exact-density", topo_exact);

  double reuse_range = 100.0, reuse_dmin = 10.0;
  int reuse_density = 1;
  bool reuse_strict = false;
  long reuse_grid = 0;
  auto* reuse = app.add_subcommand("reuse", "gps-enabled reuse factor and scheme sizing");
  reuse->add_option("--range", reuse_range, "communication range R")->required();
  reuse->add_option("--d-min", reuse_dmin, "minimum transmitter spacing")->required();
  reuse->add_option("--density", reuse_density, "network density for gf sizing");
  reuse->add_flag("--strict", reuse_strict, "require G strictly above the threshold");
  reuse->add_option("--grid", reuse_grid, "dump cell colors for |m|,|n| <= GRID");

  try {
    app.parse(argc, argv);
    sink.json_lines = format == "json-lines";
    if (analyze->parsed()) return cmd_analyze(analyze_args, sink);
    if (simulate->parsed()) return cmd_simulate(sim_args, seed, jobs, sink);
    if (tables->parsed()) return cmd_tables();
    if (sequences->parsed()) return cmd_sequences(seq_scheme, seq_density, seq_n, sink);
    if (topology->parsed()) return cmd_topology(topo_n, topo_density, topo_p, topo_exact, seed, sink);
    if (reuse->parsed())
      return cmd_reuse(reuse_range, reuse_dmin, reuse_density, reuse_strict, reuse_grid, sink);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const GenerationTimeoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGenerationTimeout;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
