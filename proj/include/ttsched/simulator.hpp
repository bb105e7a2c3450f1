#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ttsched/rng.hpp"
#include "ttsched/schemes.hpp"
#include "ttsched/topology.hpp"

namespace ttsched {

struct ConfigMismatchError : std::invalid_argument {
  ConfigMismatchError() : std::invalid_argument("config pair count differs from topology size") {}
};

enum class Scheme { Aloha, Tdma, Gf, Combination };

inline const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Aloha: return "aloha";
    case Scheme::Tdma: return "tdma";
    case Scheme::Gf: return "gf";
    case Scheme::Combination: return "combination";
  }
  return "?";
}

struct Traffic {
  bool poisson = false;
  double mean_interarrival = 0.0;  // slots; Poisson only
};

struct MobilitySpec {
  double speed_mps = 30.0;
  double slot_seconds = 0.0008;
};

// Periodic environment churn for the robustness experiments: every
// `every_frames` frames ("big frame") the placement is regenerated, with the
// live pair count and density cap resampled from the given ranges, and
// sequences reassigned from the design-time sequence space.
struct RefreshSpec {
  long every_frames = 50;
  GenOptions gen;
  long n_min = 0, n_max = 0;  // 0: keep gen.n
  int d_min = 0, d_max = 0;   // 0: keep gen.density_cap
};

struct SimConfig {
  Scheme scheme = Scheme::Tdma;
  long n = 1;        // live pair count (must match the topology)
  long design_n = 0; // pair count the sequence space was sized for; 0: same as n
  int density = 1;   // design density (GF sizing, ALOHA delta)
  long frame_len = 1;
  Traffic traffic{};
  long horizon_frames = 1;
  bool feedback = false;
  int replications = 1;
  std::uint64_t seed = 1;
  std::optional<MobilitySpec> mobility;
  std::optional<RefreshSpec> refresh;
};

struct SimResult {
  std::vector<double> per_pair;  // averaged over replications
  double average = 0.0;
  double stderr_ = 0.0;  // standard error of `average` over replications
  unsigned long long delivered = 0;
  unsigned long long generated = 0;
};

inline double timely_throughput(unsigned long long delivered, unsigned long long denom) {
  if (denom < 1) throw std::invalid_argument("timely_throughput: empty denominator");
  return static_cast<double>(delivered) / static_cast<double>(denom);
}

// Pairs 1..min(live, space) get distinct schedules in space order; pairs
// beyond the space size draw uniformly from the full space (reuse allowed).
inline std::vector<Schedule> assign_sequences(const SequenceSet& set, std::size_t live, Rng& rng) {
  if (set.space_size == 0) throw std::invalid_argument("assign_sequences: empty space");
  std::vector<Schedule> out;
  out.reserve(live);
  for (std::size_t j = 0; j < live; ++j) {
    const unsigned long long idx =
        j < set.space_size ? j : rng.uniform_index(set.space_size);
    out.push_back(schedule_from_space(set, idx));
  }
  return out;
}

namespace detail {

struct PairState {
  bool has_packet = false;
  long deadline = 0;  // last slot the current packet may be delivered in
  bool delivered = false;
  double arrival_clock = 0.0;  // Poisson: continuous arrival time accumulator
};

struct RepOutcome {
  std::vector<unsigned long long> delivered_per_pair;
  std::vector<unsigned long long> generated_per_pair;
  std::vector<long> frames_live_per_pair;
  unsigned long long delivered_total = 0;
  unsigned long long generated_total = 0;
};

inline SequenceSet build_sequence_set(Scheme scheme, int density, long n) {
  switch (scheme) {
    case Scheme::Tdma: return tdma_sequences(n);
    case Scheme::Gf: return gf_sequences(density, n);
    case Scheme::Combination: return combination_sequences(n);
    case Scheme::Aloha: break;
  }
  throw std::logic_error("build_sequence_set: ALOHA has no sequence set");
}

inline RepOutcome run_replication(const SimConfig& cfg, const SequenceSet* set, double aloha_delta,
                                  const Topology& initial, std::uint64_t seed) {
  Rng rng(seed);
  const long t_frame = cfg.frame_len;
  const long total_slots = cfg.horizon_frames * t_frame;
  long pair_bound = cfg.n;
  if (cfg.refresh) pair_bound = std::max({pair_bound, cfg.refresh->gen.n, cfg.refresh->n_max});
  const std::size_t max_pairs = static_cast<std::size_t>(pair_bound);

  RepOutcome out;
  out.delivered_per_pair.assign(max_pairs, 0);
  out.generated_per_pair.assign(max_pairs, 0);
  out.frames_live_per_pair.assign(max_pairs, 0);

  Topology topo = initial;
  std::size_t live = static_cast<std::size_t>(cfg.n);
  std::vector<Schedule> schedules;
  if (set) schedules = assign_sequences(*set, live, rng);
  std::vector<std::vector<int>> inter = interference_sets(topo);

  std::optional<MobilityState> mob;
  if (cfg.mobility && cfg.mobility->speed_mps > 0)
    mob = init_mobility(topo, cfg.mobility->speed_mps, cfg.mobility->slot_seconds, rng);

  std::vector<PairState> state(live);
  if (cfg.traffic.poisson) {
    for (auto& st : state)
      st.arrival_clock = std::max(rng.exponential(cfg.traffic.mean_interarrival), 1e-12);
  }

  std::vector<std::uint8_t> transmits(live, 0);

  for (long slot = 1; slot <= total_slots; ++slot) {
    const bool frame_start = (slot - 1) % t_frame == 0;
    const long frame_index = (slot - 1) / t_frame;

    if (frame_start && cfg.refresh && frame_index % cfg.refresh->every_frames == 0) {
      GenOptions gen = cfg.refresh->gen;
      if (cfg.refresh->n_max > 0) gen.n = rng.uniform_int(cfg.refresh->n_min, cfg.refresh->n_max);
      if (cfg.refresh->d_max > 0)
        gen.density_cap = static_cast<int>(rng.uniform_int(cfg.refresh->d_min, cfg.refresh->d_max));
      topo = generate_topology(gen, rng.next_u64());
      inter = interference_sets(topo);
      live = static_cast<std::size_t>(topo.size());
      if (set) schedules = assign_sequences(*set, live, rng);
      state.assign(live, PairState{});
      transmits.assign(live, 0);
      if (cfg.traffic.poisson) {
        for (auto& st : state)
          st.arrival_clock = (slot - 1) + std::max(rng.exponential(cfg.traffic.mean_interarrival), 1e-12);
      }
    }

    if (frame_start && !cfg.traffic.poisson) {
      for (std::size_t i = 0; i < live; ++i) {
        state[i].has_packet = true;
        state[i].deadline = slot + t_frame - 1;
        state[i].delivered = false;
        out.generated_per_pair[i] += 1;
        out.generated_total += 1;
        out.frames_live_per_pair[i] += 1;
      }
    }

    if (cfg.traffic.poisson) {
      for (std::size_t i = 0; i < live; ++i) {
        auto& st = state[i];
        // Newest packet wins; a fresh arrival displaces any undelivered
        // predecessor (queue length 1). Arrival times are rounded to slots.
        for (long a = std::max<long>(1, std::llround(st.arrival_clock)); a <= slot;
             a = std::max<long>(1, std::llround(st.arrival_clock))) {
          st.has_packet = true;
          st.deadline = a + t_frame - 1;
          st.delivered = false;
          out.generated_per_pair[i] += 1;
          out.generated_total += 1;
          st.arrival_clock += std::max(rng.exponential(cfg.traffic.mean_interarrival), 1e-12);
        }
        if (st.has_packet && slot > st.deadline) st.has_packet = false;
      }
    }

    if (mob) {
      topo = step_mobility(topo, *mob, 1, rng);
      inter = interference_sets(topo);
    }

    for (std::size_t i = 0; i < live; ++i) {
      const auto& st = state[i];
      bool tx = false;
      if (st.has_packet && slot <= st.deadline && !(cfg.feedback && st.delivered)) {
        tx = set ? schedules[i].bit(slot) : rng.bernoulli(aloha_delta);
      }
      transmits[i] = tx ? 1 : 0;
    }

    for (std::size_t i = 0; i < live; ++i) {
      auto& st = state[i];
      if (!transmits[i] || st.delivered) continue;
      bool collided = false;
      for (int j : inter[i]) {
        if (static_cast<std::size_t>(j) < live && transmits[static_cast<std::size_t>(j)]) {
          collided = true;
          break;
        }
      }
      if (!collided && rng.bernoulli(topo.success_probs[i])) {
        st.delivered = true;
        out.delivered_per_pair[i] += 1;
        out.delivered_total += 1;
      }
    }
  }
  return out;
}

}  // namespace detail

// Slot-level Monte-Carlo run. Frame-synchronized traffic hands every pair a
// fresh packet at each frame start, expiring at frame end; Poisson traffic
// draws integer-rounded exponential inter-arrivals with a one-deep queue.
// A pair delivers in a slot iff it transmits, none of its interferers
// transmits, and an independent Bernoulli(p_i) succeeds; without feedback a
// delivered packet keeps occupying its schedule until expiry.
//
// With cfg.refresh set, the passed topology is replaced at the first big
// frame and periodically thereafter; per-pair figures then cover only the
// design pairs and `average` is delivered/generated.
inline SimResult run(const SimConfig& cfg, const Topology& topology) {
  if (!cfg.refresh && topology.size() != cfg.n) throw ConfigMismatchError();
  if (cfg.horizon_frames < 1 || cfg.frame_len < 1)
    throw std::invalid_argument("run: horizon and frame length must be >= 1");
  if (cfg.traffic.poisson && !(cfg.traffic.mean_interarrival > 0))
    throw std::invalid_argument("run: Poisson mean inter-arrival must be positive");

  SequenceSet set;
  const SequenceSet* set_ptr = nullptr;
  double delta = 0;
  if (cfg.scheme == Scheme::Aloha) {
    delta = aloha_probability(cfg.density).delta;
  } else {
    set = detail::build_sequence_set(cfg.scheme, cfg.density,
                                     cfg.design_n > 0 ? cfg.design_n : cfg.n);
    set_ptr = &set;
  }

  const int reps = std::max(1, cfg.replications);
  SimResult result;
  std::vector<double> rep_averages(static_cast<std::size_t>(reps), 0.0);
  std::vector<double> per_pair_sum;

  for (int r = 0; r < reps; ++r) {
    const auto outcome = detail::run_replication(cfg, set_ptr, delta, topology,
                                                 derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    const std::size_t pairs = outcome.delivered_per_pair.size();
    if (per_pair_sum.empty()) per_pair_sum.assign(pairs, 0.0);

    std::vector<double> per_pair(pairs, 0.0);
    for (std::size_t i = 0; i < pairs; ++i) {
      if (cfg.traffic.poisson) {
        per_pair[i] = outcome.generated_per_pair[i] == 0
                          ? 0.0
                          : timely_throughput(outcome.delivered_per_pair[i],
                                              outcome.generated_per_pair[i]);
      } else {
        per_pair[i] = outcome.frames_live_per_pair[i] == 0
                          ? 0.0
                          : static_cast<double>(outcome.delivered_per_pair[i]) /
                                static_cast<double>(outcome.frames_live_per_pair[i]);
      }
      per_pair_sum[i] += per_pair[i];
    }

    double avg;
    if (cfg.refresh) {
      avg = timely_throughput(outcome.delivered_total, outcome.generated_total);
    } else {
      double s = 0;
      for (double v : per_pair) s += v;
      avg = s / static_cast<double>(pairs);
    }
    rep_averages[static_cast<std::size_t>(r)] = avg;
    result.delivered += outcome.delivered_total;
    result.generated += outcome.generated_total;
  }

  result.per_pair.resize(per_pair_sum.size());
  for (std::size_t i = 0; i < per_pair_sum.size(); ++i)
    result.per_pair[i] = per_pair_sum[i] / static_cast<double>(reps);

  double mean = 0;
  for (double v : rep_averages) mean += v;
  mean /= static_cast<double>(reps);
  result.average = mean;
  if (reps > 1) {
    double ss = 0;
    for (double v : rep_averages) ss += (v - mean) * (v - mean);
    result.stderr_ = std::sqrt(ss / (reps - 1)) / std::sqrt(static_cast<double>(reps));
  }
  return result;
}

// One grid point of a sweep: a config template plus topology generation
// parameters.
struct ExperimentPoint {
  std::string experiment;
  SimConfig config;
  GenOptions gen;
  std::string p_summary;
};

struct ExperimentRow {
  std::string experiment;
  std::string scheme;
  long n = 0;
  int d_design = 0;
  double d_measured = 0;
  long t = 0;
  std::string p_summary;
  std::string traffic;
  bool feedback = false;
  double avg = 0;
  double stderr_ = 0;
  int topologies = 0;
  int runs = 0;
};

// Runs every grid point over `topologies` generated placements with `runs`
// replications each, aggregating the mean and standard error over all
// topology x run samples. Fully deterministic in root_seed; grid points may
// execute in parallel, output order is grid order regardless.
inline std::vector<ExperimentRow> run_experiment(const std::vector<ExperimentPoint>& points,
                                                 int topologies, int runs,
                                                 std::uint64_t root_seed, int jobs = 1) {
  std::vector<ExperimentRow> rows(points.size());
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    for (;;) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= points.size() || failed.load()) break;
      try {
        const auto& pt = points[idx];
        ExperimentRow row;
        row.experiment = pt.experiment;
        row.scheme = scheme_name(pt.config.scheme);
        row.n = pt.config.n;
        row.d_design = pt.config.density;
        row.t = pt.config.frame_len;
        row.p_summary = pt.p_summary;
        row.traffic = pt.config.traffic.poisson
                          ? "poisson"
                          : "frame-sync";
        row.feedback = pt.config.feedback;
        row.topologies = topologies;
        row.runs = runs;

        std::vector<double> samples;
        samples.reserve(static_cast<std::size_t>(topologies) * runs);
        double density_sum = 0;
        for (int t = 0; t < topologies; ++t) {
          const auto topo_seed = derive_seed(root_seed, idx, static_cast<std::uint64_t>(t));
          const Topology topo = generate_topology(pt.gen, topo_seed);
          density_sum += max_interferer_count(topo);
          for (int r = 0; r < runs; ++r) {
            SimConfig cfg = pt.config;
            cfg.replications = 1;
            cfg.seed = derive_seed(root_seed, idx, static_cast<std::uint64_t>(t),
                                   static_cast<std::uint64_t>(r) + 1);
            samples.push_back(run(cfg, topo).average);
          }
        }
        double mean = 0;
        for (double v : samples) mean += v;
        mean /= static_cast<double>(samples.size());
        double ss = 0;
        for (double v : samples) ss += (v - mean) * (v - mean);
        row.d_measured = density_sum / topologies;
        row.avg = mean;
        row.stderr_ = samples.size() > 1
                          ? std::sqrt(ss / (static_cast<double>(samples.size()) - 1)) /
                                std::sqrt(static_cast<double>(samples.size()))
                          : 0.0;
        rows[idx] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) first_error = std::current_exception();
        break;
      }
    }
  };

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) std::rethrow_exception(first_error);
  return rows;
}

}  // namespace ttsched
