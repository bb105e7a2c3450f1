#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttsched/rng.hpp"

namespace ttsched {

struct GenerationTimeoutError : std::runtime_error {
  explicit GenerationTimeoutError(long attempts)
      : std::runtime_error("topology generation exceeded rejection budget of " +
                           std::to_string(attempts) + " attempts") {}
};

struct Point {
  double x = 0;
  double y = 0;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct PhysicalChannel {
  double power_w = 0.1;        // transmit power P
  double path_loss_exp = 3.0;  // tau
  double noise = 1e-7;         // noise power density
  double rate_threshold = 1.0; // r_th, bps/Hz
};

// Success probability of a collision-free transmission over distance d under
// the physical channel model.
inline double physical_success_prob(const PhysicalChannel& ch, double d) {
  return std::exp(-ch.noise * std::pow(d, ch.path_loss_exp) *
                  (std::pow(2.0, ch.rate_threshold) - 1.0) / ch.power_w);
}

struct ChannelSpec {
  bool physical = false;
  double fixed_p = 1.0;
  PhysicalChannel phys;

  static ChannelSpec fixed(double p) {
    ChannelSpec c;
    c.physical = false;
    c.fixed_p = p;
    return c;
  }
  static ChannelSpec physical_model(const PhysicalChannel& ph) {
    ChannelSpec c;
    c.physical = true;
    c.phys = ph;
    return c;
  }

  double success_prob(double tx_rx_distance) const {
    return physical ? physical_success_prob(phys, tx_rx_distance) : fixed_p;
  }
};

// Immutable placement snapshot: N transmitter/receiver pairs in a rectangle,
// with per-pair success probabilities. Invariant: distance(tx[i], rx[i]) <=
// delta for every i.
struct Topology {
  std::vector<Point> tx;
  std::vector<Point> rx;
  double delta = 200.0;
  std::vector<double> success_probs;
  double area_w = 2000.0;
  double area_h = 2000.0;

  int size() const { return static_cast<int>(tx.size()); }
};

// Transmitters j != i whose distance to receiver i is within delta
// (boundary inclusive).
inline std::vector<int> interferers(const Topology& t, int i) {
  std::vector<int> out;
  for (int j = 0; j < t.size(); ++j) {
    if (j != i && distance(t.tx[static_cast<std::size_t>(j)],
                           t.rx[static_cast<std::size_t>(i)]) <= t.delta) {
      out.push_back(j);
    }
  }
  return out;
}

inline std::vector<std::vector<int>> interference_sets(const Topology& t) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(t.size()));
  for (int i = 0; i < t.size(); ++i) sets[static_cast<std::size_t>(i)] = interferers(t, i);
  return sets;
}

inline int max_interferer_count(const Topology& t) {
  int best = 0;
  for (int i = 0; i < t.size(); ++i)
    best = std::max(best, static_cast<int>(interferers(t, i).size()));
  return best;
}

struct GenOptions {
  long n = 1;
  double delta = 200.0;
  int density_cap = 1;
  double area_w = 2000.0;
  double area_h = 2000.0;
  double d_tx_rx_min = 50.0;
  double d_tx_rx_max = 150.0;
  ChannelSpec channel = ChannelSpec::fixed(1.0);
  bool enforce_density = true;  // false: free mode, measured density reported by caller
  bool exact_density = false;   // require max interferer count == density_cap, not just <=
  long rejection_budget = 100000;
};

inline Point clamp_to_area(Point p, double w, double h) {
  return Point{std::clamp(p.x, 0.0, w), std::clamp(p.y, 0.0, h)};
}

namespace detail {

inline Topology sample_placement(const GenOptions& opt, Rng& rng) {
  Topology t;
  t.delta = opt.delta;
  t.area_w = opt.area_w;
  t.area_h = opt.area_h;
  t.tx.resize(static_cast<std::size_t>(opt.n));
  t.rx.resize(static_cast<std::size_t>(opt.n));
  t.success_probs.resize(static_cast<std::size_t>(opt.n));
  for (long i = 0; i < opt.n; ++i) {
    const Point tx{rng.uniform(0.0, opt.area_w), rng.uniform(0.0, opt.area_h)};
    const double d = rng.uniform(opt.d_tx_rx_min, opt.d_tx_rx_max);
    const double angle = rng.uniform(0.0, 2.0 * M_PI);
    // Clamping can only shrink the tx-rx distance, so the delta invariant
    // set up by d <= delta survives it.
    const Point rx = clamp_to_area(Point{tx.x + d * std::cos(angle), tx.y + d * std::sin(angle)},
                                   opt.area_w, opt.area_h);
    t.tx[static_cast<std::size_t>(i)] = tx;
    t.rx[static_cast<std::size_t>(i)] = rx;
    t.success_probs[static_cast<std::size_t>(i)] = opt.channel.success_prob(distance(tx, rx));
  }
  return t;
}

}  // namespace detail

// Uniform placement, rejected wholesale until max_interferer_count <=
// density_cap (constrained mode) or == density_cap (exact mode, for
// experiments sweeping the density itself). Free mode returns the first
// sample.
inline Topology generate_topology(const GenOptions& opt, std::uint64_t seed) {
  if (opt.n < 1) throw std::invalid_argument("generate_topology: n must be >= 1");
  if (opt.d_tx_rx_max > opt.delta)
    throw std::invalid_argument("generate_topology: tx-rx distance range exceeds delta");
  Rng rng(mix_seed(seed));
  for (long attempt = 0; attempt < opt.rejection_budget; ++attempt) {
    Topology t = detail::sample_placement(opt, rng);
    if (!opt.enforce_density) return t;
    const int density = max_interferer_count(t);
    if (opt.exact_density ? density == opt.density_cap : density <= opt.density_cap) return t;
  }
  throw GenerationTimeoutError(opt.rejection_budget);
}

// Random-waypoint mobility. Each node keeps a target; a step advances it by
// speed * slot_seconds * slots, picking fresh uniform targets on arrival.
struct MobilityState {
  std::vector<Point> tx_targets;
  std::vector<Point> rx_targets;
  double speed_mps = 0.0;
  double slot_seconds = 0.0008;
};

inline MobilityState init_mobility(const Topology& t, double speed_mps, double slot_seconds,
                                   Rng& rng) {
  MobilityState m;
  m.speed_mps = speed_mps;
  m.slot_seconds = slot_seconds;
  m.tx_targets.resize(static_cast<std::size_t>(t.size()));
  m.rx_targets.resize(static_cast<std::size_t>(t.size()));
  for (auto* targets : {&m.tx_targets, &m.rx_targets})
    for (auto& p : *targets) p = Point{rng.uniform(0.0, t.area_w), rng.uniform(0.0, t.area_h)};
  return m;
}

namespace detail {

inline void advance_node(Point& pos, Point& target, double budget, double w, double h, Rng& rng) {
  while (budget > 0) {
    const double d = distance(pos, target);
    if (d <= budget) {
      pos = target;
      budget -= d;
      target = Point{rng.uniform(0.0, w), rng.uniform(0.0, h)};
      if (d == 0.0) break;  // degenerate target on top of the node
    } else {
      pos.x += (target.x - pos.x) / d * budget;
      pos.y += (target.y - pos.y) / d * budget;
      budget = 0;
    }
  }
}

}  // namespace detail

// Advances all nodes by `slots` slots of movement and re-tethers each
// receiver to within delta of its transmitter. Density may exceed the design
// cap after movement; that is the point of the robustness experiments.
inline Topology step_mobility(const Topology& t, MobilityState& m, long slots, Rng& rng) {
  Topology out = t;
  const double budget = m.speed_mps * m.slot_seconds * static_cast<double>(slots);
  for (std::size_t i = 0; i < out.tx.size(); ++i) {
    detail::advance_node(out.tx[i], m.tx_targets[i], budget, out.area_w, out.area_h, rng);
    detail::advance_node(out.rx[i], m.rx_targets[i], budget, out.area_w, out.area_h, rng);
    const double d = distance(out.tx[i], out.rx[i]);
    if (d > out.delta) {
      const double scale = out.delta / d;
      Point pulled{out.tx[i].x + (out.rx[i].x - out.tx[i].x) * scale,
                   out.tx[i].y + (out.rx[i].y - out.tx[i].y) * scale};
      out.rx[i] = clamp_to_area(pulled, out.area_w, out.area_h);
    }
  }
  return out;
}

// Plain-text topology exchange format: a header line, then n, delta and area
// lines, then one row per pair (tx_x tx_y rx_x rx_y p). Doubles are printed
// with 17 significant digits so a round trip is bit-exact.
inline std::string topology_to_text(const Topology& t) {
  char buf[256];
  std::string out = "ttsched-topology 1\n";
  std::snprintf(buf, sizeof buf, "n %d\n", t.size());
  out += buf;
  std::snprintf(buf, sizeof buf, "delta %.17g\n", t.delta);
  out += buf;
  std::snprintf(buf, sizeof buf, "area %.17g %.17g\n", t.area_w, t.area_h);
  out += buf;
  for (int i = 0; i < t.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    std::snprintf(buf, sizeof buf, "pair %.17g %.17g %.17g %.17g %.17g\n", t.tx[idx].x,
                  t.tx[idx].y, t.rx[idx].x, t.rx[idx].y, t.success_probs[idx]);
    out += buf;
  }
  return out;
}

inline Topology topology_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int version = 0;
  if (!(in >> tag >> version) || tag != "ttsched-topology" || version != 1)
    throw std::invalid_argument("topology_from_text: bad header");
  Topology t;
  int n = 0;
  auto expect = [&](const char* key) {
    if (!(in >> tag) || tag != key)
      throw std::invalid_argument(std::string("topology_from_text: expected ") + key);
  };
  expect("n");
  in >> n;
  expect("delta");
  in >> t.delta;
  expect("area");
  in >> t.area_w >> t.area_h;
  for (int i = 0; i < n; ++i) {
    expect("pair");
    Point tx, rx;
    double p;
    if (!(in >> tx.x >> tx.y >> rx.x >> rx.y >> p))
      throw std::invalid_argument("topology_from_text: truncated pair row");
    t.tx.push_back(tx);
    t.rx.push_back(rx);
    t.success_probs.push_back(p);
  }
  if (static_cast<int>(t.tx.size()) != n)
    throw std::invalid_argument("topology_from_text: pair count mismatch");
  return t;
}

}  // namespace ttsched
