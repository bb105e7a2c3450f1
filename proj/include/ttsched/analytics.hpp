#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ttsched/schemes.hpp"

namespace ttsched {

struct CaseViolationError : std::invalid_argument {
  explicit CaseViolationError(const char* what) : std::invalid_argument(what) {}
};

// Timely throughput of a period-L schedule with one collision-free slot per
// period at a fixed offset, when L >= T: exactly T delivery chances per
// super period, all in distinct frames.
inline double throughput_case1(long period, long frame_len, double p) {
  if (period < frame_len) throw CaseViolationError("case 1 requires L >= T");
  return static_cast<double>(frame_len) / static_cast<double>(period) * p;
}

// Same setting with L < T: a super period has (T mod L) frames holding
// ceil(T/L) chances and the rest holding floor(T/L).
inline double throughput_case2(long period, long frame_len, double p) {
  if (period >= frame_len) throw CaseViolationError("case 2 requires L < T");
  const long alpha = frame_len % period;
  const long beta = period - alpha;
  const double lo = std::floor(static_cast<double>(frame_len) / static_cast<double>(period));
  const double hi = std::ceil(static_cast<double>(frame_len) / static_cast<double>(period));
  const double r1 = 1.0 - std::pow(1.0 - p, hi);
  const double r2 = 1.0 - std::pow(1.0 - p, lo);
  return (static_cast<double>(alpha) * r1 + static_cast<double>(beta) * r2) /
         static_cast<double>(period);
}

// Mean per-pair throughput of a period-L sequence scheme under the
// appropriate case split.
inline double sequence_average(long period, long frame_len, std::span<const double> ps) {
  double sum = 0;
  for (double p : ps)
    sum += period >= frame_len ? throughput_case1(period, frame_len, p)
                               : throughput_case2(period, frame_len, p);
  return sum / static_cast<double>(ps.size());
}

// Exact average system timely throughput of TDMA with period N.
inline double tdma_average(long n, long frame_len, std::span<const double> ps) {
  return sequence_average(n, frame_len, ps);
}

// Pair-level ALOHA lower bound, 1 - [1 - delta(1-delta)^D p]^T.
inline double aloha_pair_lb(int density, long frame_len, double p, double delta) {
  const double per_slot = delta * std::pow(1.0 - delta, density) * p;
  return 1.0 - std::pow(1.0 - per_slot, static_cast<double>(frame_len));
}

// System ALOHA lower bound at the optimal delta = 1/(D+1).
inline double aloha_average_lb(int density, long n, long frame_len, std::span<const double> ps) {
  (void)n;
  const double delta = aloha_probability(density).delta;
  double sum = 0;
  for (double p : ps) sum += aloha_pair_lb(density, frame_len, p, delta);
  return sum / static_cast<double>(ps.size());
}

// GF-scheme lower bound with period q^2(D, N).
inline double gf_average_lb(int density, long n, long frame_len, std::span<const double> ps) {
  const GfParams params = gf_params(density, n);
  const long period = static_cast<long>(params.q) * params.q;
  return sequence_average(period, frame_len, ps);
}

// Combination-scheme lower bound with period L^min(1, N).
inline double combination_average_lb(long n, long frame_len, std::span<const double> ps) {
  return sequence_average(combination_min_length(n), frame_len, ps);
}

namespace detail {

// Largest density D >= 1 on which pred still holds, assuming pred is
// monotone (true up to some D, false beyond). nullopt when pred(1) fails;
// INT_MAX when pred never fails up to the stabilization cap.
template <typename Pred>
std::optional<int> largest_density_where(Pred pred, int stabilize_at) {
  if (!pred(1)) return std::nullopt;
  int lo = 1, hi = 2;
  while (hi < stabilize_at && pred(hi)) {
    lo = hi;
    hi *= 2;
  }
  if (hi >= stabilize_at) {
    if (pred(stabilize_at)) return std::numeric_limits<int>::max();
    hi = stabilize_at;
  }
  // Invariant: pred(lo) holds, pred(hi) fails.
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace detail

// Largest D with ALOHA's lower bound at least TDMA's exact value (ties
// count), found by binary search on the bound's strict monotone decrease.
// nullopt reports that no density qualifies.
inline std::optional<int> critical_density_aloha(long n, long frame_len,
                                                 std::span<const double> ps) {
  const double tdma = tdma_average(n, frame_len, ps);
  // The bound tends to 0 in D, so it drops below TDMA's positive value
  // eventually; grow the cap until it has.
  int cap = 4;
  while (aloha_average_lb(cap, n, frame_len, ps) >= tdma && cap < (1 << 28)) cap *= 2;
  return detail::largest_density_where(
      [&](int d) { return aloha_average_lb(d, n, frame_len, ps) >= tdma; }, cap);
}

// Same comparison for the GF bound, whose period is non-decreasing in D and
// constant once D reaches the smallest prime power >= N. INT_MAX reports the
// degenerate case where the bound never falls below TDMA.
inline std::optional<int> critical_density_gf(long n, long frame_len,
                                              std::span<const double> ps) {
  const double tdma = tdma_average(n, frame_len, ps);
  int stabilize_at = static_cast<int>(std::max<long>(2, n));
  while (!gf::is_prime_power(static_cast<unsigned long long>(stabilize_at))) ++stabilize_at;
  return detail::largest_density_where(
      [&](int d) { return gf_average_lb(d, n, frame_len, ps) >= tdma; }, stabilize_at);
}

// Collision-free-slot counts per frame over one super period (T periods =
// T*L slots = L frames) for a schedule with exactly one collision-free slot
// per period at the given 1-based offset.
inline std::vector<int> collision_free_profile(long period, long frame_len, long offset) {
  if (period < 1 || frame_len < 1 || offset < 1 || offset > period)
    throw std::invalid_argument("collision_free_profile: bad arguments");
  std::vector<int> counts(static_cast<std::size_t>(period), 0);
  for (long m = 0; m < frame_len; ++m) {
    const long slot = offset + m * period;        // 1-based slot in the super period
    const long frame = (slot - 1) / frame_len;    // 0-based frame index
    counts[static_cast<std::size_t>(frame)] += 1;
  }
  return counts;
}

// Expected packets delivered before expiry for a per-frame chance profile:
// sum over frames of 1 - (1-p)^count.
inline double expected_deliveries(std::span<const int> counts, double p) {
  double sum = 0;
  for (int c : counts) sum += 1.0 - std::pow(1.0 - p, static_cast<double>(c));
  return sum;
}

}  // namespace ttsched
