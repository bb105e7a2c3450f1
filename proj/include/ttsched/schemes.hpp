#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttsched/galois.hpp"

namespace ttsched {

struct PeriodMismatchError : std::invalid_argument {
  PeriodMismatchError() : std::invalid_argument("schedules have different periods") {}
};

// Periodic binary transmit sequence; bit(t) for t > period wraps around.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  long period() const { return static_cast<long>(bits_.size()); }

  // 1-indexed slot, periodic extension.
  bool bit(long slot) const { return bits_[static_cast<std::size_t>((slot - 1) % period())] != 0; }

  int weight() const {
    int w = 0;
    for (auto b : bits_)
      if (b) ++w;
    return w;
  }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) s[i] = '1';
    return s;
  }

  friend bool operator==(const Schedule& a, const Schedule& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

enum class SchemeTag { Tdma, Gf, Combination };

struct GfParams {
  unsigned q = 2;
  unsigned k = 0;
};

// A set of same-period schedules assigned to pairs 1..n, drawn from a larger
// constructible space (space_size >= n). schedules[i] is the schedule at
// space index i; indices beyond n-1 can be materialized on demand with
// schedule_from_space.
struct SequenceSet {
  SchemeTag tag = SchemeTag::Tdma;
  long period = 1;
  unsigned long long space_size = 1;
  std::vector<Schedule> schedules;
  GfParams gf;  // meaningful only when tag == Gf

  std::size_t size() const { return schedules.size(); }
};

struct AlohaPolicy {
  double delta = 1.0;
};

inline unsigned long long pow_capped(unsigned long long base, unsigned exp,
                                     unsigned long long cap) {
  unsigned long long v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (v > cap / base) return cap;
    v *= base;
  }
  return v;
}

// min(C(n, k), cap); exact while below cap.
inline unsigned long long binomial_capped(long n, long k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 v = 1;
  for (long i = 1; i <= k; ++i) {
    v = v * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    if (v >= cap) return cap;
  }
  return static_cast<unsigned long long>(v);
}

// Round-robin: schedule i has a single 1 at slot i, period n.
inline SequenceSet tdma_sequences(long n) {
  if (n < 1) throw std::invalid_argument("tdma_sequences: n must be >= 1");
  SequenceSet set;
  set.tag = SchemeTag::Tdma;
  set.period = n;
  set.space_size = static_cast<unsigned long long>(n);
  set.schedules.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    bits[static_cast<std::size_t>(i)] = 1;
    set.schedules.emplace_back(std::move(bits));
  }
  return set;
}

// Smallest prime power q admitting a k >= 0 with q - k*density >= 1 and
// q^(k+1) >= n; k is the smallest feasible exponent for that q.
inline GfParams gf_params(int density, long n) {
  if (density < 1 || n < 1) throw std::invalid_argument("gf_params: density and n must be >= 1");
  const auto target = static_cast<unsigned long long>(n);
  for (unsigned long long q = 2;; ++q) {
    if (!gf::is_prime_power(q)) continue;
    const unsigned k_max = static_cast<unsigned>((q - 1) / static_cast<unsigned long long>(density));
    for (unsigned k = 0; k <= k_max; ++k) {
      if (pow_capped(q, k + 1, target) >= target) {
        return GfParams{static_cast<unsigned>(q), k};
      }
    }
  }
}

namespace detail {

inline Schedule gf_schedule(const gf::FieldSpec& field, const gf::Polynomial& poly) {
  const long q = field.q;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(q * q), 0);
  for (long x = 1; x <= q; ++x) {
    const auto value = gf::eval_poly(poly, field.element(static_cast<unsigned>(x - 1)), field);
    const long y = value.rep + 1;
    bits[static_cast<std::size_t>((x - 1) * q + (y - 1))] = 1;
  }
  return Schedule(std::move(bits));
}

inline gf::Polynomial gf_polynomial(const gf::FieldSpec& field, unsigned k,
                                    unsigned long long index) {
  gf::Polynomial poly;
  poly.coeffs.resize(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    poly.coeffs[j] = field.element(static_cast<unsigned>(index % field.q));
    index /= field.q;
  }
  return poly;
}

// index-th binary string of length len with exactly ones 1s, in ascending
// lexicographic order (leftmost bit most significant).
inline Schedule combination_schedule(long len, long ones, unsigned long long index) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(len), 0);
  for (long pos = 0; pos < len; ++pos) {
    const unsigned long long with_zero =
        binomial_capped(len - pos - 1, ones, std::numeric_limits<unsigned long long>::max());
    if (index < with_zero) continue;
    index -= with_zero;
    bits[static_cast<std::size_t>(pos)] = 1;
    if (--ones == 0) break;
  }
  return Schedule(std::move(bits));
}

}  // namespace detail

// Schedules from the polynomials of degree <= k over GF(q); transmitter i
// (1-indexed) uses the polynomial whose coefficient vector is the base-q
// digit expansion of i-1, constant coefficient least significant. In
// sub-period x, slot y is 1 iff f_i(e_x) = e_y, so the period is q^2 and
// every schedule has weight q.
inline SequenceSet gf_sequences(int density, long n) {
  const GfParams params = gf_params(density, n);
  const auto field = gf::field_new(params.q);
  SequenceSet set;
  set.tag = SchemeTag::Gf;
  set.gf = params;
  set.period = static_cast<long>(params.q) * params.q;
  set.space_size = pow_capped(params.q, params.k + 1, std::numeric_limits<unsigned long long>::max());
  set.schedules.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    set.schedules.push_back(detail::gf_schedule(
        field, detail::gf_polynomial(field, params.k, static_cast<unsigned long long>(i))));
  }
  return set;
}

// Smallest L with C(L, ceil(L/2)) >= n, by binary search over {1..n}.
inline long combination_min_length(long n) {
  if (n < 1) throw std::invalid_argument("combination_min_length: n must be >= 1");
  long lo = 1, hi = n;
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (binomial_capped(mid, (mid + 1) / 2, static_cast<unsigned long long>(n)) >=
        static_cast<unsigned long long>(n)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

// First n of all C(L, ceil(L/2)) binary strings with exactly ceil(L/2) ones,
// in ascending lexicographic order, where L = combination_min_length(n).
inline SequenceSet combination_sequences(long n) {
  const long len = combination_min_length(n);
  const long ones = (len + 1) / 2;
  SequenceSet set;
  set.tag = SchemeTag::Combination;
  set.period = len;
  set.space_size = binomial_capped(len, ones, std::numeric_limits<unsigned long long>::max());
  set.schedules.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    set.schedules.push_back(detail::combination_schedule(len, ones, static_cast<unsigned long long>(i)));
  return set;
}

// Schedule at a given index of the set's full space.
inline Schedule schedule_from_space(const SequenceSet& set, unsigned long long index) {
  if (index >= set.space_size) throw std::out_of_range("schedule_from_space: index beyond space");
  if (index < set.schedules.size()) return set.schedules[static_cast<std::size_t>(index)];
  switch (set.tag) {
    case SchemeTag::Tdma: {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(set.period), 0);
      bits[static_cast<std::size_t>(index)] = 1;
      return Schedule(std::move(bits));
    }
    case SchemeTag::Gf: {
      const auto field = gf::field_new(set.gf.q);
      return detail::gf_schedule(field, detail::gf_polynomial(field, set.gf.k, index));
    }
    case SchemeTag::Combination:
      return detail::combination_schedule(set.period, (set.period + 1) / 2, index);
  }
  throw std::logic_error("schedule_from_space: bad tag");
}

// Throughput-optimal transmit probability for density D.
inline AlohaPolicy aloha_probability(int density) {
  if (density < 1) throw std::invalid_argument("aloha_probability: density must be >= 1");
  return AlohaPolicy{1.0 / (density + 1)};
}

// True iff s has no slot in the period where it is 1 and every schedule in
// others is 0.
inline bool blocked(const Schedule& s, std::span<const Schedule> others) {
  for (const auto& o : others)
    if (o.period() != s.period()) throw PeriodMismatchError();
  for (long t = 1; t <= s.period(); ++t) {
    if (!s.bit(t)) continue;
    bool covered = false;
    for (const auto& o : others) {
      if (o.bit(t)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

inline std::string sequence_lines(const SequenceSet& set) {
  std::string out;
  for (const auto& s : set.schedules) {
    out += s.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace ttsched
