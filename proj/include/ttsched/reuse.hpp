#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ttsched/schemes.hpp"
#include "ttsched/topology.hpp"

namespace ttsched {

// Hexagonal cell lattice for GPS-enabled sequence reuse. Cells sit at
// (m*d_min, n*d_min) on axes meeting at 60 degrees; the reuse factor G =
// b1^2 + b1*b2 + b2^2 is the index of the sublattice generated by (b1, b2)
// and (-b2, b1+b2), so G colors tile the plane with same-color centers at
// Euclidean distance >= sqrt(G)*d_min.
struct ReuseLattice {
  double d_min = 1.0;
  double range = 1.0;  // R
  bool strict = false;
  unsigned g = 1;
  unsigned b1 = 1;
  unsigned b2 = 0;
  double cell_radius = 1.0 / std::numbers::sqrt3_v<double>;

  // Coset key -> color, filled by scanning (m, n) over [0,G)^2 in
  // lexicographic order, so color c's canonical representative is the c-th
  // distinct coset encountered.
  std::unordered_map<std::uint64_t, unsigned> colors;
};

namespace detail {

inline std::uint64_t coset_key(long m, long n, unsigned g, unsigned b1, unsigned b2) {
  const long gl = static_cast<long>(g);
  auto pmod = [gl](long v) { return static_cast<std::uint64_t>(((v % gl) + gl) % gl); };
  // Rows of G * inverse of the generator matrix [[b1, -b2], [b2, b1+b2]].
  const std::uint64_t u = pmod(static_cast<long>(b1 + b2) * m + static_cast<long>(b2) * n);
  const std::uint64_t v = pmod(-static_cast<long>(b2) * m + static_cast<long>(b1) * n);
  return u * g + v;
}

}  // namespace detail

// Smallest G = b1^2 + b1*b2 + b2^2 (b1 >= b2 >= 0) with G >= (2R/d_min)^2,
// or strictly greater in strict mode; ties broken by smallest b1.
inline ReuseLattice reuse_factor(double range, double d_min, bool strict = false) {
  if (!(range > 0) || !(d_min > 0))
    throw std::invalid_argument("reuse_factor: range and d_min must be positive");
  const double threshold = (2.0 * range / d_min) * (2.0 * range / d_min);
  const long bound = static_cast<long>(std::ceil(2.0 * range / d_min)) + 1;
  const double eps = 1e-9 * std::max(1.0, threshold);

  unsigned long long best_g = 0;
  long best_b1 = -1, best_b2 = -1;
  for (long b1 = 0; b1 <= bound; ++b1) {
    for (long b2 = 0; b2 <= b1; ++b2) {
      const unsigned long long g =
          static_cast<unsigned long long>(b1 * b1 + b1 * b2 + b2 * b2);
      if (g == 0) continue;
      const double gd = static_cast<double>(g);
      const bool ok = strict ? gd > threshold + eps : gd >= threshold - eps;
      if (!ok) continue;
      if (best_b1 < 0 || g < best_g || (g == best_g && b1 < best_b1)) {
        best_g = g;
        best_b1 = b1;
        best_b2 = b2;
      }
    }
  }
  if (best_b1 < 0) throw std::logic_error("reuse_factor: search bound too small");

  ReuseLattice lat;
  lat.d_min = d_min;
  lat.range = range;
  lat.strict = strict;
  lat.g = static_cast<unsigned>(best_g);
  lat.b1 = static_cast<unsigned>(best_b1);
  lat.b2 = static_cast<unsigned>(best_b2);
  lat.cell_radius = d_min / std::numbers::sqrt3_v<double>;

  lat.colors.reserve(lat.g);
  unsigned next = 0;
  for (long m = 0; m < static_cast<long>(lat.g) && next < lat.g; ++m) {
    for (long n = 0; n < static_cast<long>(lat.g) && next < lat.g; ++n) {
      const auto key = detail::coset_key(m, n, lat.g, lat.b1, lat.b2);
      if (lat.colors.emplace(key, next).second) ++next;
    }
  }
  return lat;
}

// Color of the cell at oblique coordinates (m, n), in [0, G).
inline unsigned cell_index(long m, long n, const ReuseLattice& lat) {
  return lat.colors.at(detail::coset_key(m, n, lat.g, lat.b1, lat.b2));
}

// Cartesian center of cell (m, n).
inline Point cell_center(long m, long n, const ReuseLattice& lat) {
  return Point{(static_cast<double>(m) + static_cast<double>(n) / 2.0) * lat.d_min,
               static_cast<double>(n) * std::numbers::sqrt3_v<double> / 2.0 * lat.d_min};
}

struct ReuseSizing {
  unsigned long long tdma_period = 1;  // G
  GfParams gf;
  unsigned long long gf_period = 4;  // q^2(D, G)
};

// GPS-enabled sizing: TDMA runs with period G, the GF scheme with the
// parameters of gf_params(D, G).
inline ReuseSizing reuse_scheme_params(int density, const ReuseLattice& lat) {
  ReuseSizing out;
  out.tdma_period = lat.g;
  out.gf = gf_params(density, static_cast<long>(lat.g));
  out.gf_period = static_cast<unsigned long long>(out.gf.q) * out.gf.q;
  return out;
}

}  // namespace ttsched
