#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttsched::gf {

struct NotPrimePowerError : std::invalid_argument {
  explicit NotPrimePowerError(unsigned long long q)
      : std::invalid_argument("not a prime power: " + std::to_string(q)) {}
};

// Element of GF(q), stored as the canonical integer in [0, q) whose base-p
// digits are the coefficient vector (digit j = coefficient of x^j). The
// field's 1-based element index is rep + 1.
struct FieldElement {
  std::uint16_t rep = 0;
  friend bool operator==(FieldElement a, FieldElement b) { return a.rep == b.rep; }
  friend bool operator!=(FieldElement a, FieldElement b) { return a.rep != b.rep; }
};

// Polynomial of degree at most k over GF(q); coeffs has size exactly k+1,
// coeffs[j] multiplies e^j. Trailing zeros are permitted.
struct Polynomial {
  std::vector<FieldElement> coeffs;
};

inline bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Writes p and m with q = p^m; returns false when q is not a prime power.
inline bool prime_power_decompose(unsigned long long q, unsigned& p, unsigned& m) {
  if (q < 2) return false;
  unsigned long long base = q;
  for (unsigned long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  unsigned exp = 0;
  unsigned long long rest = q;
  while (rest % base == 0) {
    rest /= base;
    ++exp;
  }
  if (rest != 1) return false;
  p = static_cast<unsigned>(base);
  m = exp;
  return true;
}

inline bool is_prime_power(unsigned long long q) {
  unsigned p, m;
  return prime_power_decompose(q, p, m);
}

namespace detail {

// Dense coefficient vectors over GF(p), constant term first.
using Coeffs = std::vector<unsigned>;

inline int degree(const Coeffs& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// Remainder of a mod b over GF(p); b must be monic of positive degree.
inline Coeffs poly_mod(Coeffs a, const Coeffs& b, unsigned p) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) {
    const unsigned lead = a[static_cast<std::size_t>(da)];
    for (int j = 0; j <= db; ++j) {
      auto& c = a[static_cast<std::size_t>(da - db + j)];
      c = (c + p * p - lead * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  return a;
}

inline bool is_irreducible(const Coeffs& f, unsigned p) {
  const int m = degree(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    unsigned long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (unsigned long long idx = 0; idx < count; ++idx) {
      Coeffs g(static_cast<std::size_t>(d) + 1, 0);
      unsigned long long v = idx;
      for (int j = 0; j < d; ++j) {
        g[static_cast<std::size_t>(j)] = static_cast<unsigned>(v % p);
        v /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (degree(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace detail

// GF(p^m) with a fixed monic irreducible reduction polynomial. Immutable
// after construction; all operations on it are pure.
struct FieldSpec {
  unsigned p = 2;
  unsigned m = 1;
  unsigned q = 2;
  // Coefficients of the reduction polynomial, constant term first, length
  // m+1, leading coefficient 1. Unused when m == 1.
  std::vector<unsigned> reduction;

  FieldElement element(unsigned rep) const { return FieldElement{static_cast<std::uint16_t>(rep)}; }
};

// Builds GF(q) for a prime power q <= 256. For m > 1 the reduction
// polynomial is the lexicographically smallest monic irreducible of degree m
// over GF(p), comparing coefficient lists constant term first.
inline FieldSpec field_new(unsigned long long q) {
  unsigned p, m;
  if (!prime_power_decompose(q, p, m)) throw NotPrimePowerError(q);
  if (q > 256) throw std::invalid_argument("unsupported field size q > 256");
  FieldSpec spec;
  spec.p = p;
  spec.m = m;
  spec.q = static_cast<unsigned>(q);
  if (m > 1) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned long long idx = 0; idx < count; ++idx) {
      detail::Coeffs f(m + 1, 0);
      // Digit order chosen so ascending idx is lexicographic on (c0, c1, ...).
      unsigned long long v = idx;
      for (unsigned j = 0; j < m; ++j) {
        f[m - 1 - j] = static_cast<unsigned>(v % p);
        v /= p;
      }
      f[m] = 1;
      if (detail::is_irreducible(f, p)) {
        spec.reduction = f;
        break;
      }
    }
  }
  return spec;
}

inline FieldElement add(FieldElement a, FieldElement b, const FieldSpec& f) {
  if (f.m == 1) return FieldElement{static_cast<std::uint16_t>((a.rep + b.rep) % f.p)};
  unsigned out = 0, scale = 1, x = a.rep, y = b.rep;
  for (unsigned j = 0; j < f.m; ++j) {
    out += (x % f.p + y % f.p) % f.p * scale;
    x /= f.p;
    y /= f.p;
    scale *= f.p;
  }
  return FieldElement{static_cast<std::uint16_t>(out)};
}

inline FieldElement mul(FieldElement a, FieldElement b, const FieldSpec& f) {
  if (f.m == 1)
    return FieldElement{static_cast<std::uint16_t>(static_cast<unsigned>(a.rep) * b.rep % f.p)};
  detail::Coeffs da(f.m, 0), db(f.m, 0);
  unsigned x = a.rep, y = b.rep;
  for (unsigned j = 0; j < f.m; ++j) {
    da[j] = x % f.p;
    db[j] = y % f.p;
    x /= f.p;
    y /= f.p;
  }
  detail::Coeffs prod(2 * f.m - 1, 0);
  for (unsigned i = 0; i < f.m; ++i)
    for (unsigned j = 0; j < f.m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
  prod = detail::poly_mod(std::move(prod), f.reduction, f.p);
  unsigned out = 0, scale = 1;
  for (unsigned j = 0; j < f.m; ++j) {
    out += (j < prod.size() ? prod[j] : 0) * scale;
    scale *= f.p;
  }
  return FieldElement{static_cast<std::uint16_t>(out)};
}

// Horner evaluation of f at e.
inline FieldElement eval_poly(const Polynomial& f, FieldElement e, const FieldSpec& spec) {
  FieldElement acc{0};
  for (std::size_t i = f.coeffs.size(); i-- > 0;) {
    acc = add(mul(acc, e, spec), f.coeffs[i], spec);
  }
  return acc;
}

}  // namespace ttsched::gf
