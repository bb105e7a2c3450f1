#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ttsched/galois.hpp"

using namespace ttsched::gf;

namespace {

constexpr unsigned kPrimePowersTo32[] = {2,  3,  4,  5,  7,  8,  9,  11, 13,
                                         16, 17, 19, 23, 25, 27, 29, 31, 32};

// Independent irreducibility oracle: f (constant term first, monic) has a
// nontrivial monic factor iff some product of two lower-degree monic
// polynomials reproduces it. Checked by exhaustive root search for degree
// 2-3 and by full factor enumeration beyond.
bool oracle_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const auto deg = static_cast<unsigned>(f.size() - 1);
  auto eval = [&](const std::vector<unsigned>& poly, unsigned x) {
    unsigned acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
    return acc;
  };
  if (deg <= 3) {
    for (unsigned x = 0; x < p; ++x)
      if (eval(f, x) == 0) return false;
    return deg >= 2;
  }
  // Multiply out every split d + (deg - d) and compare coefficients.
  auto unpack = [&](unsigned long long idx, unsigned d) {
    std::vector<unsigned> g(d + 1, 1);
    for (unsigned j = 0; j < d; ++j) {
      g[j] = static_cast<unsigned>(idx % p);
      idx /= p;
    }
    return g;
  };
  for (unsigned d = 1; d <= deg / 2; ++d) {
    unsigned long long count_a = 1, count_b = 1;
    for (unsigned i = 0; i < d; ++i) count_a *= p;
    for (unsigned i = 0; i < deg - d; ++i) count_b *= p;
    for (unsigned long long a = 0; a < count_a; ++a) {
      const auto ga = unpack(a, d);
      for (unsigned long long b = 0; b < count_b; ++b) {
        const auto gb = unpack(b, deg - d);
        std::vector<unsigned> prod(deg + 1, 0);
        for (std::size_t i = 0; i < ga.size(); ++i)
          for (std::size_t j = 0; j < gb.size(); ++j)
            prod[i + j] = (prod[i + j] + ga[i] * gb[j]) % p;
        if (prod == f) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field_new decomposes prime powers") {
  const auto f2 = field_new(2);
  CHECK(f2.p == 2);
  CHECK(f2.m == 1);

  const auto f9 = field_new(9);
  CHECK(f9.p == 3);
  CHECK(f9.m == 2);
  // Smallest monic irreducible quadratic over GF(3), by exhaustive check.
  std::vector<unsigned> expected;
  for (unsigned c0 = 0; c0 < 3 && expected.empty(); ++c0)
    for (unsigned c1 = 0; c1 < 3 && expected.empty(); ++c1)
      if (oracle_irreducible({c0, c1, 1}, 3)) expected = {c0, c1, 1};
  CHECK(f9.reduction == expected);
  CHECK(f9.reduction == std::vector<unsigned>{1, 0, 1});  // x^2 + 1

  CHECK_THROWS_AS(field_new(12), NotPrimePowerError);
  CHECK_THROWS_AS(field_new(0), NotPrimePowerError);
}

TEST_CASE("reduction polynomials are irreducible for every supported size") {
  for (unsigned q : kPrimePowersTo32) {
    const auto f = field_new(q);
    if (f.m > 1) {
      INFO("q = " << q);
      CHECK(oracle_irreducible(f.reduction, f.p));
    }
  }
  // Largest extension sizes in range.
  CHECK(oracle_irreducible(field_new(128).reduction, 2));
  CHECK(oracle_irreducible(field_new(243).reduction, 3));
  CHECK(oracle_irreducible(field_new(256).reduction, 2));
}

TEST_CASE("addition examples") {
  const auto f2 = field_new(2);
  CHECK(add(f2.element(1), f2.element(1), f2) == f2.element(0));

  const auto f3 = field_new(3);
  CHECK(add(f3.element(2), f3.element(2), f3) == f3.element(1));

  const auto f4 = field_new(4);  // rep 2 = x, rep 3 = x+1
  CHECK(add(f4.element(2), f4.element(3), f4) == f4.element(1));
}

TEST_CASE("multiplication examples") {
  const auto f5 = field_new(5);
  CHECK(mul(f5.element(3), f5.element(4), f5) == f5.element(2));

  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const auto f = field_new(q);
    for (unsigned a = 0; a < q; ++a) CHECK(mul(f.element(0), f.element(a), f) == f.element(0));
  }

  const auto f4 = field_new(4);
  REQUIRE(f4.reduction == std::vector<unsigned>{1, 1, 1});  // x^2 + x + 1
  CHECK(mul(f4.element(2), f4.element(2), f4) == f4.element(3));  // x * x = x + 1
}

TEST_CASE("polynomial evaluation examples") {
  const auto f7 = field_new(7);
  const Polynomial constant{{f7.element(5), f7.element(0), f7.element(0)}};
  for (unsigned e = 0; e < 7; ++e) CHECK(eval_poly(constant, f7.element(e), f7) == f7.element(5));

  const auto f2 = field_new(2);
  const Polynomial one_plus_x{{f2.element(1), f2.element(1)}};
  CHECK(eval_poly(one_plus_x, f2.element(1), f2) == f2.element(0));

  const auto f3 = field_new(3);
  const Polynomial x_squared{{f3.element(0), f3.element(0), f3.element(1)}};
  CHECK(eval_poly(x_squared, f3.element(2), f3) == f3.element(1));
}

TEST_CASE("field axioms hold exhaustively for q <= 32") {
  for (unsigned q : kPrimePowersTo32) {
    const auto f = field_new(q);
    INFO("q = " << q);

    // Identities.
    for (unsigned a = 0; a < q; ++a) {
      CHECK(add(f.element(a), f.element(0), f) == f.element(a));
      CHECK(mul(f.element(a), f.element(1), f) == f.element(a));
    }
    // Inverses.
    for (unsigned a = 0; a < q; ++a) {
      bool add_inv = false, mul_inv = a == 0;
      for (unsigned b = 0; b < q; ++b) {
        add_inv |= add(f.element(a), f.element(b), f) == f.element(0);
        mul_inv |= mul(f.element(a), f.element(b), f) == f.element(1);
      }
      CHECK(add_inv);
      CHECK(mul_inv);
    }
    // Commutativity, associativity, distributivity.
    bool ok = true;
    for (unsigned a = 0; a < q && ok; ++a) {
      for (unsigned b = 0; b < q && ok; ++b) {
        ok &= add(f.element(a), f.element(b), f) == add(f.element(b), f.element(a), f);
        ok &= mul(f.element(a), f.element(b), f) == mul(f.element(b), f.element(a), f);
        for (unsigned c = 0; c < q && ok; ++c) {
          const auto ea = f.element(a), eb = f.element(b), ec = f.element(c);
          ok &= add(add(ea, eb, f), ec, f) == add(ea, add(eb, ec, f), f);
          ok &= mul(mul(ea, eb, f), ec, f) == mul(ea, mul(eb, ec, f), f);
          ok &= mul(ea, add(eb, ec, f), f) ==
                add(mul(ea, eb, f), mul(ea, ec, f), f);
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("nonzero elements have multiplicative order dividing q-1") {
  for (unsigned q : kPrimePowersTo32) {
    const auto f = field_new(q);
    INFO("q = " << q);
    bool ok = true;
    for (unsigned a = 1; a < q; ++a) {
      auto acc = f.element(1);
      for (unsigned e = 0; e + 1 < q; ++e) acc = mul(acc, f.element(a), f);
      ok &= acc == f.element(1);
    }
    CHECK(ok);
  }
}

TEST_CASE("distinct polynomials of degree at most k agree on at most k points") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = field_new(q);
    for (unsigned k = 0; k <= 2; ++k) {
      unsigned long long count = 1;
      for (unsigned i = 0; i <= k; ++i) count *= q;
      auto poly_at = [&](unsigned long long idx) {
        Polynomial poly;
        poly.coeffs.resize(k + 1);
        for (unsigned j = 0; j <= k; ++j) {
          poly.coeffs[j] = f.element(static_cast<unsigned>(idx % q));
          idx /= q;
        }
        return poly;
      };
      bool ok = true;
      for (unsigned long long a = 0; a < count && ok; ++a) {
        const auto pa = poly_at(a);
        for (unsigned long long b = a + 1; b < count && ok; ++b) {
          const auto pb = poly_at(b);
          unsigned agreements = 0;
          for (unsigned e = 0; e < q; ++e)
            if (eval_poly(pa, f.element(e), f) == eval_poly(pb, f.element(e), f)) ++agreements;
          ok &= agreements <= k;
        }
      }
      INFO("q = " << q << ", k = " << k);
      CHECK(ok);
    }
  }
}
