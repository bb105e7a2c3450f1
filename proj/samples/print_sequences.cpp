// Builds the three deterministic sequence schemes for a small network and
// prints the schedules with their guarantees.

#include <cstdio>

#include "ttsched/analytics.hpp"
#include "ttsched/schemes.hpp"

int main() {
  using namespace ttsched;

  const int density = 1;
  const long n = 10;

  const auto tdma = tdma_sequences(n);
  std::printf("tdma, period %ld:\n", tdma.period);
  for (const auto& s : tdma.schedules) std::printf("  %s\n", s.to_string().c_str());

  const auto gf = gf_sequences(density, n);
  std::printf("gf, q=%u k=%u, period %ld (space %llu):\n", gf.gf.q, gf.gf.k, gf.period,
              gf.space_size);
  for (const auto& s : gf.schedules) std::printf("  %s\n", s.to_string().c_str());

  const auto comb = combination_sequences(n);
  std::printf("combination, period %ld (space %llu):\n", comb.period, comb.space_size);
  for (const auto& s : comb.schedules) std::printf("  %s\n", s.to_string().c_str());

  // No schedule is blocked by any other at density 1.
  for (const auto* set : {&gf, &comb}) {
    for (std::size_t i = 0; i < set->schedules.size(); ++i)
      for (std::size_t j = 0; j < set->schedules.size(); ++j)
        if (i != j && blocked(set->schedules[i], {&set->schedules[j], 1}))
          std::printf("unexpected blocking at %zu vs %zu!\n", i, j);
  }

  const long t = 10;
  std::vector<double> ps(static_cast<std::size_t>(n), 0.8);
  std::printf("\nlower bounds at T=%ld, p=0.8: tdma(exact)=%.4f gf>=%.4f combination>=%.4f\n", t,
              tdma_average(n, t, ps), gf_average_lb(density, n, t, ps),
              combination_average_lb(n, t, ps));
  return 0;
}
