// Generates a small density-1 network and compares the four schemes'
// simulated timely throughput against the closed-form values.

#include <cstdio>
#include <vector>

#include "ttsched/analytics.hpp"
#include "ttsched/simulator.hpp"
#include "ttsched/topology.hpp"

int main() {
  using namespace ttsched;

  GenOptions gen;
  gen.n = 10;
  gen.delta = 200;
  gen.density_cap = 1;
  gen.exact_density = true;
  gen.area_w = gen.area_h = 3500;
  gen.channel = ChannelSpec::fixed(0.8);
  const Topology topo = generate_topology(gen, 2024);
  std::printf("topology: %d pairs, max interferer count %d\n", topo.size(),
              max_interferer_count(topo));

  const std::vector<double> ps(10, 0.8);
  const long t = 10;
  for (Scheme scheme : {Scheme::Aloha, Scheme::Tdma, Scheme::Gf, Scheme::Combination}) {
    SimConfig cfg;
    cfg.scheme = scheme;
    cfg.n = 10;
    cfg.density = 1;
    cfg.frame_len = t;
    cfg.horizon_frames = 2000;
    cfg.replications = 10;
    cfg.seed = 7;
    const SimResult res = run(cfg, topo);
    double reference = 0;
    const char* kind = "lower bound";
    switch (scheme) {
      case Scheme::Aloha: reference = aloha_average_lb(1, 10, t, ps); break;
      case Scheme::Tdma:
        reference = tdma_average(10, t, ps);
        kind = "exact";
        break;
      case Scheme::Gf: reference = gf_average_lb(1, 10, t, ps); break;
      case Scheme::Combination: reference = combination_average_lb(10, t, ps); break;
    }
    std::printf("%-12s empirical %.4f +- %.4f   analytic %s %.4f\n", scheme_name(scheme),
                res.average, res.stderr_, kind, reference);
  }
  return 0;
}
