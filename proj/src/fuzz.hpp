#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace indturan {

/// Outcome of a seeded batch of random lemma checks.
struct FuzzReport {
  int trials = 0;
  int checked = 0;     // instances where the hypotheses were verified
  int violations = 0;  // checked instances where the conclusion failed
  std::vector<std::string> failures;
};

/// Bad-set bound |B(W)| < 2s/c on random K_{s,s}-free graphs, s in {2, 3}.
FuzzReport fuzz_bad_set(int trials, std::uint64_t seed, int threads = 1);

/// Rich s-set existence on random bipartite graphs, c the exact density.
FuzzReport fuzz_rich_set(int trials, std::uint64_t seed, int threads = 1);

/// Kovari-Sos-Turan bound on random K_{s,s}-free balanced bipartite graphs.
FuzzReport fuzz_kst(int trials, std::uint64_t seed, int threads = 1);

/// Per-trial seed: splitmix64 of base + index.
std::uint64_t trial_seed(std::uint64_t base, int index);

}  // namespace indturan
