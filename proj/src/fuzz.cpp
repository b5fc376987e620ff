#include "fuzz.hpp"

#include "embeddings.hpp"
#include "error.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace indturan {

std::uint64_t trial_seed(std::uint64_t base, int index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct Trial {
  bool checked = false;
  bool violated = false;
  std::string note;
};

template <class Body>
FuzzReport run_trials(int trials, std::uint64_t seed, int threads, Body&& body) {
  require(trials >= 0, ErrorCode::InvalidArgument, "trials must be non-negative");
  std::vector<Trial> results(static_cast<std::size_t>(trials));
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      for (auto i = w; i < results.size(); i += workers) results[i] = body(static_cast<int>(i), trial_seed(seed, static_cast<int>(i)));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  FuzzReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < results.size(); ++i) {
    report.checked += results[i].checked ? 1 : 0;
    if (results[i].violated) {
      ++report.violations;
      report.failures.push_back("trial " + std::to_string(i) + ": " + results[i].note);
    }
  }
  return report;
}

VertexSet random_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
  v.resize(static_cast<std::size_t>(k));
  return VertexSet::of(n, v);
}

int ceil_of(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  return static_cast<int>((num + den - 1) / den);
}

}  // namespace

FuzzReport fuzz_bad_set(int trials, std::uint64_t seed, int threads) {
  return run_trials(trials, seed, threads, [](int index, std::uint64_t s_seed) {
    std::mt19937_64 rng(s_seed);
    const int s = 2 + index % 2;
    static const Rational kDensities2[] = {Rational(1, 2), Rational(2, 3), Rational(3, 4)};
    static const Rational kDensities3[] = {Rational(4, 5), Rational(9, 10)};
    const Rational c = s == 2 ? kDensities2[uniform_below(rng, 3)] : kDensities3[uniform_below(rng, 2)];
    const int w_size = ceil_of(Rational(s) * pow(Rational(2) / c, static_cast<unsigned>(s))) +
                       static_cast<int>(uniform_below(rng, 4));
    const int n = w_size + 6 + static_cast<int>(uniform_below(rng, 10));
    const double keep = uniform_below(rng, 2) == 0 ? 1.0 : 0.5;
    const auto g = random_kss_free(n, s, rng(), keep);
    const auto w = random_subset(n, w_size, rng);
    const auto result = bad_set(g, w, c, s);
    Trial t;
    t.checked = result.lemma_applies;
    t.violated = result.disproves_lemma();
    t.note = "|B(W)| = " + std::to_string(result.set.count()) + " with s = " + std::to_string(s) + ", c = " + to_string(c);
    return t;
  });
}

FuzzReport fuzz_rich_set(int trials, std::uint64_t seed, int threads) {
  return run_trials(trials, seed, threads, [](int index, std::uint64_t s_seed) {
    std::mt19937_64 rng(s_seed);
    const int s = 2 + index % 2;
    const int nx = 6 + static_cast<int>(uniform_below(rng, 7));
    const int ny = 8 + static_cast<int>(uniform_below(rng, 9));
    const int kind = static_cast<int>(uniform_below(rng, 3));
    Graph g(nx + ny);
    if (kind == 0) {
      // K_{s,s}-free cross graph on unequal sides.
      const auto dense = random_kss_free(nx + ny, s, rng());
      for (const auto& [u, v] : dense.edges())
        if ((u < nx) != (v < nx)) g.add_edge(u, v);
    } else {
      const std::uint64_t percent = kind == 1 ? 50 : 75;
      for (Vertex x = 0; x < nx; ++x)
        for (Vertex y = nx; y < nx + ny; ++y)
          if (uniform_below(rng, 100) < percent) g.add_edge(x, y);
    }
    Bipartition parts{VertexSet(nx + ny), VertexSet(nx + ny)};
    for (Vertex v = 0; v < nx + ny; ++v) (v < nx ? parts.x : parts.y).insert(v);
    Trial t;
    if (g.size() == 0) return t;
    const Rational c(g.size(), nx * ny);
    if (c * nx < 2 * s) return t;
    const auto result = rich_s_set(g, parts, c, s);
    t.checked = true;
    t.violated = !result.set.has_value();
    t.note = "no rich " + std::to_string(s) + "-set at density " + to_string(c);
    return t;
  });
}

FuzzReport fuzz_kst(int trials, std::uint64_t seed, int threads) {
  return run_trials(trials, seed, threads, [](int index, std::uint64_t s_seed) {
    std::mt19937_64 rng(s_seed);
    const int s = 2 + index % 2;
    const int m = 4 + static_cast<int>(uniform_below(rng, 11));
    const double keep = uniform_below(rng, 2) == 0 ? 1.0 : 0.6;
    Host host{random_bipartite_kss_free(m, s, rng(), keep), std::nullopt, s};
    Bipartition parts{VertexSet(2 * m), VertexSet(2 * m)};
    for (Vertex v = 0; v < 2 * m; ++v) (v < m ? parts.x : parts.y).insert(v);
    host.partition = parts;
    Trial t;
    t.checked = true;
    t.violated = !kst_check(host);
    t.note = "KST bound fails with m = " + std::to_string(m) + ", e = " + std::to_string(host.graph.size());
    return t;
  });
}

}  // namespace indturan
