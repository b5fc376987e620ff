#include "density.hpp"

#include "error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace indturan {

int edges_incident(const Graph& f, const VertexSet& s) {
  require(!s.empty(), ErrorCode::EmptyQuery, "e_S of the empty set");
  int count = 0;
  for (const auto& [u, v] : f.edges())
    if (s.contains(u) || s.contains(v)) ++count;
  return count;
}

Rational rho_of(const Graph& f, const VertexSet& s) {
  return Rational(BigInt(edges_incident(f, s)), BigInt(s.count()));
}

Rational rho(const RootedGraph& f) { return rho_of(f.graph, f.non_roots()); }

std::optional<Rational> exponent_for(const Rational& rho) {
  if (rho == 0) return std::nullopt;
  return Rational(2) - Rational(1) / rho;
}

namespace {

// e / k with k > 0, compared by cross multiplication.
struct Ratio {
  std::int64_t e = 0;
  std::int64_t k = 1;
};
bool less(Ratio a, Ratio b) { return a.e * b.k < b.e * a.k; }
bool equal(Ratio a, Ratio b) { return a.e * b.k == b.e * a.k; }

class BalanceSearch {
 public:
  explicit BalanceSearch(const RootedGraph& f) : f_(f), free_(f.non_roots().to_vector()) {
    rho_f_ = {edges_incident(f.graph, f.non_roots()), static_cast<std::int64_t>(free_.size())};
    best_ = rho_f_;
    best_set_ = f.non_roots();
  }

  void run() {
    VertexSet s(f_.graph.order());
    descend(0, s, 0, 0);
  }

  Ratio best() const { return best_; }
  const VertexSet& best_set() const { return best_set_; }
  bool unbalanced() const { return less(best_, rho_f_); }

 private:
  // Smallest density reachable from the current partial choice.
  Ratio lower_bound(std::size_t next, const VertexSet& s, std::int64_t e_s, std::int64_t size) const {
    VertexSet pool(f_.graph.order());
    for (std::size_t j = next; j < free_.size(); ++j) pool.insert(free_[j]);
    std::vector<std::int64_t> twice_weight;
    twice_weight.reserve(free_.size() - next);
    for (std::size_t j = next; j < free_.size(); ++j) {
      const auto& nb = f_.graph.neighbors(free_[j]);
      const auto outside = (nb - s - pool).count();
      twice_weight.push_back(2 * outside + nb.intersection_count(pool));
    }
    std::sort(twice_weight.begin(), twice_weight.end());
    Ratio lb{-1, 1};
    std::int64_t num = 2 * e_s;
    std::int64_t den = 2 * size;
    if (size > 0) lb = {num, den};
    for (auto w : twice_weight) {
      num += w;
      den += 2;
      const Ratio r{num, den};
      if (lb.e < 0 || less(r, lb)) lb = r;
    }
    return lb;
  }

  bool prune(const Ratio& lb) const {
    if (lb.e < 0) return true;
    if (!less(best_, rho_f_)) return !less(lb, rho_f_);
    return less(best_, lb);
  }

  void descend(std::size_t next, VertexSet& s, std::int64_t e_s, std::int64_t size) {
    if (next == free_.size()) {
      if (size == 0) return;
      const Ratio r{e_s, size};
      if (less(r, best_) || (equal(r, best_) && less(r, rho_f_) && lex_less(s, best_set_))) {
        best_ = r;
        best_set_ = s;
      }
      return;
    }
    if (prune(lower_bound(next, s, e_s, size))) return;
    const Vertex v = free_[next];
    const auto& nb = f_.graph.neighbors(v);
    const std::int64_t added = nb.count() - nb.intersection_count(s);
    s.insert(v);
    descend(next + 1, s, e_s + added, size + 1);
    s.erase(v);
    descend(next + 1, s, e_s, size);
  }

  const RootedGraph& f_;
  std::vector<Vertex> free_;
  Ratio rho_f_;
  Ratio best_;
  VertexSet best_set_;
};

}  // namespace

DensityReport is_balanced(const RootedGraph& f, int budget) {
  const int q = f.non_roots().count();
  require(q <= budget, ErrorCode::TooLarge,
          std::to_string(q) + " non-root vertices exceed the enumeration budget of " + std::to_string(budget));
  DensityReport report;
  report.rho = rho(f);
  report.exponent = exponent_for(report.rho);
  BalanceSearch search(f);
  search.run();
  report.balanced = !search.unbalanced();
  report.witness_rho = Rational(BigInt(search.best().e), BigInt(search.best().k));
  if (!report.balanced) report.witness = search.best_set();
  return report;
}

bool verify_reduction_rho(const RootedGraph& f, const Bipartition& parts) {
  const auto reduced = attach_ktt_rooted(f, parts, 1).rooted;
  if (rho(reduced) != rho(f) + 1) return false;
  return !is_balanced(f).balanced || is_balanced(reduced).balanced;
}

}  // namespace indturan
