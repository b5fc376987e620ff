#pragma once

#include "families.hpp"

#include <optional>

namespace indturan {

/// e_S: edges of F with at least one end in S. Throws EmptyQuery for empty S.
int edges_incident(const Graph& f, const VertexSet& s);

/// rho_F(S) = e_S / |S|.
Rational rho_of(const Graph& f, const VertexSet& s);

/// rho(F) = rho_F(V(F) \ R).
Rational rho(const RootedGraph& f);

/// 2 - 1/rho, or nullopt when rho = 0.
std::optional<Rational> exponent_for(const Rational& rho);

struct DensityReport {
  Rational rho;
  bool balanced = true;
  /// Lexicographically least subset of V \ R attaining the minimum rho_F(S);
  /// present only when that minimum is below rho.
  std::optional<VertexSet> witness;
  Rational witness_rho;
  std::optional<Rational> exponent;
};

inline constexpr int kBalanceBudget = 30;

/**
 * Exhaustive balancedness check over nonempty S in V(F) \ R.
 *
 * Subsets are enumerated by include/exclude branching with incremental e_S;
 * a branch is cut when the best density any completion can reach (each
 * undecided vertex contributes its edges leaving the decided/undecided pool
 * plus half of its edges inside the pool) cannot improve on the incumbent.
 * Throws TooLarge when |V \ R| exceeds budget.
 */
DensityReport is_balanced(const RootedGraph& f, int budget = kBalanceBudget);

/// rho(F(1)) == rho(F) + 1, and F(1) balanced whenever F is.
bool verify_reduction_rho(const RootedGraph& f, const Bipartition& parts);

}  // namespace indturan
