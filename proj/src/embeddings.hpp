#pragma once

#include "oracles.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace indturan {

/**
 * Explicit parameters for the embedding procedures.
 *
 * The asymptotic constants of the underlying lemmas are astronomically large,
 * so every procedure takes them as inputs. Defaults are desk-scale values;
 * the formula_* functions below give the exact lemma constants for a template.
 */
struct Thresholds {
  Rational c{1, 2};      // bad-set / averaging density
  Rational alpha{1, 2};  // regularization exponent
  Rational c_big{1};     // regularization constant C
  BigInt c_hs{2};        // rich common neighbourhood threshold C(H,s)
  int m_blow = 1;        // blowup multiplicity searched for by asymmetric_embed
  Rational gamma{1, 2};  // density gate for rich p-sets, in (0,1)
  BigInt lambda{1};      // copies available to extraction (informational)
  Rational c1{1};
  Rational c2{1};
  Rational c3{1};
  int retries = 32;      // random attempts before the exhaustive fallback
  int hall_t = 0;        // 0: floor(c_hs / (2h)), at least 1
  std::int64_t search_cap = 2'000'000;
};

/// Throws InvalidArgument unless the thresholds are in range.
void validate(const Thresholds& th);

/// C(H,s) = s(4h)^{s+1}.
BigInt formula_rich_threshold(int h, int s);
/// m = 2^{h+s+3} s^s h^{2s}.
BigInt formula_blowup_multiplicity(int h, int s);
/// log2 K for K = 2^{4/alpha + 2}.
Rational formula_regularity_log2(const Rational& alpha);
/// C3 = (1-gamma)^{-1} s p^p (4h)^{s+1}.
Rational formula_c3(int h, int s, int p, const Rational& gamma);
/// epsilon = (1/(4K))^{2t+r}, for integral K.
Rational formula_epsilon(const BigInt& k, int r, int t);
/// C = lambda s r (rK/epsilon)^{r+s+2} 2^{6+3s+4r}.
Rational formula_path_constant(const BigInt& lambda, int s, int r, const BigInt& k, const Rational& epsilon);
/// Thresholds with c_hs and m_blow (when it fits in an int) from the formulas.
Thresholds formula_thresholds(const BipartiteTemplate& h, int s);

struct TraceEntry {
  int attempt = 0;
  std::string event;
  std::string detail;
};

struct EmbeddingOutcome {
  bool found = false;
  std::optional<VertexMap> map;
  std::vector<TraceEntry> trace;
};

// ------------------------------------------------------------ averaging lemmas

struct BadSetResult {
  VertexSet set;
  /// s >= 2, 0 < c < 1, |W| >= s(2/c)^s and g is K_{s,s}-free.
  bool lemma_applies = false;
  /// |B(W)| < 2s/c.
  bool bound_holds = true;
  bool disproves_lemma() const { return lemma_applies && !bound_holds; }
};

/// B(W) = { v outside W : |N(v) n W| >= c|W| }. s = 0 skips the bound check.
/// Throws EmptyQuery for empty W.
BadSetResult bad_set(const Graph& g, const VertexSet& w, const Rational& c, int s = 0);

struct RichSetResult {
  std::optional<VertexSet> set;
  int common = 0;      // |N*(S) n Y| of the returned set
  Rational threshold;  // (c/2)^s |Y|
};

/// Lexicographically first s-set S in X with |N*(S) n Y| >= (c/2)^s |Y|.
/// Throws HypothesisUnmet unless e(X,Y) >= c|X||Y|, c|X| >= 2s and 0 < c <= 1.
RichSetResult rich_s_set(const Graph& g, const Bipartition& parts, const Rational& c, int s);

struct RegularizeResult {
  Subgraph subgraph;
  Rational k_log2;  // K = 2^{k_log2}
  int m = 0;
  int edges = 0;
  bool almost_regular = false;      // Delta <= K delta, exact
  bool density_guarantee = false;   // e >= (C/4) m^{1+alpha}
  bool size_guarantee = false;      // m >= C^{(a+1)/(2a+4)} n^{a/(2a+4)} / K
};

/// Peel-and-split regularization. Throws HypothesisUnmet unless
/// e(g) >= C n^{1+alpha}, 0 < alpha < 1 and C > 0.
RegularizeResult regularize(const Graph& g, const Rational& alpha, const Rational& c_big);

/// Delta^q <= 2^p delta^q where log2 K = p/q; exact.
bool is_almost_regular_pow2(const Graph& g, const Rational& k_log2);

// ------------------------------------------------------------ tree embedding

/// A subgraph L of a host: its own vertex set plus edges on host ids.
struct HostSubgraph {
  VertexSet vertices;
  Graph edges;  // order == host order; every edge inside `vertices` and in the host
};

/// Throws InvalidArgument unless l is a subgraph of g.
void validate_subgraph(const Graph& g, const HostSubgraph& l);

/// Whole host graph as a subgraph of itself.
HostSubgraph whole(const Graph& g);

struct TreeEmbedReport {
  std::vector<VertexMap> copies;
  bool hypothesis_holds = false;  // min degree >= d >= s t^2 2^{t+6} K^{t-1}
  Rational guaranteed;            // n (d/2)^{t-1}
};

/// Leaf order v_1..v_t: BFS from vertex 0; parent[i] is the earlier neighbour.
std::vector<std::pair<Vertex, Vertex>> leaf_extension_order(const Graph& tree);

/// B(x) = { y in V(L) : |N_G(y) n N_L(x)| >= d/(4t) }.
VertexSet tree_bad_set(const Graph& g, const HostSubgraph& l, Vertex x, int d, int t);

/**
 * Emits every good labelled copy of the tree T in L: induced in the host and
 * y not in B(x) for any two distinct copy vertices x, y. Copies are grown leaf
 * by leaf through the extension sets Gamma(S); the visitor can stop the stream.
 */
void greedy_tree_embed(const Host& host, const HostSubgraph& l, const Graph& tree, int d,
                       const std::function<bool(const VertexMap&)>& visit);

TreeEmbedReport greedy_tree_embed(const Host& host, const HostSubgraph& l, const Graph& tree, int d);

/// A copy is admissible when no vertex has p copy-neighbours whose common
/// L-neighbourhood reaches threshold (no heavy p-star inside the copy).
bool is_admissible(const VertexMap& copy, const Graph& tree, const Graph& l, int p, const BigInt& threshold);

// ------------------------------------------------------------ classifiers

bool heavy_star_classify(const Graph& l, const VertexSet& leaves, const BigInt& threshold);

struct StarCount {
  std::int64_t stars = 0;
  std::int64_t heavy = 0;
};

/// All p-stars (centre v, p-subset of N_L(v)), tallying the heavy ones.
StarCount heavy_star_count(const Graph& l, int p, const BigInt& threshold);

/// |N*_L({x, z})| >= threshold for the path xyz. Throws InvalidArgument if xyz
/// is not a path in L.
bool heavy_path_classify(const Graph& l, Vertex x, Vertex y, Vertex z, const BigInt& threshold);

struct PathCount {
  std::int64_t paths = 0;
  std::int64_t heavy = 0;
};

/// Paths xyz counted once each (x < z).
PathCount heavy_path_count(const Graph& l, const BigInt& threshold);

// ------------------------------------------------------------ key lemma

/// Pairwise-disjoint t-subsets U_i of sets[i], via augmenting paths on the
/// t-fold replicated demand; nullopt iff Hall's condition fails.
std::optional<std::vector<VertexSet>> hall_disjoint_sets(const std::vector<VertexSet>& sets, int t);

struct KeyLemmaInput {
  /// parts[i] is S_v for the i-th vertex of A (increasing order); all of size m.
  std::vector<VertexSet> parts;
  /// Optional explicit rich-set collection D; when present every blowup edge
  /// must be listed.
  std::optional<std::vector<VertexSet>> rich_sets;
};

/**
 * Embeds the template into L (a bipartite subgraph of the host across its
 * partition) so that the copy is induced in the host, given an m-blowup of
 * F_A(H) whose edges are rich sets. Random phi with a retry budget, then an
 * exhaustive sweep over phi; Hall step; sequential placement of B.
 * Throws BadBlowup when the declared blowup is not inside D.
 */
EmbeddingOutcome key_lemma_embed(const Host& host, const Graph& l, const BipartiteTemplate& h, const KeyLemmaInput& input,
                                 const Thresholds& th, std::uint64_t seed);

/**
 * Derandomized asymmetric embedding: for y in Y, look for an m-blowup of
 * F_A(H) among the rich p-sets of N_M(y) and hand it to key_lemma_embed.
 * Throws HypothesisUnmet when some y has d_M(y) < delta_y.
 */
EmbeddingOutcome asymmetric_embed(const Host& host, const Graph& m, const BipartiteTemplate& h, int delta_y,
                                  const Thresholds& th, std::uint64_t seed);

// ------------------------------------------------------------ extraction

struct AuxiliaryColouring {
  /// colour[i][j] for i < j: -1 for no cross edge, else a * q + b for the
  /// lexicographically least (a, b) with v_a^{(i)} v_b^{(j)} in E(G).
  std::vector<std::vector<int>> colour;
  int q = 0;
};

struct ExtractionOutcome {
  EmbeddingOutcome outcome;  // map from V(F^l_R) (rooted_power numbering) into g
  std::vector<int> chosen;   // indices of the copies used
  AuxiliaryColouring auxiliary;
  std::optional<KssWitness> kss;
  bool monochromatic_clique_free = true;
};

/// Throws NotSemiInduced unless every map is an induced copy of F, the maps
/// agree on R and are disjoint elsewhere.
AuxiliaryColouring auxiliary_colouring(const Graph& g, const std::vector<VertexMap>& copies, const RootedGraph& f);

/// Largest monochromatic clique size per colour is compared against 2s; the
/// first clique found (lexicographic) is returned.
std::optional<std::pair<int, std::vector<int>>> monochromatic_clique(const AuxiliaryColouring& aux, int size);

ExtractionOutcome extract_induced_power(const Graph& g, const std::vector<VertexMap>& copies, const RootedGraph& f, int l,
                                        int s);

// ------------------------------------------------------------ random hosts

/// Greedy random K_{s,s}-free graph: pairs in random order, each offered with
/// probability keep_probability and kept unless it would create a K_{s,s}.
Graph random_kss_free(int n, int s, std::uint64_t seed, double keep_probability = 1.0);

/// Random K_{s,s}-free bipartite graph with X = [0, m), Y = [m, 2m).
Graph random_bipartite_kss_free(int m, int s, std::uint64_t seed, double keep_probability = 1.0);

/// Unbiased draw from [0, bound), bound > 0. Spelled out so that draws do not
/// depend on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// K_{s,s} through the edge uv (u on one side, v on the other).
bool kss_through_edge(const Graph& g, Vertex u, Vertex v, int s);

}  // namespace indturan
