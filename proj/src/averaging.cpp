#include "embeddings.hpp"

#include "error.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace indturan {

namespace mp = boost::multiprecision;

namespace {

BigInt ipow(const BigInt& base, unsigned e) { return mp::pow(base, e); }

BigInt ipow(int base, unsigned e) { return mp::pow(BigInt(base), e); }

}  // namespace

void validate(const Thresholds& th) {
  require(th.c > 0 && th.c < 1, ErrorCode::InvalidArgument, "threshold c must lie in (0,1)");
  require(th.alpha > 0, ErrorCode::InvalidArgument, "alpha must be positive");
  require(th.c_big > 0, ErrorCode::InvalidArgument, "C must be positive");
  require(th.c_hs > 0, ErrorCode::InvalidArgument, "C(H,s) must be positive");
  require(th.m_blow > 0, ErrorCode::InvalidArgument, "blowup multiplicity must be positive");
  require(th.gamma > 0 && th.gamma < 1, ErrorCode::InvalidArgument, "gamma must lie in (0,1)");
  require(th.lambda > 0, ErrorCode::InvalidArgument, "lambda must be positive");
  require(th.c1 > 0 && th.c2 > 0 && th.c3 > 0, ErrorCode::InvalidArgument, "C1, C2, C3 must be positive");
  require(th.retries >= 0 && th.hall_t >= 0, ErrorCode::InvalidArgument, "retries and hall_t must be non-negative");
  require(th.search_cap > 0, ErrorCode::InvalidArgument, "search cap must be positive");
}

BigInt formula_rich_threshold(int h, int s) {
  require(h >= 1 && s >= 1, ErrorCode::InvalidArgument, "h and s must be positive");
  return BigInt(s) * ipow(4 * h, static_cast<unsigned>(s + 1));
}

BigInt formula_blowup_multiplicity(int h, int s) {
  require(h >= 1 && s >= 1, ErrorCode::InvalidArgument, "h and s must be positive");
  return ipow(2, static_cast<unsigned>(h + s + 3)) * ipow(s, static_cast<unsigned>(s)) *
         ipow(h, static_cast<unsigned>(2 * s));
}

Rational formula_regularity_log2(const Rational& alpha) {
  require(alpha > 0, ErrorCode::InvalidArgument, "alpha must be positive");
  return Rational(4) / alpha + 2;
}

Rational formula_c3(int h, int s, int p, const Rational& gamma) {
  require(gamma > 0 && gamma < 1, ErrorCode::InvalidArgument, "gamma must lie in (0,1)");
  require(p >= 1, ErrorCode::InvalidArgument, "p must be positive");
  return Rational(1) / (1 - gamma) * Rational(BigInt(s) * ipow(p, static_cast<unsigned>(p))) *
         Rational(ipow(4 * h, static_cast<unsigned>(s + 1)));
}

Rational formula_epsilon(const BigInt& k, int r, int t) {
  require(k > 0 && r >= 0 && t >= 0, ErrorCode::InvalidArgument, "K must be positive");
  return pow(Rational(BigInt(1), 4 * k), static_cast<unsigned>(2 * t + r));
}

Rational formula_path_constant(const BigInt& lambda, int s, int r, const BigInt& k, const Rational& epsilon) {
  require(epsilon > 0 && r >= 1 && s >= 1, ErrorCode::InvalidArgument, "need epsilon > 0 and r, s >= 1");
  return Rational(lambda * s * r) * pow(Rational(r * k) / epsilon, static_cast<unsigned>(r + s + 2)) *
         Rational(ipow(2, static_cast<unsigned>(6 + 3 * s + 4 * r)));
}

Thresholds formula_thresholds(const BipartiteTemplate& h, int s) {
  Thresholds th;
  th.c_hs = formula_rich_threshold(h.h(), s);
  const auto m = formula_blowup_multiplicity(h.h(), s);
  require(m <= INT_MAX, ErrorCode::TooLarge, "blowup multiplicity does not fit the search");
  th.m_blow = static_cast<int>(m);
  int p = 1;
  h.b.for_each([&](Vertex b) { p = std::max(p, h.graph.degree(b)); });
  th.c3 = formula_c3(h.h(), s, p, th.gamma);
  return th;
}

BadSetResult bad_set(const Graph& g, const VertexSet& w, const Rational& c, int s) {
  require(!w.empty(), ErrorCode::EmptyQuery, "bad set of an empty W");
  require(c > 0, ErrorCode::InvalidArgument, "c must be positive");
  const auto size = w.count();
  BadSetResult out;
  out.set = VertexSet(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (!w.contains(v) && Rational(g.neighbors(v).intersection_count(w)) >= c * size) out.set.insert(v);
  if (s >= 1 && c < 1) {
    const bool large = Rational(size) >= Rational(s) * pow(Rational(2) / c, static_cast<unsigned>(s));
    out.lemma_applies = large && !contains_kss(g, s).has_value();
    out.bound_holds = c * out.set.count() < 2 * s;
  }
  return out;
}

RichSetResult rich_s_set(const Graph& g, const Bipartition& parts, const Rational& c, int s) {
  validate_partition(parts, g.order());
  require(c > 0 && c <= 1, ErrorCode::HypothesisUnmet, "c must lie in (0,1]");
  require(s >= 1, ErrorCode::HypothesisUnmet, "s must be positive");
  const auto xs = parts.x.to_vector();
  const int ny = parts.y.count();
  int cross = 0;
  for (Vertex x : xs) cross += g.neighbors(x).intersection_count(parts.y);
  require(Rational(cross) >= c * static_cast<int>(xs.size()) * ny, ErrorCode::HypothesisUnmet,
          "e(X,Y) < c|X||Y|");
  require(c * static_cast<int>(xs.size()) >= 2 * s, ErrorCode::HypothesisUnmet, "c|X| < 2s");

  RichSetResult out;
  out.threshold = pow(c / 2, static_cast<unsigned>(s)) * ny;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s));
  std::iota(idx.begin(), idx.end(), 0);
  const auto k = static_cast<std::size_t>(s);
  while (true) {
    VertexSet common = parts.y;
    VertexSet chosen(g.order());
    for (auto i : idx) {
      common &= g.neighbors(xs[i]);
      chosen.insert(xs[i]);
    }
    if (Rational(common.count()) >= out.threshold) {
      out.set = chosen;
      out.common = common.count();
      return out;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == xs.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (auto j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

struct Exponent {
  unsigned p;  // alpha = p / q
  unsigned q;
};

Exponent split(const Rational& alpha) {
  return {static_cast<unsigned>(mp::numerator(alpha)), static_cast<unsigned>(mp::denominator(alpha))};
}

/// e1 / m1^{1+alpha} > e2 / m2^{1+alpha}.
bool denser(int e1, int m1, int e2, int m2, Exponent a) {
  if (m1 == 0) return false;
  if (m2 == 0) return true;
  return ipow(BigInt(e1), a.q) * ipow(BigInt(m2), a.q + a.p) > ipow(BigInt(e2), a.q) * ipow(BigInt(m1), a.q + a.p);
}

int degree_in(const Graph& g, Vertex v, const VertexSet& u) { return g.neighbors(v).intersection_count(u); }

bool almost_regular_in(const Graph& g, const VertexSet& u, const Rational& k_log2) {
  int lo = INT_MAX;
  int hi = 0;
  u.for_each([&](Vertex v) {
    const int d = degree_in(g, v, u);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  });
  if (u.empty()) return true;
  const auto p = static_cast<unsigned>(mp::numerator(k_log2));
  const auto q = static_cast<unsigned>(mp::denominator(k_log2));
  return ipow(BigInt(hi), q) <= ipow(2, p) * ipow(BigInt(lo), q);
}

}  // namespace

bool is_almost_regular_pow2(const Graph& g, const Rational& k_log2) {
  require(k_log2 >= 0, ErrorCode::InvalidArgument, "log2 K must be non-negative");
  return almost_regular_in(g, g.vertices(), k_log2);
}

RegularizeResult regularize(const Graph& g, const Rational& alpha, const Rational& c_big) {
  require(alpha > 0 && alpha < 1, ErrorCode::HypothesisUnmet, "alpha must lie in (0,1)");
  require(c_big > 0, ErrorCode::HypothesisUnmet, "C must be positive");
  const int n = g.order();
  require(n > 0, ErrorCode::HypothesisUnmet, "empty graph");
  const auto a = split(alpha);
  const Rational ratio = Rational(g.size()) / c_big;
  require(pow(ratio, a.q) >= Rational(ipow(BigInt(n), a.q + a.p)), ErrorCode::HypothesisUnmet,
          "e(G) < C n^{1+alpha}");

  RegularizeResult out;
  out.k_log2 = formula_regularity_log2(alpha);
  VertexSet u = g.vertices();
  while (true) {
    int e = edges_within(g, u);
    int m = u.count();
    while (m > 1) {
      Vertex low = -1;
      int low_deg = INT_MAX;
      u.for_each([&](Vertex v) {
        const int d = degree_in(g, v, u);
        if (d < low_deg) {
          low_deg = d;
          low = v;
        }
      });
      if (!denser(e - low_deg, m - 1, e, m, a)) break;
      u.erase(low);
      e -= low_deg;
      --m;
    }
    if (almost_regular_in(g, u, out.k_log2)) break;
    auto order = u.to_vector();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) deg[static_cast<std::size_t>(v)] = degree_in(g, v, u);
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
      return deg[static_cast<std::size_t>(x)] > deg[static_cast<std::size_t>(y)];
    });
    const auto half = (order.size() + 1) / 2;
    const auto top = VertexSet::of(n, std::vector<Vertex>(order.begin(), order.begin() + static_cast<long>(half)));
    const auto bottom = u - top;
    const int e_top = edges_within(g, top);
    const int e_bottom = edges_within(g, bottom);
    u = denser(e_bottom, bottom.count(), e_top, top.count(), a) ? bottom : top;
  }

  out.subgraph = induced_subgraph(g, u);
  out.m = u.count();
  out.edges = out.subgraph.graph.size();
  out.almost_regular = almost_regular_in(g, u, out.k_log2);
  const BigInt m_big(out.m);
  out.density_guarantee =
      pow(Rational(4 * out.edges) / c_big, a.q) >= Rational(ipow(m_big, a.q + a.p));
  // m K >= C^{(p+q)/(2p+4q)} n^{p/(2p+4q)}, raised to the power p(2p+4q).
  const unsigned span = 2 * a.p + 4 * a.q;
  out.size_guarantee = Rational(ipow(m_big, a.p * span) * ipow(2, (4 * a.q + 2 * a.p) * span)) >=
                       pow(c_big, a.p * (a.p + a.q)) * Rational(ipow(BigInt(n), a.p * a.p));
  return out;
}

}  // namespace indturan
