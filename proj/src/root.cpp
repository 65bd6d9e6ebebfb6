#include "plh/root.hpp"

#include <algorithm>

#include "plh/error.hpp"

namespace plh {

namespace {

ETPL extend_piece(const std::vector<Point>& bps) {
  return ETPL(bps, bps.front().y - bps.front().x, bps.back().y - bps.back().x);
}

ETPL from_graph(std::vector<Point> pts) {
  Rat left = pts.front().y - pts.front().x;
  Rat right = pts.back().y - pts.back().x;
  return canonicalize(ETPL(std::move(pts), left, right));
}

void append_graph(std::vector<Point>& out, const std::vector<Point>& seg) {
  for (const auto& p : seg) {
    if (!out.empty() && out.back().x == p.x) {
      if (out.back().y != p.y) throw Error("RootPL: discontinuous fundamental-domain data");
      continue;
    }
    out.push_back(p);
  }
}

}  // namespace

RootPL nth_root(const ETPL& base0, int n, const Rat& anchor, std::vector<Rat> divisions,
                std::vector<std::vector<Point>> pieces) {
  if (n < 2) throw Error("nth_root: degree must be at least 2");
  ETPL base = canonicalize(base0);
  auto comps = support(base);
  if (comps.size() != 1) throw Error("nth_root: base must have exactly one support component");
  if (!comps[0].contains(anchor)) throw Error("nth_root: anchor outside the support of the base");
  if (!(base(anchor) > anchor)) throw Error("nth_root: base must push points right on its support");
  if (divisions.size() != static_cast<std::size_t>(n) + 1) throw Error("nth_root: need n+1 division points");
  if (divisions.front() != anchor || divisions.back() != base(anchor))
    throw Error("nth_root: divisions must run from the anchor to its image under the base");
  for (std::size_t i = 1; i < divisions.size(); ++i)
    if (!(divisions[i - 1] < divisions[i])) throw Error("nth_root: divisions must strictly increase");
  if (pieces.size() != static_cast<std::size_t>(n) - 1) throw Error("nth_root: need n-1 pieces");
  for (std::size_t m = 0; m < pieces.size(); ++m) {
    const auto& p = pieces[m];
    if (p.size() < 2) throw Error("nth_root: piece needs at least two points");
    if (p.front() != Point{divisions[m], divisions[m + 1]} || p.back() != Point{divisions[m + 1], divisions[m + 2]})
      throw Error("nth_root: piece " + std::to_string(m) + " must map [s_m, s_m+1] onto [s_m+1, s_m+2]");
    for (std::size_t i = 1; i < p.size(); ++i)
      if (!(p[i - 1].x < p[i].x) || !(p[i - 1].y < p[i].y))
        throw Error("nth_root: piece " + std::to_string(m) + " is not increasing");
  }

  RootPL g;
  g.base_ = base;
  g.base_inv_ = inverse(base);
  g.domain_ = comps[0];
  g.divisions_ = std::move(divisions);
  g.pieces_ = std::move(pieces);

  // g on [s_{n-1}, s_n]: undo the chain of pieces back to [s_0, s_1], then apply the base.
  ETPL chain;
  std::vector<Point> graph;
  for (std::size_t m = 0; m < g.pieces_.size(); ++m) {
    ETPL piece = extend_piece(g.pieces_[m]);
    chain = compose(chain, piece);
    append_graph(graph, g.pieces_[m]);
  }
  const auto& s = g.divisions_;
  ETPL last = compose(inverse(chain), base);
  append_graph(graph, graph_over(last, IntervalQ::closed(s[n - 1], s[n])));
  g.fundamental_ = from_graph(std::move(graph));
  return g;
}

RootPL nth_root_affine(const ETPL& base, int n, const Rat& anchor) {
  if (n < 2) throw Error("nth_root: degree must be at least 2");
  Rat end = base(anchor);
  Rat step = (end - anchor) / Rat(n);
  std::vector<Rat> div;
  for (int m = 0; m <= n; ++m) div.push_back(anchor + Rat(m) * step);
  std::vector<std::vector<Point>> pieces;
  for (int m = 0; m + 1 < n; ++m) pieces.push_back({{div[m], div[m + 1]}, {div[m + 1], div[m + 2]}});
  return nth_root(base, n, anchor, std::move(div), std::move(pieces));
}

long RootPL::domain_index(const Rat& x) const {
  if (!domain_.contains(x)) throw Error("RootPL: point " + x.str() + " outside the root's domain");
  const Rat& s0 = divisions_.front();
  const Rat& sn = divisions_.back();
  Rat z = x;
  long k = 0;
  std::size_t steps = 0;
  while (z >= sn) {
    if (++steps > cap_) throw Error("endpoint of orbit-equivariant map: iteration cap reached at " + x.str());
    z = base_inv_(z);
    ++k;
  }
  while (z < s0) {
    if (++steps > cap_) throw Error("endpoint of orbit-equivariant map: iteration cap reached at " + x.str());
    z = base_(z);
    --k;
  }
  return k;
}

namespace {

Rat apply_power(const ETPL& f, const ETPL& finv, Rat x, long k) {
  for (; k > 0; --k) x = f(x);
  for (; k < 0; ++k) x = finv(x);
  return x;
}

}  // namespace

Rat RootPL::operator()(const Rat& x) const {
  if (!domain_.contains(x)) return x;
  long k = domain_index(x);
  Rat z = apply_power(base_, base_inv_, x, -k);
  return apply_power(base_, base_inv_, fundamental_(z), k);
}

Rat RootPL::preimage(const Rat& y) const {
  if (!domain_.contains(y)) return y;
  const Rat& s1 = divisions_[1];
  Rat top = base_(s1);
  Rat z = y;
  long k = 0;
  std::size_t steps = 0;
  while (z >= top) {
    if (++steps > cap_) throw Error("endpoint of orbit-equivariant map: iteration cap reached at " + y.str());
    z = base_inv_(z);
    ++k;
  }
  while (z < s1) {
    if (++steps > cap_) throw Error("endpoint of orbit-equivariant map: iteration cap reached at " + y.str());
    z = base_(z);
    --k;
  }
  return apply_power(base_, base_inv_, fundamental_.preimage(z), k);
}

ETPL RootPL::window(long k_lo, long k_hi) const {
  if (k_lo > k_hi) throw Error("RootPL::window: empty range");
  std::vector<Point> graph;
  for (long k = k_lo; k <= k_hi; ++k) {
    ETPL gk = compose(compose(power(base_, -k), fundamental_), power(base_, k));
    Rat lo = apply_power(base_, base_inv_, divisions_.front(), k);
    Rat hi = apply_power(base_, base_inv_, divisions_.back(), k);
    append_graph(graph, graph_over(gk, IntervalQ::closed(lo, hi)));
  }
  return from_graph(std::move(graph));
}

ETPL RootPL::window_over(const Rat& lo, const Rat& hi) const {
  return window(domain_index(lo), domain_index(hi));
}

bool operator==(const RootPL& a, const RootPL& b) {
  if (!(a.base_ == b.base_)) return false;
  const Rat& s0 = a.divisions_.front();
  const Rat& sn = a.divisions_.back();
  return agree_on(a.fundamental_, b.window_over(s0, sn), IntervalQ::closed(s0, sn));
}

ETPL power_to_base(const RootPL& g, long m) {
  if (m % g.degree() != 0)
    throw Error("power: exponent " + std::to_string(m) + " is not a multiple of the root degree");
  return power(g.base(), m / g.degree());
}

RootPL power_divisor(const RootPL& g, long m) {
  int n = g.degree();
  if (m <= 0 || n % m != 0 || m == n)
    throw Error("power: exponent " + std::to_string(m) + " is not a proper divisor of the root degree");
  const auto& s = g.divisions();
  ETPL gm = power(g.window(0, 1), m);
  std::vector<Rat> div;
  for (int j = 0; j <= n; j += static_cast<int>(m)) div.push_back(s[j]);
  std::vector<std::vector<Point>> pieces;
  for (std::size_t j = 0; j + 2 < div.size(); ++j) pieces.push_back(graph_over(gm, IntervalQ::closed(div[j], div[j + 1])));
  return nth_root(g.base(), n / static_cast<int>(m), div.front(), std::move(div), std::move(pieces));
}

std::vector<IntervalQ> support(const RootPL& g) { return support(g.base()); }

PeriodicPL to_periodic(const RootPL& g) {
  if (!g.base().is_translation()) throw Error("to_periodic: root base is not a translation");
  Rat period = g.base().left_offset();
  const Rat& s0 = g.anchor();
  std::vector<Point> pts;
  for (const auto& p : graph_over(g.fundamental(), IntervalQ::closed(s0, s0 + period))) {
    if (p.x == s0 + period) continue;
    Rat shift = from_integer((p.x / period).floor()) * period;
    pts.push_back({p.x - shift, p.y - shift});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  return canonicalize(PeriodicPL(period, std::move(pts)));
}

Rat ComponentwiseRoot::operator()(const Rat& x) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].domain().contains(x)) return inverted[i] ? roots[i].preimage(x) : roots[i](x);
  return x;
}

ComponentwiseRoot nth_root_componentwise(const ETPL& f, int n) {
  ComponentwiseRoot out;
  for (const auto& c : support(f)) {
    ETPL piece = restrict_to(f, c.closure());
    Rat anchor = c.bounded() ? c.midpoint() : (c.hi ? *c.hi - Rat(1) : (c.lo ? *c.lo + Rat(1) : Rat(0)));
    bool inv = piece(anchor) < anchor;
    if (inv) piece = inverse(piece);
    out.roots.push_back(nth_root_affine(piece, n, anchor));
    out.inverted.push_back(inv);
  }
  return out;
}

}  // namespace plh
