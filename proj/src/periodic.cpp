#include "plh/periodic.hpp"

#include <algorithm>

#include "plh/error.hpp"

namespace plh {

namespace {

Rat reduce_mod(const Rat& x, const Rat& p, mpz_class* k_out = nullptr) {
  mpz_class k = (x / p).floor();
  if (k_out) *k_out = k;
  return x - from_integer(k) * p;
}

Rat slope(const Point& a, const Point& b) { return (b.y - a.y) / (b.x - a.x); }

}  // namespace

PeriodicPL::PeriodicPL(Rat period, std::vector<Point> breakpoints, Rat shift)
    : period_(std::move(period)), bps_(std::move(breakpoints)), shift_(std::move(shift)) {
  if (period_.sign() <= 0) throw Error("PeriodicPL: period must be positive");
  if (bps_.empty()) return;
  shift_ = Rat(0);
  for (std::size_t i = 0; i < bps_.size(); ++i) {
    if (bps_[i].x.sign() < 0 || bps_[i].x >= period_)
      throw Error("PeriodicPL: breakpoint x must lie in [0, period)");
    if (i > 0 && !(bps_[i - 1].x < bps_[i].x)) throw Error("PeriodicPL: x-coordinates must strictly increase");
    if (i > 0 && !(bps_[i - 1].y < bps_[i].y)) throw Error("PeriodicPL: y-coordinates must strictly increase");
  }
  if (!(bps_.back().y < bps_.front().y + period_))
    throw Error("PeriodicPL: breakpoints violate wraparound monotonicity");
}

Rat PeriodicPL::operator()(const Rat& x) const {
  if (bps_.empty()) return x + shift_;
  mpz_class k;
  Rat r = reduce_mod(x, period_, &k);
  Rat kp = from_integer(k) * period_;
  const Point& first = bps_.front();
  const Point& last = bps_.back();
  Point a, b;
  if (r < first.x) {
    a = {last.x - period_, last.y - period_};
    b = first;
  } else if (r >= last.x) {
    a = last;
    b = {first.x + period_, first.y + period_};
  } else {
    auto it = std::upper_bound(bps_.begin(), bps_.end(), r, [](const Rat& v, const Point& p) { return v < p.x; });
    a = *(it - 1);
    b = *it;
  }
  return a.y + (b.y - a.y) * (r - a.x) / (b.x - a.x) + kp;
}

Rat PeriodicPL::preimage(const Rat& y) const {
  if (bps_.empty()) return y - shift_;
  const Point& first = bps_.front();
  mpz_class k;
  Rat r = reduce_mod(y - first.y, period_, &k) + first.y;  // r in [first.y, first.y + p)
  Rat kp = from_integer(k) * period_;
  Point a, b;
  if (r >= bps_.back().y) {
    a = bps_.back();
    b = {first.x + period_, first.y + period_};
  } else {
    auto it = std::upper_bound(bps_.begin(), bps_.end(), r, [](const Rat& v, const Point& p) { return v < p.y; });
    a = *(it - 1);
    b = *it;
  }
  return a.x + (b.x - a.x) * (r - a.y) / (b.y - a.y) + kp;
}

bool PeriodicPL::is_translation() const { return canonicalize(*this).bps_.empty(); }

bool operator==(const PeriodicPL& a, const PeriodicPL& b) {
  if (a.period_ != b.period_) return false;
  PeriodicPL ca = canonicalize(a), cb = canonicalize(b);
  return ca.bps_ == cb.bps_ && ca.shift_ == cb.shift_;
}

PeriodicPL canonicalize(const PeriodicPL& f) {
  const auto& bps = f.breakpoints();
  if (bps.empty()) return f;
  const Rat& p = f.period();
  std::size_t m = bps.size();
  std::vector<Point> kept;
  for (std::size_t i = 0; i < m; ++i) {
    Point prev = i == 0 ? Point{bps[m - 1].x - p, bps[m - 1].y - p} : bps[i - 1];
    Point next = i + 1 == m ? Point{bps[0].x + p, bps[0].y + p} : bps[i + 1];
    if (slope(prev, bps[i]) != slope(bps[i], next)) kept.push_back(bps[i]);
  }
  if (kept.empty()) return PeriodicPL::translation(p, f(Rat(0)));
  return PeriodicPL(p, std::move(kept));
}

PeriodicPL compose(const PeriodicPL& f, const PeriodicPL& g) {
  if (f.period() != g.period())
    throw Error("class-incompatible composition: period mismatch (" + f.period().str() + " vs " +
                g.period().str() + ")");
  const Rat& p = f.period();
  std::vector<Rat> nodes;
  for (const auto& b : f.breakpoints()) nodes.push_back(b.x);
  for (const auto& b : g.breakpoints()) nodes.push_back(reduce_mod(f.preimage(b.x), p));
  if (nodes.empty()) return PeriodicPL::translation(p, f.shift() + g.shift());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<Point> out;
  out.reserve(nodes.size());
  for (const auto& x : nodes) out.push_back({x, g(f(x))});
  return canonicalize(PeriodicPL(p, std::move(out)));
}

PeriodicPL inverse(const PeriodicPL& f) {
  const Rat& p = f.period();
  if (f.breakpoints().empty()) return PeriodicPL::translation(p, -f.shift());
  std::vector<Point> out;
  for (const auto& b : f.breakpoints()) {
    mpz_class k;
    Rat x = reduce_mod(b.y, p, &k);
    out.push_back({x, b.x - from_integer(k) * p});
  }
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  return canonicalize(PeriodicPL(p, std::move(out)));
}

PeriodicPL power(const PeriodicPL& f, long n) {
  if (n < 0) return power(inverse(f), -n);
  PeriodicPL result = PeriodicPL::identity(f.period()), base = canonicalize(f);
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

ETPL window(const PeriodicPL& f, const Rat& lo, const Rat& hi) {
  if (f.breakpoints().empty()) return ETPL::translation(f.shift());
  const Rat& p = f.period();
  mpz_class k0 = (lo / p).floor() - 1;
  mpz_class k1 = (hi / p).floor() + 1;
  std::vector<Point> out;
  for (mpz_class k = k0; k <= k1; ++k) {
    Rat kp = from_integer(k) * p;
    for (const auto& b : f.breakpoints()) out.push_back({b.x + kp, b.y + kp});
  }
  return canonicalize(ETPL(out, out.front().y - out.front().x, out.back().y - out.back().x));
}

PeriodicSupport support(const PeriodicPL& f0) {
  PeriodicPL f = canonicalize(f0);
  const Rat& p = f.period();
  PeriodicSupport out{{}, p};
  if (f.breakpoints().empty()) {
    if (!f.shift().is_zero()) out.components.push_back(IntervalQ::line());
    return out;
  }
  // A bounded component has length < p, so a window of three periods shows
  // every translation class whole.
  auto comps = plh::support(window(f, -p, Rat(2) * p));
  if (comps.size() == 1 && !comps[0].lo && !comps[0].hi) {
    out.components.push_back(IntervalQ::line());
    return out;
  }
  for (const auto& c : comps)
    if (c.lo && c.hi && c.lo->sign() >= 0 && *c.lo < p) out.components.push_back(c);
  return out;
}

bool agree_on(const PeriodicPL& f, const PeriodicPL& g, const IntervalQ& j) {
  PeriodicPL h = compose(f, inverse(g));
  if (!j.bounded()) return h == PeriodicPL::identity(f.period());
  ETPL w = window(h, *j.lo - f.period(), *j.hi + f.period());
  for (const auto& c : plh::support(w))
    if (c.intersects(j)) return false;
  return true;
}

PeriodicPL to_periodic(const ETPL& f, const Rat& period) {
  ETPL c = canonicalize(f);
  if (!c.breakpoints().empty()) throw Error("incomparable classes: ETPL with breakpoints is not periodic");
  return PeriodicPL::translation(period, c.left_offset());
}

ETPL to_etpl(const PeriodicPL& f) {
  PeriodicPL c = canonicalize(f);
  if (!c.breakpoints().empty()) throw Error("incomparable classes: periodic map with breakpoints is not ETPL");
  return ETPL::translation(c.shift());
}

}  // namespace plh
