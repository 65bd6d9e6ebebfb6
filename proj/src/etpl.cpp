#include "plh/etpl.hpp"

#include <algorithm>
#include <optional>

#include "plh/error.hpp"

namespace plh {

Affine Affine::between(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  if (!(a < b) || !(c < d)) throw Error("Affine::between: degenerate interval");
  Rat s = (d - c) / (b - a);
  return {s, c - s * a};
}

Affine Affine::inverse() const {
  if (slope.sign() <= 0) throw Error("Affine: non-positive slope");
  return {Rat(1) / slope, -shift / slope};
}

IntervalQ Affine::image(const IntervalQ& j) const {
  if (slope.sign() <= 0) throw Error("Affine: non-positive slope");
  std::optional<Rat> lo, hi;
  if (j.lo) lo = (*this)(*j.lo);
  if (j.hi) hi = (*this)(*j.hi);
  return {lo, hi, j.lo_closed, j.hi_closed};
}

ETPL::ETPL(std::vector<Point> breakpoints, Rat left_offset, Rat right_offset)
    : bps_(std::move(breakpoints)), left_(std::move(left_offset)), right_(std::move(right_offset)) {
  for (std::size_t i = 1; i < bps_.size(); ++i) {
    if (!(bps_[i - 1].x < bps_[i].x)) throw Error("ETPL: breakpoint x-coordinates must strictly increase");
    if (!(bps_[i - 1].y < bps_[i].y)) throw Error("ETPL: breakpoint y-coordinates must strictly increase");
  }
  if (bps_.empty()) {
    if (left_ != right_) throw Error("ETPL: a map without breakpoints needs equal offsets");
    return;
  }
  if (bps_.front().y != bps_.front().x + left_)
    throw Error("ETPL: first breakpoint inconsistent with left offset");
  if (bps_.back().y != bps_.back().x + right_)
    throw Error("ETPL: last breakpoint inconsistent with right offset");
}

ETPL ETPL::translation(const Rat& c) { return ETPL({}, c, c); }

ETPL ETPL::compact(std::vector<Point> breakpoints) {
  if (!breakpoints.empty() &&
      (breakpoints.front().x != breakpoints.front().y || breakpoints.back().x != breakpoints.back().y))
    throw Error("ETPL::compact: end breakpoints must be fixed points");
  return canonicalize(ETPL(std::move(breakpoints), Rat(0), Rat(0)));
}

Rat ETPL::operator()(const Rat& x) const {
  if (bps_.empty() || x <= bps_.front().x) return x + left_;
  if (x >= bps_.back().x) return x + right_;
  auto it = std::upper_bound(bps_.begin(), bps_.end(), x, [](const Rat& v, const Point& p) { return v < p.x; });
  const Point& b = *it;
  const Point& a = *(it - 1);
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Rat ETPL::preimage(const Rat& y) const {
  if (bps_.empty() || y <= bps_.front().y) return y - left_;
  if (y >= bps_.back().y) return y - right_;
  auto it = std::upper_bound(bps_.begin(), bps_.end(), y, [](const Rat& v, const Point& p) { return v < p.y; });
  const Point& b = *it;
  const Point& a = *(it - 1);
  return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
}

namespace {

Rat segment_slope(const Point& a, const Point& b) { return (b.y - a.y) / (b.x - a.x); }

}  // namespace

Rat ETPL::slope_left(const Rat& x) const {
  if (bps_.empty() || x <= bps_.front().x) return Rat(1);
  if (x > bps_.back().x) return Rat(1);
  auto it = std::lower_bound(bps_.begin(), bps_.end(), x, [](const Point& p, const Rat& v) { return p.x < v; });
  return segment_slope(*(it - 1), *it);
}

Rat ETPL::slope_right(const Rat& x) const {
  if (bps_.empty() || x < bps_.front().x) return Rat(1);
  if (x >= bps_.back().x) return Rat(1);
  auto it = std::upper_bound(bps_.begin(), bps_.end(), x, [](const Rat& v, const Point& p) { return v < p.x; });
  return segment_slope(*(it - 1), *it);
}

bool ETPL::is_canonical() const {
  for (std::size_t i = 0; i < bps_.size(); ++i) {
    Rat in = i == 0 ? Rat(1) : segment_slope(bps_[i - 1], bps_[i]);
    Rat out = i + 1 == bps_.size() ? Rat(1) : segment_slope(bps_[i], bps_[i + 1]);
    if (in == out) return false;
  }
  return true;
}

bool ETPL::canonical_bps_empty() const { return canonicalize(*this).bps_.empty(); }

bool ETPL::is_affine_on(const IntervalQ& j) const {
  auto c = canonicalize(*this);
  for (const auto& p : c.bps_)
    if (j.interior().contains(p.x)) return false;
  return true;
}

bool operator==(const ETPL& a, const ETPL& b) {
  ETPL ca = canonicalize(a), cb = canonicalize(b);
  return ca.bps_ == cb.bps_ && ca.left_ == cb.left_ && ca.right_ == cb.right_;
}

ETPL canonicalize(const ETPL& f) {
  const auto& bps = f.breakpoints();
  std::vector<Point> kept;
  kept.reserve(bps.size());
  for (std::size_t i = 0; i < bps.size(); ++i) {
    Rat in = i == 0 ? Rat(1) : segment_slope(bps[i - 1], bps[i]);
    Rat out = i + 1 == bps.size() ? Rat(1) : segment_slope(bps[i], bps[i + 1]);
    if (in != out) kept.push_back(bps[i]);
  }
  if (kept.empty()) return ETPL::translation(f.left_offset());
  return ETPL(std::move(kept), f.left_offset(), f.right_offset());
}

ETPL compose(const ETPL& f, const ETPL& g) {
  std::vector<Rat> nodes;
  nodes.reserve(f.breakpoints().size() + g.breakpoints().size());
  for (const auto& p : f.breakpoints()) nodes.push_back(p.x);
  for (const auto& p : g.breakpoints()) nodes.push_back(f.preimage(p.x));
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<Point> out;
  out.reserve(nodes.size());
  for (const auto& x : nodes) out.push_back({x, g(f(x))});
  return canonicalize(
      ETPL(std::move(out), f.left_offset() + g.left_offset(), f.right_offset() + g.right_offset()));
}

ETPL inverse(const ETPL& f) {
  std::vector<Point> out;
  out.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) out.push_back({p.y, p.x});
  return canonicalize(ETPL(std::move(out), -f.left_offset(), -f.right_offset()));
}

ETPL power(const ETPL& f, long n) {
  if (n < 0) return power(inverse(f), -n);
  ETPL result, base = canonicalize(f);
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

std::vector<IntervalQ> support(const ETPL& f0) {
  const ETPL f = canonicalize(f0);
  const auto& bps = f.breakpoints();
  std::vector<IntervalQ> comps;
  if (bps.empty()) {
    if (!f.left_offset().is_zero()) comps.push_back(IntervalQ::line());
    return comps;
  }
  // `open` holds the start of the component being built; an empty inner
  // optional stands for -inf.
  std::optional<std::optional<Rat>> open;
  auto close_at = [&](const Rat& x) {
    if (open) comps.push_back(IntervalQ(*open, x, false, false));
    open.reset();
  };
  if (!f.left_offset().is_zero()) open = std::optional<Rat>{};
  for (std::size_t i = 0; i < bps.size(); ++i) {
    Rat di = bps[i].y - bps[i].x;
    if (di.is_zero()) close_at(bps[i].x);
    if (i + 1 == bps.size()) break;
    Rat dj = bps[i + 1].y - bps[i + 1].x;
    if (di.is_zero() && dj.is_zero()) continue;
    if (di.is_zero()) {
      open = std::optional<Rat>{bps[i].x};
    } else if (!dj.is_zero() && di.sign() != dj.sign()) {
      Rat z = bps[i].x + di * (bps[i + 1].x - bps[i].x) / (di - dj);
      close_at(z);
      open = std::optional<Rat>{z};
    }
  }
  if (!f.right_offset().is_zero()) {
    if (!open) open = std::optional<Rat>{bps.back().x};
    comps.push_back(IntervalQ(*open, std::nullopt, false, false));
  }
  return comps;
}

bool agree_on(const ETPL& f, const ETPL& g, const IntervalQ& j) {
  for (const auto& c : support(compose(f, inverse(g))))
    if (c.intersects(j)) return false;
  return true;
}

ETPL affine_conjugate(const ETPL& f, const Affine& a) {
  if (a.slope.sign() <= 0) throw Error("affine_conjugate: non-positive slope");
  Affine ai = a.inverse();
  std::vector<Point> out;
  out.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) out.push_back({ai(p.x), ai(p.y)});
  return canonicalize(ETPL(std::move(out), f.left_offset() / a.slope, f.right_offset() / a.slope));
}

ETPL restrict_to(const ETPL& f, const IntervalQ& region) {
  if (region.lo && f(*region.lo) != *region.lo)
    throw Error("restrict_to: map does not fix " + region.lo->str());
  if (region.hi && f(*region.hi) != *region.hi)
    throw Error("restrict_to: map does not fix " + region.hi->str());
  std::vector<Point> out;
  if (region.lo) out.push_back({*region.lo, *region.lo});
  for (const auto& p : f.breakpoints())
    if (region.interior().contains(p.x)) out.push_back(p);
  if (region.hi) out.push_back({*region.hi, *region.hi});
  Rat left = region.lo ? Rat(0) : f.left_offset();
  Rat right = region.hi ? Rat(0) : f.right_offset();
  if (out.empty()) return ETPL::translation(left);
  return canonicalize(ETPL(std::move(out), left, right));
}

std::vector<Point> graph_over(const ETPL& f0, const IntervalQ& j) {
  if (!j.bounded()) throw Error("graph_over: interval must be bounded");
  ETPL f = canonicalize(f0);
  std::vector<Point> out{{*j.lo, f(*j.lo)}};
  for (const auto& p : f.breakpoints())
    if (*j.lo < p.x && p.x < *j.hi) out.push_back(p);
  out.push_back({*j.hi, f(*j.hi)});
  return out;
}

}  // namespace plh
