#include "plh/compactified.hpp"

#include "plh/error.hpp"

namespace plh {

Compactifier::Compactifier(const IntervalQ& j) {
  if (!j.bounded()) throw Error("compactify: target interval must be bounded, got " + j.str());
  lo = *j.lo;
  hi = *j.hi;
}

Rat Compactifier::to_interval(const Rat& x) const {
  Rat u = x / (Rat(1) + abs(x));
  return lo + (u + Rat(1)) * (hi - lo) / Rat(2);
}

Rat Compactifier::to_line(const Rat& z) const {
  Rat u = Rat(2) * (z - lo) / (hi - lo) - Rat(1);
  return u / (Rat(1) - abs(u));
}

CompactifiedMap::CompactifiedMap(IntervalQ target, ETPL inner)
    : target_(std::move(target)), inner_(canonicalize(inner)) {
  if (!target_.bounded()) throw Error("CompactifiedMap: target must be bounded, got " + target_.str());
  target_ = target_.interior();
}

Rat CompactifiedMap::operator()(const Rat& x) const {
  if (!target_.contains(x)) return x;
  Compactifier c(target_);
  return c.to_interval(inner_(c.to_line(x)));
}

Rat CompactifiedMap::preimage(const Rat& y) const {
  if (!target_.contains(y)) return y;
  Compactifier c(target_);
  return c.to_interval(inner_.preimage(c.to_line(y)));
}

CompactifiedMap compactify(const ETPL& f, const IntervalQ& j) { return CompactifiedMap(j, f); }

namespace {

void require_same_target(const CompactifiedMap& f, const CompactifiedMap& g) {
  if (!(f.target() == g.target()))
    throw Error("class-incompatible composition: target mismatch (" + f.target().str() + " vs " +
                g.target().str() + ")");
}

}  // namespace

CompactifiedMap compose(const CompactifiedMap& f, const CompactifiedMap& g) {
  require_same_target(f, g);
  return {f.target(), compose(f.inner(), g.inner())};
}

CompactifiedMap inverse(const CompactifiedMap& f) { return {f.target(), inverse(f.inner())}; }

CompactifiedMap power(const CompactifiedMap& f, long n) { return {f.target(), power(f.inner(), n)}; }

std::vector<IntervalQ> support(const CompactifiedMap& f) {
  Compactifier c(f.target());
  std::vector<IntervalQ> out;
  for (const auto& comp : support(f.inner())) {
    Rat a = comp.lo ? c.to_interval(*comp.lo) : c.lo;
    Rat b = comp.hi ? c.to_interval(*comp.hi) : c.hi;
    out.push_back(IntervalQ::open(a, b));
  }
  return out;
}

CompactifiedMap affine_conjugate(const CompactifiedMap& f, const Affine& a) {
  if (a.slope.sign() <= 0) throw Error("affine_conjugate: non-positive slope");
  return {a.inverse().image(f.target()), f.inner()};
}

bool agree_on(const CompactifiedMap& f, const CompactifiedMap& g, const IntervalQ& j) {
  require_same_target(f, g);
  for (const auto& comp : support(compose(f, inverse(g))))
    if (comp.intersects(j)) return false;
  return true;
}

}  // namespace plh
