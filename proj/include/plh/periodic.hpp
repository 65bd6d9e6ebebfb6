#pragma once

#include <vector>

#include "plh/etpl.hpp"

namespace plh {

/// PL homeomorphism commuting with translation by a rational period p > 0.
///
/// Breakpoints are listed once, with x in [0, p); the full breakpoint set is
/// their translates by multiples of p (with y shifted by the same amount).
/// A map without breakpoints is the translation x -> x + shift.
class PeriodicPL {
public:
  PeriodicPL(Rat period, std::vector<Point> breakpoints, Rat shift = Rat(0));

  static PeriodicPL translation(const Rat& period, const Rat& c) { return {period, {}, c}; }
  static PeriodicPL identity(const Rat& period) { return translation(period, Rat(0)); }

  const Rat& period() const { return period_; }
  const std::vector<Point>& breakpoints() const { return bps_; }
  /// Translation amount when the map has no breakpoints.
  const Rat& shift() const { return shift_; }

  Rat operator()(const Rat& x) const;
  Rat preimage(const Rat& y) const;
  bool is_translation() const;

  friend bool operator==(const PeriodicPL& a, const PeriodicPL& b);

private:
  Rat period_;
  std::vector<Point> bps_;
  Rat shift_;
};

/// Support components of a periodic map: one representative per translation
/// class (those whose left end lies in [0, period)), or the whole line.
struct PeriodicSupport {
  std::vector<IntervalQ> components;
  Rat period;
};

PeriodicPL canonicalize(const PeriodicPL& f);
/// Apply f, then g. Periods must be identical.
PeriodicPL compose(const PeriodicPL& f, const PeriodicPL& g);
PeriodicPL inverse(const PeriodicPL& f);
PeriodicPL power(const PeriodicPL& f, long n);
PeriodicSupport support(const PeriodicPL& f);
bool agree_on(const PeriodicPL& f, const PeriodicPL& g, const IntervalQ& j);
/// An ETPL agreeing with f on [lo, hi].
ETPL window(const PeriodicPL& f, const Rat& lo, const Rat& hi);
/// The same function as a PeriodicPL; f must be a translation.
PeriodicPL to_periodic(const ETPL& f, const Rat& period);
/// The same function as an ETPL; f must be a translation.
ETPL to_etpl(const PeriodicPL& f);

}  // namespace plh
