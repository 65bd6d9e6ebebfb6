#pragma once

#include <vector>

#include "plh/etpl.hpp"

namespace plh {

/// Order isomorphism of the line onto the interior of a bounded interval:
/// x -> x / (1 + |x|) onto (-1, 1), followed by the increasing affine map onto
/// (lo, hi). Both directions take rationals to rationals.
struct Compactifier {
  Rat lo;
  Rat hi;

  explicit Compactifier(const IntervalQ& j);
  Rat to_interval(const Rat& x) const;
  Rat to_line(const Rat& z) const;
};

/// ETPL map transported into a bounded interval: rho_J o inner o rho_J^{-1} on
/// the interior of the target, identity elsewhere. Two maps with the same
/// target are equal iff their inner maps are equal.
class CompactifiedMap {
public:
  CompactifiedMap(IntervalQ target, ETPL inner);

  const IntervalQ& target() const { return target_; }
  const ETPL& inner() const { return inner_; }

  Rat operator()(const Rat& x) const;
  Rat preimage(const Rat& y) const;
  bool is_identity() const { return inner_.is_identity(); }

  friend bool operator==(const CompactifiedMap& a, const CompactifiedMap& b) {
    return a.target_ == b.target_ && a.inner_ == b.inner_;
  }

private:
  IntervalQ target_;  // stored open
  ETPL inner_;
};

CompactifiedMap compactify(const ETPL& f, const IntervalQ& j);
/// Apply f, then g. Targets must coincide.
CompactifiedMap compose(const CompactifiedMap& f, const CompactifiedMap& g);
CompactifiedMap inverse(const CompactifiedMap& f);
CompactifiedMap power(const CompactifiedMap& f, long n);
std::vector<IntervalQ> support(const CompactifiedMap& f);
/// x -> A^{-1}(f(A(x))): the target moves to A^{-1}(target), inner is unchanged.
CompactifiedMap affine_conjugate(const CompactifiedMap& f, const Affine& a);
/// Agreement on j, which must be contained in the closure of the common target
/// or disjoint from it.
bool agree_on(const CompactifiedMap& f, const CompactifiedMap& g, const IntervalQ& j);

}  // namespace plh
