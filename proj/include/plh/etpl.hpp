#pragma once

#include <vector>

#include "plh/interval.hpp"
#include "plh/rat.hpp"

namespace plh {

struct Point {
  Rat x;
  Rat y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Affine map x -> slope * x + shift with rational coefficients.
struct Affine {
  Rat slope{1};
  Rat shift{0};

  static Affine identity() { return {}; }
  static Affine translation(const Rat& c) { return {Rat(1), c}; }
  static Affine scaling(const Rat& s) { return {s, Rat(0)}; }
  /// The increasing affine bijection taking [a,b] onto [c,d].
  static Affine between(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

  Rat operator()(const Rat& x) const { return slope * x + shift; }
  Affine inverse() const;
  /// Apply this, then `next`.
  Affine then(const Affine& next) const { return {slope * next.slope, next.slope * shift + next.shift}; }
  IntervalQ image(const IntervalQ& j) const;

  friend bool operator==(const Affine&, const Affine&) = default;
};

/// Piecewise-linear homeomorphism of the line with finitely many rational
/// breakpoints that is a translation on each unbounded end.
///
/// Between breakpoints the map interpolates affinely; left of the first
/// breakpoint it is x -> x + left_offset, right of the last x -> x + right_offset.
/// Values produced by the operations below are canonical: no breakpoint has
/// equal incoming and outgoing slopes. The constructor validates but does not
/// canonicalize, so non-canonical inputs survive until canonicalize().
class ETPL {
public:
  ETPL() = default;
  ETPL(std::vector<Point> breakpoints, Rat left_offset, Rat right_offset);

  static ETPL identity() { return {}; }
  static ETPL translation(const Rat& c);
  /// Compactly supported map: identity outside [first.x, last.x]. The first and
  /// last breakpoints must lie on the diagonal.
  static ETPL compact(std::vector<Point> breakpoints);

  const std::vector<Point>& breakpoints() const { return bps_; }
  const Rat& left_offset() const { return left_; }
  const Rat& right_offset() const { return right_; }

  Rat operator()(const Rat& x) const;
  /// Preimage of y; exact since every slope is positive.
  Rat preimage(const Rat& y) const;
  /// Slopes of the map immediately left and right of x.
  Rat slope_left(const Rat& x) const;
  Rat slope_right(const Rat& x) const;

  bool is_canonical() const;
  bool is_identity() const { return bps_.empty() && left_.is_zero(); }
  /// True if the map is a translation x -> x + c (possibly c = 0).
  bool is_translation() const { return canonical_bps_empty(); }
  /// True if there is no breakpoint strictly inside j.
  bool is_affine_on(const IntervalQ& j) const;

  /// Canonical equality: decides extensional equality.
  friend bool operator==(const ETPL& a, const ETPL& b);

private:
  bool canonical_bps_empty() const;

  std::vector<Point> bps_;
  Rat left_{0};
  Rat right_{0};
};

ETPL canonicalize(const ETPL& f);
/// The map applying f first, then g.
ETPL compose(const ETPL& f, const ETPL& g);
ETPL inverse(const ETPL& f);
ETPL power(const ETPL& f, long n);
/// Maximal open intervals of {x : f(x) != x}, sorted.
std::vector<IntervalQ> support(const ETPL& f);
/// True iff f(x) = g(x) for every x in j.
bool agree_on(const ETPL& f, const ETPL& g, const IntervalQ& j);
/// The function x -> A^{-1}(f(A(x))).
ETPL affine_conjugate(const ETPL& f, const Affine& a);
/// The map equal to f on `region` and the identity elsewhere; f must fix the
/// finite ends of the region.
ETPL restrict_to(const ETPL& f, const IntervalQ& region);
/// Breakpoints of f lying in the closure of j, together with the values of f
/// at the finite ends of j; the PL graph of f over j.
std::vector<Point> graph_over(const ETPL& f, const IntervalQ& j);

}  // namespace plh
