#pragma once

#include <optional>
#include <string>

#include "plh/rat.hpp"

namespace plh {

/// Interval of the rational line with possibly infinite ends.
/// An absent bound means -inf (lo) or +inf (hi); infinite ends are never closed.
struct IntervalQ {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
  bool lo_closed = false;
  bool hi_closed = false;

  IntervalQ() = default;
  IntervalQ(std::optional<Rat> lo, std::optional<Rat> hi, bool lo_closed, bool hi_closed);

  static IntervalQ open(const Rat& a, const Rat& b) { return {a, b, false, false}; }
  static IntervalQ closed(const Rat& a, const Rat& b) { return {a, b, true, true}; }
  static IntervalQ half_open(const Rat& a, const Rat& b) { return {a, b, true, false}; }
  static IntervalQ line() { return {std::nullopt, std::nullopt, false, false}; }

  bool bounded() const { return lo.has_value() && hi.has_value(); }
  bool contains(const Rat& x) const;
  /// True if every point of `other` lies in this interval.
  bool contains(const IntervalQ& other) const;
  /// True if the two intervals share at least one point.
  bool intersects(const IntervalQ& other) const;
  /// The open interval with the same ends.
  IntervalQ interior() const { return {lo, hi, false, false}; }
  IntervalQ closure() const { return {lo, hi, lo.has_value(), hi.has_value()}; }
  Rat length() const;
  Rat midpoint() const;

  std::string str() const;

  friend bool operator==(const IntervalQ&, const IntervalQ&) = default;
};

/// True if closure(a) and closure(b) meet only if at all in shared endpoints,
/// i.e. the interiors are disjoint.
bool interiors_disjoint(const IntervalQ& a, const IntervalQ& b);

}  // namespace plh
