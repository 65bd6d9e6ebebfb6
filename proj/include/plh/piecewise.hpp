#pragma once

#include <variant>
#include <vector>

#include "plh/compactified.hpp"
#include "plh/etpl.hpp"

namespace plh {

/// One region of a PiecewiseHomeo. An ETPL rep is the identity outside the
/// closure of its region; a CompactifiedMap rep targets the region itself.
struct Part {
  IntervalQ region;
  std::variant<ETPL, CompactifiedMap> rep;

  Rat operator()(const Rat& x) const;
  Rat preimage(const Rat& y) const;
  bool is_identity() const;
};

/// Homeomorphism assembled from maps of different closed classes living on
/// regions with disjoint interiors; the identity outside all regions.
class PiecewiseHomeo {
public:
  PiecewiseHomeo() = default;
  explicit PiecewiseHomeo(std::vector<Part> parts);

  static PiecewiseHomeo from(const ETPL& f);
  static PiecewiseHomeo from(const CompactifiedMap& f);

  const std::vector<Part>& parts() const { return parts_; }
  Rat operator()(const Rat& x) const;
  Rat preimage(const Rat& y) const;

  /// The rep whose region contains j, or nullptr if j lies outside every region.
  /// Throws if j straddles a region boundary.
  const Part* part_covering(const IntervalQ& j) const;

private:
  std::vector<Part> parts_;
};

/// Drops identity parts, splits ETPL parts into their support components and
/// sorts by region.
PiecewiseHomeo canonicalize(const PiecewiseHomeo& f);
/// Apply f, then g. Overlapping ETPL parts merge; a compactified part may only
/// meet a part of g (or f) on exactly its own region.
PiecewiseHomeo compose(const PiecewiseHomeo& f, const PiecewiseHomeo& g);
PiecewiseHomeo inverse(const PiecewiseHomeo& f);
PiecewiseHomeo power(const PiecewiseHomeo& f, long n);
std::vector<IntervalQ> support(const PiecewiseHomeo& f);
/// Exact agreement on j, cell by cell. Throws "incomparable classes" where a
/// nontrivial ETPL piece meets a nontrivial compactified piece.
bool agree_on(const PiecewiseHomeo& f, const PiecewiseHomeo& g, const IntervalQ& j);
bool operator==(const PiecewiseHomeo& f, const PiecewiseHomeo& g);

}  // namespace plh
