#pragma once

#include <cstddef>
#include <vector>

#include "plh/etpl.hpp"
#include "plh/periodic.hpp"

namespace plh {

/// An n-th root g of a PL map `base` that has a single support component
/// (a, b) on which base(x) > x.
///
/// g is pinned by its choice data: division points s_0 = anchor < s_1 < ... <
/// s_n = base(anchor) and PL bijections h_m : [s_m, s_{m+1}] -> [s_{m+1},
/// s_{m+2}] for m = 0..n-2. On [s_{n-1}, s_n] g is (h_{n-2} o ... o h_0)^{-1}
/// followed by base, so g^n = base on the fundamental domain [s_0, s_n]; g
/// extends to all of (a, b) by g(x) = base^k(g(base^{-k}(x))) and is the
/// identity outside.
class RootPL {
public:
  static constexpr std::size_t kDefaultIterationCap = 1'000'000;

  const ETPL& base() const { return base_; }
  int degree() const { return static_cast<int>(divisions_.size()) - 1; }
  const Rat& anchor() const { return divisions_.front(); }
  const std::vector<Rat>& divisions() const { return divisions_; }
  const std::vector<std::vector<Point>>& pieces() const { return pieces_; }
  /// Support component of the base.
  const IntervalQ& domain() const { return domain_; }
  /// ETPL agreeing with g on the fundamental domain [s_0, s_n].
  const ETPL& fundamental() const { return fundamental_; }

  Rat operator()(const Rat& x) const;
  Rat preimage(const Rat& y) const;

  /// ETPL agreeing with g on base^{k_lo}[s_0, s_n] through base^{k_hi}[s_0, s_n].
  ETPL window(long k_lo, long k_hi) const;
  /// ETPL agreeing with g on [lo, hi]; both ends must lie in the domain.
  ETPL window_over(const Rat& lo, const Rat& hi) const;
  /// Index k of the fundamental-domain translate base^k[s_0, s_n) holding x.
  long domain_index(const Rat& x) const;

  void set_iteration_cap(std::size_t cap) { cap_ = cap; }

  friend bool operator==(const RootPL& a, const RootPL& b);

private:
  friend RootPL nth_root(const ETPL&, int, const Rat&, std::vector<Rat>, std::vector<std::vector<Point>>);
  RootPL() = default;

  ETPL base_;
  ETPL base_inv_;
  IntervalQ domain_;
  std::vector<Rat> divisions_;
  std::vector<std::vector<Point>> pieces_;
  ETPL fundamental_;
  std::size_t cap_ = kDefaultIterationCap;
};

/// Builds the n-th root from explicit choice data. `divisions` has n+1 entries
/// starting at `anchor` and ending at base(anchor); `pieces` has n-1 breakpoint
/// lists, piece m running from (s_m, s_{m+1}) to (s_{m+1}, s_{m+2}).
RootPL nth_root(const ETPL& base, int n, const Rat& anchor, std::vector<Rat> divisions,
                std::vector<std::vector<Point>> pieces);
/// The root whose divisions split [anchor, base(anchor)] evenly and whose
/// pieces are affine.
RootPL nth_root_affine(const ETPL& base, int n, const Rat& anchor);

/// g^m when m is a multiple of the degree (an ETPL power of the base).
ETPL power_to_base(const RootPL& g, long m);
/// g^m for m dividing the degree: a root of lower degree over the same base.
RootPL power_divisor(const RootPL& g, long m);
std::vector<IntervalQ> support(const RootPL& g);
/// The same function as a PeriodicPL; the base must be a translation x -> x + c,
/// which becomes the period.
PeriodicPL to_periodic(const RootPL& g);

/// Roots of a map with several support components, one RootPL per component.
/// Components where the map pushes points left are handled by taking a root of
/// the inverse and inverting it.
struct ComponentwiseRoot {
  std::vector<RootPL> roots;
  std::vector<bool> inverted;

  Rat operator()(const Rat& x) const;
};

ComponentwiseRoot nth_root_componentwise(const ETPL& f, int n);

}  // namespace plh
