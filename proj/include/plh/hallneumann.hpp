#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "plh/word.hpp"

namespace plh {

/// Element of the Hall-Neumann group Gamma = <t, s> with s_i = t^-i s t^i,
/// u_k = [s_0, s_k] central, in the normal form
///   t^m * prod_i s_i^{e_i} (ascending i) * prod_k u_k^{c_k},  k > 0.
/// Maps hold no zero entries.
struct HNElement {
  long m = 0;
  std::map<long, long> e;
  std::map<long, long> c;

  friend bool operator==(const HNElement&, const HNElement&) = default;
};

/// Selects the quotient N_X: coordinates c_k with k in X are zero. X is a
/// finite set of positive integers or the complement of one.
struct HNContext {
  std::set<long> listed;
  bool cofinite = false;

  /// Gamma itself (X empty).
  static HNContext gamma() { return {}; }
  static HNContext finite(std::set<long> x) { return {std::move(x), false}; }
  /// X = all positive integers except those in `excluded`.
  static HNContext cofinite_except(std::set<long> excluded) { return {std::move(excluded), true}; }

  bool contains(long k) const { return k > 0 && (listed.count(k) != 0) != cofinite; }
};

HNElement hn_identity();
HNElement hn_t(long m = 1);
HNElement hn_s(long i, long e = 1);
/// u_k^c; u_{-k} is u_k^{-1} and u_0 is trivial.
HNElement hn_u(long k, long c = 1);

/// Drops the c-coordinates killed by the context.
HNElement hn_project(HNElement x, const HNContext& ctx);
HNElement hn_multiply(const HNElement& x, const HNElement& y, const HNContext& ctx = HNContext::gamma());
HNElement hn_inverse(const HNElement& x, const HNContext& ctx = HNContext::gamma());
bool hn_is_identity(const HNElement& x, const HNContext& ctx = HNContext::gamma());

/// Image of a word over {t, s} (s = s_0).
HNElement hn_reduce_word(const Word& w, const HNContext& ctx = HNContext::gamma());
/// Image under t -> t^-1, s_0 -> s_0^-1.
HNElement hn_skew_image(const HNElement& x, const HNContext& ctx = HNContext::gamma());

/// "t^m · s_{i}^{e} · … · u_{k}^{c}", or "1".
std::string hn_format(const HNElement& x);
/// Accepts hn_format output; factors may also be separated by '*' and an
/// exponent of 1 may be omitted.
HNElement hn_parse(std::string_view text);

/// The word s_i = t^-i s t^i.
Word hn_s_word(long i);

}  // namespace plh
