#include "plh/map.hpp"

#include <optional>

#include "plh/error.hpp"

namespace plh {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::optional<PiecewiseHomeo> as_piecewise(const Map& f) {
  if (const auto* e = std::get_if<ETPL>(&f)) return PiecewiseHomeo::from(*e);
  if (const auto* c = std::get_if<CompactifiedMap>(&f)) return PiecewiseHomeo::from(*c);
  if (const auto* p = std::get_if<PiecewiseHomeo>(&f)) return *p;
  return std::nullopt;
}

std::optional<PeriodicPL> as_periodic(const Map& f, const Rat& period) {
  if (const auto* p = std::get_if<PeriodicPL>(&f)) {
    if (p->period() == period) return *p;
    if (p->is_translation()) return to_periodic(to_etpl(*p), period);
    return std::nullopt;
  }
  if (const auto* e = std::get_if<ETPL>(&f))
    if (e->is_translation()) return to_periodic(*e, period);
  if (const auto* r = std::get_if<RootPL>(&f)) {
    if (!r->base().is_translation()) return std::nullopt;
    PeriodicPL q = to_periodic(*r);
    if (q.period() == period) return q;
  }
  return std::nullopt;
}

std::optional<Rat> periodic_period(const Map& f, const Map& g) {
  if (const auto* p = std::get_if<PeriodicPL>(&f)) return p->period();
  if (const auto* p = std::get_if<PeriodicPL>(&g)) return p->period();
  return std::nullopt;
}

// ETPL agreeing with f on [lo, hi], when one exists.
std::optional<ETPL> local_etpl(const Map& f, const Rat& lo, const Rat& hi) {
  if (const auto* e = std::get_if<ETPL>(&f)) return *e;
  if (const auto* p = std::get_if<PeriodicPL>(&f)) return window(*p, lo, hi);
  if (const auto* r = std::get_if<RootPL>(&f)) {
    IntervalQ j = IntervalQ::closed(lo, hi);
    if (r->domain().contains(j)) return r->window_over(lo, hi);
    if (interiors_disjoint(r->domain(), j)) return ETPL::identity();
  }
  return std::nullopt;
}

[[noreturn]] void incompatible(const Map& f, const Map& g) {
  throw Error("class-incompatible composition: " + class_name(f) + " with " + class_name(g));
}

}  // namespace

std::string class_name(const Map& f) {
  return std::visit(overloaded{[](const ETPL&) { return std::string("etpl"); },
                               [](const PeriodicPL&) { return std::string("periodic"); },
                               [](const RootPL&) { return std::string("root"); },
                               [](const CompactifiedMap&) { return std::string("compactified"); },
                               [](const PiecewiseHomeo&) { return std::string("piecewise"); }},
                    f);
}

Map identity_map() { return ETPL::identity(); }

Rat evaluate(const Map& f, const Rat& x) {
  return std::visit([&](const auto& m) { return m(x); }, f);
}

Rat preimage(const Map& f, const Rat& y) {
  return std::visit([&](const auto& m) { return m.preimage(y); }, f);
}

Map compose(const Map& f, const Map& g) {
  if (f.index() == g.index()) {
    return std::visit(
        [&](const auto& a) -> Map {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, RootPL>) {
            throw Error("class-incompatible composition: roots combine only through power");
          } else {
            return compose(a, std::get<T>(g));
          }
        },
        f);
  }
  if (auto period = periodic_period(f, g)) {
    auto pf = as_periodic(f, *period);
    auto pg = as_periodic(g, *period);
    if (pf && pg) return compose(*pf, *pg);
    incompatible(f, g);
  }
  auto wf = as_piecewise(f);
  auto wg = as_piecewise(g);
  if (wf && wg) return compose(*wf, *wg);
  incompatible(f, g);
}

Map inverse(const Map& f) {
  return std::visit(
      [&](const auto& a) -> Map {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, RootPL>) {
          throw Error("class-incompatible composition: the inverse of a root is not a root class value");
        } else {
          return inverse(a);
        }
      },
      f);
}

Map power(const Map& f, long n) {
  if (const auto* r = std::get_if<RootPL>(&f)) {
    if (n == 0) return ETPL::identity();
    if (n == 1) return *r;
    if (n % r->degree() == 0) return power_to_base(*r, n);
    return power_divisor(*r, n);
  }
  return std::visit(
      [&](const auto& a) -> Map {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, RootPL>) {
          return a;
        } else {
          return power(a, n);
        }
      },
      f);
}

Map canonicalize(const Map& f) {
  return std::visit(
      [](const auto& a) -> Map {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, RootPL> || std::is_same_v<T, CompactifiedMap>) {
          return a;
        } else {
          return canonicalize(a);
        }
      },
      f);
}

std::vector<IntervalQ> support(const Map& f) {
  return std::visit(overloaded{[](const PeriodicPL& p) { return support(p).components; },
                               [](const auto& a) { return support(a); }},
                    f);
}

bool is_identity(const Map& f) { return support(f).empty(); }

bool equals(const Map& f, const Map& g) {
  if (f.index() == g.index()) return std::visit([&](const auto& a) {
      using T = std::decay_t<decltype(a)>;
      return a == std::get<T>(g);
    }, f);
  if (auto period = periodic_period(f, g)) {
    auto pf = as_periodic(f, *period);
    auto pg = as_periodic(g, *period);
    if (pf && pg) return *pf == *pg;
    if (pf || pg) {
      // A translation-based root and a map with another period, or a non-translation ETPL.
      throw Error("incomparable classes: " + class_name(f) + " and " + class_name(g));
    }
  }
  auto wf = as_piecewise(f);
  auto wg = as_piecewise(g);
  if (wf && wg) return *wf == *wg;
  throw Error("incomparable classes: " + class_name(f) + " and " + class_name(g));
}

bool agree_on(const Map& f, const Map& g, const IntervalQ& j) {
  if (j.bounded()) {
    auto lf = local_etpl(f, *j.lo, *j.hi);
    auto lg = local_etpl(g, *j.lo, *j.hi);
    if (lf && lg) return agree_on(*lf, *lg, j);
  }
  if (f.index() == g.index()) {
    if (const auto* p = std::get_if<PeriodicPL>(&f)) {
      const auto& q = std::get<PeriodicPL>(g);
      if (p->period() == q.period()) return agree_on(*p, q, j);
    }
  }
  if (auto period = periodic_period(f, g)) {
    auto pf = as_periodic(f, *period);
    auto pg = as_periodic(g, *period);
    if (pf && pg) return agree_on(*pf, *pg, j);
  }
  auto wf = as_piecewise(f);
  auto wg = as_piecewise(g);
  if (wf && wg) return agree_on(*wf, *wg, j);
  throw Error("incomparable classes: " + class_name(f) + " and " + class_name(g) + " on " + j.str());
}

}  // namespace plh
