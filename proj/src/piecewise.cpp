#include "plh/piecewise.hpp"

#include <algorithm>
#include <optional>

#include "plh/error.hpp"

namespace plh {

namespace {

bool region_less(const IntervalQ& a, const IntervalQ& b) {
  if (!a.lo) return b.lo.has_value();
  if (!b.lo) return false;
  return *a.lo < *b.lo;
}

bool same_region(const IntervalQ& a, const IntervalQ& b) { return a.lo == b.lo && a.hi == b.hi; }

// The rep applied after `a` then `b` on one shared region.
std::variant<ETPL, CompactifiedMap> compose_reps(const std::variant<ETPL, CompactifiedMap>& a,
                                                 const std::variant<ETPL, CompactifiedMap>& b,
                                                 const IntervalQ& region) {
  const auto* ea = std::get_if<ETPL>(&a);
  const auto* eb = std::get_if<ETPL>(&b);
  if (ea && eb) return compose(*ea, *eb);
  const auto* ca = std::get_if<CompactifiedMap>(&a);
  const auto* cb = std::get_if<CompactifiedMap>(&b);
  if (ca && cb) return compose(*ca, *cb);
  if (ea && ea->is_identity()) return b;
  if (eb && eb->is_identity()) return a;
  if (ca && ca->is_identity()) return b;
  if (cb && cb->is_identity()) return a;
  throw Error("class-incompatible composition: ETPL and compactified pieces share region " + region.str());
}

// Ends of `j` pulled back to the line by the compactifier of `target`; an end
// equal to a target end becomes infinite.
IntervalQ to_line(const IntervalQ& target, const IntervalQ& j) {
  Compactifier c(target);
  std::optional<Rat> lo, hi;
  if (j.lo && *j.lo > c.lo) lo = c.to_line(*j.lo);
  if (j.hi && *j.hi < c.hi) hi = c.to_line(*j.hi);
  return {lo, hi, lo.has_value(), hi.has_value()};
}

bool etpl_is_identity_on(const ETPL& f, const IntervalQ& k) { return agree_on(f, ETPL::identity(), k); }

bool compact_is_identity_on(const CompactifiedMap& f, const IntervalQ& k) {
  return agree_on(f.inner(), ETPL::identity(), to_line(f.target(), k));
}

}  // namespace

Rat Part::operator()(const Rat& x) const {
  return std::visit([&](const auto& m) { return m(x); }, rep);
}

Rat Part::preimage(const Rat& y) const {
  return std::visit([&](const auto& m) { return m.preimage(y); }, rep);
}

bool Part::is_identity() const {
  return std::visit([](const auto& m) { return m.is_identity(); }, rep);
}

PiecewiseHomeo::PiecewiseHomeo(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (auto& p : parts_) {
    p.region = p.region.interior();
    if (const auto* c = std::get_if<CompactifiedMap>(&p.rep)) {
      if (!same_region(c->target(), p.region))
        throw Error("PiecewiseHomeo: compactified piece targets " + c->target().str() + " but sits on " +
                    p.region.str());
    } else {
      for (const auto& comp : support(std::get<ETPL>(p.rep)))
        if (!p.region.closure().contains(comp))
          throw Error("PiecewiseHomeo: piece on " + p.region.str() + " moves points outside its region");
    }
  }
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (std::size_t j = i + 1; j < parts_.size(); ++j)
      if (!interiors_disjoint(parts_[i].region, parts_[j].region))
        throw Error("PiecewiseHomeo: regions " + parts_[i].region.str() + " and " + parts_[j].region.str() +
                    " overlap");
}

PiecewiseHomeo PiecewiseHomeo::from(const ETPL& f0) {
  ETPL f = canonicalize(f0);
  if (f.is_identity()) return {};
  const auto& bps = f.breakpoints();
  if (!bps.empty() && f.left_offset().is_zero() && f.right_offset().is_zero())
    return PiecewiseHomeo({Part{IntervalQ::open(bps.front().x, bps.back().x), f}});
  return PiecewiseHomeo({Part{IntervalQ::line(), f}});
}

PiecewiseHomeo PiecewiseHomeo::from(const CompactifiedMap& f) {
  if (f.is_identity()) return {};
  return PiecewiseHomeo({Part{f.target(), f}});
}

Rat PiecewiseHomeo::operator()(const Rat& x) const {
  for (const auto& p : parts_)
    if (p.region.contains(x)) return p(x);
  return x;
}

Rat PiecewiseHomeo::preimage(const Rat& y) const {
  for (const auto& p : parts_)
    if (p.region.contains(y)) return p.preimage(y);
  return y;
}

const Part* PiecewiseHomeo::part_covering(const IntervalQ& j) const {
  IntervalQ inner = j.interior();
  for (const auto& p : parts_) {
    if (p.region.contains(inner)) return &p;
    if (p.region.intersects(inner))
      throw Error("PiecewiseHomeo: interval " + j.str() + " straddles the boundary of " + p.region.str());
  }
  return nullptr;
}

PiecewiseHomeo canonicalize(const PiecewiseHomeo& f) {
  std::vector<Part> kept;
  for (const auto& p : f.parts()) {
    if (p.is_identity()) continue;
    if (const auto* e = std::get_if<ETPL>(&p.rep)) {
      for (const auto& c : support(*e)) kept.push_back(Part{c, restrict_to(*e, c.closure())});
      continue;
    }
    kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end(), [](const Part& a, const Part& b) { return region_less(a.region, b.region); });
  return PiecewiseHomeo(std::move(kept));
}

PiecewiseHomeo compose(const PiecewiseHomeo& f, const PiecewiseHomeo& g) {
  const PiecewiseHomeo cf = canonicalize(f);
  const PiecewiseHomeo cg = canonicalize(g);
  struct Tagged {
    const Part* part;
    bool first;
  };
  std::vector<Tagged> all;
  for (const auto& p : cf.parts()) all.push_back({&p, true});
  for (const auto& p : cg.parts()) all.push_back({&p, false});
  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return region_less(a.part->region, b.part->region); });

  std::vector<Part> out;
  std::size_t i = 0;
  while (i < all.size()) {
    // A cluster: parts whose regions chain together by overlapping interiors.
    std::size_t j = i + 1;
    std::optional<Rat> hi = all[i].part->region.hi;
    while (j < all.size() && (!hi || !all[j].part->region.lo || *all[j].part->region.lo < *hi)) {
      const auto& r = all[j].part->region;
      if (hi && (!r.hi || *r.hi > *hi)) hi = r.hi;
      ++j;
    }
    if (j == i + 1) {
      out.push_back(*all[i].part);
      i = j;
      continue;
    }
    const IntervalQ region(all[i].part->region.lo, hi, false, false);
    bool all_etpl = true;
    for (std::size_t k = i; k < j; ++k) all_etpl = all_etpl && std::holds_alternative<ETPL>(all[k].part->rep);
    if (all_etpl) {
      ETPL a, b;
      for (std::size_t k = i; k < j; ++k) {
        const ETPL& e = std::get<ETPL>(all[k].part->rep);
        if (all[k].first)
          a = compose(a, e);
        else
          b = compose(b, e);
      }
      out.push_back(Part{region, compose(a, b)});
    } else if (j == i + 2 && same_region(all[i].part->region, all[i + 1].part->region)) {
      const Tagged& x = all[i].first ? all[i] : all[i + 1];
      const Tagged& y = all[i].first ? all[i + 1] : all[i];
      out.push_back(Part{region, compose_reps(x.part->rep, y.part->rep, region)});
    } else {
      throw Error("class-incompatible composition: pieces of different classes overlap on " + region.str());
    }
    i = j;
  }
  return canonicalize(PiecewiseHomeo(std::move(out)));
}

PiecewiseHomeo inverse(const PiecewiseHomeo& f) {
  std::vector<Part> out;
  for (const auto& p : f.parts())
    out.push_back(Part{p.region, std::visit([](const auto& m) -> std::variant<ETPL, CompactifiedMap> {
                                   return inverse(m);
                                 }, p.rep)});
  return canonicalize(PiecewiseHomeo(std::move(out)));
}

PiecewiseHomeo power(const PiecewiseHomeo& f, long n) {
  std::vector<Part> out;
  for (const auto& p : f.parts())
    out.push_back(Part{p.region, std::visit([n](const auto& m) -> std::variant<ETPL, CompactifiedMap> {
                                   return power(m, n);
                                 }, p.rep)});
  return canonicalize(PiecewiseHomeo(std::move(out)));
}

std::vector<IntervalQ> support(const PiecewiseHomeo& f) {
  std::vector<IntervalQ> out;
  for (const auto& p : f.parts())
    for (auto& c : std::visit([](const auto& m) { return support(m); }, p.rep)) out.push_back(c);
  std::sort(out.begin(), out.end(), region_less);
  return out;
}

bool agree_on(const PiecewiseHomeo& f, const PiecewiseHomeo& g, const IntervalQ& j) {
  std::vector<Rat> cuts;
  auto add_cut = [&](const std::optional<Rat>& x) {
    if (x && (!j.lo || *j.lo < *x) && (!j.hi || *x < *j.hi)) cuts.push_back(*x);
  };
  for (const auto* h : {&f, &g})
    for (const auto& p : h->parts()) {
      add_cut(p.region.lo);
      add_cut(p.region.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::optional<Rat>> ends;
  ends.push_back(j.lo);
  for (auto& c : cuts) ends.push_back(c);
  ends.push_back(j.hi);

  const Part identity{IntervalQ::line(), ETPL::identity()};
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    IntervalQ cell(ends[i], ends[i + 1], ends[i].has_value(), ends[i + 1].has_value());
    const Part* pf = f.part_covering(cell);
    const Part* pg = g.part_covering(cell);
    if (!pf) pf = &identity;
    if (!pg) pg = &identity;
    const auto* ef = std::get_if<ETPL>(&pf->rep);
    const auto* eg = std::get_if<ETPL>(&pg->rep);
    const auto* cf = std::get_if<CompactifiedMap>(&pf->rep);
    const auto* cg = std::get_if<CompactifiedMap>(&pg->rep);
    bool same;
    if (ef && eg) {
      same = agree_on(*ef, *eg, cell);
    } else if (cf && cg && cf->target() == cg->target()) {
      same = agree_on(cf->inner(), cg->inner(), to_line(cf->target(), cell));
    } else {
      bool id_f = ef ? etpl_is_identity_on(*ef, cell) : compact_is_identity_on(*cf, cell);
      bool id_g = eg ? etpl_is_identity_on(*eg, cell) : compact_is_identity_on(*cg, cell);
      if (!id_f && !id_g) throw Error("incomparable classes on " + cell.str());
      same = id_f && id_g;
    }
    if (!same) return false;
  }
  return true;
}

bool operator==(const PiecewiseHomeo& f, const PiecewiseHomeo& g) { return agree_on(f, g, IntervalQ::line()); }

}  // namespace plh
