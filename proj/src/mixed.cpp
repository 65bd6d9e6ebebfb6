#include "plh/mixed.hpp"

#include <algorithm>
#include <optional>

#include "plh/error.hpp"

namespace plh {

MixedProduct::MixedProduct(const PiecewiseHomeo& f) {
  for (const auto& p : f.parts()) letters_.push_back(p.rep);
}

bool MixedProduct::all_etpl() const {
  return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return std::holds_alternative<ETPL>(l); });
}

Rat MixedProduct::operator()(const Rat& x) const {
  Rat y = x;
  for (const auto& l : letters_) y = std::visit([&](const auto& m) { return m(y); }, l);
  return y;
}

Rat MixedProduct::preimage(const Rat& y) const {
  Rat x = y;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    x = std::visit([&](const auto& m) { return m.preimage(x); }, *it);
  return x;
}

ETPL MixedProduct::etpl_part() const {
  ETPL out;
  for (const auto& l : letters_)
    if (const auto* e = std::get_if<ETPL>(&l)) out = compose(out, *e);
  return out;
}

namespace {

IntervalQ image(const ETPL& f, const IntervalQ& j) {
  std::optional<Rat> lo, hi;
  if (j.lo) lo = f(*j.lo);
  if (j.hi) hi = f(*j.hi);
  return {lo, hi, false, false};
}

struct Cell {
  IntervalQ cell;
  bool active = false;  // some compactified letter acted on it
  IntervalQ end;        // image after all letters
  ETPL inner;
  std::string failure;
};

struct Walk {
  std::vector<Cell> cells;
  ETPL total;
};

Walk walk(const std::vector<Letter>& letters) {
  Walk out;
  std::vector<Rat> cuts;
  for (const auto& l : letters) {
    if (const auto* e = std::get_if<ETPL>(&l)) {
      out.total = compose(out.total, *e);
      continue;
    }
    const auto& c = std::get<CompactifiedMap>(l);
    if (c.is_identity()) continue;
    cuts.push_back(out.total.preimage(*c.target().lo));
    cuts.push_back(out.total.preimage(*c.target().hi));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::optional<Rat>> ends{std::nullopt};
  for (auto& c : cuts) ends.push_back(c);
  ends.push_back(std::nullopt);

  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    Cell c;
    c.cell = IntervalQ(ends[i], ends[i + 1], false, false);
    IntervalQ cur = c.cell;
    bool affine = true;
    for (const auto& l : letters) {
      if (const auto* e = std::get_if<ETPL>(&l)) {
        if (cur.bounded() && !e->is_affine_on(cur)) {
          if (c.active) {
            c.failure = "an ETPL letter bends the compactified cell " + c.cell.str();
            break;
          }
          affine = false;
        }
        cur = image(*e, cur);
        continue;
      }
      const auto& m = std::get<CompactifiedMap>(l);
      if (m.is_identity() || interiors_disjoint(m.target(), cur)) continue;
      if (!(cur == m.target()) || !affine) {
        c.failure = "cell " + c.cell.str() + " meets target " + m.target().str() + " only partly";
        break;
      }
      c.active = true;
      c.inner = compose(c.inner, m.inner());
    }
    c.end = cur;
    out.cells.push_back(std::move(c));
  }
  return out;
}

[[noreturn]] void incompatible(const std::string& why) { throw Error("class-incompatible composition: " + why); }

}  // namespace

PiecewiseHomeo MixedProduct::analyze() const {
  Walk w = walk(letters_);
  std::vector<Part> parts;
  std::optional<std::optional<Rat>> run_start;
  auto close_run = [&](const std::optional<Rat>& end) {
    if (!run_start) return;
    IntervalQ region(*run_start, end, false, false);
    ETPL rep = restrict_to(w.total, region.closure());
    if (!rep.is_identity()) parts.push_back(Part{region, rep});
    run_start.reset();
  };
  for (const auto& c : w.cells) {
    if (!c.failure.empty()) incompatible(c.failure);
    if (!c.active) {
      if (!run_start) run_start = c.cell.lo;
      continue;
    }
    if (!(c.end == c.cell)) incompatible("compactified cell " + c.cell.str() + " is not invariant");
    close_run(c.cell.lo);
    if (!c.inner.is_identity()) parts.push_back(Part{c.cell, CompactifiedMap(c.cell, c.inner)});
  }
  close_run(std::nullopt);
  return canonicalize(PiecewiseHomeo(std::move(parts)));
}

std::vector<IntervalQ> support(const MixedProduct& f) {
  if (f.all_etpl()) return support(f.etpl_part());
  Walk w = walk(f.letters());
  std::vector<IntervalQ> pieces;
  for (const auto& c : w.cells) {
    if (!c.failure.empty()) incompatible(c.failure);
    if (!c.active) {
      for (const auto& comp : support(w.total))
        if (comp.intersects(c.cell)) {
          std::optional<Rat> lo = comp.lo, hi = comp.hi;
          if (c.cell.lo && (!lo || *lo < *c.cell.lo)) lo = c.cell.lo;
          if (c.cell.hi && (!hi || *hi > *c.cell.hi)) hi = c.cell.hi;
          pieces.push_back(IntervalQ(lo, hi, false, false));
        }
    } else if (c.end == c.cell) {
      for (const auto& comp : support(CompactifiedMap(c.cell, c.inner))) pieces.push_back(comp);
    } else if (interiors_disjoint(c.end, c.cell)) {
      pieces.push_back(c.cell);
    } else {
      incompatible("compactified cell " + c.cell.str() + " is carried partly onto itself");
    }
  }
  std::vector<IntervalQ> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().hi && p.lo && *out.back().hi == *p.lo && f(*p.lo) != *p.lo)
      out.back() = IntervalQ(out.back().lo, p.hi, false, false);
    else
      out.push_back(p);
  }
  return out;
}

std::optional<Map> exact_form(const MixedProduct& f) {
  if (f.all_etpl()) return f.etpl_part();
  try {
    return f.analyze();
  } catch (const Error&) {
    return std::nullopt;
  }
}

MixedProduct compose(const MixedProduct& f, const MixedProduct& g) {
  std::vector<Letter> out = f.letters();
  out.insert(out.end(), g.letters().begin(), g.letters().end());
  return MixedProduct(std::move(out));
}

MixedProduct inverse(const MixedProduct& f) {
  std::vector<Letter> out;
  for (auto it = f.letters().rbegin(); it != f.letters().rend(); ++it)
    out.push_back(std::visit([](const auto& m) -> Letter { return inverse(m); }, *it));
  return MixedProduct(std::move(out));
}

MixedProduct power(const MixedProduct& f, long n) {
  MixedProduct base = n < 0 ? inverse(f) : f;
  MixedProduct out;
  for (long k = 0; k < (n < 0 ? -n : n); ++k) out = compose(out, base);
  return out;
}

}  // namespace plh
