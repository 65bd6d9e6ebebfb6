#include "plh/interval.hpp"

#include "plh/error.hpp"

namespace plh {

IntervalQ::IntervalQ(std::optional<Rat> lo_, std::optional<Rat> hi_, bool lo_closed_, bool hi_closed_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_ && lo.has_value()),
      hi_closed(hi_closed_ && hi.has_value()) {
  if (lo && hi && !(*lo < *hi)) throw Error("IntervalQ: requires lo < hi, got " + str());
}

bool IntervalQ::contains(const Rat& x) const {
  if (lo && (lo_closed ? x < *lo : x <= *lo)) return false;
  if (hi && (hi_closed ? x > *hi : x >= *hi)) return false;
  return true;
}

bool IntervalQ::contains(const IntervalQ& o) const {
  if (lo) {
    if (!o.lo) return false;
    if (*o.lo < *lo) return false;
    if (*o.lo == *lo && o.lo_closed && !lo_closed) return false;
  }
  if (hi) {
    if (!o.hi) return false;
    if (*o.hi > *hi) return false;
    if (*o.hi == *hi && o.hi_closed && !hi_closed) return false;
  }
  return true;
}

bool IntervalQ::intersects(const IntervalQ& o) const {
  // Compare this.lo against o.hi and o.lo against this.hi.
  auto before = [](const IntervalQ& left, const IntervalQ& right) {
    // true if `left` lies entirely to the left of `right`
    if (!left.hi || !right.lo) return false;
    if (*left.hi < *right.lo) return true;
    if (*left.hi == *right.lo) return !(left.hi_closed && right.lo_closed);
    return false;
  };
  return !before(*this, o) && !before(o, *this);
}

Rat IntervalQ::length() const {
  if (!bounded()) throw Error("IntervalQ::length: unbounded interval " + str());
  return *hi - *lo;
}

Rat IntervalQ::midpoint() const {
  if (!bounded()) throw Error("IntervalQ::midpoint: unbounded interval " + str());
  return (*lo + *hi) / Rat(2);
}

std::string IntervalQ::str() const {
  std::string s = lo_closed ? "[" : "(";
  s += lo ? lo->str() : "-inf";
  s += ",";
  s += hi ? hi->str() : "+inf";
  s += hi_closed ? "]" : ")";
  return s;
}

bool interiors_disjoint(const IntervalQ& a, const IntervalQ& b) {
  return !a.interior().intersects(b.interior());
}

}  // namespace plh
