#pragma once

// Reference implementations used to cross-check the library. Each one is
// deliberately naive and shares no code with the structures under test.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "plh/rat.hpp"

namespace oracle {

using plh::Rat;

/// A PL homeomorphism given by breakpoints, a translation by `left`/`right`
/// beyond the ends.
struct Pl {
  std::vector<std::pair<Rat, Rat>> pts;
  Rat left = 0, right = 0;

  Rat operator()(const Rat& x) const {
    if (pts.empty()) return x + left;
    if (x <= pts.front().first) return x + (pts.front().second - pts.front().first);
    if (x >= pts.back().first) return x + (pts.back().second - pts.back().first);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const auto& [x0, y0] = pts[i];
      const auto& [x1, y1] = pts[i + 1];
      if (x0 <= x && x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
    return x;
  }

  Pl inverse() const {
    Pl r;
    for (const auto& [x, y] : pts) r.pts.push_back({y, x});
    r.left = -left;
    r.right = -right;
    return r;
  }
};

/// Applies the maps left to right.
inline Rat chain(const std::vector<const Pl*>& maps, Rat x) {
  for (const auto* m : maps) x = (*m)(x);
  return x;
}

/// Rationals of [lo, hi] with denominators up to `den`, plus the given extras.
inline std::vector<Rat> grid(const Rat& lo, const Rat& hi, long den) {
  std::vector<Rat> out;
  for (long q = 1; q <= den; ++q) {
    Rat step = (hi - lo) / Rat(q);
    for (long p = 0; p <= q; ++p) out.push_back(lo + step * Rat(p));
  }
  return out;
}

/// Free reduction with a plain stack over letters "x" / "x^-1".
struct Letter {
  std::string g;
  int sign;
  bool operator==(const Letter&) const = default;
};

inline std::vector<Letter> reduce(const std::vector<Letter>& w) {
  std::vector<Letter> st;
  for (const auto& l : w) {
    if (!st.empty() && st.back().g == l.g && st.back().sign == -l.sign)
      st.pop_back();
    else
      st.push_back(l);
  }
  return st;
}

inline std::vector<Letter> inv(std::vector<Letter> w) {
  std::vector<Letter> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->g, -it->sign});
  return r;
}

inline std::vector<Letter> cat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<Letter> comm(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return cat(cat(cat(a, b), inv(a)), inv(b));
}

inline std::vector<Letter> gen(const std::string& g, int e = 1) {
  std::vector<Letter> w;
  for (int i = 0; i < std::abs(e); ++i) w.push_back({g, e > 0 ? 1 : -1});
  return w;
}

/// Laurent polynomials in x with integer coefficients.
using Laurent = std::map<long, long>;

inline Laurent clean(Laurent p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

inline Laurent add(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [k, v] : b) r[k] += v;
  return clean(r);
}

inline Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [i, u] : a)
    for (const auto& [j, v] : b) r[i + j] += u * v;
  return clean(r);
}

inline Laurent neg(const Laurent& a) {
  Laurent r;
  for (const auto& [k, v] : a) r[k] = -v;
  return r;
}

/// 3x3 matrices over Z[x, 1/x]. s_i = [[1, x^i, 0], [0, 1, x^-i], [0, 0, 1]]
/// and t = diag(1, x, 1) satisfy t^-1 s_i t = s_{i+1}; the commutators
/// [s_0, s_d] are central with corner x^-d - x^d, so the group they generate is
/// a faithful model of the Hall-Neumann group.
struct Mat {
  Laurent a[3][3];

  static Mat id() {
    Mat m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = {{0, 1}};
    return m;
  }

  friend Mat operator*(const Mat& p, const Mat& q) {
    Mat r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.a[i][j] = add(r.a[i][j], mul(p.a[i][k], q.a[k][j]));
    return r;
  }

  bool operator==(const Mat& o) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (clean(a[i][j]) != clean(o.a[i][j])) return false;
    return true;
  }
};

inline Mat s_mat(long i, int sign = 1) {
  Mat m = Mat::id();
  // Unitriangular inverse: (a, b, c) -> (-a, -b, ab - c) with c = 0.
  m.a[0][1] = {{i, sign}};
  m.a[1][2] = {{-i, sign}};
  if (sign < 0) m.a[0][2] = {{0, 1}};
  return m;
}

inline Mat t_mat(int sign = 1) {
  Mat m = Mat::id();
  m.a[1][1] = {{sign, 1}};
  return m;
}

/// Image of a word over t, s (letters from `gen`).
inline Mat eval(const std::vector<Letter>& w) {
  Mat m = Mat::id();
  for (const auto& l : w) m = m * (l.g == "t" ? t_mat(l.sign) : s_mat(0, l.sign));
  return m;
}

}  // namespace oracle
