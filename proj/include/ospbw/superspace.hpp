#pragma once

#include <map>
#include <vector>

#include "ospbw/morphism.hpp"

namespace ospbw {

/// The supervector space k^{m|2n} with its orthosymplectic self-duality.
/// Basis e_1..e_{m+2n}, even for i <= m, odd beyond. The dual basis is
/// e_i^* = e_i for i <= m and e_{i+1} / -e_{i-1} on the odd block, pairing
/// consecutive odd vectors.
struct SuperSpace {
  int m = 0;
  int n = 0;

  int dim() const { return m + 2 * n; }
  int t() const { return m - 2 * n; }
  int parity(int i) const { return i > m ? 1 : 0; }

  /// e_i^* = dual_sign(i) * e_{dual_index(i)}
  int dual_index(int i) const {
    if (i <= m) return i;
    return (i - m) % 2 == 1 ? i + 1 : i - 1;
  }
  int dual_sign(int i) const {
    return (i > m && (i - m) % 2 == 0) ? -1 : 1;
  }

  bool operator==(const SuperSpace& o) const { return m == o.m && n == o.n; }
};

/// f_cup on basis vectors: f_cup(e_a (x) e_b).
inline Rational cup_value(const SuperSpace& sp, int a, int b) {
  // e_a = dual_sign(i) e_i^* with i = dual_index(a), so the pairing is
  // dual_sign(i) delta_{ib}.
  int i = sp.dual_index(a);
  return b == i ? Rational(sp.dual_sign(i)) : Rational(0);
}

/// f_cap(1) = sum_i e_i (x) e_i^*: coefficient of e_a (x) e_b.
inline Rational cap_value(const SuperSpace& sp, int a, int b) {
  return b == sp.dual_index(a) ? Rational(sp.dual_sign(a)) : Rational(0);
}

/// Basis multi-index of a tensor power, entries in 1..dim, length = arity.
using Idx = std::vector<int>;
/// Sparse element of a tensor power.
using Vec = std::map<Idx, Rational>;

inline void vec_add(Vec& v, const Idx& i, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

inline Vec vec_scale(Vec v, const Rational& c) {
  if (c == 0) return {};
  for (auto& [i, x] : v) x *= c;
  return v;
}

/// Concatenation tensor product of elements (no Koszul signs: elements, not
/// maps, are being juxtaposed).
inline Vec vec_tensor(const Vec& a, const Vec& b) {
  Vec r;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) {
      Idx i = ia;
      i.insert(i.end(), ib.begin(), ib.end());
      vec_add(r, i, ca * cb);
    }
  return r;
}

/// Sparse linear map between tensor powers of a SuperSpace, stored as the
/// image of each source basis tensor. All maps arising here are parity-even
/// (the generator images f_cup, f_cap, f_cross are even), so composition and
/// tensor products need no Koszul signs at the map level; the signs live in
/// the entries.
struct SuperMap {
  int k = 0;  // source arity
  int l = 0;  // target arity
  SuperSpace sp;
  std::map<Idx, Vec> cols;

  SuperMap() = default;
  SuperMap(int k_, int l_, SuperSpace sp_) : k(k_), l(l_), sp(sp_) {}

  static SuperMap identity(int arity, SuperSpace sp) {
    SuperMap r(arity, arity, sp);
    Idx i(arity, 1);
    for (;;) {
      r.cols[i] = Vec{{i, Rational(1)}};
      int p = arity - 1;
      while (p >= 0 && i[p] == sp.dim()) i[p--] = 1;
      if (p < 0) break;
      ++i[p];
    }
    if (arity == 0) r.cols[{}] = Vec{{{}, Rational(1)}};
    return r;
  }

  void add(const Idx& in, const Idx& out, const Rational& c) {
    if (c == 0) return;
    vec_add(cols[in], out, c);
    if (cols[in].empty()) cols.erase(in);
  }

  void add_column(const Idx& in, const Vec& v, const Rational& scale = 1) {
    if (v.empty() || scale == 0) return;
    Vec& col = cols[in];
    for (const auto& [i, c] : v) vec_add(col, i, c * scale);
    if (col.empty()) cols.erase(in);
  }

  Vec column(const Idx& in) const {
    auto it = cols.find(in);
    return it == cols.end() ? Vec{} : it->second;
  }

  Vec apply(const Vec& v) const {
    Vec r;
    for (const auto& [i, c] : v) {
      auto it = cols.find(i);
      if (it == cols.end()) continue;
      for (const auto& [j, x] : it->second) vec_add(r, j, c * x);
    }
    return r;
  }

  bool is_zero() const { return cols.empty(); }

  SuperMap& operator+=(const SuperMap& o) {
    if (o.k != k || o.l != l) throw ShapeError("SuperMap: shape mismatch");
    for (const auto& [i, v] : o.cols) add_column(i, v);
    return *this;
  }
  friend SuperMap operator+(SuperMap a, const SuperMap& b) { return a += b; }

  SuperMap& operator*=(const Rational& c) {
    if (c == 0) {
      cols.clear();
      return *this;
    }
    for (auto& [i, v] : cols)
      for (auto& [j, x] : v) x *= c;
    return *this;
  }
  friend SuperMap operator*(SuperMap a, const Rational& c) { return a *= c; }
  friend SuperMap operator*(const Rational& c, SuperMap a) { return a *= c; }

  bool operator==(const SuperMap& o) const {
    return k == o.k && l == o.l && sp == o.sp && cols == o.cols;
  }
  bool operator!=(const SuperMap& o) const { return !(*this == o); }
};

/// Composition, f applied first (matching compose() on Morphisms).
inline SuperMap compose(const SuperMap& f, const SuperMap& g) {
  if (f.l != g.k || !(f.sp == g.sp))
    throw ShapeError("SuperMap compose: shape mismatch");
  SuperMap r(f.k, g.l, f.sp);
  for (const auto& [i, v] : f.cols) {
    Vec img = g.apply(v);
    if (!img.empty()) r.cols.emplace(i, std::move(img));
  }
  return r;
}

/// Tensor product of (even) maps: columns concatenate, no Koszul signs.
inline SuperMap tensor(const SuperMap& f, const SuperMap& g) {
  if (!(f.sp == g.sp)) throw ShapeError("SuperMap tensor: space mismatch");
  SuperMap r(f.k + g.k, f.l + g.l, f.sp);
  for (const auto& [ia, va] : f.cols)
    for (const auto& [ib, vb] : g.cols) {
      Idx i = ia;
      i.insert(i.end(), ib.begin(), ib.end());
      r.cols.emplace(std::move(i), vec_tensor(va, vb));
    }
  return r;
}

/// Enumerate all basis multi-indices of the given arity.
template <class F>
inline void for_each_idx(const SuperSpace& sp, int arity, F&& f) {
  Idx i(arity, 1);
  if (arity == 0) {
    f(i);
    return;
  }
  if (sp.dim() == 0) return;
  for (;;) {
    f(i);
    int p = arity - 1;
    while (p >= 0 && i[p] == sp.dim()) i[p--] = 1;
    if (p < 0) break;
    ++i[p];
  }
}

namespace detail {

/// Evaluate one arc diagram on one source basis tensor by a sweep-line
/// factorization into elementary slices: crossings bring the endpoints of
/// each upper arc together, a cup evaluates it, caps create the lower arcs,
/// and a final bubble sort of crossings moves every wire to its boundary
/// position. Each slice is id^a (x) gen (x) id^b with gen even, so the only
/// signs are the (-1)^{|e_i||e_j|} of crossings and the entries of f_cup,
/// f_cap.
inline Vec specialize_column(const ArcDiagram& d, const SuperSpace& sp,
                             const Idx& src) {
  const int k = d.upper();
  std::vector<int> pt(k);  // diagram point carried by each wire
  for (int i = 0; i < k; ++i) pt[i] = i + 1;
  Vec cur{{src, Rational(1)}};

  auto cross_at = [&](int pos) {
    Vec nxt;
    for (const auto& [i, c] : cur) {
      Idx j = i;
      std::swap(j[pos], j[pos + 1]);
      int s = (sp.parity(i[pos]) && sp.parity(i[pos + 1])) ? -1 : 1;
      vec_add(nxt, j, c * Rational(s));
    }
    cur = std::move(nxt);
  };

  // upper-upper arcs
  for (const auto& [a, b] : d.arcs()) {
    if (b > k) continue;
    int pa = -1, pb = -1;
    for (size_t i = 0; i < pt.size(); ++i) {
      if (pt[i] == a) pa = static_cast<int>(i);
      if (pt[i] == b) pb = static_cast<int>(i);
    }
    for (int i = pb; i > pa + 1; --i) {
      cross_at(i - 1);
      std::swap(pt[i], pt[i - 1]);
    }
    Vec nxt;
    for (const auto& [i, c] : cur) {
      Rational v = cup_value(sp, i[pa], i[pa + 1]);
      if (v == 0) continue;
      Idx j;
      j.reserve(i.size() - 2);
      for (size_t q = 0; q < i.size(); ++q)
        if (static_cast<int>(q) != pa && static_cast<int>(q) != pa + 1)
          j.push_back(i[q]);
      vec_add(nxt, j, c * v);
    }
    cur = std::move(nxt);
    pt.erase(pt.begin() + pa, pt.begin() + pa + 2);
    if (cur.empty()) return {};
  }

  // lower-lower arcs: caps appended on the right, left wire = first factor
  for (const auto& [a, b] : d.arcs()) {
    if (a <= k) continue;
    Vec nxt;
    for (const auto& [i, c] : cur)
      for (int x = 1; x <= sp.dim(); ++x) {
        int y = sp.dual_index(x);
        Idx j = i;
        j.push_back(x);
        j.push_back(y);
        vec_add(nxt, j, c * Rational(sp.dual_sign(x)));
      }
    cur = std::move(nxt);
    pt.push_back(a);
    pt.push_back(b);
  }

  // remaining upper wires end at their lower partner; sort all wires to
  // boundary order
  std::vector<int> target(pt.size());
  for (size_t i = 0; i < pt.size(); ++i)
    target[i] = (pt[i] <= k ? d.partner(pt[i]) : pt[i]) - k;
  for (size_t i = 0; i + 1 < target.size(); ++i)
    for (size_t j = target.size() - 1; j > i; --j)
      if (target[j - 1] > target[j]) {
        cross_at(static_cast<int>(j - 1));
        std::swap(target[j - 1], target[j]);
      }
  return cur;
}

}  // namespace detail

/// The specialization functor to k^{m|2n}: arc diagrams evaluate through
/// f_cup, f_cap, f_cross, and the loop parameter becomes t = m-2n.
inline SuperMap specialize(const Morphism& f, int m, int n) {
  SuperSpace sp{m, n};
  SuperMap r(f.upper(), f.lower(), sp);
  for (const auto& [d, poly] : f.terms()) {
    Rational c = poly.eval(Rational(sp.t()));
    if (c == 0) continue;
    for_each_idx(sp, f.upper(), [&](const Idx& src) {
      r.add_column(src, detail::specialize_column(d, sp, src), c);
    });
  }
  return r;
}

inline SuperMap specialize(const ArcDiagram& d, int m, int n) {
  return specialize(Morphism(d), m, n);
}

}  // namespace ospbw
