#pragma once

#include <unordered_map>
#include <vector>

#include "ospbw/arc_diagram.hpp"
#include "ospbw/poly.hpp"

namespace ospbw {

/// Formal Q[t]-linear combination of arc diagrams with common shape k -> l.
/// Arc diagrams are a free basis of the hom-spaces, so equality of term maps
/// is equality of morphisms. Zero coefficients are never stored.
class Morphism {
 public:
  using TermMap = std::unordered_map<ArcDiagram, PolyT, ArcDiagramHash>;

  Morphism(int upper, int lower) : upper_(upper), lower_(lower) {}

  explicit Morphism(const ArcDiagram& d, PolyT coeff = PolyT::one())
      : upper_(d.upper()), lower_(d.lower()) {
    add_term(d, std::move(coeff));
  }

  static Morphism zero(int upper, int lower) { return Morphism(upper, lower); }
  static Morphism identity(int n) { return Morphism(ArcDiagram::identity(n)); }

  int upper() const { return upper_; }
  int lower() const { return lower_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  PolyT coeff(const ArcDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? PolyT::zero() : it->second;
  }

  void add_term(const ArcDiagram& d, PolyT coeff) {
    if (d.upper() != upper_ || d.lower() != lower_)
      throw ShapeError("Morphism::add_term: shape mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, std::move(coeff));
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Morphism& operator+=(const Morphism& o) {
    if (o.upper_ != upper_ || o.lower_ != lower_)
      throw ShapeError("Morphism: shape mismatch in sum");
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  Morphism& operator-=(const Morphism& o) { return *this += -o; }
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator-(const Morphism& a) {
    Morphism r(a.upper_, a.lower_);
    for (const auto& [d, c] : a.terms_) r.terms_.emplace(d, -c);
    return r;
  }

  Morphism& operator*=(const PolyT& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c = c * s;
    return *this;
  }
  Morphism& operator*=(const Rational& s) { return *this *= PolyT(s); }
  friend Morphism operator*(Morphism a, const PolyT& s) { return a *= s; }
  friend Morphism operator*(const PolyT& s, Morphism a) { return a *= s; }
  friend Morphism operator*(Morphism a, const Rational& s) { return a *= s; }
  friend Morphism operator*(const Rational& s, Morphism a) { return a *= s; }

  bool operator==(const Morphism& o) const {
    if (upper_ != o.upper_ || lower_ != o.lower_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [d, c] : terms_) {
      auto it = o.terms_.find(d);
      if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
  }
  bool operator!=(const Morphism& o) const { return !(*this == o); }

 private:
  int upper_;
  int lower_;
  TermMap terms_;
};

/// Composition of two arc diagrams, f applied first (f stacked on top of g).
/// Chains are traced through the shared points; each closed loop among the
/// shared points contributes a factor t.
inline Morphism compose(const ArcDiagram& f, const ArcDiagram& g) {
  if (f.lower() != g.upper())
    throw ShapeError("compose: f.lower != g.upper");
  const int k = f.upper(), l = f.lower(), m = g.lower();
  // Global point ids: 0..k-1 upper, k..k+l-1 shared, k+l..k+l+m-1 lower.
  auto f_pt = [&](int p) { return p - 1; };  // 1..k+l
  // g points: upper 1..l -> k..k+l-1, lower l+1..l+m -> k+l..k+l+m-1.
  auto g_pt = [&](int p) { return k + p - 1; };
  std::vector<int> adj_f(k + l + m, -1), adj_g(k + l + m, -1);
  for (const auto& [a, b] : f.arcs()) {
    adj_f[f_pt(a)] = f_pt(b);
    adj_f[f_pt(b)] = f_pt(a);
  }
  for (const auto& [a, b] : g.arcs()) {
    adj_g[g_pt(a)] = g_pt(b);
    adj_g[g_pt(b)] = g_pt(a);
  }
  auto is_shared = [&](int p) { return p >= k && p < k + l; };
  std::vector<char> used(k + l + m, 0);
  std::vector<std::pair<int, int>> arcs;
  // Trace chains starting from every external point.
  for (int s = 0; s < k + l + m; ++s) {
    if (is_shared(s) || used[s]) continue;
    used[s] = 1;
    bool in_f = s < k;  // start in f's matching from upper points
    int cur = s;
    for (;;) {
      int nxt = in_f ? adj_f[cur] : adj_g[cur];
      used[nxt] = 1;
      if (!is_shared(nxt)) {
        // External endpoint reached: emit arc with final labels.
        auto final_label = [&](int p) {
          return p < k ? p + 1 : p - l + 1;  // strip shared block
        };
        arcs.emplace_back(final_label(s), final_label(nxt));
        break;
      }
      cur = nxt;
      in_f = !in_f;
    }
  }
  // Remaining shared points form closed loops.
  int loops = 0;
  for (int s = k; s < k + l; ++s) {
    if (used[s]) continue;
    ++loops;
    int cur = s;
    bool in_f = true;
    while (!used[cur]) {
      used[cur] = 1;
      cur = in_f ? adj_f[cur] : adj_g[cur];
      in_f = !in_f;
    }
  }
  return Morphism(ArcDiagram(k, m, std::move(arcs)), PolyT::t_power(loops));
}

inline Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.lower() != g.upper())
    throw ShapeError("compose: f.lower != g.upper");
  Morphism r(f.upper(), g.lower());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) {
      Morphism part = compose(df, dg);
      for (const auto& [d, c] : part.terms()) r.add_term(d, cf * cg * c);
    }
  return r;
}

inline ArcDiagram tensor(const ArcDiagram& f, const ArcDiagram& g) {
  const int fu = f.upper(), fl = f.lower(), gu = g.upper(), gl = g.lower();
  const int K = fu + gu;
  std::vector<std::pair<int, int>> arcs;
  auto f_map = [&](int p) { return p <= fu ? p : K + (p - fu); };
  auto g_map = [&](int p) { return p <= gu ? fu + p : K + fl + (p - gu); };
  for (const auto& [a, b] : f.arcs()) arcs.emplace_back(f_map(a), f_map(b));
  for (const auto& [a, b] : g.arcs()) arcs.emplace_back(g_map(a), g_map(b));
  return ArcDiagram(K, fl + gl, std::move(arcs));
}

inline Morphism tensor(const Morphism& f, const Morphism& g) {
  Morphism r(f.upper() + g.upper(), f.lower() + g.lower());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms())
      r.add_term(tensor(df, dg), cf * cg);
  return r;
}

/// Diagram of a permutation sigma of {1..n}: arcs (i, n + sigma(i)).
/// With the stacking convention compose(f, g) = "f first",
/// compose(permutation_diagram(s), permutation_diagram(t)) is the diagram of
/// the product t o s.
inline ArcDiagram permutation_diagram(const Perm& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (!perm_is_valid(sigma))
    throw ShapeError("permutation_diagram: not a permutation");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(n);
  for (int i = 1; i <= n; ++i) arcs.emplace_back(i, n + sigma[i - 1]);
  return ArcDiagram(n, n, std::move(arcs));
}

/// sigma^(m): the permutation in S_{mn} moving blocks of size m rigidly,
/// block b -> block sigma(b).
inline Perm block_perm(const Perm& sigma, int m) {
  const int n = static_cast<int>(sigma.size());
  Perm p(static_cast<size_t>(m) * n);
  for (int b = 1; b <= n; ++b)
    for (int i = 1; i <= m; ++i)
      p[(b - 1) * m + i - 1] = (sigma[b - 1] - 1) * m + i;
  return p;
}

inline ArcDiagram block_permutation(const Perm& sigma, int m) {
  return permutation_diagram(block_perm(sigma, m));
}

/// sym_{+-n}^{(m)} = sum over S_n of (+-1)^sigma sigma^(m), acting on mn strands.
inline Morphism symmetrizer(int n, int sign, int m = 1) {
  if (n < 0) throw ShapeError("symmetrizer: n < 0");
  Morphism r(n * m, n * m);
  for_each_perm(n, [&](const Perm& s) {
    Rational c = (sign < 0 && perm_sign(s) < 0) ? -1 : 1;
    r.add_term(block_permutation(s, m), PolyT(c));
  });
  return r;
}

inline Morphism alt(int n) { return symmetrizer(n, -1, 1); }

/// Braiding c_{k,l}: i -> i+l for i <= k, i -> i-k for i > k.
inline ArcDiagram braiding_diagram(int k, int l) {
  Perm p(static_cast<size_t>(k) + l);
  for (int i = 1; i <= k; ++i) p[i - 1] = i + l;
  for (int i = k + 1; i <= k + l; ++i) p[i - 1] = i - k;
  return permutation_diagram(p);
}

/// cyc_e = sum_{i=1}^e (-1)^i c_{1,i-1} (x) id^{e-i}
inline Morphism cyc(int e) {
  if (e < 1) throw ShapeError("cyc: e must be >= 1");
  Morphism r(e, e);
  for (int i = 1; i <= e; ++i) {
    ArcDiagram d = tensor(braiding_diagram(1, i - 1),
                          ArcDiagram::identity(e - i));
    r.add_term(d, PolyT(Rational(i % 2 == 0 ? 1 : -1)));
  }
  return r;
}

/// s_d = sym_d^{(2)} after alt_2^{(x)d}: the symmetrizer cutting out S^d(L^2 V).
inline Morphism s_d(int d) {
  Morphism a = Morphism::identity(0);
  for (int i = 0; i < d; ++i) a = tensor(a, alt(2));
  return compose(a, symmetrizer(d, +1, 2));
}

/// All perfect matchings on k upper + l lower points, lexicographic order.
inline std::vector<ArcDiagram> all_arc_diagrams(int k, int l) {
  std::vector<ArcDiagram> out;
  if ((k + l) % 2 != 0) return out;
  const int n = k + l;
  std::vector<std::pair<int, int>> arcs;
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto&& self) -> void {
    int a = 1;
    while (a <= n && used[a]) ++a;
    if (a > n) {
      out.emplace_back(k, l, arcs);
      return;
    }
    used[a] = 1;
    for (int b = a + 1; b <= n; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      arcs.emplace_back(a, b);
      self(self);
      arcs.pop_back();
      used[b] = 0;
    }
    used[a] = 0;
  };
  rec(rec);
  return out;
}

}  // namespace ospbw
