#pragma once

#include <random>

#include "ospbw/basis.hpp"
#include "ospbw/jacobi.hpp"
#include "ospbw/linalg.hpp"
#include "ospbw/superspace.hpp"

namespace ospbw {

/// X*_{ij} = E*_{ij} - (-1)^{|e_i||e_j|} E_{ji} in plain tensor coordinates,
/// with E*_{ij} = e_i^* (x) e_j and E_{ji} = e_j (x) e_i^*.
inline Vec xstar(const SuperSpace& sp, int i, int j) {
  Vec r;
  int di = sp.dual_index(i);
  Rational s(sp.dual_sign(i));
  vec_add(r, {di, j}, s);
  int sign = (sp.parity(i) && sp.parity(j)) ? -1 : 1;
  vec_add(r, {j, di}, -Rational(sign) * s);
  return r;
}

/// Sum over inner indices of X*_{i,p_2} (x) ... (x) X*_{p_len,j}; length 0 is
/// the empty chain delta_{ij}.
inline Vec xstar_chain(const SuperSpace& sp, int i, int j, int len) {
  if (len == 0) return i == j ? Vec{{{}, Rational(1)}} : Vec{};
  if (len == 1) return xstar(sp, i, j);
  Vec r;
  for (int p = 1; p <= sp.dim(); ++p) {
    Vec tail = xstar_chain(sp, p, j, len - 1);
    if (tail.empty()) continue;
    Vec head = xstar(sp, i, p);
    for (const auto& [hi, hc] : head)
      for (const auto& [ti, tc] : tail) {
        Idx v = hi;
        v.insert(v.end(), ti.begin(), ti.end());
        vec_add(r, v, hc * tc);
      }
  }
  return r;
}

/// Closed trace factor: sum_i (-1)^{|e_i|} X*_{i,p_2} ... X*_{p_len,i}.
inline Vec trace_cycle(const SuperSpace& sp, int len) {
  Vec r;
  for (int i = 1; i <= sp.dim(); ++i) {
    Vec c = xstar_chain(sp, i, i, len);
    Rational s(sp.parity(i) ? -1 : 1);
    for (const auto& [v, x] : c) vec_add(r, v, s * x);
  }
  return r;
}

/// h_mu on tensor coordinates: each source pair (a,b), read as a multiple of
/// E*_{ib} via e_a = dual_sign(i) e_i^*, maps to the X*-chain of length mu_k
/// from i to b; factors tensor together.
inline SuperMap build_h_mu(const Partition& mu, int m, int n) {
  SuperSpace sp{m, n};
  const int ell = mu.count();
  SuperMap r(2 * ell, 2 * mu.sum(), sp);
  for_each_idx(sp, 2 * ell, [&](const Idx& I) {
    Vec out{{Idx{}, Rational(1)}};
    Rational s(1);
    for (int q = 0; q < ell && !out.empty(); ++q) {
      int a = I[2 * q], b = I[2 * q + 1];
      int i = sp.dual_index(a);
      s *= sp.dual_sign(i);
      out = vec_tensor(out, xstar_chain(sp, i, b, mu.parts()[q]));
    }
    r.add_column(I, out, s);
  });
  return r;
}

/// g_{k,nu} on tensor coordinates: an X*-chain of length k attached to the
/// source pair, tensored with one closed trace factor per part of nu.
inline SuperMap build_g(int k, const Partition& nu, int m, int n) {
  if (k < 0) throw ShapeError("build_g: negative chain length");
  SuperSpace sp{m, n};
  SuperMap r(2, 2 * (k + nu.sum()), sp);
  std::vector<Vec> cycles;
  for (int q = 0; q < nu.count(); ++q)
    cycles.push_back(trace_cycle(sp, nu.parts()[q]));
  for_each_idx(sp, 2, [&](const Idx& I) {
    int i = sp.dual_index(I[0]);
    Rational s(sp.dual_sign(i));
    Vec out = xstar_chain(sp, i, I[1], k);
    for (const auto& c : cycles) {
      if (out.empty()) break;
      out = vec_tensor(out, c);
    }
    r.add_column(I, out, s);
  });
  return r;
}

/// Matrix of a 2-tensor under v (x) w -> (u -> v f_cup(w (x) u)).
inline Matrix mat_of(const Vec& x, const SuperSpace& sp) {
  const int N = sp.dim();
  Matrix mt(N, std::vector<Rational>(N, Rational(0)));
  for (const auto& [i, c] : x) {
    if (i.size() != 2) throw ShapeError("mat_of: arity 2 expected");
    for (int u = 1; u <= N; ++u) {
      Rational v = cup_value(sp, i[1], u);
      if (v != 0) mt[i[0] - 1][u - 1] += c * v;
    }
  }
  return mt;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const int N = static_cast<int>(a.size());
  Matrix r(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < N; ++i)
    for (int p = 0; p < N; ++p) {
      if (a[i][p] == 0) continue;
      for (int j = 0; j < N; ++j) r[i][j] += a[i][p] * b[p][j];
    }
  return r;
}

inline Rational supertrace(const Matrix& a, const SuperSpace& sp) {
  Rational r(0);
  for (int i = 1; i <= sp.dim(); ++i)
    r += Rational(sp.parity(i) ? -1 : 1) * a[i - 1][i - 1];
  return r;
}

/// Basis of Lambda^2 V in the super sense: e_a ^ e_b for a < b, plus
/// e_a (x) e_a for odd a.
struct Lambda2Elem {
  int a = 0, b = 0;
  int par = 0;
  Vec v;
};

inline std::vector<Lambda2Elem> lambda2_basis(const SuperSpace& sp) {
  std::vector<Lambda2Elem> out;
  for (int a = 1; a <= sp.dim(); ++a)
    for (int b = a; b <= sp.dim(); ++b) {
      Lambda2Elem el;
      el.a = a;
      el.b = b;
      el.par = (sp.parity(a) + sp.parity(b)) % 2;
      if (a == b) {
        if (!sp.parity(a)) continue;
        vec_add(el.v, {a, a}, Rational(1));
      } else {
        vec_add(el.v, {a, b}, Rational(1));
        int s = (sp.parity(a) && sp.parity(b)) ? -1 : 1;
        vec_add(el.v, {b, a}, -Rational(s));
      }
      out.push_back(std::move(el));
    }
  return out;
}

/// Incremental "equal up to one scalar" check: zero patterns must agree and
/// all nonzero ratios lhs/rhs must coincide.
struct RatioTester {
  bool ok = true;
  bool seen = false;
  Rational ratio = 0;

  void feed(const Rational& lhs, const Rational& rhs) {
    if (!ok) return;
    if (rhs == 0) {
      if (lhs != 0) ok = false;
      return;
    }
    if (lhs == 0) {
      ok = false;
      return;
    }
    Rational r = lhs / rhs;
    if (!seen) {
      ratio = r;
      seen = true;
    } else if (r != ratio) {
      ok = false;
    }
  }

  void feed(const Vec& lhs, const Vec& rhs) {
    for (const auto& [i, c] : lhs)
      if (!rhs.count(i)) feed(c, Rational(0));
    for (const auto& [i, c] : rhs) {
      auto it = lhs.find(i);
      feed(it == lhs.end() ? Rational(0) : it->second, c);
    }
  }
};

/// Proportionality of two sparse maps with identical shapes.
inline RatioTester supermap_ratio(const SuperMap& a, const SuperMap& b) {
  RatioTester t;
  if (a.k != b.k || a.l != b.l) {
    t.ok = false;
    return t;
  }
  for (const auto& [i, v] : a.cols) t.feed(v, b.column(i));
  for (const auto& [i, v] : b.cols)
    if (!a.cols.count(i)) t.feed(Vec{}, v);
  return t;
}

/// Flatten a SuperMap into coordinate rows (one row per source column).
inline Matrix supermap_matrix(const SuperMap& f) {
  std::map<Idx, int> index;
  for (const auto& [i, v] : f.cols)
    for (const auto& [j, c] : v) index.try_emplace(j, 0);
  int n = 0;
  for (auto& [j, q] : index) q = n++;
  Matrix rows;
  for (const auto& [i, v] : f.cols) {
    std::vector<Rational> row(n, Rational(0));
    for (const auto& [j, c] : v) row[index.at(j)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// The full symmetrized basis element x^rho(gamma, lambda) as a Morphism.
inline Morphism sym_element(const Pseudograph& g, const Partition& lam,
                            int rho) {
  const int e = g.valence();
  const int d = g.size() + lam.sum();
  Morphism r = symmetrize(build_x(g, lam), 2, e, d);
  r += symmetrize(build_x(g.transpose(), lam), 2, e, d) *
       Rational(rho * g.sgn());
  return r;
}

/// Specialization of a deformation map, split by target degree.
inline std::map<int, SuperMap> specialize_deformation(const DeformationMap& kap,
                                                      int m, int n) {
  std::map<int, Morphism> parts;
  for (const auto& [key, c] : kap.terms) {
    const auto& [g, lam] = key;
    int d = g.size() + lam.sum();
    auto it = parts.find(d);
    if (it == parts.end())
      it = parts.emplace(d, Morphism(2 * kap.e, 2 * d)).first;
    it->second += sym_element(g, lam, kap.rho) * c;
  }
  std::map<int, SuperMap> out;
  for (const auto& [d, mo] : parts) out.emplace(d, specialize(mo, m, n));
  return out;
}

/// Derivation action of a 2-tensor (viewed as a matrix via mat_of) on a
/// tensor power, with Koszul signs for odd matrix parts passing odd factors.
inline Vec act_tensor(const Vec& g2, const SuperSpace& sp, const Vec& w) {
  Vec r;
  for (const auto& [gi, gc] : g2) {
    int pg = (sp.parity(gi[0]) + sp.parity(gi[1])) % 2;
    for (const auto& [wi, wc] : w) {
      int acc = 0;
      for (size_t pos = 0; pos < wi.size(); ++pos) {
        Rational v = cup_value(sp, gi[1], wi[pos]);
        if (v != 0) {
          Idx j = wi;
          j[pos] = gi[0];
          int sign = (pg && acc % 2) ? -1 : 1;
          vec_add(r, j, gc * wc * v * Rational(sign));
        }
        acc += sp.parity(wi[pos]);
      }
    }
  }
  return r;
}

struct FormLieReport {
  bool ok_form = false;
  bool ok_lie = false;
  Rational form_ratio = 0;
  Rational lie_ratio = 0;
};

/// F of the degree-0 and degree-1 valence-2 deformations against an
/// independent matrix oracle: the supertrace form str(XY) and the
/// supercommutator XY - (-1)^{|X||Y|} YX on the image of Lambda^2 V.
inline FormLieReport verify_form_and_lie(int m, int n) {
  SuperSpace sp{m, n};
  FormLieReport rep;
  auto basis = lambda2_basis(sp);
  if (basis.empty()) return rep;

  SuperMap Fform = specialize(
      sym_element(Pseudograph(2, 2, {{1, 2, 0}, {1, 2, 0}}),
                  Partition::empty(), 1),
      m, n);
  SuperMap Flie = specialize(
      sym_element(Pseudograph(2, 2, {{1, 2, 0}, {1, 2, 1}}),
                  Partition::empty(), -1),
      m, n);

  // inverse of the matrix view on the span of the basis
  const int N = sp.dim();
  Matrix sys(N * N, std::vector<Rational>(basis.size(), Rational(0)));
  std::vector<Matrix> bm;
  for (size_t q = 0; q < basis.size(); ++q) {
    bm.push_back(mat_of(basis[q].v, sp));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) sys[i * N + j][q] = bm.back()[i][j];
  }

  RatioTester tform, tlie;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      Vec in = vec_tensor(x.v, y.v);
      Matrix mx = mat_of(x.v, sp), my = mat_of(y.v, sp);

      Vec lf = Fform.apply(in);
      Rational lhs = lf.count(Idx{}) ? lf.at(Idx{}) : Rational(0);
      tform.feed(lhs, supertrace(mat_mul(mx, my), sp));

      Matrix comm = mat_mul(mx, my);
      Matrix yx = mat_mul(my, mx);
      Rational ks((x.par && y.par) ? -1 : 1);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) comm[i][j] -= ks * yx[i][j];
      std::vector<Rational> rhsflat(N * N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) rhsflat[i * N + j] = comm[i][j];
      std::vector<Rational> coeffs;
      if (!solve_linear(sys, rhsflat, coeffs)) {
        tlie.ok = false;
        continue;
      }
      Vec rhs;
      for (size_t q = 0; q < basis.size(); ++q)
        for (const auto& [iv, cv] : basis[q].v)
          vec_add(rhs, iv, coeffs[q] * cv);
      tlie.feed(Flie.apply(in), rhs);
    }
  rep.ok_form = tform.ok && tform.seen;
  rep.ok_lie = tlie.ok && tlie.seen;
  rep.form_ratio = tform.ratio;
  rep.lie_ratio = tlie.ratio;
  return rep;
}

/// The unreduced generalized Jacobi check in the supercategory: for kappa
/// with values realized in S(g) tensor coordinates, split each value by the
/// coproduct (block unshuffles with Koszul signs), let the right part act on
/// the third factor by iterated matrix derivations, and subtract the
/// untouched term. Inputs run over the projection to the rho-symmetric cube
/// of Lambda^e V.
inline bool specialized_jacobi_zero(const DeformationMap& kap, int m, int n) {
  SuperSpace sp{m, n};
  const int e = kap.e;
  auto kF = specialize_deformation(kap, m, n);
  kF.erase(0);  // no condition in degree 0
  SuperMap P = specialize(s3rho_projector(e, kap.rho), m, n);
  bool ok = true;
  for_each_idx(sp, 3 * e, [&](const Idx& I) {
    if (!ok) return;
    Vec out;
    for (const auto& [J, cJ] : P.column(I)) {
      Idx uv(J.begin(), J.begin() + 2 * e);
      Idx w(J.begin() + 2 * e, J.end());
      for (const auto& [d, Fd] : kF) {
        for (const auto& [T, cT] : Fd.column(uv)) {
          std::vector<int> bpar(d);
          for (int b = 0; b < d; ++b)
            bpar[b] = (sp.parity(T[2 * b]) + sp.parity(T[2 * b + 1])) % 2;
          for (int S = 0; S < (1 << d) - 1; ++S) {
            int sign = 1;
            for (int i = 0; i < d; ++i)
              if (!(S >> i & 1) && bpar[i])
                for (int j = i + 1; j < d; ++j)
                  if ((S >> j & 1) && bpar[j]) sign = -sign;
            Idx head;
            for (int b = 0; b < d; ++b)
              if (S >> b & 1) {
                head.push_back(T[2 * b]);
                head.push_back(T[2 * b + 1]);
              }
            Vec acted{{w, Rational(1)}};
            for (int b = d - 1; b >= 0 && !acted.empty(); --b)
              if (!(S >> b & 1))
                acted = act_tensor(
                    Vec{{Idx{T[2 * b], T[2 * b + 1]}, Rational(1)}}, sp,
                    acted);
            for (const auto& [aw, ac] : acted) {
              Idx key = head;
              key.insert(key.end(), aw.begin(), aw.end());
              vec_add(out, key, cJ * cT * ac * Rational(sign));
            }
          }
        }
      }
    }
    if (!out.empty()) ok = false;
  });
  return ok;
}

/// Uniform random perfect matching on k upper + l lower points.
inline ArcDiagram random_arc_diagram(int k, int l, std::mt19937& rng) {
  std::vector<int> pts(k + l);
  for (int i = 0; i < k + l; ++i) pts[i] = i + 1;
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<std::pair<int, int>> arcs;
  for (size_t i = 0; i + 1 < pts.size(); i += 2)
    arcs.emplace_back(pts[i], pts[i + 1]);
  return ArcDiagram(k, l, std::move(arcs));
}

}  // namespace ospbw
