#pragma once

#include "ospbw/specialization.hpp"

namespace ospbw {

/// Multivariate polynomial with exact rational coefficients; exponent
/// vectors are trimmed of trailing zeros, so variable count is implicit.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(Rational c) {
    if (c != 0) terms_.emplace(std::vector<int>{}, std::move(c));
  }
  static MPoly var(int i) {
    MPoly p;
    std::vector<int> e(static_cast<size_t>(i) + 1, 0);
    e.back() = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(std::max(ea.size(), eb.size()), 0);
        for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }

  MPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Coefficient of the monomial in which exactly the listed variables
  /// appear, each with exponent 1, ignoring all other variables' exponents
  /// is NOT supported; this extracts terms whose support in the listed
  /// variables is exactly one each, returning the cofactor polynomial.
  MPoly linear_coefficient(const std::vector<int>& vars) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
      std::vector<int> rest = e;
      bool ok = true;
      for (int v : vars) {
        if (v >= static_cast<int>(rest.size()) || rest[v] != 1) {
          ok = false;
          break;
        }
        rest[v] = 0;
      }
      if (ok) r.add(rest, c);
    }
    return r;
  }

  void add(std::vector<int> e, const Rational& c) {
    if (c == 0) return;
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  std::map<std::vector<int>, Rational> terms_;
};

using PolyMatrix = std::vector<std::vector<MPoly>>;

enum class GFVariant { orthogonal, symplectic };

/// Symbolic setup for the generating-function expansions: A is the generic
/// element of the matrix Lie algebra cut out by the form (antisymmetric for
/// O_m, Hamiltonian for Sp_2n), parametrized by one free variable per
/// Lambda^2-basis element; v1, v2 are generic vectors.
struct GenFuncContext {
  SuperSpace sp;
  std::vector<Lambda2Elem> basis;
  PolyMatrix A;
  int v1_off = 0, v2_off = 0;

  explicit GenFuncContext(int m, int n) : sp{m, n} {
    basis = lambda2_basis(sp);
    const int N = sp.dim();
    v1_off = static_cast<int>(basis.size());
    v2_off = v1_off + N;
    A.assign(N, std::vector<MPoly>(N));
    for (size_t q = 0; q < basis.size(); ++q) {
      Matrix mq = mat_of(basis[q].v, sp);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if (mq[i][j] != 0)
            A[i][j] += MPoly::var(static_cast<int>(q)) * mq[i][j];
    }
  }

  PolyMatrix matpow(int k) const {
    const int N = sp.dim();
    PolyMatrix r(N, std::vector<MPoly>(N));
    for (int i = 0; i < N; ++i) r[i][i] = MPoly(Rational(1));
    for (int s = 0; s < k; ++s) {
      PolyMatrix nx(N, std::vector<MPoly>(N));
      for (int i = 0; i < N; ++i)
        for (int p = 0; p < N; ++p) {
          if (r[i][p].is_zero()) continue;
          for (int j = 0; j < N; ++j) nx[i][j] += r[i][p] * A[p][j];
        }
      r = std::move(nx);
    }
    return r;
  }

  MPoly trace_pow(int k) const {
    PolyMatrix p = matpow(k);
    MPoly r;
    for (int i = 0; i < sp.dim(); ++i) r += p[i][i];
    return r;
  }

  /// (v2, A^k v1) through the invariant form.
  MPoly pairing_pow(int k) const {
    const int N = sp.dim();
    PolyMatrix p = matpow(k);
    MPoly r;
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) {
        Rational f = cup_value(sp, a, b);
        if (f == 0) continue;
        // (v2, w) = sum_{a,b} B(a,b) v2_a w_b with w = A^k v1
        for (int c = 1; c <= N; ++c)
          if (!p[b - 1][c - 1].is_zero())
            r += MPoly::var(v2_off + a - 1) * MPoly::var(v1_off + c - 1) *
                 p[b - 1][c - 1] * f;
      }
    return r;
  }

  /// Trace-form pairing of a 2-tensor basis block with the generic Lie
  /// algebra element: tr(mat(e_a (x) e_b) A). This is the identification
  /// S^w g = S^w g* used for the comparison with the classical series.
  MPoly coord(int a, int b) const {
    MPoly r;
    for (int c = 1; c <= sp.dim(); ++c) {
      Rational f = cup_value(sp, b, c);
      if (f != 0) r += A[c - 1][a - 1] * f;
    }
    return r;
  }
};

namespace detail {

/// exp of a tau-power series with no constant term, truncated at tau^max.
inline std::vector<MPoly> exp_series(const std::vector<MPoly>& arg,
                                     int maxdeg) {
  std::vector<MPoly> r(maxdeg + 1);
  r[0] = MPoly(Rational(1));
  std::vector<MPoly> pw(maxdeg + 1);
  pw[0] = MPoly(Rational(1));
  Rational fact(1);
  for (int l = 1; l <= maxdeg; ++l) {
    std::vector<MPoly> nx(maxdeg + 1);
    for (int i = 0; i <= maxdeg; ++i)
      for (int j = 1; i + j <= maxdeg; ++j)
        if (!pw[i].is_zero() && j < static_cast<int>(arg.size()) &&
            !arg[j].is_zero())
          nx[i + j] += pw[i] * arg[j];
    pw = std::move(nx);
    fact *= l;
    bool any = false;
    for (int i = 0; i <= maxdeg; ++i)
      if (!pw[i].is_zero()) {
        r[i] += pw[i] * (Rational(1) / fact);
        any = true;
      }
    if (!any) break;
  }
  return r;
}

}  // namespace detail

/// tau^{2N} coefficient of the classical generating function, expanded
/// symbolically.
inline MPoly series_coefficient(GFVariant variant, int N,
                                const GenFuncContext& ctx) {
  const int maxdeg = 2 * N;
  std::vector<MPoly> logpart(maxdeg + 1);
  if (variant == GFVariant::orthogonal) {
    for (int r = 1; 2 * r <= maxdeg; ++r)
      logpart[2 * r] =
          ctx.trace_pow(2 * r) * Rational(r % 2 ? -1 : 1, 2 * r);
  } else {
    // det(1 - tau A)^{-1} = exp(+ sum tr(A^r) tau^r / r); the minus sign
    // sometimes quoted for this expansion belongs to det itself, not to
    // its inverse.
    for (int r = 1; r <= maxdeg; ++r)
      logpart[r] = ctx.trace_pow(r) * Rational(1, r);
  }
  std::vector<MPoly> ex = detail::exp_series(logpart, maxdeg);
  MPoly out;
  for (int k = 0; 2 * k <= maxdeg; ++k) {
    MPoly front = variant == GFVariant::orthogonal
                      ? ctx.pairing_pow(2 * k + 1) *
                            Rational(k % 2 ? -1 : 1)
                      : ctx.pairing_pow(2 * k);
    out += front * ex[maxdeg - 2 * k];
  }
  return out;
}

/// The closed combinatorial form of the same coefficient: a sum over even
/// partitions nu with coefficient 1 / prod_l m_nu(l)! and trace factors
/// tr(A^{nu_t}) / nu_t.
inline MPoly closed_form_coefficient(GFVariant variant, int N,
                                     const GenFuncContext& ctx) {
  MPoly out;
  for (int s = 0; s <= 2 * N; s += 2)
    for (const auto& nu : even_partitions(s)) {
      Rational c(1);
      std::map<int, int> mult;
      for (int l : nu.parts()) ++mult[l];
      for (const auto& [l, mm] : mult) c /= Rational(factorial(mm));
      MPoly term;
      if (variant == GFVariant::orthogonal) {
        term = ctx.pairing_pow(2 * N + 1 - s) * c *
               Rational(N % 2 ? -1 : 1);
      } else {
        term = ctx.pairing_pow(2 * N - s) * c;
      }
      for (int l : nu.parts())
        term = term * (ctx.trace_pow(l) * (Rational(1) / Rational(l)));
      out += term;
    }
  return out;
}

/// F(kappa) as a bilinear-in-(v1,v2) polynomial table: the column of the
/// source pair (c1,c2) becomes a polynomial in the Lie algebra coordinates
/// by substituting each 2-tensor block of the value.
inline std::map<std::pair<int, int>, MPoly> kappa_polynomial_table(
    const DeformationMap& kap, const GenFuncContext& ctx) {
  const int m = ctx.sp.m, n = ctx.sp.n;
  if (kap.e != 1)
    throw ShapeError("kappa_polynomial_table: valence 1 expected");
  Morphism msum(2, 2 * kap.max_degree());
  for (const auto& [key, c] : kap.terms)
    msum += sym_element(key.first, key.second, kap.rho) * c;
  SuperMap F = compose(specialize(symmetrizer(2, kap.rho, 1), m, n),
                       specialize(msum, m, n));
  std::map<std::pair<int, int>, MPoly> out;
  for (const auto& [src, col] : F.cols) {
    MPoly p;
    for (const auto& [T, c] : col) {
      MPoly term(c);
      for (size_t b = 0; b + 1 < T.size(); b += 2)
        term = term * ctx.coord(T[b], T[b + 1]);
      p += term;
    }
    if (!p.is_zero()) out.emplace(std::make_pair(src[0], src[1]), p);
  }
  return out;
}

/// The generating-function side as the same kind of table: extract the
/// bilinear (v1,v2) coefficients of the tau^{2N} coefficient and apply the
/// same source symmetrization.
inline std::map<std::pair<int, int>, MPoly> series_polynomial_table(
    GFVariant variant, int N, int rho, const GenFuncContext& ctx) {
  MPoly coeff = series_coefficient(variant, N, ctx);
  const int dim = ctx.sp.dim();
  std::map<std::pair<int, int>, MPoly> q;
  for (int a = 1; a <= dim; ++a)
    for (int b = 1; b <= dim; ++b) {
      MPoly p = coeff.linear_coefficient(
          {ctx.v1_off + a - 1, ctx.v2_off + b - 1});
      if (!p.is_zero()) q.emplace(std::make_pair(a, b), p);
    }
  SuperMap sym2 =
      specialize(symmetrizer(2, rho, 1), ctx.sp.m, ctx.sp.n);
  std::map<std::pair<int, int>, MPoly> out;
  for (const auto& [src, col] : sym2.cols) {
    MPoly p;
    for (const auto& [T, c] : col) {
      auto it = q.find({T[0], T[1]});
      if (it != q.end()) p += it->second * c;
    }
    if (!p.is_zero()) out.emplace(std::make_pair(src[0], src[1]), p);
  }
  return out;
}

/// Proportionality of two polynomial tables with one global scalar.
inline RatioTester table_ratio(
    const std::map<std::pair<int, int>, MPoly>& a,
    const std::map<std::pair<int, int>, MPoly>& b) {
  RatioTester t;
  auto feed_polys = [&](const MPoly& x, const MPoly& y) {
    for (const auto& [e, c] : x.terms())
      if (!y.terms().count(e)) t.feed(c, Rational(0));
    for (const auto& [e, c] : y.terms()) {
      auto it = x.terms().find(e);
      t.feed(it == x.terms().end() ? Rational(0) : it->second, c);
    }
  };
  for (const auto& [k, p] : a) {
    auto it = b.find(k);
    feed_polys(p, it == b.end() ? MPoly() : it->second);
  }
  for (const auto& [k, p] : b)
    if (!a.count(k)) feed_polys(MPoly(), p);
  return t;
}

}  // namespace ospbw
