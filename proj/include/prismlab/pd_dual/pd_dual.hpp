#pragma once

#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/numbers.hpp"
#include "prismlab/ringcore/report.hpp"
#include "prismlab/ringcore/rng.hpp"
#include "prismlab/ringcore/series.hpp"
#include "prismlab/ringcore/upoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace prismlab {

// ---------------------------------------------------------------------------
// PD hull of the unit in G_m: x^{-k} * sum a_n gamma_n, gamma_n = (x-1)^n/n!.

struct PDElem {
  int unit_power = 0;    // k in the x^{-k} prefactor
  std::vector<Z> coords; // coords[n] on gamma_n, n = 0..order
  int order = 0;

  Z operator[](int n) const { return n < static_cast<int>(coords.size()) ? coords[n] : Z(0); }
  friend bool operator==(const PDElem& a, const PDElem& b) {
    if (a.unit_power != b.unit_power) return false;
    int o = std::min(a.order, b.order);
    for (int n = 0; n <= o; ++n)
      if (a[n] != b[n]) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (int n = 0; n <= order; ++n) {
      if ((*this)[n] == 0) continue;
      if (!s.empty()) s += " + ";
      s += (*this)[n].str() + "*g" + std::to_string(n);
    }
    if (s.empty()) s = "0";
    if (unit_power) s = "x^" + std::to_string(-unit_power) + "*(" + s + ")";
    return s + " + O(" + std::to_string(order + 1) + ")";
  }
};

inline PDElem pd_gamma(int n, int order) {
  PDElem e;
  e.order = order;
  e.coords.assign(order + 1, Z(0));
  if (n <= order) e.coords[n] = 1;
  return e;
}

// f is a polynomial in t = x-1, read modulo t^{order+1}.
inline PDElem pd_normalize(const QPoly& f, int unit_power, int order) {
  PDElem e;
  e.unit_power = unit_power;
  e.order = order;
  e.coords.assign(order + 1, Z(0));
  for (int n = 0; n <= order; ++n) {
    Q c = f[n] * Q(factorial(n));
    if (!is_integer(c))
      throw NotPD("n!*a_n = " + c.str() + " at n = " + std::to_string(n));
    e.coords[n] = numer(c);
  }
  return e;
}

inline QPoly pd_to_t(const PDElem& e) {
  std::vector<Q> v;
  for (int n = 0; n <= e.order; ++n) v.emplace_back(Q(e[n]) / Q(factorial(n)));
  return QPoly(std::move(v));
}

// gamma_m gamma_n = C(m+n, n) gamma_{m+n}
inline PDElem pd_mul(const PDElem& a, const PDElem& b) {
  PDElem r;
  r.unit_power = a.unit_power + b.unit_power;
  r.order = std::min(a.order, b.order);
  r.coords.assign(r.order + 1, Z(0));
  for (int m = 0; m <= r.order; ++m) {
    if (a[m] == 0) continue;
    for (int n = 0; m + n <= r.order; ++n)
      if (b[n] != 0) r.coords[m + n] += a[m] * b[n] * binom(static_cast<long>(m + n), n);
  }
  return r;
}

// x^m = sum C(m,n) n! gamma_n, any integer m.
inline PDElem pd_x_power(long m, int order) {
  PDElem e;
  e.order = order;
  for (int n = 0; n <= order; ++n) e.coords.push_back(binom(m, n) * factorial(n));
  return e;
}

// Absorb the x^{-k} prefactor into the gamma coordinates.
inline PDElem pd_expand_unit(const PDElem& e) {
  if (e.unit_power == 0) return e;
  PDElem base = e;
  base.unit_power = 0;
  return pd_mul(pd_x_power(-e.unit_power, e.order), base);
}

// ---------------------------------------------------------------------------
// Distributions on Gamma in the basis e_n = (delta_1 - delta_0)^n / n!.

struct DistrElem {
  std::vector<Z> e;  // e[n], n = 0..order
  int order = 0;     // filtration order; coordinates above it are dropped

  Z operator[](int n) const { return n < static_cast<int>(e.size()) ? e[n] : Z(0); }
  friend bool operator==(const DistrElem& a, const DistrElem& b) {
    int o = std::min(a.order, b.order);
    for (int n = 0; n <= o; ++n)
      if (a[n] != b[n]) return false;
    return true;
  }
  std::string str() const {
    std::string s;
    for (int n = 0; n <= order; ++n) {
      if ((*this)[n] == 0) continue;
      if (!s.empty()) s += " + ";
      s += (*this)[n].str() + "*e" + std::to_string(n);
    }
    return (s.empty() ? "0" : s) + " + O(" + std::to_string(order + 1) + ")";
  }
};

inline DistrElem e_basis(int n, int order) {
  DistrElem d;
  d.order = order;
  d.e.assign(order + 1, Z(0));
  if (n <= order) d.e[n] = 1;
  return d;
}

// delta_m = (1 + E)^m with E^n = n! e_n; negative m uses the expansion of
// delta_1^{-1} = sum (-1)^n n! e_n, cut at the filtration order.
inline DistrElem delta_to_e(long m, int order) {
  DistrElem d;
  d.order = order;
  for (int n = 0; n <= order; ++n) d.e.push_back(binom(m, n) * factorial(n));
  return d;
}

// e_m e_n = C(m+n, m) e_{m+n}
inline DistrElem distr_mul(const DistrElem& a, const DistrElem& b) {
  DistrElem r;
  r.order = std::min(a.order, b.order);
  r.e.assign(r.order + 1, Z(0));
  for (int m = 0; m <= r.order; ++m) {
    if (a[m] == 0) continue;
    for (int n = 0; m + n <= r.order; ++n)
      if (b[n] != 0) r.e[m + n] += a[m] * b[n] * binom(static_cast<long>(m + n), m);
  }
  return r;
}

inline DistrElem distr_add(const DistrElem& a, const DistrElem& b) {
  DistrElem r;
  r.order = std::min(a.order, b.order);
  for (int n = 0; n <= r.order; ++n) r.e.push_back(a[n] + b[n]);
  return r;
}

// Finite combination sum c_m delta_m.
inline DistrElem from_deltas(const std::map<long, Z>& c, int order) {
  DistrElem r;
  r.order = order;
  r.e.assign(order + 1, Z(0));
  for (const auto& [m, k] : c) {
    DistrElem d = delta_to_e(m, order);
    for (auto& x : d.e) x *= k;
    r = distr_add(r, d);
  }
  return r;
}

namespace detail {
inline Q forward_difference_at0(const QPoly& g, int n) {
  Q s = 0;
  for (int r = 0; r <= n; ++r) s += Q(((n - r) % 2 ? -1 : 1) * binom(static_cast<long>(n), r)) * g.eval(Q(r));
  return s;
}
}  // namespace detail

// Value of a distribution on g in Z[u]: e_n(g) = (Delta^n g)(0) / n!.
inline Q distr_apply(const DistrElem& a, const QPoly& g) {
  if (g.degree() > a.order)
    throw DegreeExceedsFiltration("deg g = " + std::to_string(g.degree()) + " > order " + std::to_string(a.order));
  Q s = 0;
  for (int n = 0; n <= a.order && n <= g.degree(); ++n)
    if (a[n] != 0) s += Q(a[n]) * detail::forward_difference_at0(g, n) / Q(factorial(n));
  return s;
}

// <a (x) b, G> for G(u1, u2) given as a callable on integer points, with
// G of degree <= deg in each variable.
template <class F>
Q distr_apply2(const DistrElem& a, const DistrElem& b, const F& G, int deg) {
  Q s = 0;
  for (int i = 0; i <= std::min(a.order, deg); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= std::min(b.order, deg); ++j) {
      if (b[j] == 0) continue;
      Q d = 0;
      for (int r = 0; r <= i; ++r)
        for (int q = 0; q <= j; ++q)
          d += Q(((i - r + j - q) % 2 ? -1 : 1) * binom(static_cast<long>(i), r) * binom(static_cast<long>(j), q)) *
               G(r, q);
      s += Q(a[i] * b[j]) * d / Q(factorial(i) * factorial(j));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// The pairing x^u = sum_n f_{0,n-1}(u) gamma_n.

inline ZPoly f_ab(long a, long b) {
  ZPoly r(Z(1));
  for (long i = a; i <= b; ++i) r *= ZPoly(std::vector<Z>{Z(-i), Z(1)});
  return r;
}

// Entry n is the coefficient of gamma_n in x^u, i.e. f_{0,n-1}(u).
inline std::vector<ZPoly> pairing_series(int N) {
  std::vector<ZPoly> v;
  for (int n = 0; n <= N; ++n) v.push_back(f_ab(0, n - 1));
  return v;
}

// Coefficient pairing of x^m against f: <delta_m, gamma_n> = C(m,n), read off
// the e-expansion of delta_m.
inline Z pair_xu(long m, const PDElem& f) {
  PDElem g = pd_expand_unit(f);
  DistrElem d = delta_to_e(m, g.order);
  Z s = 0;
  for (int n = 0; n <= g.order; ++n) s += g[n] * (d[n] / factorial(n));
  return s;
}

// ---------------------------------------------------------------------------
// (log x)^k / k! in the gamma basis.

inline PDElem log_sharp_power(int k, int N) {
  if (k < 1) throw ConfigError("log_sharp_power needs k >= 1");
  std::vector<Q> lc(N + 1, Q(0));
  for (int n = 1; n <= N; ++n) lc[n] = Q(n % 2 ? 1 : -1, n);
  QPoly L(std::move(lc));
  QPoly P = L.pow(static_cast<unsigned>(k), N).scaled(Q(1) / Q(factorial(k)));
  return pd_normalize(P, 0, N);
}

// ---------------------------------------------------------------------------
// mu_p and the rescaled group.

namespace detail {
// Z_(p)[x]/(x^p - 1) with rational entries.
inline std::vector<Q> cyc_mul(const std::vector<Q>& a, const std::vector<Q>& b) {
  std::size_t p = a.size();
  std::vector<Q> r(p, Q(0));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) r[(i + j) % p] += a[i] * b[j];
  return r;
}
}  // namespace detail

// f^p in pI for random f in I = (x-1) of Z[x]/(x^p - 1). Membership in pI:
// every coefficient divisible by p and the coefficient sum zero.
inline Report mu_p_pd_check(long p, int trials, CounterRng& rng) {
  Report rep;
  long bad = 0;
  std::string first;
  for (int t = 0; t < trials; ++t) {
    std::vector<Q> g(p), xm1(p, Q(0));
    for (auto& c : g) c = rng.range(-9, 9);
    xm1[0] = -1;
    xm1[1 % p] += 1;
    auto f = detail::cyc_mul(xm1, g);
    std::vector<Q> fp(p, Q(0));
    fp[0] = 1;
    for (long i = 0; i < p; ++i) fp = detail::cyc_mul(fp, f);
    Q sum = 0;
    bool div = true;
    for (const auto& c : fp) {
      sum += c;
      if (numer(c) % p != 0) div = false;
    }
    if (!div || sum != 0) {
      ++bad;
      if (first.empty()) first = "trial " + std::to_string(t);
    }
  }
  rep.add("f^p in pI", bad == 0,
          std::to_string(trials) + " trials, p=" + std::to_string(p) + (bad ? ", first failure " + first : ""));
  return rep;
}

// Coefficients m_i with ((1+t)^p - 1)/p = sum_{i=1}^p m_i gamma_i(t).
inline std::vector<Z> gsharp_m(long p) {
  std::vector<Z> m;
  for (long i = 1; i <= p; ++i) {
    Z c = binom(p, static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(i));
    if (c % p != 0) throw ReductionFailure("m_" + std::to_string(i) + " is not integral");
    m.push_back(c / p);
  }
  return m;
}

inline QPoly gsharp_z(long p) {
  std::vector<Q> v(p + 1, Q(0));
  for (long i = 1; i <= p; ++i) v[i] = Q(binom(p, static_cast<unsigned>(i)), Z(p));
  return QPoly(std::move(v));
}

// a_e(z) = z^e / p^{v_p(e!)}, which equals prod_i gamma^{i}(z)^{m_i} for the
// base-p digits m_i of e (gamma(z) = z^p/p).
inline QPoly gsharp_a(long p, int e) {
  return gsharp_z(p).pow(static_cast<unsigned>(e)).scaled(Q(1) / Q(ipow(Z(p), vp(factorial(e), p))));
}

// f in Q[t] written as sum_{j<p} t^j A_j(z) with A_j in Z_(p)[a_0(z), a_1(z), ...].
// Key (j, e) carries the coefficient of t^j a_e(z). Triangular in the t-degree:
// the top term t^d / p^{v_p(d!)} has the same leading coefficient as
// t^{d mod p} a_{d div p}(z).
inline std::map<std::pair<int, int>, Q> gsharp_reduce(long p, QPoly f) {
  std::map<std::pair<int, int>, Q> out;
  while (!f.is_zero()) {
    int d = f.degree();
    int j = d % static_cast<int>(p), e = d / static_cast<int>(p);
    Q c = f.lead() * Q(ipow(Z(p), vp(factorial(d), p)));
    if (vp(c, p) < 0)
      throw ReductionFailure("coefficient " + c.str() + " at t^" + std::to_string(d) + " is not p-integral");
    QPoly term = (QPoly::monomial(j) * gsharp_a(p, e)).scaled(c);
    f -= term;
    if (f.degree() >= d) throw ReductionFailure("leading term did not cancel at degree " + std::to_string(d));
    out[{j, e}] += c;
  }
  return out;
}

inline QPoly gsharp_recombine(long p, const std::map<std::pair<int, int>, Q>& red) {
  QPoly r;
  for (const auto& [k, c] : red) r += (QPoly::monomial(k.first) * gsharp_a(p, k.second)).scaled(c);
  return r;
}

// (a) the m_i are integers; (b) random sum r_d gamma_d(t), d <= N, reduces
// with p-integral coefficients and recombines exactly.
inline Report gsharp_comparison(long p, int N, int trials, CounterRng& rng) {
  Report rep;
  std::string ms;
  bool m_ok = true;
  try {
    for (const auto& m : gsharp_m(p)) ms += (ms.empty() ? "" : ",") + m.str();
  } catch (const ReductionFailure& ex) {
    m_ok = false;
    ms = ex.what();
  }
  rep.add("m_i integral", m_ok, "m=(" + ms + ")");
  long bad = 0;
  std::string first;
  for (int t = 0; t < trials; ++t) {
    std::vector<Q> v(N + 1, Q(0));
    for (int d = 0; d <= N; ++d) v[d] = Q(rng.range(-5, 5)) / Q(factorial(d));
    QPoly f(std::move(v));
    try {
      auto red = gsharp_reduce(p, f);
      if (gsharp_recombine(p, red) != f) {
        ++bad;
        if (first.empty()) first = "recombination mismatch in trial " + std::to_string(t);
      }
    } catch (const ReductionFailure& ex) {
      ++bad;
      if (first.empty()) first = ex.what();
    }
  }
  rep.add("B generated by 1..t^{p-1} over A", bad == 0,
          std::to_string(trials) + " elements of degree <= " + std::to_string(N) + (bad ? ", " + first : ""));
  return rep;
}

// ---------------------------------------------------------------------------
// The exact sequence mu_p -> G_m^# -> G_a^# and its dual.

// Valuation floor for s(n,k) gamma_n(x-1) on mu_p: (x-1)^n lies in
// p^{floor(n/p)} A and s(n,k)/n! loses at most v_p(k!) + k floor(log_p n).
inline int mu_p_log_terms(long p, int k, int n_p) {
  auto bound = [&](int n) {
    int lg = 0;
    for (long q = p; q <= n; q *= p) ++lg;
    return n / static_cast<int>(p) - vp(factorial(k), p) - k * lg;
  };
  for (int M = 1;; ++M) {
    bool ok = true;
    for (int n = M + 1; n <= 4 * M + static_cast<int>(p * p); ++n)
      if (bound(n) < n_p) {
        ok = false;
        break;
      }
    if (ok) return M;
  }
}

inline Report exact_sequence_check(long p, int n_p, int N) {
  Report rep;
  {
    auto cx = make_ctx({"u", "t"}, [&](SeriesCtx& c) { c.cap[1] = N; });
    Series u = Series::var(cx, "u"), t = Series::var(cx, "t");
    Series xu(cx, 1), term(cx, 1);
    for (int n = 1; n <= N; ++n) {
      term = term * (u - Series(cx, n - 1)) * t;
      term = term.scaled(Q(1, n));
      xu += term;
    }
    Series logx = padic_log(Series(cx, 1) + t);
    bool a1 = padic_log(xu) == u * logx;
    bool a2 = series_exp(u * logx) == xu;
    rep.add("log(x^u) = u log x", a1, "to order " + std::to_string(N));
    rep.add("x^u = exp(u log x)", a2, "to order " + std::to_string(N));
  }
  {
    // On A = Z_p[x]/(x^p-1): gamma_n(x-1) is p-integral and
    // (log x)^k/k! = sum s(n,k) gamma_n(x-1) vanishes mod p^{n_p}.
    bool integral = true, kills = true;
    std::string det;
    for (int k = 1; k <= 3; ++k) {
      int M = mu_p_log_terms(p, k, n_p);
      std::vector<Q> xm1(p, Q(0)), g(p, Q(0)), acc(p, Q(0));
      xm1[0] = -1;
      xm1[1 % p] += 1;
      g[0] = 1;
      std::vector<Q> lc(M + 1, Q(0));
      for (int n = 1; n <= M; ++n) lc[n] = Q(n % 2 ? 1 : -1, n);
      QPoly Lk = QPoly(lc).pow(static_cast<unsigned>(k), M).scaled(Q(1) / Q(factorial(k)));
      for (int n = 1; n <= M; ++n) {
        g = detail::cyc_mul(g, xm1);
        for (auto& c : g) c /= n;
        for (const auto& c : g)
          if (vp(c, p) < 0) integral = false;
        Q s = Lk[n] * Q(factorial(n));
        for (long i = 0; i < p; ++i) acc[i] += s * g[i];
      }
      for (const auto& c : acc)
        if (vp(c, p) < n_p) kills = false;
      det += (det.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + " with " + std::to_string(M) + " terms";
    }
    rep.add("gamma_n(x-1) integral on mu_p", integral);
    rep.add("log kills mu_p mod p^n", kills, det);
  }
  {
    auto cx = make_ctx({"u", "v"}, [&](SeriesCtx& c) {
      c.cap[0] = N;
      c.cap[1] = N;
    });
    Series E = series_exp(Series::var(cx, "u") * Series::var(cx, "v"));
    bool ok = true;
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= N; ++n)
        if (E.coeff({{"u", m}, {"v", n}}) * Q(factorial(n)) != Q(m == n ? 1 : 0)) ok = false;
    rep.add("exp(uv) pairs u^m with gamma_n(v) dually", ok);
  }
  return rep;
}

// <ab, g> = <a (x) b, g(u1 + u2)> on random group-like combinations.
inline Report bialgebra_duality_check(int order, int trials, CounterRng& rng) {
  Report rep;
  long bad = 0;
  for (int t = 0; t < trials; ++t) {
    std::map<long, Z> ca, cb;
    for (int i = 0; i < 3; ++i) {
      ca[rng.range(-3, 3)] += rng.range(-4, 4);
      cb[rng.range(-3, 3)] += rng.range(-4, 4);
    }
    DistrElem a = from_deltas(ca, order), b = from_deltas(cb, order);
    std::vector<Q> gc;
    int deg = static_cast<int>(rng.range(0, order));
    for (int i = 0; i <= deg; ++i) gc.emplace_back(rng.range(-5, 5));
    QPoly g(std::move(gc));
    Q lhs = distr_apply(distr_mul(a, b), g);
    Q rhs = distr_apply2(a, b, [&](int r, int q) { return g.eval(Q(r + q)); }, g.degree());
    if (lhs != rhs) ++bad;
  }
  rep.add("<ab,g> = <a(x)b, g(u1+u2)>", bad == 0, std::to_string(trials) + " trials");
  return rep;
}

}  // namespace prismlab
