#pragma once

#include "prismlab/fgl/fgl.hpp"
#include "prismlab/qhopf/b0.hpp"
#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/report.hpp"
#include "prismlab/ringcore/series.hpp"
#include "prismlab/witt/bigwitt.hpp"

#include <string>
#include <utility>
#include <vector>

namespace prismlab {

// R-type: f(y1 y2) = f(y1) f(y2), stored in s = y - 1, so the equation reads
// f(s1) f(s2) = f(s1 + s2 + s1 s2). G-type: f(z1) f(z2) = f(z1 + z2 + (q-1) z1 z2).
// Both live in an fgl_ctx; the series variable is "z".
enum class HomTag { R, G };

struct MultHomSeries {
  Series f;
  HomTag tag;
  Series qm1;  // q - 1 (the constant 1 for R-type)
  int N;

  Series defect() const {
    auto c = f.ctx();
    auto z1 = Series::var(c, "z1"), z2 = Series::var(c, "z2");
    Series lhs = f.compose("z", z1) * f.compose("z", z2);
    Series rhs = f.compose("z", z1 + z2 + qm1 * z1 * z2);
    return lhs - rhs;
  }
  bool satisfies_equation() const { return defect().is_zero(); }
};

// sum c_n z^n = (1 + h z)^{t/h} over B0 (x) Q = Q[h, t].
inline MultHomSeries universal_pairing(int N) {
  auto c = fgl_ctx(N, {"h", "t"});
  Series f(c), zn(c, 1);
  auto z = Series::var(c, "z");
  for (int n = 0; n <= N; ++n) {
    f += c_poly(c, n) * zn;
    zn = zn * z;
  }
  return {f, HomTag::G, Series::var(c, "h"), N};
}

// (1 + (q-1) z)^u for integers q, u: the point t = (q-1) u of the universal
// pairing. Negative u is allowed.
inline MultHomSeries pairing_at(const Z& q, long u, int N, HomTag tag = HomTag::G) {
  auto c = fgl_ctx(N, {});
  Series f(c);
  auto z = Series::var(c, "z");
  Z h = q - 1;
  for (int n = 0; n <= N; ++n) f += z.pow(static_cast<unsigned>(n)).scaled(Q(binom(u, static_cast<unsigned>(n)) * ipow(h, static_cast<unsigned>(n))));
  return {f, tag, Series(c, Q(h)), N};
}

// R-point y^u: f(s) = (1 + s)^u.
inline MultHomSeries r_point(long u, int N) { return pairing_at(Z(2), u, N, HomTag::R); }

// f |-> f(1 - z) for R-type (s = -z).
inline BigWitt embed_R(const MultHomSeries& f) {
  if (f.tag != HomTag::R) throw RingMismatch("embed_R needs an R-type series");
  return BigWitt(f.f.compose("z", -Series::var(f.f.ctx(), "z")), f.N);
}

inline BigWitt embed_G_I(const MultHomSeries& f) {
  return BigWitt(f.f.compose("z", -Series::var(f.f.ctx(), "z")), f.N);
}

// f(z/(z-1)) with z/(z-1) = -(z + z^2 + ...).
inline BigWitt embed_G_II(const MultHomSeries& f) {
  auto c = f.f.ctx();
  auto z = Series::var(c, "z");
  Series y(c), zk = z;
  for (int k = 1; k <= f.N; ++k) {
    y -= zk;
    zk = zk * z;
  }
  return BigWitt(f.f.compose("z", y), f.N);
}

inline BigWitt teich(const Series& a, int N) { return BigWitt::teichmuller(a, N); }

// 1 + [q] + ... + [q]^{m-1}; the Witt sum is the series product.
inline BigWitt q_number_witt(const Series& q, int m, int N) {
  BigWitt r(Series(q.ctx(), 1), N);
  for (int i = 0; i < m; ++i) r = r + teich(q.pow(static_cast<unsigned>(i)), N);
  return r;
}

namespace detail {
inline bool agree_to(const BigWitt& a, const BigWitt& b, int M) {
  return BigWitt(a.series(), M) == BigWitt(b.series(), M);
}
inline int eigen_order(const BigWitt& w, int m) {
  int M = w.order() / m;
  if (M < 1) throw PrecisionExhausted("F_" + std::to_string(m) + " needs order >= " + std::to_string(m));
  return M;
}
}  // namespace detail

// F_m(w) = [q-1]^{m-1} w, compared to order floor(N/m).
inline bool eigencheck_I(const BigWitt& w, const Series& qm1, int m) {
  int M = detail::eigen_order(w, m);
  BigWitt rhs = teich(qm1.pow(static_cast<unsigned>(m - 1)), w.order()) * w;
  return detail::agree_to(w.frobenius(m), rhs, M);
}

// F_m(w) = (1 + [q] + ... + [q]^{m-1}) w.
inline bool eigencheck_II(const BigWitt& w, const Series& q, int m) {
  int M = detail::eigen_order(w, m);
  BigWitt rhs = q_number_witt(q, m, w.order()) * w;
  return detail::agree_to(w.frobenius(m), rhs, M);
}

// F_n(w) = w for n = 1..nmax.
inline bool is_frobenius_fixed(const BigWitt& w, int nmax) {
  for (int n = 2; n <= nmax && n <= w.order(); ++n)
    if (!detail::agree_to(w.frobenius(n), w, w.order() / n)) return false;
  return true;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw EigenCheckFailed(what);
}

// Psi_n(w, q) = ([(q^n - 1)/(q - 1)] w, q^n) on the first realization.
inline std::pair<BigWitt, Series> psi_I(int n, const BigWitt& w, const Series& q) {
  Series qn(q.ctx());
  for (int i = 0; i < n; ++i) qn += q.pow(static_cast<unsigned>(i));
  return {teich(qn, w.order()) * w, q.pow(static_cast<unsigned>(n))};
}

// Psi_n(w, q) = (F_n w, q^n) on the second realization.
inline std::pair<BigWitt, Series> psi_II(int n, const BigWitt& w, const Series& q) {
  return {w.frobenius(n), q.pow(static_cast<unsigned>(n))};
}

// Every z-coefficient of w lies in B0 (c-basis coordinates in Z[h]).
inline bool b0_certificate(const BigWitt& w) {
  for (int k = 0; k <= w.order(); ++k)
    if (!is_integral(b0_from_series(coeff_in(w.series(), "z", k).recast(make_ctx({"h", "t"}))))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Coordinate ring of W^F in Buium-Joyal coordinates x_0, x_1, ...

inline CtxPtr wf_ctx(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  return make_ctx(names);
}

// Normal form under x_n^p -> x_n - p x_{n+1}: all exponents < p.
inline Series wf_ring_reduce(const Series& expr, long p, long max_steps = 1000000) {
  auto c = expr.ctx();
  Series out(c), work = expr;
  long steps = 0;
  while (!work.is_zero()) {
    auto [m, coef] = *work.terms().begin();
    work -= Series::monomial(c, m, coef);
    int i = -1;
    for (int j = 0; j < c->nvars(); ++j)
      if (m[j] >= p) {
        i = j;
        break;
      }
    if (i < 0) {
      out += Series::monomial(c, m, coef);
      continue;
    }
    if (i + 1 >= c->nvars()) throw BoundExceeded("rewrite of x" + std::to_string(i) + "^p needs x" + std::to_string(i + 1));
    if (++steps > max_steps) throw BoundExceeded("rewrite did not terminate within step bound");
    Mono mm = m;
    mm[i] = static_cast<std::uint16_t>(mm[i] - p);
    Series rep = Series::var(c, c->names[i]) - Series::var(c, c->names[i + 1]).scaled(Q(p));
    work += Series::monomial(c, mm, coef) * rep;
  }
  return out;
}

// F-fixed point of W(Z) with x_0 = a: x_{n+1} = (x_n - x_n^p)/p.
inline std::vector<Z> wf_point(long p, const Z& a, int k) {
  std::vector<Z> x{a};
  while (static_cast<int>(x.size()) < k) {
    Z y = x.back() - ipow(x.back(), static_cast<unsigned>(p));
    x.push_back(y / p);
  }
  return x;
}

inline Q wf_eval(const Series& f, const std::vector<Z>& x) {
  Q s = 0;
  for (const auto& [m, c] : f.terms()) {
    Q t = c;
    for (int i = 0; i < f.ctx()->nvars(); ++i) t *= Q(ipow(x[i], m[i]));
    s += t;
  }
  return s;
}

// ---------------------------------------------------------------------------
// The multiplication-by-m map on the universal pairing.

// c_n(m t, h) as elements of B0: the image of c_n under t -> m t.
inline B0Q b0_times_m(int m, int n) {
  auto c = make_ctx({"h", "t"});
  Series s = c_poly(c, n).compose("t", Series::var(c, "t").scaled(Q(m)));
  return b0_from_series(s);
}

inline Report m_series_identity(int m, int N) {
  Report rep;
  auto c = fgl_ctx(N, {"h", "t"});
  auto z = Series::var(c, "z"), h = Series::var(c, "h"), t = Series::var(c, "t");
  Series v(c);
  for (int k = 1; k <= m; ++k)
    v += (h * z).pow(static_cast<unsigned>(k - 1)).scaled(Q(binom(static_cast<long>(m), static_cast<unsigned>(k))));
  Series lhs(c), rhs(c);
  Series mt = t.scaled(Q(m));
  for (int n = 0; n <= N; ++n) {
    lhs += c_poly(c, n).compose("t", mt) * z.pow(static_cast<unsigned>(n));
    rhs += c_poly(c, n) * (v * z).pow(static_cast<unsigned>(n));
  }
  rep.add("sum c_n(mt) z^n = (1+hvz)^{t/h}", lhs == rhs, "m=" + std::to_string(m) + ", order " + std::to_string(N));
  bool integral = true;
  for (int n = 0; n <= N; ++n)
    if (!is_integral(b0_times_m(m, n))) integral = false;
  rep.add("c_n(mt) in B0", integral);
  auto H = FormalGroupLaw::H_law(h);
  rep.add("[m]_H(z) = v z", n_series(H, m) == v * z);
  return rep;
}

// z = ((q^n - 1)/(q - 1)) y from y1 + y2 + (q^n - 1) y1 y2 to z1 + z2 + (q - 1) z1 z2.
inline Report hom_pullback_check(int n) {
  Report rep;
  auto c = make_ctx({"q", "y1", "y2"});
  auto q = Series::var(c, "q"), y1 = Series::var(c, "y1"), y2 = Series::var(c, "y2");
  Series one(c, 1), qn(c);
  for (int i = 0; i < n; ++i) qn += q.pow(static_cast<unsigned>(i));
  Series src = y1 + y2 + (q.pow(static_cast<unsigned>(n)) - one) * y1 * y2;
  Series lhs = qn * src;
  Series a = qn * y1, b = qn * y2;
  Series rhs = a + b + (q - one) * a * b;
  rep.add("[n]_q y is a hom", lhs == rhs, "n=" + std::to_string(n));
  return rep;
}

}  // namespace prismlab
