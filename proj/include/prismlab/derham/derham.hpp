#pragma once

#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/modint.hpp"
#include "prismlab/ringcore/numbers.hpp"
#include "prismlab/ringcore/report.hpp"
#include "prismlab/ringcore/rng.hpp"
#include "prismlab/ringcore/series.hpp"
#include "prismlab/witt/witt.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace prismlab {

// G_dR: Witt vectors x with 1 + p x Teichmuller, law x1 + x2 + p x1 x2.
// Coefficient rings are p-nilpotent: ModInt (Z/p^N) or a Series context
// with modulus p (an F_p-algebra).

template <class R>
Witt<R> witt_scalar(long p, int L, const R& like, const Z& n) {
  return witt_from_int(p, L, like, n);
}

// Smallest e with p^e = 0 in W_L(R); every Z_p-scalar then acts through
// Z/p^e.
template <class R>
int witt_exponent(long p, int L, const R& like, int cap = 256) {
  Z pe = 1;
  for (int e = 0; e <= cap; ++e, pe *= p) {
    auto w = witt_scalar(p, L, like, pe);
    bool zero = true;
    for (const auto& c : w.coords()) zero = zero && ring_traits<R>::is_zero(c);
    if (zero) return e;
  }
  throw DoesNotConverge("p is not nilpotent on W_L of this ring");
}

template <class R>
bool witt_is_zero(const Witt<R>& w) {
  for (const auto& c : w.coords())
    if (!ring_traits<R>::is_zero(c)) return false;
  return true;
}

template <class R>
bool is_teichmuller(const Witt<R>& w) {
  for (int i = 1; i < w.length(); ++i)
    if (!ring_traits<R>::is_zero(w[i])) return false;
  return true;
}

template <class R>
Witt<R> gdr_op(const Witt<R>& a, const Witt<R>& b) {
  auto pw = witt_scalar(a.p(), a.length(), a.like(), Z(a.p()));
  return a + b + pw * a * b;
}

template <class R>
bool gdr_is_member(const Witt<R>& x) {
  auto pw = witt_scalar(x.p(), x.length(), x.like(), Z(x.p()));
  return is_teichmuller(witt_one(x.p(), x.length(), x.like()) + pw * x);
}

// ---------------------------------------------------------------------------
// One-variable series with p-integral coefficients evaluated in the Witt
// ring by summing c_k x^k. A term vanishes once x^k = 0 or v_p(c_k) reaches
// the exponent of W_L(R); `tail_val(k)` must be a lower bound for v_p(c_m),
// m >= k (or -1 when no such bound exists).

template <class R>
Witt<R> witt_series_eval(const std::function<Q(int)>& coef, const std::function<int(int)>& tail_val, const Witt<R>& x,
                         int max_terms = 4096) {
  const long p = x.p();
  const int L = x.length();
  const int E = witt_exponent(p, L, x.like());
  const Z pe = ipow(Z(p), static_cast<unsigned>(E));
  auto acc = witt_zero(p, L, x.like()), xk = x;
  for (int k = 1; k <= max_terms; ++k) {
    if (witt_is_zero(xk)) return acc;
    if (tail_val(k) >= E) return acc;
    Z c;
    if (!try_reduce(coef(k), pe, c)) throw NonIntegralCoefficient("series coefficient " + coef(k).str() + " at k = " + std::to_string(k));
    if (c != 0) acc = acc + witt_scalar(p, L, x.like(), c) * xk;
    xk = xk * x;
  }
  throw DoesNotConverge("argument not nilpotent within " + std::to_string(max_terms) + " terms");
}

namespace detail {
inline int min_tail(int k, const std::function<int(int)>& v) {
  // v is eventually increasing; scan a window that dominates log_p growth.
  int m = v(k);
  for (int j = k + 1; j <= 4 * k + 64; ++j) m = std::min(m, v(j));
  return m;
}
}  // namespace detail

// f(x) = p^{-1} log(1 + p x) = sum (-p)^{k-1} x^k / k.
template <class R>
Witt<R> f_log(const Witt<R>& x) {
  const long p = x.p();
  auto coef = [p](int k) { return Q(ipow(Z(-p), static_cast<unsigned>(k - 1))) / Q(k); };
  auto val = [p](int k) { return k - 1 - vp(Z(k), p); };
  return witt_series_eval<R>(coef, [&](int k) { return detail::min_tail(k, val); }, x);
}

// W^{F=p} membership: F y = p y (at length L-1).
template <class R>
bool is_f_eq_p(const Witt<R>& y) {
  auto py = witt_scalar(y.p(), y.length(), y.like(), Z(y.p())) * y;
  return frobenius(y) == truncate(py, y.length() - 1);
}

// g(y) = (exp(p y) - 1)/p = sum p^{k-1} y^k / k!. For p = 2 the coefficients
// do not tend to 0, so convergence rests on nilpotence of y, which F y = p y
// guarantees; other arguments are refused.
template <class R>
Witt<R> g_exp(const Witt<R>& y) {
  if (!is_f_eq_p(y)) throw EigenCheckFailed("g_exp needs F y = p y");
  const long p = y.p();
  auto coef = [p](int k) { return Q(ipow(Z(p), static_cast<unsigned>(k - 1))) / Q(factorial(static_cast<unsigned>(k))); };
  auto none = [](int) { return -1; };
  return witt_series_eval<R>(coef, none, y);
}

// h(x) = ((1 + p x)^p - 1)/p = sum_{i=1}^p C(p,i) p^{i-1} x^i.
template <class R>
Witt<R> h_power(const Witt<R>& x) {
  const long p = x.p();
  auto acc = witt_zero(p, x.length(), x.like()), xi = x;
  for (long i = 1; i <= p; ++i) {
    Z c = binom(p, static_cast<unsigned>(i)) * ipow(Z(p), static_cast<unsigned>(i - 1));
    acc = acc + witt_scalar(p, x.length(), x.like(), c) * xi;
    xi = xi * x;
  }
  return acc;
}

template <class R>
Report frob_power_identity(const Witt<R>& x) {
  Report rep;
  rep.add("F x = h(x)", frobenius(x) == truncate(h_power(x), x.length() - 1));
  return rep;
}

template <class R>
Witt<R> id_minus_V(const Witt<R>& y) {
  if (!is_f_eq_p(y)) throw EigenCheckFailed("id_minus_V needs F y = p y");
  return y - verschiebung(y);
}

// (id - V)^{-1} z = z + V z + V^2 z + ... (finite at length L).
template <class R>
Witt<R> id_minus_V_inverse(const Witt<R>& z) {
  auto acc = z, vz = verschiebung(z);
  while (!witt_is_zero(vz)) {
    acc = acc + vz;
    vz = verschiebung(vz);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Sample points over Z/p^N.

// x = ([u] - 1)/p for u in 1 + p^2 Z: ghost components (u^{p^n} - 1)/p are
// congruent enough for integral Witt coordinates.
inline Witt<ModInt> gdr_point_from_unit(long p, int L, int n_p, const Z& u) {
  if ((u - 1) % (p * p) != 0) throw NotTeichmuller("u must be 1 mod p^2");
  std::vector<Z> g;
  for (int n = 0; n < L; ++n) g.push_back((ipow(u, static_cast<unsigned>(ipow64(p, n))) - 1) / p);
  auto w = from_ghost(p, g);
  auto m = static_cast<std::uint64_t>(ipow64(p, n_p));
  return map_coeffs(w, [&](const Z& c) { return ModInt(c, m); });
}

inline Witt<ModInt> gdr_random_point(long p, int L, int n_p, CounterRng& rng) {
  Z u = 1 + Z(p * p) * rng.big(ipow(Z(p), static_cast<unsigned>(n_p)));
  return gdr_point_from_unit(p, L, n_p, u);
}

// y with ghost components (w, p w, p^2 w, ...), w in p Z: a point of W^{F=p}.
inline Witt<ModInt> wfp_random_point(long p, int L, int n_p, CounterRng& rng) {
  Z w = Z(p) * rng.big(ipow(Z(p), static_cast<unsigned>(n_p)));
  std::vector<Z> g;
  Z pn = 1;
  for (int n = 0; n < L; ++n, pn *= p) g.push_back(pn * w);
  auto y = from_ghost(p, g);
  auto m = static_cast<std::uint64_t>(ipow64(p, n_p));
  return map_coeffs(y, [&](const Z& c) { return ModInt(c, m); });
}

struct DeRhamCellResult {
  int points = 0;
  Report rep;
};

// All de Rham identities at one (p, L, n_p) cell on `trials` random points.
inline DeRhamCellResult derham_cell(long p, int L, int n_p, int trials, CounterRng& rng) {
  if (L < 2) throw PrecisionExhausted("de Rham checks need L >= 2");
  DeRhamCellResult res;
  int member = 0, gf = 0, fg = 0, eig = 0, hom = 0, fh = 0, imv = 0;
  for (int i = 0; i < trials; ++i) {
    auto x = gdr_random_point(p, L, n_p, rng), x2 = gdr_random_point(p, L, n_p, rng);
    auto y = wfp_random_point(p, L, n_p, rng);
    member += gdr_is_member(x) && gdr_is_member(x2);
    auto fx = f_log(x);
    eig += is_f_eq_p(fx);
    gf += g_exp(fx) == x;
    auto gy = g_exp(y);
    fg += gdr_is_member(gy) && f_log(gy) == y;
    hom += f_log(gdr_op(x, x2)) == f_log(x) + f_log(x2);
    fh += frobenius(x) == truncate(h_power(x), L - 1);
    imv += witt_is_zero(frobenius(id_minus_V(y)));
    ++res.points;
  }
  auto tag = [&](int c) { return std::to_string(c) + "/" + std::to_string(trials); };
  res.rep.add("points lie on G_dR", member == trials, tag(member));
  res.rep.add("F f(x) = p f(x)", eig == trials, tag(eig));
  res.rep.add("g(f(x)) = x", gf == trials, tag(gf));
  res.rep.add("f(g(y)) = y and g(y) on G_dR", fg == trials, tag(fg));
  res.rep.add("f(x1 * x2) = f(x1) + f(x2)", hom == trials, tag(hom));
  res.rep.add("F x = h(x)", fh == trials, tag(fh));
  res.rep.add("F(y - V y) = 0", imv == trials, tag(imv));
  return res;
}

// ---------------------------------------------------------------------------
// Characteristic p: F_p[a]/(a^k).

inline CtxPtr charp_ctx(long p, int k) {
  return make_ctx({"a"}, [&](SeriesCtx& c) {
    c.cap[0] = k - 1;
    c.modulus = p;
  });
}

// Every Witt vector of length L over F_p[a]/(a^k).
inline std::vector<Witt<Series>> enumerate_witt(long p, int L, const CtxPtr& c) {
  const int k = c->cap[0] + 1;
  std::vector<Series> ring;
  const long total = ipow64(p, k);
  for (long idx = 0; idx < total; ++idx) {
    Series s(c);
    long r = idx;
    for (int j = 0; j < k; ++j, r /= p)
      if (r % p) s += Series::monomial(c, Mono{static_cast<std::uint16_t>(j)}, Q(r % p));
    ring.push_back(s);
  }
  std::vector<Witt<Series>> out;
  std::vector<std::size_t> pos(static_cast<std::size_t>(L), 0);
  while (true) {
    std::vector<Series> x;
    for (int i = 0; i < L; ++i) x.push_back(ring[pos[static_cast<std::size_t>(i)]]);
    out.emplace_back(p, x);
    int i = 0;
    while (i < L && ++pos[static_cast<std::size_t>(i)] == ring.size()) pos[static_cast<std::size_t>(i++)] = 0;
    if (i == L) break;
  }
  return out;
}

// Units of W(A) by the geometric series; 1 + w with w nilpotent.
template <class R>
Witt<R> witt_unit_inverse(const Witt<R>& u, int max_terms = 4096) {
  if (!(u[0] == ring_traits<R>::one(u.like()))) throw RingMismatch("witt_unit_inverse expects 0-th component 1");
  auto one = witt_one(u.p(), u.length(), u.like());
  auto w = u - one, acc = one, wk = one;
  for (int k = 1; k <= max_terms; ++k) {
    wk = -(wk * w);
    if (witt_is_zero(wk)) return acc;
    acc = acc + wk;
  }
  throw DoesNotConverge("unit inverse did not terminate");
}

// f_naive(x) = 1 + V x.
template <class R>
Witt<R> f_naive(const Witt<R>& x) {
  return witt_one(x.p(), x.length(), x.like()) + verschiebung(x);
}

// a = b in (W^x)^{(F)}/mu_p: a b^{-1} is [zeta] with zeta^p = 1.
template <class R>
bool same_mod_mu_p(const Witt<R>& a, const Witt<R>& b) {
  auto r = a * witt_unit_inverse(b);
  return is_teichmuller(r) && ring_pow(r[0], static_cast<unsigned long>(a.p())) == ring_traits<R>::one(a.like());
}

// The mod p reduction of W^{(F)} -> (W^x)^{(F)}/mu_p, inverse of
// w -> x -> (id - V) f(x) with [w_0]/w = 1 + V x.
template <class R>
Witt<R> f_charp(const Witt<R>& z) {
  auto x = g_exp(id_minus_V_inverse(z));
  return witt_unit_inverse(f_naive(x));
}

struct DiscrepancyStats {
  int elements = 0;   // |W_L(A)|
  int kernel = 0;     // |W^{(F)}(A)|
  int literal = 0;    // f(z) = f_naive(Vz - z)
  int corrected = 0;  // f(z) = f_naive(-(id - V)^{-1} z)
};

inline Report discrepancy_check(long p, int L, int k, DiscrepancyStats* stats = nullptr) {
  Report rep;
  auto c = charp_ctx(p, k);
  auto all = enumerate_witt(p, L, c);
  auto pw = witt_scalar(p, L, Series(c, 1), Z(p));
  DiscrepancyStats st;
  st.elements = static_cast<int>(all.size());
  int eig_same = 0, lemma = 0, frob = 0, gdr = 0, fid = 0, comp = 0;
  std::vector<Witt<Series>> ker;
  for (const auto& y : all) {
    auto fy = frobenius(y);
    frob += fy == truncate(frobenius_charp(y), L - 1);
    bool f0 = witt_is_zero(frobenius_charp(y));
    // full length: over F_p the Frobenius is x -> x^p in every component
    eig_same += (frobenius_charp(y) == pw * y) == f0;
    if (f0) ker.push_back(y);
  }
  st.kernel = static_cast<int>(ker.size());
  for (const auto& x : ker) {
    lemma += witt_is_zero(pw * x) && witt_is_zero(witt_pow(x, static_cast<unsigned long>(p)));
    gdr += gdr_is_member(x);
    fid += f_log(x) == x;
    comp += id_minus_V(f_log(x)) == x - verschiebung(x);
    auto fz = f_charp(x);
    st.literal += same_mod_mu_p(fz, f_naive(verschiebung(x) - x));
    st.corrected += same_mod_mu_p(fz, f_naive(-id_minus_V_inverse(x)));
  }
  std::string at = "p=" + std::to_string(p) + " L=" + std::to_string(L) + " F_p[a]/(a^" + std::to_string(k) + ")";
  auto tag = [](int a, int b) { return std::to_string(a) + "/" + std::to_string(b); };
  rep.add("Witt F = componentwise p-th power", frob == st.elements, tag(frob, st.elements));
  rep.add("{F y = p y} = {F y = 0}", eig_same == st.elements, tag(eig_same, st.elements) + ", " + at);
  rep.add("p x = x^p = 0 on W^(F)", lemma == st.kernel, tag(lemma, st.kernel));
  rep.add("G_dR = W^(F) as sets", gdr == st.kernel, tag(gdr, st.kernel));
  rep.add("f is the identity mod p", fid == st.kernel, tag(fid, st.kernel));
  rep.add("composite G_dR -> W^(F) is id - V", comp == st.kernel, tag(comp, st.kernel));
  rep.add("f(z) = f_naive(-(id - V)^{-1} z)", st.corrected == st.kernel, tag(st.corrected, st.kernel));
  if (stats) *stats = st;
  return rep;
}

// The printed formula f(z) = f_naive(Vz - z), kept apart from the checks
// above because it does not hold for p odd (see README).
inline Report discrepancy_literal_check(long p, int L, int k) {
  Report rep;
  DiscrepancyStats st;
  discrepancy_check(p, L, k, &st);
  rep.add("f(z) = f_naive(Vz - z)", st.literal == st.kernel, std::to_string(st.literal) + "/" + std::to_string(st.kernel));
  return rep;
}

// ---------------------------------------------------------------------------
// G_eta over an F_p-algebra: law x1 + x2 + V(1) x1 x2, subgroup F x = 0.

inline Witt<Series> random_witt(long p, int L, const CtxPtr& c, CounterRng& rng) {
  const int k = c->cap[0] + 1;
  std::vector<Series> x;
  for (int i = 0; i < L; ++i) {
    Series s(c);
    for (int j = 0; j < k; ++j) s += Series::monomial(c, Mono{static_cast<std::uint16_t>(j)}, Q(rng.range(0, p - 1)));
    x.push_back(s);
  }
  return Witt<Series>(p, x);
}

inline Report g_eta_check(long p, int L, int k, int trials, CounterRng& rng) {
  Report rep;
  auto c = charp_ctx(p, k);
  Series one(c, 1);
  auto v1 = verschiebung(witt_one(p, L, one));
  int proj = 0, sub = 0, law = 0, kernel_pairs = 0;
  auto fx_full = [&](const Witt<Series>& x) { return frobenius_charp(x); };
  for (int i = 0; i < trials; ++i) {
    auto x = random_witt(p, L, c, rng);
    auto lhs = v1 * x;
    proj += lhs == verschiebung(fx_full(x));
    // V drops the top component, so V(1) x = 0 in W_L iff F x = 0 in W_{L-1}
    sub += witt_is_zero(lhs) == witt_is_zero(truncate(fx_full(x), L - 1));
    // drop low a-degrees so that every component has zero p-th power
    auto y = x, z = random_witt(p, L, c, rng);
    const int low = (k + static_cast<int>(p) - 1) / static_cast<int>(p) - 1;
    for (int j = 0; j < L; ++j) {
      y[j] = y[j] - truncate_in(y[j], "a", low);
      z[j] = z[j] - truncate_in(z[j], "a", low);
    }
    if (witt_is_zero(fx_full(y)) && witt_is_zero(fx_full(z))) {
      ++kernel_pairs;
      law += y + z + v1 * y * z == y + z;
    }
  }
  auto tag = [&](int a, int b) { return std::to_string(a) + "/" + std::to_string(b); };
  rep.add("V(1) x = V(F x)", proj == trials, tag(proj, trials));
  rep.add("{V(1) x = 0} = {F x = 0}", sub == trials, tag(sub, trials));
  rep.add("law is addition on F x = 0", law == kernel_pairs && kernel_pairs > 0, tag(law, kernel_pairs));
  return rep;
}

}  // namespace prismlab
