#pragma once

#include "prismlab/fgl/fgl.hpp"
#include "prismlab/qhopf/b0.hpp"
#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/prec.hpp"
#include "prismlab/ringcore/report.hpp"
#include "prismlab/ringcore/series.hpp"
#include "prismlab/witt/witt.hpp"

#include <string>
#include <vector>

namespace prismlab {

// B0 (x) Q as a Witt coefficient ring. The truncation travels with the sample
// element, so constants live in the same quotient.
template <>
struct ring_traits<B0Q> {
  static constexpr bool torsion_free = true;
  static B0Q zero(const B0Q& l) { return B0Q(l.trunc()); }
  static B0Q one(const B0Q& l) { return B0Q(QPoly(Q(1)), l.trunc()); }
  static B0Q from_int(const B0Q& l, const Z& n) { return B0Q(QPoly(Q(n)), l.trunc()); }
  static bool is_zero(const B0Q& x) { return x.is_zero(); }
  static bool ghost_ok(const B0Q&) { return true; }
  static B0Q div_exact(const B0Q& x, const Z& d) { return x.scaled(QPoly(Q(1) / Q(d))); }
};

inline Series scale_by(const Series& x, const Q& s) { return x.scaled(s); }
inline B0Q scale_by(const B0Q& x, const Q& s) { return x.scaled(QPoly(s)); }

inline bool is_p_integral(const Series& s, long p) {
  for (const auto& [m, c] : s.terms())
    if (denom(c) % p == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// B-hat: B0 modulo (h^{n_q}, c_k for k > d), coefficients exact in Q and read
// modulo p^{n_p} only when compared. The quotient is a delta-ring: phi maps
// c_k to Phi_p(q)^k c_k and h^{n_q} into itself, and B0 modulo it is
// torsion-free (the ideal is spanned by basis elements h^a c_k).

struct BHat {
  long p = 2;
  int n_p = 4;
  int n_q = 4;
  int d = 4;  // t-degree

  B0Trunc trunc() const { return {n_q - 1, d}; }
  Z modulus() const { return ipow(Z(p), static_cast<unsigned>(n_p)); }

  B0Q one() const { return B0Q(QPoly(Q(1)), trunc()); }
  B0Q q() const { return B0Q::q(trunc()); }
  B0Q h() const { return B0Q::h(trunc()); }
  B0Q t() const { return B0Q::t(trunc()); }
  B0Q c(int k) const { return B0Q::c(k, trunc()); }

  // Phi_p(q) = 1 + q + ... + q^{p-1}.
  B0Q phi_p_q() const {
    QPoly q = QPoly::var() + QPoly(Q(1)), s;
    for (long i = 0; i < p; ++i) s += q.pow(static_cast<unsigned>(i));
    return B0Q(s, trunc());
  }

  // phi(q) = q^p, phi(t) = Phi_p(q) t.
  B0Q phi(const B0Q& a) const { return adams(static_cast<unsigned>(p), a); }

  // Coefficients reduced into [0, p^{n_p}); NonIntegralCoefficient if some
  // denominator is divisible by p.
  B0Q reduce(const B0Q& a) const {
    const Z m = modulus();
    B0Q r(a.trunc());
    for (const auto& [k, v] : a.coords()) {
      QPoly pv;
      for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
        Z red;
        if (!try_reduce(v.coeffs()[j], m, red))
          throw NonIntegralCoefficient("coefficient " + v.coeffs()[j].str() + " of h^" + std::to_string(j) + "*c" +
                                       std::to_string(k) + " is not p-integral");
        pv.set(j, Q(red));
      }
      r.set(k, pv);
    }
    return r;
  }
  bool congruent(const B0Q& a, const B0Q& b) const { return reduce(a - b).is_zero(); }
};

// ---------------------------------------------------------------------------
// G_Q points: (q, x) with 1 + Phi_p([q]) x Teichmuller. Generic over a
// torsion-free coefficient ring R (Series or B0Q).

template <class R>
struct GQPoint {
  R q;
  Witt<R> x;
};

// Phi_p([q]) = [1] + [q] + ... + [q^{p-1}] in W_L(R).
template <class R>
Witt<R> phi_p_teich(const R& q, long p, int L) {
  auto s = witt_zero(p, L, q);
  R qi = ring_traits<R>::one(q);
  for (long i = 0; i < p; ++i) {
    s = s + teichmuller(p, L, qi);
    qi = qi * q;
  }
  return s;
}

template <class R>
GQPoint<R> gq_unit_point(const R& q, long p, int L) {
  return {q, witt_zero(p, L, q)};
}

// sigma(q) = (q, [q] - 1).
template <class R>
GQPoint<R> sigma(const R& q, long p, int L) {
  return {q, teichmuller(p, L, q) - witt_one(p, L, q)};
}

template <class R>
GQPoint<R> gq_op(const GQPoint<R>& a, const GQPoint<R>& b) {
  if (!(a.q == b.q)) throw RingMismatch("gq_op: points over different q");
  auto ph = phi_p_teich(a.q, a.x.p(), a.x.length());
  return {a.q, a.x + b.x + ph * a.x * b.x};
}

// The unit u with [u] = 1 + Phi_p([q]) x.
template <class R>
R gq_to_unit(const GQPoint<R>& a) {
  long p = a.x.p();
  int L = a.x.length();
  auto w = witt_one(p, L, a.q) + phi_p_teich(a.q, p, L) * a.x;
  for (int i = 1; i < L; ++i)
    if (!ring_traits<R>::is_zero(w[i])) throw NotTeichmuller("component " + std::to_string(i) + " of 1 + Phi_p([q])x");
  return w[0];
}

template <class R>
bool gq_is_member(const GQPoint<R>& a) {
  try {
    gq_to_unit(a);
    return true;
  } catch (const NotTeichmuller&) {
    return false;
  }
}

// F(q, x) = (q^p, F x), one Witt component shorter.
template <class R>
GQPoint<R> gq_frobenius(const GQPoint<R>& a) {
  return {ring_pow(a.q, static_cast<unsigned long>(a.x.p())), frobenius(a.x)};
}

template <class R>
GQPoint<R> gq_scalar(long r, const GQPoint<R>& a) {
  if (r < 0) throw RingMismatch("gq_scalar: negative multiple");
  auto acc = gq_unit_point(a.q, a.x.p(), a.x.length()), b = a;
  for (unsigned long e = static_cast<unsigned long>(r); e; e >>= 1ul) {
    if (e & 1ul) acc = gq_op(acc, b);
    if (e > 1) b = gq_op(b, b);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// q-exponential q^{pt/(q-1)} two ways.

struct QExpResult {
  B0Q value;
  int last_exact = 0;   // last n with a nonzero term in the quotient
  int last_mod = 0;     // last n with a term nonzero mod p^{n_p}
};

// sum_n c_n Phi_p(q)^n: the universal pairing at z = Phi_p(q).
inline QExpResult q_exponential(const BHat& B) {
  QExpResult r{B.one(), 0, 0};
  B0Q ph = B.phi_p_q(), pw = B.one();
  for (int n = 1; n <= B.d; ++n) {
    pw = pw * ph;
    B0Q term = B.c(n) * pw;
    if (term.is_zero()) continue;
    r.last_exact = n;
    if (!B.reduce(term).is_zero()) r.last_mod = n;
    r.value = r.value + term;
  }
  return r;
}

// sum_n alpha_n, alpha_n = pt(pt - h)...(pt - (n-1)h)/n!. In the quotient
// alpha_n only involves c_k with k >= n/p, so the sum is finite; the loop
// runs to max_terms and demands a quiet window of p terms at the end.
inline QExpResult q_exp_alt(const BHat& B, int max_terms = -1) {
  if (max_terms < 0) max_terms = static_cast<int>(B.p) * (B.d + 2);
  QExpResult r{B.one(), 0, 0};
  B0Q alpha = B.one();
  B0Q pt = scale_by(B.t(), Q(B.p)), h = B.h();
  for (int n = 1; n <= max_terms; ++n) {
    alpha = scale_by(alpha * (pt - scale_by(h, Q(n - 1))), Q(1, n));
    if (alpha.is_zero()) continue;
    r.last_exact = n;
    if (!B.reduce(alpha).is_zero()) r.last_mod = n;
    r.value = r.value + alpha;
  }
  if (r.last_exact > max_terms - static_cast<int>(B.p))
    throw TailNotStabilized("alpha_n still nonzero at n = " + std::to_string(r.last_exact));
  return r;
}

// ---------------------------------------------------------------------------
// The canonical point over B-hat.

struct CanonicalPoint {
  B0Q X;   // q^{pt/(q-1)}
  B0Q x0;  // (X - 1)/Phi_p(q)
  GQPoint<B0Q> point;
};

inline CanonicalPoint canonical_point(const BHat& B, int L) {
  if (L < 1 || L > 4) throw PrecisionExhausted("canonical_point needs 1 <= L <= 4");
  B0Q ph = B.phi_p_q(), pw = B.one();
  B0Q x0(B.trunc());
  for (int n = 1; n <= B.d; ++n) {
    x0 = x0 + B.c(n) * pw;
    pw = pw * ph;
  }
  B0Q X = q_exponential(B).value;
  auto x = joyal_lift(x0, B.p, L, [&](const B0Q& a) { return B.phi(a); });
  return {X, x0, {B.q(), x}};
}

inline Report canonical_point_check(const BHat& B, int L) {
  Report rep;
  auto cp = canonical_point(B, L);
  std::string at = "p=" + std::to_string(B.p) + " L=" + std::to_string(L) + " n_q=" + std::to_string(B.n_q) +
                   " d=" + std::to_string(B.d);
  rep.add("Phi_p(q) x_0 = X - 1", B.phi_p_q() * cp.x0 == cp.X - B.one());
  bool integral = true;
  for (const auto& c : cp.point.x.coords()) integral = integral && is_p_integral(c, B.p);
  rep.add("Witt components of x are p-integral", integral);
  auto lhs = witt_one(B.p, L, B.one()) + phi_p_teich(B.q(), B.p, L) * cp.point.x;
  auto rhs = teichmuller(B.p, L, cp.X);
  rep.add("1 + Phi_p([q]) x = [X] exactly", lhs == rhs, at);
  bool modp = integral;
  for (int i = 0; modp && i < L; ++i) modp = B.congruent(lhs[i], rhs[i]);
  rep.add("1 + Phi_p([q]) x = [X] mod p^n_p", modp, "n_p=" + std::to_string(B.n_p));
  B0Q fX = B.phi(cp.X), Xp = cp.X.pow(static_cast<unsigned>(B.p));
  rep.add("phi(X) = X^p", fX == Xp);
  return rep;
}

// delta(X) = 0 for X = 1 + Phi_p(q) x_0, plus the two fibres.
inline Report r0_relation_check(const BHat& B) {
  Report rep;
  auto cp = canonical_point(B, 1);
  B0Q d = scale_by(B.phi(cp.X) - cp.X.pow(static_cast<unsigned>(B.p)), Q(1, B.p));
  rep.add("delta(1 + Phi_p(q) x_0) = 0", d.is_zero());
  // t = 0: every c_k with k >= 1 vanishes.
  rep.add("t=0 fibre: X = 1", cp.X.coord(0) == QPoly(Q(1)));
  // q = 1: X = exp(pt) in Q[t]/t^{d+1}.
  auto c = make_ctx({"t"}, [&](SeriesCtx& s) { s.cap[0] = B.d; });
  Series X1(c), pt = Series::var(c, "t", Q(B.p));
  for (const auto& [k, v] : cp.X.coords()) {
    Series ck(c, 1);
    for (int i = 0; i < k; ++i) ck = ck * Series::var(c, "t");
    X1 += ck.scaled(v[0] / Q(factorial(static_cast<unsigned>(k))));
  }
  Series e = series_exp(pt);
  rep.add("q=1 fibre: X = exp(pt)", X1 == e);
  rep.add("q=1 fibre: exp(p pt) = X^p", series_exp(pt.scaled(Q(B.p))) == e.pow(static_cast<unsigned>(B.p)));
  return rep;
}

// ---------------------------------------------------------------------------
// q-logarithm.

namespace detail {

// Coefficients of h/log(1+h) up to h^K.
inline std::vector<Q> h_over_log(int K) {
  std::vector<Q> l, b{Q(1)};
  for (int k = 0; k <= K; ++k) l.push_back(Q(k % 2 ? -1 : 1, k + 1));
  for (int k = 1; k <= K; ++k) {
    Q s = 0;
    for (int j = 1; j <= k; ++j) s -= l[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    b.push_back(s);
  }
  return b;
}

template <class R>
R nil_log(const R& u, int max_terms = 4096) {
  R w = u - ring_traits<R>::one(u), pw = w, acc = ring_traits<R>::zero(u);
  for (int n = 1; n <= max_terms; ++n) {
    if (ring_traits<R>::is_zero(pw)) return acc;
    acc = acc + scale_by(pw, Q(n % 2 ? 1 : -1, n));
    pw = pw * w;
  }
  throw DoesNotConverge("u - 1 is not nilpotent at this truncation");
}

}  // namespace detail

// log_q(u) with u^p = gq_to_unit(a): (q-1)/log(q) * log(u^p)/p, computed
// exactly in the truncated rational ring and certified p-integral.
template <class R>
R q_log(const GQPoint<R>& a, int max_terms = 4096) {
  const long p = a.x.p();
  R U = gq_to_unit(a);
  R lg = scale_by(detail::nil_log(U, max_terms), Q(1, p));
  R h = a.q - ring_traits<R>::one(a.q);
  std::vector<R> hp{ring_traits<R>::one(h)};
  while (!ring_traits<R>::is_zero(hp.back())) {
    if (static_cast<int>(hp.size()) > max_terms) throw DoesNotConverge("q - 1 is not nilpotent at this truncation");
    hp.push_back(hp.back() * h);
  }
  auto b = detail::h_over_log(static_cast<int>(hp.size()));
  R fac = ring_traits<R>::zero(h);
  for (std::size_t k = 0; k < hp.size(); ++k) fac = fac + scale_by(hp[k], b[k]);
  R r = fac * lg;
  if (!is_p_integral(r, p)) throw NonIntegralCoefficient("q_log value is not p-integral");
  return r;
}

// Q[h]/h^{n_q} as a Series ring and q = 1 + h in it.
inline CtxPtr qseries_ctx(int n_q) {
  return make_ctx({"h"}, [&](SeriesCtx& c) { c.cap[0] = n_q - 1; });
}
inline Series q_of(const CtxPtr& c) { return Series(c, 1) + Series::var(c, "h"); }

// ---------------------------------------------------------------------------
// Z_p^x action on H_Q: (q, z) -> (q^n, h_n(z, q)/h_n(1, q)).

struct HQPoint {
  Series qm1;  // q - 1
  Series z;
};

namespace detail {
// h_n(z, q) = ((1 + (q-1) z)^n - 1)/(q-1), as a polynomial.
inline Series h_n(long n, const Series& qm1, const Series& z) {
  Series r(z.ctx()), hk(z.ctx(), 1), zk = z;
  for (long k = 1; k <= n; ++k) {
    r += (hk * zk).scaled(Q(binom(n, static_cast<unsigned>(k))));
    hk = hk * qm1;
    zk = zk * z;
  }
  return r;
}

// Inverse of c (1 + w) with w nilpotent.
inline Series unit_inverse(const Series& u, int max_terms = 4096) {
  Q c = u.constant_term();
  if (c == 0) throw DoesNotConverge("not a unit");
  Series w = u.scaled(Q(1) / c) - Series(u.ctx(), 1), acc(u.ctx(), 1), pw(u.ctx(), 1);
  for (int k = 1; k <= max_terms; ++k) {
    pw = -(pw * w);
    if (pw.is_zero()) return acc.scaled(Q(1) / c);
    acc += pw;
  }
  throw DoesNotConverge("unit inverse did not terminate");
}
}  // namespace detail

inline HQPoint zp_action(long n, const HQPoint& a, long p) {
  if (n <= 0 || n % p == 0) throw ConfigError("Z_p^x action needs a positive n prime to p");
  Series one(a.z.ctx(), 1);
  Series qn1 = (one + a.qm1).pow(static_cast<unsigned>(n)) - one;
  Series zn = detail::h_n(n, a.qm1, a.z) * detail::unit_inverse(detail::h_n(n, a.qm1, one));
  return {qn1, zn};
}

// sigma^*(q, z) = 1 + (q - 1) z.
inline Series sigma_star(const HQPoint& a) { return Series(a.z.ctx(), 1) + a.qm1 * a.z; }

inline CtxPtr hq_ctx(int n_q, int n_z) {
  return make_ctx({"h", "z"}, [&](SeriesCtx& c) {
    c.cap[0] = n_q - 1;
    c.cap[1] = n_z - 1;
  });
}

inline Report equivariance_report(long n, long p, int n_q, int n_z) {
  Report rep;
  auto c = hq_ctx(n_q, n_z);
  HQPoint u{Series::var(c, "h"), Series::var(c, "z")};
  auto a = zp_action(n, u, p);
  std::string at = "n=" + std::to_string(n) + " p=" + std::to_string(p);
  rep.add("sigma^*(n.(q,z)) = sigma^*(q,z)^n", sigma_star(a) == sigma_star(u).pow(static_cast<unsigned>(n)), at);
  rep.add("action is p-integral", is_p_integral(a.z, p));
  auto id = zp_action(1, u, p);
  rep.add("1 acts trivially", id.qm1 == u.qm1 && id.z == u.z);
  for (long m = 1; m <= 4; ++m) {
    if (m % p == 0) continue;
    auto mn = zp_action(m, a, p), direct = zp_action(m * n, u, p);
    rep.add("m.(n.x) = (mn).x", mn.qm1 == direct.qm1 && mn.z == direct.z, "m=" + std::to_string(m));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Hodge-Tate specialization: over Z_p[zeta], lambda(z) = (zeta-1)^{-1} log(1 + (zeta-1) z).

namespace detail {
// lambda truncated at z^N: sum_{n<=N} (-1)^{n-1} (zeta-1)^{n-1} z^n / n.
inline Series ht_lambda(const Series& z, const Series& e, int N) {
  Series r(z.ctx()), ek(z.ctx(), 1), zk = z;
  for (int n = 1; n <= N; ++n) {
    r += (ek * zk).scaled(Q(n % 2 ? 1 : -1, n));
    ek = ek * e;
    zk = zk * z;
  }
  return r;
}
}  // namespace detail

struct HodgeTateInfo {
  int terms = 0;  // terms of lambda(1) summed before the tail was certified
};

inline Report hodge_tate_check(long p, int n_p, int N, HodgeTateInfo* info = nullptr) {
  Report rep;
  Prec pr;
  pr.p = p;
  pr.n_p = n_p;
  pr.n_z = N;
  auto c = coeff_ctx(CoeffKind::Cyclotomic, pr, {"z1", "z2", "z"});
  Series one(c, 1), e = Series::var(c, "zeta") - one;
  auto z1 = Series::var(c, "z1"), z2 = Series::var(c, "z2"), z = Series::var(c, "z");
  Series lam = detail::ht_lambda(z, e, N);
  Series lhs = lam.compose("z", z1 + z2 + e * z1 * z2);
  Series rhs = lam.compose("z", z1) + lam.compose("z", z2);
  rep.add("lambda(z1*z2) = lambda(z1) + lambda(z2)", lhs == rhs, "order " + std::to_string(N));
  rep.add("lambda = z + ...", lam.coeff({{"z", 1}}) == 1 && lam.coeff({{"z", 0}}) == 0);
  rep.add("lambda is p-integral", is_p_integral(lam, p));

  // lambda(1) = sum (-1)^{n-1} e^{n-1}/n. Since e^{p-1} lies in p Z_p[zeta],
  // the n-th term has valuation >= floor((n-1)/(p-1)) - v_p(n).
  auto tail_ok = [&](int n) {
    for (int m = n; m <= 4 * n + 16; ++m) {
      int loss = 0;
      for (int mm = m; mm % p == 0; mm /= static_cast<int>(p)) ++loss;
      if ((m - 1) / static_cast<int>(p - 1) - loss < n_p) return false;
    }
    return true;
  };
  Series s(c), ek(c, 1);
  int n = 1;
  for (; !tail_ok(n); ++n) {
    s += ek.scaled(Q(n % 2 ? 1 : -1, n));
    ek = ek * e;
    if (n > 100000) throw DoesNotConverge("lambda(1) tail bound not reached");
  }
  if (info) info->terms = n - 1;
  Series red = clear_denominators(s, pr.modulus());
  rep.add("lambda(1) = 0 mod p^n_p", red.is_zero(), "p=" + std::to_string(p) + " n_p=" + std::to_string(n_p) + ", " +
                                                        std::to_string(n - 1) + " terms");
  return rep;
}

// ---------------------------------------------------------------------------
// Polynomial identities around s_Q and phi_Q.

inline Report qprism_identities(long p) {
  Report rep;
  ZPoly q = ZPoly::var() + ZPoly(Z(1));
  ZPoly ph = cyclotomic<Z>(static_cast<int>(p)).compose(q);
  rep.add("q^p - 1 = (q-1) Phi_p(q)", q.pow(static_cast<unsigned>(p)) - ZPoly(Z(1)) == (q - ZPoly(Z(1))) * ph);

  // [p]_H(z) for H = z1 + z2 + h z1 z2 at z = Phi_p(q) is (q^{p^2}-1)/(q-1).
  auto cz = fgl_ctx(static_cast<int>(p) + 1, {"h"});
  auto H = FormalGroupLaw::H_law(Series::var(cz, "h"));
  auto flat = make_ctx({"z", "h"});
  Series ps = n_series(H, p).recast(flat);
  Series hq = Series::var(flat, "h"), qs = Series(flat, 1) + hq;
  Series phs(flat);
  for (long i = 0; i < p; ++i) phs += qs.pow(static_cast<unsigned>(i));
  Series lhs = ps.compose("z", phs);
  Series sum_q(flat);  // (q^{p^2}-1)/(q-1) = 1 + q + ... + q^{p^2-1}
  for (long i = 0; i < p * p; ++i) sum_q += qs.pow(static_cast<unsigned>(i));
  rep.add("[p]_H(Phi_p(q)) = (q^{p^2}-1)/(q-1)", lhs == sum_q);
  Series phqp(flat), qp_s = qs.pow(static_cast<unsigned>(p));
  for (long i = 0; i < p; ++i) phqp += qp_s.pow(static_cast<unsigned>(i));
  rep.add("Phi_p(q) Phi_p(q^p) = (q^{p^2}-1)/(q-1)", phs * phqp == sum_q);

  // Phi_p(1 + h) is Eisenstein in h: so Phi_p(q) cuts out Z_p[zeta].
  const ZPoly& e = ph;
  bool eis = e.lead() == 1 && e[0] == p && vp(e[0], p) == 1;
  for (int i = 0; i < e.degree(); ++i) eis = eis && e[static_cast<std::size_t>(i)] % p == 0;
  rep.add("Phi_p(1+h) is Eisenstein", eis);
  return rep;
}

}  // namespace prismlab
