#pragma once

#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/modint.hpp"
#include "prismlab/ringcore/numbers.hpp"
#include "prismlab/ringcore/ring_traits.hpp"
#include "prismlab/ringcore/series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace prismlab {

// p-typical Witt vector of length L with coordinates x_0..x_{L-1} in R.
template <class R>
class Witt {
 public:
  Witt() = default;
  Witt(long p, std::vector<R> x) : p_(p), x_(std::move(x)) {}

  long p() const { return p_; }
  int length() const { return static_cast<int>(x_.size()); }
  const R& operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  R& operator[](int i) { return x_[static_cast<std::size_t>(i)]; }
  const std::vector<R>& coords() const { return x_; }
  const R& like() const { return x_.front(); }

  friend bool operator==(const Witt& a, const Witt& b) { return a.p_ == b.p_ && a.x_ == b.x_; }
  friend bool operator!=(const Witt& a, const Witt& b) { return !(a == b); }

 private:
  long p_ = 2;
  std::vector<R> x_;
};

template <class R>
std::string witt_str(const Witt<R>& w) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < w.length(); ++i) {
    if (i) os << ", ";
    if constexpr (std::is_same_v<R, Series>)
      os << w[i].str();
    else
      os << w[i];
  }
  os << ")";
  return os.str();
}

template <class R>
Witt<R> witt_zero(long p, int L, const R& like) {
  return Witt<R>(p, std::vector<R>(static_cast<std::size_t>(L), ring_traits<R>::zero(like)));
}

template <class R>
Witt<R> teichmuller(long p, int L, const R& a) {
  auto w = witt_zero(p, L, a);
  w[0] = a;
  return w;
}

template <class R>
Witt<R> witt_one(long p, int L, const R& like) {
  return teichmuller(p, L, ring_traits<R>::one(like));
}

// V(x) = (0, x_0, ..., x_{L-2}) at the same length.
template <class R>
Witt<R> verschiebung(const Witt<R>& w) {
  auto r = witt_zero(w.p(), w.length(), w.like());
  for (int i = 1; i < w.length(); ++i) r[i] = w[i - 1];
  return r;
}

template <class R>
Witt<R> truncate(const Witt<R>& w, int L) {
  std::vector<R> x(w.coords().begin(), w.coords().begin() + L);
  return Witt<R>(w.p(), std::move(x));
}

template <class R, class F>
auto map_coeffs(const Witt<R>& w, F f) {
  using S = decltype(f(w[0]));
  std::vector<S> x;
  for (const auto& c : w.coords()) x.push_back(f(c));
  return Witt<S>(w.p(), std::move(x));
}

// ---------------------------------------------------------------- ghost side

template <class R>
std::vector<R> ghost(const Witt<R>& w) {
  const long p = w.p();
  std::vector<R> g;
  for (int n = 0; n < w.length(); ++n) {
    R s = ring_traits<R>::zero(w.like());
    Z pi = 1;
    for (int i = 0; i <= n; ++i, pi *= p)
      s = s + ring_traits<R>::from_int(w.like(), pi) * ring_pow(w[i], static_cast<unsigned long>(ipow64(p, n - i)));
    g.push_back(s);
  }
  return g;
}

// Inverse of ghost over a torsion-free ring; NonIntegralGhost when a
// coordinate would need a denominator p.
template <class R>
Witt<R> from_ghost(long p, const std::vector<R>& g) {
  std::vector<R> x;
  Z pn = 1;
  for (std::size_t n = 0; n < g.size(); ++n, pn *= p) {
    R s = g[n];
    Z pi = 1;
    for (std::size_t i = 0; i < n; ++i, pi *= p)
      s = s - ring_traits<R>::from_int(g[n], pi) * ring_pow(x[i], static_cast<unsigned long>(ipow64(p, static_cast<unsigned>(n - i))));
    x.push_back(n == 0 ? s : ring_traits<R>::div_exact(s, pn));
  }
  return Witt<R>(p, std::move(x));
}

// ------------------------------------------------------- universal polynomials

enum class WittOp { Add, Mul, Neg, Frob };

// Integer polynomial in a_0..a_3 (slots 0..3) and b_0..b_3 (slots 4..7).
struct WittPoly {
  struct Term {
    Mono e;
    Z c;
    long c_small;  // valid when fits
    bool small;
  };
  std::vector<Term> terms;
  std::array<int, kMaxVars> max_exp{};
};

struct WittTable {
  long p;
  int L;
  WittOp op;
  std::vector<WittPoly> comp;  // component n of the result
};

namespace detail {

inline WittPoly to_witt_poly(const Series& s) {
  WittPoly P;
  for (const auto& [m, c] : s.terms()) {
    if (!is_integer(c)) throw NonIntegralGhost("universal polynomial has coefficient " + c.str());
    Z z = numer(c);
    bool small = z >= Z(-(1ll << 62)) && z <= Z(1ll << 62);
    P.terms.push_back({m, z, small ? static_cast<long>(z) : 0, small});
    for (int i = 0; i < kMaxVars; ++i) P.max_exp[i] = std::max<int>(P.max_exp[i], m[i]);
  }
  return P;
}

inline WittTable build_table(WittOp op, long p, int L) {
  if (L > 4) throw BoundExceeded("universal Witt tables support L <= 4");
  auto ctx = make_ctx({"a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"});
  const int La = op == WittOp::Frob ? L + 1 : L;
  if (La > 4) throw BoundExceeded("universal Frobenius table supports L <= 3 outputs");
  std::vector<Series> a, b;
  for (int i = 0; i < La; ++i) {
    a.push_back(Series::var(ctx, "a" + std::to_string(i)));
    b.push_back(Series::var(ctx, "b" + std::to_string(i)));
  }
  auto ga = ghost(Witt<Series>(p, a)), gb = ghost(Witt<Series>(p, b));
  std::vector<Series> g;
  for (int n = 0; n < L; ++n) {
    switch (op) {
      case WittOp::Add: g.push_back(ga[n] + gb[n]); break;
      case WittOp::Mul: g.push_back(ga[n] * gb[n]); break;
      case WittOp::Neg: g.push_back(-ga[n]); break;
      case WittOp::Frob: g.push_back(ga[n + 1]); break;
    }
  }
  auto x = from_ghost(p, g);
  WittTable T{p, L, op, {}};
  for (int n = 0; n < L; ++n) T.comp.push_back(to_witt_poly(x[n]));
  return T;
}

}  // namespace detail

// Universal polynomials for op at (p, L), computed once through ghost
// arithmetic over Q[a, b] and cached. For Frob the table maps W_{L+1} to W_L.
inline const WittTable& witt_universal(WittOp op, long p, int L) {
  static std::mutex mu;
  static std::map<std::tuple<int, long, int>, std::shared_ptr<const WittTable>> cache;
  auto key = std::make_tuple(static_cast<int>(op), p, L);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto t = std::make_shared<const WittTable>(detail::build_table(op, p, L));
  std::lock_guard<std::mutex> lk(mu);
  auto [it, fresh] = cache.emplace(key, t);
  return *it->second;
}

template <class R>
R eval_witt_poly(const WittPoly& P, const std::array<const R*, kMaxVars>& v, const R& like) {
  std::array<std::vector<R>, kMaxVars> pw;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!P.max_exp[i]) continue;
    pw[i].push_back(ring_traits<R>::one(like));
    for (int e = 1; e <= P.max_exp[i]; ++e) pw[i].push_back(pw[i].back() * *v[i]);
  }
  R acc = ring_traits<R>::zero(like);
  for (const auto& t : P.terms) {
    R m = [&] {
      if constexpr (std::is_same_v<R, ModInt>)
        if (t.small) return ModInt(static_cast<std::int64_t>(t.c_small), like.modulus());
      return ring_traits<R>::from_int(like, t.c);
    }();
    for (int i = 0; i < kMaxVars; ++i)
      if (t.e[i]) m = m * pw[i][t.e[i]];
    acc = acc + m;
  }
  return acc;
}

enum class WittBackend { Auto, Ghost, Universal };

template <class R>
bool use_ghost(const R& like, WittBackend be) {
  if (be == WittBackend::Ghost) return true;
  if (be == WittBackend::Universal) return false;
  return ring_traits<R>::ghost_ok(like);
}

namespace detail {

template <class R>
Witt<R> universal_apply(WittOp op, const Witt<R>& a, const Witt<R>* b, int outL) {
  const auto& T = witt_universal(op, a.p(), outL);
  std::array<const R*, kMaxVars> v{};
  for (int i = 0; i < kMaxVars; ++i) v[i] = &a[0];
  for (int i = 0; i < std::min(4, a.length()); ++i) v[i] = &a[i];
  if (b)
    for (int i = 0; i < std::min(4, b->length()); ++i) v[4 + i] = &(*b)[i];
  std::vector<R> x;
  for (int n = 0; n < outL; ++n) x.push_back(eval_witt_poly(T.comp[n], v, a.like()));
  return Witt<R>(a.p(), std::move(x));
}

template <class R>
void check_pair(const Witt<R>& a, const Witt<R>& b) {
  if (a.p() != b.p() || a.length() != b.length()) throw RingMismatch("Witt vectors of different shape");
}

}  // namespace detail

template <class R>
Witt<R> witt_add(const Witt<R>& a, const Witt<R>& b, WittBackend be = WittBackend::Auto) {
  detail::check_pair(a, b);
  if (use_ghost(a.like(), be)) {
    auto ga = ghost(a), gb = ghost(b);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = ga[i] + gb[i];
    return from_ghost(a.p(), ga);
  }
  return detail::universal_apply(WittOp::Add, a, &b, a.length());
}

template <class R>
Witt<R> witt_mul(const Witt<R>& a, const Witt<R>& b, WittBackend be = WittBackend::Auto) {
  detail::check_pair(a, b);
  if (use_ghost(a.like(), be)) {
    auto ga = ghost(a), gb = ghost(b);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = ga[i] * gb[i];
    return from_ghost(a.p(), ga);
  }
  return detail::universal_apply(WittOp::Mul, a, &b, a.length());
}

template <class R>
Witt<R> witt_neg(const Witt<R>& a, WittBackend be = WittBackend::Auto) {
  if (use_ghost(a.like(), be)) {
    auto ga = ghost(a);
    for (auto& g : ga) g = ring_traits<R>::zero(g) - g;
    return from_ghost(a.p(), ga);
  }
  if (a.p() != 2) {
    auto r = a;
    for (int i = 0; i < r.length(); ++i) r[i] = ring_traits<R>::zero(a[i]) - a[i];
    return r;
  }
  return detail::universal_apply(WittOp::Neg, a, static_cast<const Witt<R>*>(nullptr), a.length());
}

template <class R>
Witt<R> witt_sub(const Witt<R>& a, const Witt<R>& b, WittBackend be = WittBackend::Auto) {
  return witt_add(a, witt_neg(b, be), be);
}

template <class R>
Witt<R> operator+(const Witt<R>& a, const Witt<R>& b) { return witt_add(a, b); }
template <class R>
Witt<R> operator-(const Witt<R>& a, const Witt<R>& b) { return witt_sub(a, b); }
template <class R>
Witt<R> operator-(const Witt<R>& a) { return witt_neg(a); }
template <class R>
Witt<R> operator*(const Witt<R>& a, const Witt<R>& b) { return witt_mul(a, b); }

template <class R>
Witt<R> witt_pow(const Witt<R>& a, unsigned long e, WittBackend be = WittBackend::Auto) {
  auto r = witt_one(a.p(), a.length(), a.like()), x = a;
  while (e) {
    if (e & 1ul) r = witt_mul(r, x, be);
    e >>= 1ul;
    if (e) x = witt_mul(x, x, be);
  }
  return r;
}

// n * 1 in W_L(R): integer Witt coordinates come from the ghost vector (n, n, ...).
template <class R>
Witt<R> witt_from_int(long p, int L, const R& like, const Z& n) {
  auto w = from_ghost(p, std::vector<Z>(static_cast<std::size_t>(L), n));
  return map_coeffs(w, [&](const Z& c) { return ring_traits<R>::from_int(like, c); });
}

// Witt Frobenius W_L -> W_{L-1}: ghost(F w)_n = ghost(w)_{n+1}.
template <class R>
Witt<R> frobenius(const Witt<R>& w, WittBackend be = WittBackend::Auto) {
  if (w.length() < 2) throw PrecisionExhausted("Frobenius needs length >= 2");
  if (use_ghost(w.like(), be)) {
    auto g = ghost(w);
    g.erase(g.begin());
    return from_ghost(w.p(), g);
  }
  return detail::universal_apply(WittOp::Frob, w, static_cast<const Witt<R>*>(nullptr), w.length() - 1);
}

// In characteristic p the Frobenius is x -> (x_0^p, x_1^p, ...) at full length.
template <class R>
Witt<R> frobenius_charp(const Witt<R>& w) {
  auto r = w;
  for (int i = 0; i < r.length(); ++i) r[i] = ring_pow(w[i], static_cast<unsigned long>(w.p()));
  return r;
}

// ------------------------------------------------------------ delta structure

// Integral elements of a rational ring; other rings have nothing to check.
inline bool is_integral(const Z&) { return true; }
inline bool is_integral(const Q& q) { return is_integer(q); }
inline bool is_integral(const Series& s) {
  for (const auto& [m, c] : s.terms())
    if (!is_integer(c)) return false;
  return true;
}
template <class R>
bool is_integral(const R&) {
  return true;
}

// delta(x) = (phi(x) - x^p)/p; NotADeltaRing if the division leaves the
// integral lattice.
template <class R, class Phi>
R delta(const R& x, long p, Phi phi) {
  R fx = phi(x);
  try {
    R d = ring_traits<R>::div_exact(fx - ring_pow(x, static_cast<unsigned long>(p)), Z(p));
    if (is_integral(x) && is_integral(fx) && !is_integral(d)) throw NonIntegralGhost("delta(x) not integral");
    return d;
  } catch (const NonIntegralGhost& e) {
    throw NotADeltaRing(std::string("phi(x) - x^p not divisible by p: ") + e.what());
  }
}

// Buium-Joyal coordinates (b, delta b, delta^2 b, ...).
template <class R, class Phi>
std::vector<R> bj_coords(const R& b, long p, int L, Phi phi) {
  std::vector<R> v{b};
  for (int i = 1; i < L; ++i) v.push_back(delta(v.back(), p, phi));
  return v;
}

// The delta-ring map B -> W(B): the Witt vector with ghost components
// (b, phi b, phi^2 b, ...).
template <class R, class Phi>
Witt<R> joyal_lift(const R& b, long p, int L, Phi phi) {
  std::vector<R> g{b};
  for (int i = 1; i < L; ++i) g.push_back(phi(g.back()));
  try {
    auto w = from_ghost(p, g);
    bool in = true, out = true;
    for (const auto& x : g) in = in && is_integral(x);
    for (const auto& x : w.coords()) out = out && is_integral(x);
    if (in && !out) throw NonIntegralGhost("Witt coordinates leave the integral lattice");
    return w;
  } catch (const NonIntegralGhost& e) {
    throw NotADeltaRing(std::string("Frobenius lift does not define a delta-structure: ") + e.what());
  }
}

}  // namespace prismlab
