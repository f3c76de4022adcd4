#pragma once

#include "prismlab/intpoly/intpoly.hpp"
#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/numbers.hpp"
#include "prismlab/ringcore/series.hpp"
#include "prismlab/ringcore/upoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace prismlab {

// Optional quotient of B0 by h^{hmax+1} and by the ideal spanned by c_k,
// k > dmax (an ideal since c_m c_n only involves c_k with k >= max(m, n)).
struct B0Trunc {
  int hmax = -1;  // -1: no cap
  int dmax = -1;

  static B0Trunc tighter(const B0Trunc& a, const B0Trunc& b) {
    auto pick = [](int x, int y) { return x < 0 ? y : (y < 0 ? x : std::min(x, y)); };
    return {pick(a.hmax, b.hmax), pick(a.dmax, b.dmax)};
  }
  friend bool operator==(const B0Trunc& a, const B0Trunc& b) { return a.hmax == b.hmax && a.dmax == b.dmax; }
};

// Structure constants c_m c_n = sum_k gamma^k_{mn}(h) c_k, read off from
// (1+hz1)^{t/h} (1+hz2)^{t/h} = sum_k c_k (z1 + z2 + h z1 z2)^k: the
// coefficient of z1^m z2^n in the trinomial power is the multinomial
// k!/((k-n)!(k-m)!(m+n-k)!) times h^{m+n-k}. Cached per (m, n).
class B0StructureConstants {
 public:
  using Row = std::vector<std::pair<int, Z>>;  // (k, integer coefficient of h^{m+n-k})

  static const Row& get(int m, int n) {
    if (m > n) std::swap(m, n);
    auto& self = instance();
    std::lock_guard<std::mutex> lk(self.mu_);
    auto key = std::make_pair(m, n);
    auto it = self.cache_.find(key);
    if (it != self.cache_.end()) return *it->second;
    auto row = std::make_unique<Row>();
    for (int k = n; k <= m + n; ++k) {
      // expand (z1 + z2 + h z1 z2)^k by choosing a = k-n factors z1,
      // b = k-m factors z2 and c = m+n-k factors h z1 z2
      Z coef = factorial(static_cast<unsigned>(k)) /
               (factorial(static_cast<unsigned>(k - n)) * factorial(static_cast<unsigned>(k - m)) *
                factorial(static_cast<unsigned>(m + n - k)));
      row->emplace_back(k, coef);
    }
    auto* raw = row.get();
    self.cache_.emplace(key, std::move(row));
    return *raw;
  }

  static std::size_t cached() {
    auto& self = instance();
    std::lock_guard<std::mutex> lk(self.mu_);
    return self.cache_.size();
  }

 private:
  static B0StructureConstants& instance() {
    static B0StructureConstants s;
    return s;
  }
  std::mutex mu_;
  std::map<std::pair<int, int>, std::unique_ptr<Row>> cache_;
};

// Element sum_k P_k(h) c_k of B0, c_k = t(t-h)...(t-(k-1)h)/k!, with P_k over
// C (Z for B0 proper, Q for intermediate computations).
template <class C>
class B0 {
 public:
  using Poly = UPoly<C>;

  B0() = default;
  explicit B0(B0Trunc tr) : tr_(tr) {}
  B0(Poly constant, B0Trunc tr = {}) : tr_(tr) {  // NOLINT
    set(0, std::move(constant));
  }

  static B0 c(int k, B0Trunc tr = {}) {
    B0 r(tr);
    r.set(k, Poly(C(1)));
    return r;
  }
  static B0 t(B0Trunc tr = {}) { return c(1, tr); }
  static B0 h(B0Trunc tr = {}) { return B0(Poly::var(), tr); }
  static B0 q(B0Trunc tr = {}) { return B0(Poly::var() + Poly(C(1)), tr); }

  const std::map<int, Poly>& coords() const { return c_; }
  Poly coord(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Poly() : it->second;
  }
  const B0Trunc& trunc() const { return tr_; }
  bool is_zero() const { return c_.empty(); }
  int degree_t() const { return c_.empty() ? -1 : c_.rbegin()->first; }

  void set(int k, Poly v) {
    if (tr_.dmax >= 0 && k > tr_.dmax) return;
    if (tr_.hmax >= 0) v = v.truncated(tr_.hmax);
    if (v.is_zero())
      c_.erase(k);
    else
      c_[k] = std::move(v);
  }
  void add(int k, const Poly& v) { set(k, coord(k) + v); }

  B0 with_trunc(B0Trunc tr) const {
    B0 r(tr);
    for (const auto& [k, v] : c_) r.set(k, v);
    return r;
  }

  friend B0 operator+(const B0& a, const B0& b) {
    B0 r(B0Trunc::tighter(a.tr_, b.tr_));
    for (const auto& [k, v] : a.c_) r.add(k, v);
    for (const auto& [k, v] : b.c_) r.add(k, v);
    return r;
  }
  friend B0 operator-(const B0& a, const B0& b) { return a + (-b); }
  B0 operator-() const {
    B0 r(tr_);
    for (const auto& [k, v] : c_) r.set(k, -v);
    return r;
  }

  friend B0 operator*(const B0& a, const B0& b) {
    B0Trunc tr = B0Trunc::tighter(a.tr_, b.tr_);
    std::map<int, Poly> acc;
    for (const auto& [m, pa] : a.c_)
      for (const auto& [n, pb] : b.c_) {
        Poly ab = Poly::mul_trunc(pa, pb, tr.hmax);
        if (ab.is_zero()) continue;
        for (const auto& [k, coef] : B0StructureConstants::get(m, n)) {
          if (tr.dmax >= 0 && k > tr.dmax) break;
          int e = m + n - k;
          if (tr.hmax >= 0 && e > tr.hmax) continue;
          Poly term = Poly::mul_trunc(ab, Poly::monomial(static_cast<unsigned>(e), C(coef)), tr.hmax);
          acc[k] += term;
        }
      }
    B0 r(tr);
    for (auto& [k, v] : acc) r.set(k, std::move(v));
    return r;
  }

  B0 scaled(const Poly& s) const {
    B0 r(tr_);
    for (const auto& [k, v] : c_) r.set(k, Poly::mul_trunc(v, s, tr_.hmax));
    return r;
  }

  B0 pow(unsigned e) const {
    B0 r(Poly(C(1)), tr_), x = *this;
    while (e) {
      if (e & 1u) r = r * x;
      e >>= 1u;
      if (e) x = x * x;
    }
    return r;
  }

  friend bool operator==(const B0& a, const B0& b) { return a.c_ == b.c_; }
  friend bool operator!=(const B0& a, const B0& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << v.str() << ")*c" << k;
    }
    return os.str();
  }

 private:
  B0Trunc tr_;
  std::map<int, Poly> c_;
};

using B0Z = B0<Z>;
using B0Q = B0<Q>;

inline B0Q to_q(const B0Z& a) {
  B0Q r(a.trunc());
  for (const auto& [k, v] : a.coords()) r.set(k, to_q(v));
  return r;
}

// Integral coordinates or NonIntegralCoefficient naming the first offender.
inline B0Z to_z(const B0Q& a) {
  B0Z r(a.trunc());
  for (const auto& [k, v] : a.coords()) {
    ZPoly z;
    if (!to_z(v, z)) throw NonIntegralCoefficient("coefficient (" + v.str() + ") of c" + std::to_string(k));
    r.set(k, z);
  }
  return r;
}

inline bool is_integral(const B0Q& a) {
  for (const auto& [k, v] : a.coords())
    for (const auto& c : v.coeffs())
      if (!is_integer(c)) return false;
  return true;
}

// Coordinates have denominators prime to p.
inline bool is_p_integral(const B0Q& a, long p) {
  for (const auto& [k, v] : a.coords())
    for (const auto& c : v.coeffs())
      if (denom(c) % p == 0) return false;
  return true;
}

// --------------------------------------------------------------- coproduct

// Element of B0 (x) B0: (i, j) -> coefficient of c_i (x) c_j.
template <class C>
using B0Tensor = std::map<std::pair<int, int>, UPoly<C>>;

// Delta(c_n) = sum_{i+j=n} c_i (x) c_j (t primitive, f(t1 + t2) = f(t1) f(t2)).
template <class C>
B0Tensor<C> b0_coproduct(const B0<C>& a) {
  B0Tensor<C> r;
  for (const auto& [n, v] : a.coords())
    for (int i = 0; i <= n; ++i) r[{i, n - i}] += v;
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

template <class C>
B0Tensor<C> tensor_mul(const B0Tensor<C>& x, const B0Tensor<C>& y) {
  B0Tensor<C> r;
  for (const auto& [ij, u] : x)
    for (const auto& [kl, v] : y) {
      UPoly<C> uv = u * v;
      for (const auto& [a, ca] : B0StructureConstants::get(ij.first, kl.first))
        for (const auto& [b, cb] : B0StructureConstants::get(ij.second, kl.second)) {
          int e = ij.first + kl.first - a + ij.second + kl.second - b;
          r[{a, b}] += uv * UPoly<C>::monomial(static_cast<unsigned>(e), C(ca * cb));
        }
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

// (Delta (x) id) and (id (x) Delta) applied to a tensor, as triple tensors.
template <class C>
std::map<std::tuple<int, int, int>, UPoly<C>> coassoc_left(const B0Tensor<C>& x) {
  std::map<std::tuple<int, int, int>, UPoly<C>> r;
  for (const auto& [ij, v] : x)
    for (int a = 0; a <= ij.first; ++a) r[{a, ij.first - a, ij.second}] += v;
  return r;
}
template <class C>
std::map<std::tuple<int, int, int>, UPoly<C>> coassoc_right(const B0Tensor<C>& x) {
  std::map<std::tuple<int, int, int>, UPoly<C>> r;
  for (const auto& [ij, v] : x)
    for (int b = 0; b <= ij.second; ++b) r[{ij.first, b, ij.second - b}] += v;
  return r;
}

// ------------------------------------------------------------------ Adams

// psi^n: h -> (1+h)^n - 1 and c_k -> [n]_q^k c_k, [n]_q = 1 + q + ... + q^{n-1}.
template <class C>
B0<C> adams(unsigned n, const B0<C>& a) {
  using Poly = UPoly<C>;
  const int cap = a.trunc().hmax;
  Poly q = Poly::var() + Poly(C(1));
  Poly psi_h = q.pow(n) - Poly(C(1));
  Poly qn;  // [n]_q
  for (unsigned i = 0; i < n; ++i) qn += q.pow(i);
  B0<C> r(a.trunc());
  for (const auto& [k, v] : a.coords()) r.set(k, Poly::mul_trunc(v.compose(psi_h, cap), qn.pow(static_cast<unsigned>(k), cap), cap));
  return r;
}

// psi^n on a tensor, factorwise.
template <class C>
B0Tensor<C> adams(unsigned n, const B0Tensor<C>& x) {
  using Poly = UPoly<C>;
  Poly q = Poly::var() + Poly(C(1));
  Poly psi_h = q.pow(n) - Poly(C(1));
  Poly qn;
  for (unsigned i = 0; i < n; ++i) qn += q.pow(i);
  B0Tensor<C> r;
  for (const auto& [ij, v] : x) r[ij] = v.compose(psi_h) * qn.pow(static_cast<unsigned>(ij.first + ij.second));
  return r;
}

// delta(b) = (psi^p(b) - b^p)/p; the division is exact by the Wilkerson
// congruence, otherwise AxiomFailure.
inline B0Z b0_delta(const B0Z& a, long p) {
  B0Z d = adams(static_cast<unsigned>(p), a) - a.pow(static_cast<unsigned>(p));
  B0Z r(a.trunc());
  for (const auto& [k, v] : d.coords()) {
    std::vector<Z> cs;
    for (const auto& c : v.coeffs()) {
      if (c % p != 0) throw AxiomFailure("psi^p(b) - b^p not divisible by p at c" + std::to_string(k));
      cs.push_back(c / p);
    }
    r.set(k, ZPoly(cs));
  }
  return r;
}

// --------------------------------------------------------------- Int[h]

// Element of Int[h]: power of h -> element of Int.
using IntH = std::map<int, IntPoly>;

inline void add_to(IntH& x, int j, const IntPoly& f) {
  IntPoly s = x.count(j) ? x[j] + f : f;
  if (s.is_zero())
    x.erase(j);
  else
    x[j] = s;
}

// c_n -> h^n C(u, n) (t -> h u).
inline IntH b0_to_int_h(const B0Z& a) {
  IntH r;
  for (const auto& [n, v] : a.coords())
    for (std::size_t j = 0; j < v.coeffs().size(); ++j)
      if (v.coeffs()[j] != 0) add_to(r, static_cast<int>(j) + n, IntPoly::binomial(static_cast<unsigned>(n)).scaled(v.coeffs()[j]));
  return r;
}

// h^n f with deg f <= n, as the element sum f_k h^{n-k} c_k of B0.
inline B0Z b0_from_filtration(const IntPoly& f, int n) {
  if (f.degree() > n)
    throw DegreeExceedsFiltration("degree " + std::to_string(f.degree()) + " exceeds filtration index " + std::to_string(n));
  B0Z r;
  for (int k = 0; k <= f.degree(); ++k)
    if (f.coord(static_cast<std::size_t>(k)) != 0)
      r.add(k, ZPoly::monomial(static_cast<unsigned>(n - k), f.coord(static_cast<std::size_t>(k))));
  return r;
}

// Inverse of b0_to_int_h on its image: each h^j-piece f must satisfy
// deg f <= j.
inline B0Z b0_from_int_h(const IntH& x) {
  B0Z r;
  for (const auto& [j, f] : x) r = r + b0_from_filtration(f, j);
  return r;
}

// ---------------------------------------------------- polynomial realization

// c_k as a polynomial in Q[t, h] inside ctx (which must contain "t" and "h").
inline Series c_poly(const CtxPtr& ctx, int k) {
  auto t = Series::var(ctx, "t"), h = Series::var(ctx, "h");
  Series r(ctx, 1);
  for (int i = 0; i < k; ++i) r = r * (t - h.scaled(i));
  return r.scaled(Q(1) / Q(factorial(static_cast<unsigned>(k))));
}

template <class C>
Series to_series(const B0<C>& a, const CtxPtr& ctx) {
  Series r(ctx);
  auto h = Series::var(ctx, "h");
  for (const auto& [k, v] : a.coords()) {
    Series pv(ctx);
    for (std::size_t j = 0; j < v.coeffs().size(); ++j) pv += h.pow(static_cast<unsigned>(j)).scaled(Q(v.coeffs()[j]));
    r += pv * c_poly(ctx, k);
  }
  return r;
}

// Express a polynomial in t (coefficients in Q[h], other variables must not
// occur) in the c-basis: triangular in the t-degree since c_k = t^k/k! + ...
inline B0Q b0_from_series(const Series& f) {
  const auto& ctx = f.ctx();
  int ti = ctx->var("t"), hi = ctx->var("h");
  for (const auto& [m, c] : f.terms())
    for (int i = 0; i < ctx->nvars(); ++i)
      if (i != ti && i != hi && m[i]) throw RingMismatch("b0_from_series: unexpected variable " + ctx->names[i]);
  B0Q r;
  Series rest = f;
  while (!rest.is_zero()) {
    int top = 0;
    for (const auto& [m, c] : rest.terms()) top = std::max<int>(top, m[ti]);
    QPoly ph;
    for (const auto& [m, c] : rest.terms())
      if (m[ti] == top) ph.set(m[hi], c * Q(factorial(static_cast<unsigned>(top))));
    r.add(top, ph);
    Series sub(ctx);
    auto h = Series::var(ctx, "h");
    for (std::size_t j = 0; j < ph.coeffs().size(); ++j) sub += h.pow(static_cast<unsigned>(j)).scaled(ph.coeffs()[j]);
    rest = rest - sub * c_poly(ctx, top);
  }
  return r;
}

}  // namespace prismlab
