#pragma once

#include "errors.hpp"
#include "numbers.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace prismlab {

constexpr int kMaxVars = 8;
using Mono = std::array<std::uint16_t, kMaxVars>;

inline int total_degree(const Mono& m, std::uint32_t mask = ~0u) {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) d += m[i];
  return d;
}

// Describes a quotient of Q[v_0..v_{k-1}] (or of Z[...] / M when a modulus is
// set): per-variable exponent caps, total-degree caps on variable subsets, and
// at most one monic relation v^d = -(r_0 + r_1 v + ... + r_{d-1} v^{d-1}).
struct SeriesCtx {
  struct TotalCap {
    std::uint32_t mask;
    int deg;
  };

  std::vector<std::string> names;
  std::vector<int> cap;  // -1: uncapped
  std::vector<TotalCap> total;
  Z modulus = 0;         // 0: exact rational coefficients
  int rel_var = -1;
  std::vector<Q> rel;    // r_0..r_{d-1}

  explicit SeriesCtx(std::vector<std::string> n) : names(std::move(n)), cap(names.size(), -1) {
    if (names.size() > kMaxVars) throw RingMismatch("too many variables");
  }

  int nvars() const { return static_cast<int>(names.size()); }

  int var(const std::string& n) const {
    for (int i = 0; i < nvars(); ++i)
      if (names[i] == n) return i;
    throw RingMismatch("unknown variable " + n);
  }

  std::uint32_t mask_of(const std::vector<std::string>& vs) const {
    std::uint32_t m = 0;
    for (const auto& v : vs) m |= 1u << var(v);
    return m;
  }

  bool admits(const Mono& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (cap[i] >= 0 && m[i] > cap[i]) return false;
    for (const auto& t : total)
      if (total_degree(m, t.mask) > t.deg) return false;
    return true;
  }

  int rel_degree() const { return static_cast<int>(rel.size()); }

  // The smallest total-degree cap, used as the default valid order.
  int default_order() const {
    int o = 1 << 20;
    for (const auto& t : total) o = std::min(o, t.deg);
    return o;
  }

  bool same_shape(const SeriesCtx& o) const {
    if (names != o.names || cap != o.cap || modulus != o.modulus || rel_var != o.rel_var || rel != o.rel)
      return false;
    if (total.size() != o.total.size()) return false;
    for (std::size_t i = 0; i < total.size(); ++i)
      if (total[i].mask != o.total[i].mask || total[i].deg != o.total[i].deg) return false;
    return true;
  }
};

using CtxPtr = std::shared_ptr<const SeriesCtx>;

// Builder helpers for the common shapes.
inline CtxPtr make_ctx(std::vector<std::string> names, const std::function<void(SeriesCtx&)>& f = {}) {
  auto c = std::make_shared<SeriesCtx>(std::move(names));
  if (f) f(*c);
  return c;
}

inline std::string mono_str(const SeriesCtx& c, const Mono& m) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < c.nvars(); ++i) {
    if (!m[i]) continue;
    if (any) os << "*";
    any = true;
    os << c.names[i];
    if (m[i] > 1) os << "^" << m[i];
  }
  return any ? os.str() : "1";
}

// Truncated multivariate power series (or polynomial) over the quotient
// described by its context. Values are immutable in spirit: operators return
// new objects.
class Series {
 public:
  using Terms = std::map<Mono, Q>;

  Series() = default;
  explicit Series(CtxPtr c) : ctx_(std::move(c)), order_(ctx_->default_order()) {}
  Series(CtxPtr c, const Q& constant) : Series(std::move(c)) {
    if (constant != 0) add_term(Mono{}, constant);
    normalize();
  }

  static Series var(const CtxPtr& c, const std::string& name, const Q& coef = 1) {
    Mono m{};
    m[c->var(name)] = 1;
    return monomial(c, m, coef);
  }
  static Series monomial(const CtxPtr& c, const Mono& m, const Q& coef) {
    Series s(c);
    s.add_term(m, coef);
    s.normalize();
    return s;
  }

  const CtxPtr& ctx() const { return ctx_; }
  const Terms& terms() const { return t_; }
  int order() const { return order_; }
  void set_order(int o) { order_ = std::min(order_, o); }
  bool is_zero() const { return t_.empty(); }

  Q coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Q(0) : it->second;
  }
  Q coeff(std::initializer_list<std::pair<std::string, int>> pows) const {
    Mono m{};
    for (const auto& [n, e] : pows) m[ctx_->var(n)] = static_cast<std::uint16_t>(e);
    return coeff(m);
  }
  Q constant_term() const { return coeff(Mono{}); }

  Series& operator+=(const Series& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    order_ = std::min(order_, o.order_);
    normalize();
    return *this;
  }
  Series& operator-=(const Series& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    order_ = std::min(order_, o.order_);
    normalize();
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const {
    Series r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    r.normalize();
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.check(b);
    Series r(a.ctx_);
    r.order_ = std::min(a.order_, b.order_);
    const auto& cx = *a.ctx_;
    for (const auto& [ma, ca] : a.t_) {
      for (const auto& [mb, cb] : b.t_) {
        Mono m;
        for (int i = 0; i < kMaxVars; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
        if (cx.rel_var < 0 && !cx.admits(m)) continue;
        r.add_term(m, ca * cb);
      }
    }
    r.normalize();
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series scaled(const Q& s) const {
    Series r = *this;
    for (auto& [m, c] : r.t_) c *= s;
    r.normalize();
    return r;
  }

  Series pow(unsigned e) const {
    Series r(ctx_, 1), x = *this;
    r.order_ = order_;
    while (e) {
      if (e & 1u) r = r * x;
      e >>= 1u;
      if (e) x = x * x;
    }
    return r;
  }

  // f(v := g). If v carries a cap (f is a truncated series in v) then g must
  // have zero constant term, otherwise the result would depend on dropped
  // terms.
  Series compose(const std::string& v, const Series& g) const {
    check(g);
    int vi = ctx_->var(v);
    if (g.constant_term() != 0 && var_is_truncated(vi))
      throw NonzeroConstantTerm("substituting into truncated variable " + v);
    std::map<int, Series> by_power;
    for (const auto& [m, c] : t_) {
      Mono rest = m;
      int e = rest[vi];
      rest[vi] = 0;
      auto it = by_power.find(e);
      if (it == by_power.end()) it = by_power.emplace(e, Series(ctx_)).first;
      it->second.add_term(rest, c);
    }
    Series r(ctx_);
    int top = by_power.empty() ? -1 : by_power.rbegin()->first;
    for (int e = top; e >= 0; --e) {
      r = r * g;
      auto it = by_power.find(e);
      if (it != by_power.end()) {
        it->second.normalize();
        r += it->second;
      }
    }
    r.order_ = std::min(order_, g.order_);
    return r;
  }

  // Specialize a variable to a rational constant.
  Series substitute(const std::string& v, const Q& value) const {
    return compose(v, Series(ctx_, value));
  }

  // Map into another context by variable name (variables missing in the
  // target must not occur).
  Series recast(const CtxPtr& target) const {
    Series r(target);
    for (const auto& [m, c] : t_) {
      Mono mm{};
      for (int i = 0; i < ctx_->nvars(); ++i) {
        if (!m[i]) continue;
        mm[target->var(ctx_->names[i])] = m[i];
      }
      r.add_term(mm, c);
    }
    r.normalize();
    r.order_ = std::min(order_, target->default_order());
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    a.check(b);
    return a.t_ == b.t_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // Minimum p-adic valuation of the coefficients.
  int valuation(long p) const {
    int v = kInfVal;
    for (const auto& [m, c] : t_) v = std::min(v, vp(c, p));
    return v;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      std::string ms = mono_str(*ctx_, m);
      if (ms != "1") os << "*" << ms;
    }
    return os.str();
  }

  // Low-level: accumulate without normalizing (callers normalize).
  void add_term(const Mono& m, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  void normalize() {
    const auto& cx = *ctx_;
    if (cx.rel_var >= 0) reduce_relation();
    for (auto it = t_.begin(); it != t_.end();) {
      if (!cx.admits(it->first)) {
        it = t_.erase(it);
        continue;
      }
      if (cx.modulus != 0) {
        Z r;
        if (!try_reduce(it->second, cx.modulus, r))
          throw NonIntegralCoefficient("coefficient " + it->second.str() + " of " + mono_str(cx, it->first) +
                                       " not invertible mod " + cx.modulus.str());
        it->second = Q(r);
      }
      if (it->second == 0)
        it = t_.erase(it);
      else
        ++it;
    }
  }

 private:
  bool var_is_truncated(int vi) const {
    if (ctx_->cap[vi] >= 0) return true;
    for (const auto& t : ctx_->total)
      if (t.mask & (1u << vi)) return true;
    return false;
  }

  void reduce_relation() {
    const auto& cx = *ctx_;
    const int v = cx.rel_var;
    const int d = cx.rel_degree();
    for (;;) {
      auto it = t_.end();
      for (auto j = t_.begin(); j != t_.end(); ++j)
        if (j->first[v] >= d && (it == t_.end() || j->first[v] > it->first[v])) it = j;
      if (it == t_.end()) return;
      Mono m = it->first;
      Q c = it->second;
      t_.erase(it);
      m[v] = static_cast<std::uint16_t>(m[v] - d);
      for (int k = 0; k < d; ++k) {
        if (cx.rel[k] == 0) continue;
        Mono mk = m;
        mk[v] = static_cast<std::uint16_t>(mk[v] + k);
        add_term(mk, -c * cx.rel[k]);
      }
    }
  }

  void check(const Series& o) const {
    if (ctx_ != o.ctx_ && !(ctx_ && o.ctx_ && ctx_->same_shape(*o.ctx_)))
      throw RingMismatch("series over different rings");
  }

  CtxPtr ctx_;
  Terms t_;
  int order_ = 1 << 20;
};

// Image of a rational series in the same shape of ring with coefficients
// reduced modulo m; fails naming the first monomial whose denominator is not
// a unit.
inline Series clear_denominators(const Series& f, const Z& m) {
  auto target = std::make_shared<SeriesCtx>(*f.ctx());
  target->modulus = m;
  Series r(target);
  for (const auto& [mono, c] : f.terms()) {
    Z red;
    if (!try_reduce(c, m, red))
      throw NonIntegralCoefficient("coefficient " + c.str() + " of " + mono_str(*f.ctx(), mono) +
                                   " has a denominator not invertible mod " + m.str());
    r.add_term(mono, Q(red));
  }
  r.normalize();
  r.set_order(f.order());
  return r;
}

// Same shape, exact rational coefficients: integer representatives of a
// modular series.
inline Series lift_exact(const Series& f) {
  auto target = std::make_shared<SeriesCtx>(*f.ctx());
  target->modulus = 0;
  Series r(target);
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  r.normalize();
  r.set_order(f.order());
  return r;
}

// Clear denominators into Z: every coefficient must be an integer.
inline Series require_integral(const Series& f) {
  for (const auto& [m, c] : f.terms())
    if (!is_integer(c))
      throw NonIntegralCoefficient("coefficient " + c.str() + " of " + mono_str(*f.ctx(), m) + " is not in Z");
  return f;
}

// log(u) = sum (-1)^{n-1} (u-1)^n / n. Converges when u-1 is nilpotent under
// the truncation, or (for a modular context with prime-power modulus p^N)
// when some power of u-1 lands in p times the lattice.
inline Series padic_log(const Series& u, long p = 0, int max_terms = 4096) {
  const auto& cx = *u.ctx();
  Series one(u.ctx(), 1);
  if (cx.modulus == 0) {
    Series w = u - one, pw = w, acc(u.ctx());
    for (int n = 1; n <= max_terms; ++n) {
      if (pw.is_zero()) {
        acc.set_order(u.order());
        return acc;
      }
      acc += pw.scaled(Q(n % 2 ? 1 : -1, n));
      pw = pw * w;
    }
    throw DoesNotConverge("u-1 is not nilpotent at this truncation");
  }
  if (p == 0) throw DoesNotConverge("modular log needs the prime");
  const int N = vp(cx.modulus, p);
  Series w = lift_exact(u - one);
  Series pw = w;
  Series acc(w.ctx());
  int k0 = -1;  // first power of w inside p * lattice
  for (int n = 1; n <= max_terms; ++n) {
    if (pw.is_zero()) break;
    int v = pw.valuation(p);
    if (v < 0) throw NonIntegralCoefficient("u-1 has non-integral coefficients");
    if (k0 < 0 && v >= 1) k0 = n;
    // Division by n must be exact on the integer lattice.
    Series term = pw.scaled(Q(n % 2 ? 1 : -1, n));
    if (term.valuation(p) < 0) throw NonIntegralCoefficient("term (u-1)^" + std::to_string(n) + "/" + std::to_string(n));
    acc += term;
    if (k0 > 0) {
      // v((u-1)^m) >= floor(m/k0); the tail is below p^N once this beats
      // N + v_p(m) for every later m.
      bool done = true;
      for (int m = n + 1; m <= n + 64 * k0 + 64; ++m) {
        int bound = m / k0;
        int loss = 0;
        for (int mm = m; mm % p == 0; mm /= static_cast<int>(p)) ++loss;
        if (bound - loss < N) {
          done = false;
          break;
        }
      }
      if (done) break;
    }
    pw = pw * w;
    if (n == max_terms) throw DoesNotConverge("log did not stabilize");
  }
  if (k0 < 0 && !pw.is_zero()) throw DoesNotConverge("u-1 is not topologically nilpotent");
  return clear_denominators(acc, cx.modulus);
}

}  // namespace prismlab

namespace prismlab {

// exp(x) for x nilpotent under the truncation (exact rational context).
inline Series series_exp(const Series& x, int max_terms = 4096) {
  if (x.ctx()->modulus != 0) throw NonIntegralCoefficient("exp needs rational coefficients");
  Series acc(x.ctx(), 1), term(x.ctx(), 1);
  for (int k = 1; k <= max_terms; ++k) {
    term = (term * x).scaled(Q(1, k));
    if (term.is_zero()) {
      acc.set_order(x.order());
      return acc;
    }
    acc += term;
  }
  throw DoesNotConverge("exp argument is not nilpotent at this truncation");
}

// Coefficient of v^k, as a series in the remaining variables.
inline Series coeff_in(const Series& f, const std::string& v, int k) {
  int vi = f.ctx()->var(v);
  Series r(f.ctx());
  for (const auto& [m, c] : f.terms()) {
    if (m[vi] != k) continue;
    Mono mm = m;
    mm[vi] = 0;
    r.add_term(mm, c);
  }
  r.normalize();
  return r;
}

// Drop all terms with v-degree above k.
inline Series truncate_in(const Series& f, const std::string& v, int k) {
  int vi = f.ctx()->var(v);
  Series r(f.ctx());
  for (const auto& [m, c] : f.terms())
    if (m[vi] <= k) r.add_term(m, c);
  r.normalize();
  r.set_order(f.order());
  return r;
}

}  // namespace prismlab
