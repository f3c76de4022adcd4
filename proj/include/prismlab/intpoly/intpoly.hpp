#pragma once

#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/numbers.hpp"
#include "prismlab/ringcore/upoly.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace prismlab {

// Element sum a_n C(u, n) of the ring Int of integer-valued polynomials,
// stored by its binomial coordinates (trailing zeros trimmed).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Z> a) : a_(std::move(a)) { trim(); }
  IntPoly(long c) : a_{Z(c)} { trim(); }  // NOLINT: constants embed

  static IntPoly binomial(unsigned n) {
    std::vector<Z> a(n + 1, Z(0));
    a[n] = 1;
    return IntPoly(std::move(a));
  }
  static IntPoly u() { return binomial(1); }

  const std::vector<Z>& coords() const { return a_; }
  Z coord(std::size_t n) const { return n < a_.size() ? a_[n] : Z(0); }
  int degree() const { return static_cast<int>(a_.size()) - 1; }
  bool is_zero() const { return a_.empty(); }

  friend IntPoly operator+(const IntPoly& x, const IntPoly& y) {
    std::vector<Z> r(std::max(x.a_.size(), y.a_.size()), Z(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.coord(i) + y.coord(i);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& x, const IntPoly& y) {
    std::vector<Z> r(std::max(x.a_.size(), y.a_.size()), Z(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.coord(i) - y.coord(i);
    return IntPoly(std::move(r));
  }
  IntPoly operator-() const { return IntPoly(0) - *this; }
  IntPoly scaled(const Z& s) const {
    auto r = a_;
    for (auto& c : r) c *= s;
    return IntPoly(std::move(r));
  }

  // C(u,m) C(u,n) = sum_{k=max(m,n)}^{m+n} C(k,m) C(m,k-n) C(u,k)
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    if (x.is_zero() || y.is_zero()) return IntPoly();
    std::vector<Z> r(x.a_.size() + y.a_.size() - 1, Z(0));
    for (std::size_t m = 0; m < x.a_.size(); ++m) {
      if (x.a_[m] == 0) continue;
      for (std::size_t n = 0; n < y.a_.size(); ++n) {
        if (y.a_[n] == 0) continue;
        Z xy = x.a_[m] * y.a_[n];
        for (std::size_t k = std::max(m, n); k <= m + n; ++k)
          r[k] += xy * binom(static_cast<long>(k), static_cast<unsigned>(m)) *
                  binom(static_cast<long>(m), static_cast<unsigned>(k - n));
      }
    }
    return IntPoly(std::move(r));
  }

  friend bool operator==(const IntPoly& x, const IntPoly& y) { return x.a_ == y.a_; }
  friend bool operator!=(const IntPoly& x, const IntPoly& y) { return !(x == y); }

  Z eval(const Z& m) const {
    Z s = 0;
    for (std::size_t n = 0; n < a_.size(); ++n)
      if (a_[n] != 0) s += a_[n] * binom(m, static_cast<unsigned>(n));
    return s;
  }

  IntPoly pow(unsigned e) const {
    IntPoly r(1), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return r;
  }

  // Exact division of every coordinate; false if some coordinate is not
  // divisible.
  bool try_divide(const Z& d, IntPoly& out) const {
    std::vector<Z> r;
    for (const auto& c : a_) {
      if (c % d != 0) return false;
      r.push_back(c / d);
    }
    out = IntPoly(std::move(r));
    return true;
  }

  std::string str() const {
    if (a_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < a_.size(); ++n) {
      if (a_[n] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << a_[n] << "*C(u," << n << ")";
    }
    return os.str();
  }

 private:
  void trim() {
    while (!a_.empty() && a_.back() == 0) a_.pop_back();
  }
  std::vector<Z> a_;
};

// C(u, n) as a rational polynomial in u.
inline QPoly binomial_poly(unsigned n) {
  QPoly r(Q(1));
  for (unsigned i = 0; i < n; ++i) r = r * (QPoly::monomial(1, Q(1)) - QPoly(Q(i)));
  return r.scaled(Q(1) / Q(factorial(n)));
}

inline QPoly to_monomial(const IntPoly& x) {
  QPoly r;
  for (std::size_t n = 0; n < x.coords().size(); ++n)
    if (x.coords()[n] != 0) r = r + binomial_poly(static_cast<unsigned>(n)).scaled(Q(x.coords()[n]));
  return r;
}

// a_n = (Delta^n f)(0) = sum_k (-1)^{n-k} C(n,k) f(k).
inline IntPoly to_binomial(const QPoly& f) {
  std::vector<Z> a;
  const int d = f.degree();
  std::vector<Q> vals;
  for (int k = 0; k <= d; ++k) vals.push_back(f.eval(Q(k)));
  for (int n = 0; n <= d; ++n) {
    Q s = 0;
    for (int k = 0; k <= n; ++k) s += Q(((n - k) % 2 ? -1 : 1) * binom(n, static_cast<unsigned>(k))) * vals[k];
    if (!is_integer(s))
      throw NotIntegerValued("Delta^" + std::to_string(n) + " f(0) = " + s.str() + " is not an integer");
    a.push_back(numer(s));
  }
  return IntPoly(std::move(a));
}

// lambda_n(x) = x (x-1) ... (x-n+1) / n!
inline IntPoly lambda_op(unsigned n, const IntPoly& x) {
  IntPoly prod(1);
  for (unsigned i = 0; i < n; ++i) prod = prod * (x - IntPoly(static_cast<long>(i)));
  IntPoly r;
  if (!prod.try_divide(factorial(n), r)) throw NotIntegerValued("lambda_" + std::to_string(n) + " not integral");
  return r;
}

// psi^n = id on Int.
inline IntPoly adams(unsigned, const IntPoly& x) { return x; }

// (x - x^p)/p, divisible because Frobenius is the identity on Int/p.
inline IntPoly delta_p(const IntPoly& x, long p) {
  IntPoly r;
  if (!(x - x.pow(static_cast<unsigned>(p))).try_divide(Z(p), r))
    throw AxiomFailure("x - x^p not divisible by p in Int for x = " + x.str());
  return r;
}

struct Difference {
  IntPoly value;
  int nilpotence;  // least m with Delta^m x = 0
};

// Delta C(u, n) = C(u, n-1).
inline Difference difference(const IntPoly& x) {
  std::vector<Z> a;
  for (std::size_t n = 1; n < x.coords().size(); ++n) a.push_back(x.coords()[n]);
  return {IntPoly(std::move(a)), x.degree() + 1};
}

// x(u + s) in binomial coordinates: C(u+s, n) = sum_j C(s, j) C(u, n-j).
inline IntPoly shift(const IntPoly& x, const Z& s) {
  std::vector<Z> r(x.coords().size(), Z(0));
  for (std::size_t n = 0; n < x.coords().size(); ++n)
    for (std::size_t j = 0; j <= n; ++j) r[n - j] += x.coords()[n] * binom(s, static_cast<unsigned>(j));
  return IntPoly(std::move(r));
}

struct MahlerTable {
  long period;             // p^k
  int k;
  std::vector<Z> residues;  // x(0..p^k-1) mod p^n
};

// Smallest p^k with x(u + p^k) = x(u) mod p^n for all integers u; the shifted
// difference is tested on binomial coordinates, which is exact.
inline MahlerTable mahler_table(const IntPoly& x, long p, int n) {
  const Z pn = ipow(Z(p), static_cast<unsigned>(n));
  int logd = 0;
  for (long d = std::max(1, x.degree()); d >= p; d /= p) ++logd;
  const int kmax = n + logd + 1;
  for (int k = 0; k <= kmax; ++k) {
    Z pk = ipow(Z(p), static_cast<unsigned>(k));
    IntPoly diff = shift(x, pk) - x;
    bool ok = true;
    for (const auto& c : diff.coords())
      if (c % pn != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    MahlerTable t{static_cast<long>(pk), k, {}};
    for (long a = 0; a < t.period; ++a) t.residues.push_back(mod_floor(x.eval(a), pn));
    return t;
  }
  throw BoundExceeded("no period found below p^" + std::to_string(kmax));
}

// Int_(p) element written in the basis prod_i delta^i(u)^{d_i}, 0 <= d_i < p;
// the key is n = sum d_i p^i.
struct DeltaBasisExpansion {
  long p;
  std::map<long, Q> coeff;
  bool p_integral() const {
    for (const auto& [n, c] : coeff)
      if (denom(c) % p == 0) return false;
    return true;
  }
};

inline std::vector<QPoly> delta_iterates(long p, int count) {
  std::vector<QPoly> d{QPoly::monomial(1, Q(1))};
  for (int i = 1; i < count; ++i) {
    const QPoly& x = d.back();
    d.push_back((x - x.pow(static_cast<unsigned>(p))).scaled(Q(1, p)));
  }
  return d;
}

// prod_i delta^i(u)^{d_i} for n = sum d_i p^i.
inline QPoly delta_monomial(long p, long n, const std::vector<QPoly>& dit) {
  QPoly r(Q(1));
  for (std::size_t i = 0; n > 0; ++i, n /= p) {
    if (i >= dit.size()) throw BoundExceeded("not enough delta iterates");
    r = r * dit[i].pow(static_cast<unsigned>(n % p));
  }
  return r;
}

// Triangular reduction: subtract c times the basis monomial of the current
// degree until nothing is left.
inline DeltaBasisExpansion delta_basis_expand(const IntPoly& x, long p) {
  DeltaBasisExpansion e{p, {}};
  int levels = 1;
  for (long d = std::max(1, x.degree()); d >= p; d /= p) ++levels;
  auto dit = delta_iterates(p, levels + 1);
  QPoly r = to_monomial(x);
  while (!r.is_zero()) {
    long n = r.degree();
    QPoly b = delta_monomial(p, n, dit);
    Q c = r.lead() / b.lead();
    e.coeff[n] = c;
    r = r - b.scaled(c);
  }
  return e;
}

inline QPoly delta_basis_combine(const DeltaBasisExpansion& e) {
  long top = e.coeff.empty() ? 0 : e.coeff.rbegin()->first;
  int levels = 1;
  for (long d = std::max(1l, top); d >= e.p; d /= e.p) ++levels;
  auto dit = delta_iterates(e.p, levels + 1);
  QPoly r;
  for (const auto& [n, c] : e.coeff) r = r + delta_monomial(e.p, n, dit).scaled(c);
  return r;
}

struct MahlerIsoCheck {
  long p;
  int n, k;
  long rank_image = 0;  // number of indicator functions realized
  long rank_target = 0; // p^k
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && rank_image == rank_target; }
};

// Int/p^n against functions Z -> Z/p^n of period p^k: each periodic
// indicator has a Mahler expansion of length n p^k (because
// Delta^{p^k} = T^{p^k} - 1 = 0 mod p on such functions), the resulting
// element of Int is periodic with the right values, and an element of Int
// with period p^k vanishing on 0..p^k-1 has all coordinates in p^n.
inline MahlerIsoCheck mahler_isomorphism_check(long p, int n, int k) {
  MahlerIsoCheck res{p, n, k, 0, 0, {}};
  const long P = ipow64(p, static_cast<unsigned>(k));
  const long J = n * P;
  const Z pn = ipow(Z(p), static_cast<unsigned>(n));
  res.rank_target = P;
  std::vector<IntPoly> pre;
  for (long r = 0; r < P; ++r) {
    // values of the periodic indicator on 0..2J
    std::vector<Z> vals;
    for (long u = 0; u <= 2 * J; ++u) vals.push_back(u % P == r ? 1 : 0);
    std::vector<Z> coords;
    std::vector<Z> row = vals;
    for (long j = 0; j <= 2 * J; ++j) {
      if (j < J) coords.push_back(mod_floor(row[0], pn));
      else if (mod_floor(row[0], pn) != 0) {
        res.failures.push_back("Delta^" + std::to_string(j) + " of indicator " + std::to_string(r) + " not 0 mod p^n");
        break;
      }
      for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
      row.pop_back();
    }
    IntPoly x(coords);
    auto t = mahler_table(x, p, n);
    if (P % t.period != 0) {
      res.failures.push_back("preimage of indicator " + std::to_string(r) + " has period " + std::to_string(t.period));
      continue;
    }
    bool vals_ok = true;
    for (long u = 0; u < P; ++u)
      if (mod_floor(x.eval(u), pn) != (u == r ? 1 : 0)) vals_ok = false;
    if (!vals_ok) {
      res.failures.push_back("preimage of indicator " + std::to_string(r) + " has wrong values");
      continue;
    }
    ++res.rank_image;
    pre.push_back(x);
  }
  if (!res.failures.empty()) return res;
  // injectivity: a periodic element is determined mod p^n by its values on
  // 0..p^k-1; checked on all 0/1 combinations of the preimages, perturbed by
  // p^n C(u, J-1)
  const long combos = P <= 10 ? (1l << P) : 1024;
  for (long mask = 0; mask < combos; ++mask) {
    IntPoly x = IntPoly::binomial(static_cast<unsigned>(J - 1)).scaled(pn);
    for (long r = 0; r < P; ++r)
      if (mask >> r & 1) x = x + pre[static_cast<std::size_t>(r)];
    IntPoly y;
    for (long r = 0; r < P; ++r) y = y + pre[static_cast<std::size_t>(r)].scaled(x.eval(r));
    IntPoly d = x - y;
    for (const auto& c : d.coords())
      if (c % pn != 0) {
        res.failures.push_back("values do not determine element for mask " + std::to_string(mask));
        return res;
      }
  }
  return res;
}

}  // namespace prismlab
