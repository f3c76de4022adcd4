#pragma once

#include "numbers.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace prismlab {

// Dense univariate polynomial c[0] + c[1] v + ... with trailing zeros trimmed.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  UPoly(C c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(std::move(c));
  }
  UPoly(int c) : UPoly(C(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<C> c) : c_(std::move(c)) { trim(); }

  static UPoly var() { return UPoly(std::vector<C>{C(0), C(1)}); }
  static UPoly monomial(unsigned k, C c = C(1)) {
    std::vector<C> v(k + 1, C(0));
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  C lead() const { return c_.empty() ? C(0) : c_.back(); }

  void set(std::size_t i, C v) {
    if (i >= c_.size()) c_.resize(i + 1, C(0));
    c_[i] = std::move(v);
    trim();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) { return mul_trunc(a, b, -1); }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  // Product keeping only degrees <= cap (cap < 0: no truncation).
  static UPoly mul_trunc(const UPoly& a, const UPoly& b, int cap) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::size_t n = a.c_.size() + b.c_.size() - 1;
    if (cap >= 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap) + 1);
    std::vector<C> r(n, C(0));
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }

  UPoly scaled(const C& s) const {
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }

  UPoly truncated(int cap) const {
    if (cap < 0 || degree() <= cap) return *this;
    return UPoly(std::vector<C>(c_.begin(), c_.begin() + cap + 1));
  }

  UPoly pow(unsigned e, int cap = -1) const {
    UPoly r(C(1)), x = truncated(cap);
    while (e) {
      if (e & 1u) r = mul_trunc(r, x, cap);
      e >>= 1u;
      if (e) x = mul_trunc(x, x, cap);
    }
    return r;
  }

  template <class T>
  T eval(const T& x) const {
    T r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + T(c_[i]);
    return r;
  }

  // Substitute v := s (a polynomial), keeping degrees <= cap.
  UPoly compose(const UPoly& s, int cap = -1) const {
    UPoly r;
    for (std::size_t i = c_.size(); i-- > 0;) r = mul_trunc(r, s, cap) + UPoly(c_[i]);
    return r.truncated(cap);
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string str(const std::string& v = "h") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << c_[i];
      if (i > 0) os << "*" << v;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<C> c_;
};

using ZPoly = UPoly<Z>;
using QPoly = UPoly<Q>;

inline QPoly to_q(const ZPoly& a) {
  std::vector<Q> v;
  for (const auto& c : a.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

// Exact conversion back to integer coefficients; returns false if any
// coefficient is not an integer.
inline bool to_z(const QPoly& a, ZPoly& out) {
  std::vector<Z> v;
  for (const auto& c : a.coeffs()) {
    if (!is_integer(c)) return false;
    v.push_back(numer(c));
  }
  out = ZPoly(std::move(v));
  return true;
}

// Cyclotomic polynomial Phi_p(v) = 1 + v + ... + v^{p-1} for prime p.
template <class C>
UPoly<C> cyclotomic(int p) {
  return UPoly<C>(std::vector<C>(static_cast<std::size_t>(p), C(1)));
}

}  // namespace prismlab
