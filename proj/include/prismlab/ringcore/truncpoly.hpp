#pragma once

#include "errors.hpp"
#include "numbers.hpp"
#include "ring_traits.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace prismlab {

// (Z/m)[a]/(a^k): dense, fixed length k, small modulus. Fast stand-in for
// the characteristic-p test rings such as F_p[a]/(a^3).
class TruncPoly {
 public:
  TruncPoly() = default;
  TruncPoly(std::uint64_t m, int k) : m_(m), c_(static_cast<std::size_t>(k), 0) {}
  TruncPoly(std::uint64_t m, int k, std::int64_t constant) : TruncPoly(m, k) { c_[0] = red(constant); }

  static TruncPoly gen(std::uint64_t m, int k) {
    TruncPoly r(m, k);
    if (k > 1) r.c_[1] = 1 % m;
    return r;
  }

  std::uint64_t modulus() const { return m_; }
  int cap() const { return static_cast<int>(c_.size()); }
  std::uint64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  void set(int i, std::int64_t v) { c_[static_cast<std::size_t>(i)] = red(v); }
  bool is_zero() const {
    for (auto x : c_)
      if (x) return false;
    return true;
  }

  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = (a.c_[i] + b.c_[i]) % a.m_;
    return a;
  }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = (a.c_[i] + a.m_ - b.c_[i]) % a.m_;
    return a;
  }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    a.check(b);
    TruncPoly r(a.m_, a.cap());
    const std::size_t k = a.c_.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; i + j < k; ++j)
        r.c_[i + j] = static_cast<std::uint64_t>((r.c_[i + j] + static_cast<unsigned __int128>(a.c_[i]) * b.c_[j]) % a.m_);
    }
    return r;
  }
  friend bool operator==(const TruncPoly& a, const TruncPoly& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
  friend bool operator!=(const TruncPoly& a, const TruncPoly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const TruncPoly& x) {
    bool any = false;
    for (int i = 0; i < x.cap(); ++i) {
      if (!x[i]) continue;
      if (any) os << "+";
      any = true;
      os << x[i];
      if (i) os << "a" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (!any) os << "0";
    return os;
  }

 private:
  std::uint64_t red(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(m_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m_) : r);
  }
  void check(const TruncPoly& o) const {
    if (m_ != o.m_ || c_.size() != o.c_.size()) throw RingMismatch("truncated polynomials over different rings");
  }

  std::uint64_t m_ = 2;
  std::vector<std::uint64_t> c_;
};

template <>
struct ring_traits<TruncPoly> {
  static constexpr bool torsion_free = false;
  static TruncPoly zero(const TruncPoly& l) { return TruncPoly(l.modulus(), l.cap()); }
  static TruncPoly one(const TruncPoly& l) { return TruncPoly(l.modulus(), l.cap(), 1); }
  static TruncPoly from_int(const TruncPoly& l, const Z& n) {
    return TruncPoly(l.modulus(), l.cap(), static_cast<std::int64_t>(mod_floor(n, Z(l.modulus()))));
  }
  static bool is_zero(const TruncPoly& x) { return x.is_zero(); }
  static bool ghost_ok(const TruncPoly&) { return false; }
  static TruncPoly div_exact(const TruncPoly&, const Z&) { throw NonIntegralGhost("division in a torsion ring"); }
};

}  // namespace prismlab
