#pragma once

#include "errors.hpp"
#include "numbers.hpp"

#include <cstdint>
#include <ostream>

namespace prismlab {

// Element of Z/m with a runtime modulus m < 2^62. Both operands of a binary
// operation must carry the same modulus.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::int64_t v, std::uint64_t m) : m_(m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
  }
  ModInt(const Z& v, std::uint64_t m) : m_(m) {
    v_ = static_cast<std::uint64_t>(mod_floor(v, Z(m)));
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return m_; }
  Z lift() const { return Z(v_); }

  ModInt& operator+=(const ModInt& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= m_) v_ -= m_;
    return *this;
  }
  ModInt& operator-=(const ModInt& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + m_ - o.v_;
    return *this;
  }
  ModInt& operator*=(const ModInt& o) {
    check(o);
    v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % m_);
    return *this;
  }
  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  ModInt operator-() const { return ModInt(0, m_) - *this; }
  friend bool operator==(const ModInt& a, const ModInt& b) { return a.v_ == b.v_ && a.m_ == b.m_; }

  friend std::ostream& operator<<(std::ostream& os, const ModInt& a) { return os << a.v_; }

 private:
  void check(const ModInt& o) const {
    if (m_ != o.m_) throw RingMismatch("moduli " + std::to_string(m_) + " and " + std::to_string(o.m_));
  }
  std::uint64_t v_ = 0;
  std::uint64_t m_ = 1;
};

}  // namespace prismlab
