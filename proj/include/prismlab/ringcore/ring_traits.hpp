#pragma once

#include "errors.hpp"
#include "modint.hpp"
#include "numbers.hpp"
#include "series.hpp"

namespace prismlab {

// Uniform access to constants of a ring given a sample element ("like"),
// which carries runtime data such as a modulus or a series context.
// torsion_free rings also provide div_exact, used by ghost arithmetic.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Z> {
  static constexpr bool torsion_free = true;
  static Z zero(const Z&) { return 0; }
  static Z one(const Z&) { return 1; }
  static Z from_int(const Z&, const Z& n) { return n; }
  static bool is_zero(const Z& x) { return x == 0; }
  static bool ghost_ok(const Z&) { return true; }
  static Z div_exact(const Z& x, const Z& d) {
    if (x % d != 0) throw NonIntegralGhost(x.str() + "/" + d.str() + " is not an integer");
    return x / d;
  }
};

template <>
struct ring_traits<Q> {
  static constexpr bool torsion_free = true;
  static Q zero(const Q&) { return 0; }
  static Q one(const Q&) { return 1; }
  static Q from_int(const Q&, const Z& n) { return Q(n); }
  static bool is_zero(const Q& x) { return x == 0; }
  static bool ghost_ok(const Q&) { return true; }
  static Q div_exact(const Q& x, const Z& d) { return x / Q(d); }
};

template <>
struct ring_traits<ModInt> {
  static constexpr bool torsion_free = false;
  static ModInt zero(const ModInt& l) { return ModInt(0, l.modulus()); }
  static ModInt one(const ModInt& l) { return ModInt(1, l.modulus()); }
  static ModInt from_int(const ModInt& l, const Z& n) { return ModInt(n, l.modulus()); }
  static bool is_zero(const ModInt& x) { return x.value() == 0; }
  static bool ghost_ok(const ModInt&) { return false; }
  static ModInt div_exact(const ModInt&, const Z&) { throw NonIntegralGhost("division in Z/m"); }
};

template <>
struct ring_traits<Series> {
  static constexpr bool torsion_free = true;
  static Series zero(const Series& l) { return Series(l.ctx()); }
  static Series one(const Series& l) { return Series(l.ctx(), 1); }
  static Series from_int(const Series& l, const Z& n) { return Series(l.ctx(), Q(n)); }
  static bool is_zero(const Series& x) { return x.is_zero(); }
  static bool ghost_ok(const Series& l) { return l.ctx()->modulus == 0; }
  static Series div_exact(const Series& x, const Z& d) {
    if (x.ctx()->modulus != 0) throw NonIntegralGhost("division in a ring with torsion");
    return x.scaled(Q(1) / Q(d));
  }
};

template <class R>
R ring_pow(const R& x, unsigned long e) {
  R r = ring_traits<R>::one(x), b = x;
  while (e) {
    if (e & 1ul) r = r * b;
    e >>= 1ul;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace prismlab
