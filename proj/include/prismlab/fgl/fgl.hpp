#pragma once

#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/series.hpp"

#include <string>
#include <vector>

namespace prismlab {

// Variables z1, z2, z3 (law arguments) and z (hom argument) share a
// total-degree cap; the remaining names are coefficient parameters.
inline CtxPtr fgl_ctx(int n_z, const std::vector<std::string>& params = {"h", "a", "b"}, const Z& modulus = 0) {
  std::vector<std::string> names{"z1", "z2", "z3", "z"};
  names.insert(names.end(), params.begin(), params.end());
  auto c = std::make_shared<SeriesCtx>(names);
  c->total.push_back({0xFu, n_z});
  c->modulus = modulus;
  return c;
}

namespace detail {

inline int z_degree(const Mono& m) { return m[0] + m[1] + m[2] + m[3]; }

// Lowest total z-degree among nonzero terms of f, or -1 if f == 0.
inline int lowest_z_degree(const Series& f) {
  int d = -1;
  for (const auto& [m, c] : f.terms())
    if (d < 0 || z_degree(m) < d) d = z_degree(m);
  return d;
}

inline Series rename(const Series& f, const std::string& from, const std::string& to) {
  return f.compose(from, Series::var(f.ctx(), to));
}

// alpha^{-1} f(alpha x): the coefficient of a degree-d monomial in the z's is
// multiplied by alpha^{d-1} (d >= 1).
inline Series rescale_series(const Series& f, const Series& alpha) {
  Series r(f.ctx());
  std::vector<Series> pw{Series(f.ctx(), 1)};
  for (const auto& [m, c] : f.terms()) {
    int d = z_degree(m);
    if (d == 0) throw NonzeroConstantTerm("rescaling needs f(0) = 0");
    while (static_cast<int>(pw.size()) < d) pw.push_back(pw.back() * alpha);
    r += Series::monomial(f.ctx(), m, c) * pw[static_cast<std::size_t>(d - 1)];
  }
  r.set_order(f.order());
  return r;
}

}  // namespace detail

// One-dimensional formal group law F(z1, z2).
class FormalGroupLaw {
 public:
  // Verifies unit, commutativity and associativity at the context's
  // truncation; AxiomFailure names the axiom and the lowest failing degree.
  static FormalGroupLaw make(const Series& law) {
    FormalGroupLaw F(law);
    F.check_axioms();
    return F;
  }

  static FormalGroupLaw additive(const CtxPtr& c) {
    return FormalGroupLaw(Series::var(c, "z1") + Series::var(c, "z2"));
  }
  static FormalGroupLaw multiplicative(const CtxPtr& c) { return H_law(Series(c, 1)); }
  // z1 + z2 + h z1 z2
  static FormalGroupLaw H_law(const Series& h) {
    const auto& c = h.ctx();
    auto z1 = Series::var(c, "z1"), z2 = Series::var(c, "z2");
    return FormalGroupLaw(z1 + z2 + h * z1 * z2);
  }
  // y1 + y2 + (q^p - 1) y1 y2 with q = 1 + h
  static FormalGroupLaw F_pullback_H_law(const Series& h, long p) {
    Series one(h.ctx(), 1);
    return H_law((one + h).pow(static_cast<unsigned>(p)) - one);
  }

  const Series& law() const { return law_; }
  const CtxPtr& ctx() const { return law_.ctx(); }

  // F(f, g) for series f, g (any variables other than z1, z2).
  Series apply(const Series& f, const Series& g) const {
    auto c = ctx();
    // route through z3 so that f may itself contain z1 or z2
    Series t = law_.compose("z2", Series::var(c, "z3")).compose("z1", f);
    return t.compose("z3", g);
  }

  void check_axioms() const {
    auto c = ctx();
    auto z1 = Series::var(c, "z1"), z2 = Series::var(c, "z2"), z3 = Series::var(c, "z3");
    Series zero(c);
    fail_if(law_.compose("z2", zero) - z1, "unit law(z,0)=z");
    fail_if(law_.compose("z1", zero) - z2, "unit law(0,z)=z");
    fail_if(law_ - apply(z2, z1), "commutativity");
    fail_if(apply(law_, z3) - apply(z1, apply(z2, z3)), "associativity");
  }

 private:
  explicit FormalGroupLaw(Series s) : law_(std::move(s)) {}

  static void fail_if(const Series& diff, const std::string& what) {
    int d = detail::lowest_z_degree(diff);
    if (d >= 0) throw AxiomFailure(what + " fails in degree " + std::to_string(d));
  }

  Series law_;
};

// Homomorphism given by a series in z with zero constant term.
struct FGLHom {
  Series f;
  FormalGroupLaw src, dst;

  Series at(const std::string& v) const { return detail::rename(f, "z", v); }

  // f(F1(z1, z2)) - F2(f(z1), f(z2)); zero iff f is a homomorphism at this
  // truncation.
  Series defect() const {
    Series lhs = f.compose("z", src.law());
    Series rhs = dst.apply(at("z1"), at("z2"));
    return lhs - rhs;
  }
  bool verify() const { return defect().is_zero(); }
};

// [n](z): [0] = 0, [n] = F([n-1](z), z); negative n through the inverse.
inline Series n_series(const FormalGroupLaw& F, long n) {
  auto c = F.ctx();
  auto z = Series::var(c, "z");
  if (n < 0) {
    // iota(z) solves F(z, iota) = 0; iterate iota <- iota - F(z, iota)
    Series iota = -z;
    for (int it = 0; it <= c->default_order() + 1; ++it) iota = iota - F.apply(z, iota);
    if (!F.apply(z, iota).is_zero()) throw DoesNotConverge("formal inverse");
    return n == -1 ? iota : n_series(F, -n).compose("z", iota);
  }
  Series r(c);
  for (long i = 0; i < n; ++i) r = F.apply(r, z);
  return r;
}

inline FGLHom n_hom(const FormalGroupLaw& F, long n) { return {n_series(F, n), F, F}; }
inline Series inverse_series(const FormalGroupLaw& F) { return n_series(F, -1); }

// alpha^{-1} F(alpha z1, alpha z2).
inline FormalGroupLaw rescale(const FormalGroupLaw& F, const Series& alpha) {
  return FormalGroupLaw::make(detail::rescale_series(F.law(), alpha));
}

inline FGLHom rescale_hom(const FGLHom& f, const Series& alpha) {
  return {detail::rescale_series(f.f, alpha), rescale(f.src, alpha), rescale(f.dst, alpha)};
}

// psi_alpha: rescaled law -> original law, z -> alpha z.
inline FGLHom psi(const FormalGroupLaw& F, const Series& alpha) {
  return {alpha * Series::var(F.ctx(), "z"), rescale(F, alpha), F};
}

// The family a^{-1} F(a z1, a z2) over the parameter a: F at a = 1, the
// additive law at a = 0.
inline FormalGroupLaw deformation_family(const FormalGroupLaw& F, const std::string& param = "a") {
  return rescale(F, Series::var(F.ctx(), param));
}

inline FormalGroupLaw specialize(const FormalGroupLaw& F, const std::string& param, const Q& value) {
  return FormalGroupLaw::make(F.law().substitute(param, value));
}

// Exact division of a series by a coefficient variable; ReductionFailure if
// some term is not divisible.
inline Series divide_by_var(const Series& f, const std::string& v) {
  int vi = f.ctx()->var(v);
  Series r(f.ctx());
  for (const auto& [m, c] : f.terms()) {
    if (m[vi] == 0) throw ReductionFailure("term " + mono_str(*f.ctx(), m) + " not divisible by " + v);
    Mono mm = m;
    --mm[vi];
    r.add_term(mm, c);
  }
  r.normalize();
  return r;
}

// A law whose stored series satisfies the axioms with no truncation at all.
struct PolynomialLaw {
  Series law;  // over a context without z caps
};

inline PolynomialLaw algebraize(const FormalGroupLaw& F) {
  auto c = std::make_shared<SeriesCtx>(*F.ctx());
  c->total.clear();
  Series exact = F.law().recast(c);
  try {
    FormalGroupLaw::make(exact);
  } catch (const AxiomFailure& e) {
    throw NotPolynomial(std::string("stored law is not an exact polynomial law: ") + e.what());
  }
  return {exact};
}

}  // namespace prismlab

namespace prismlab {

// [p](z) for H_law(q-1) reduced mod p: all coefficients below z^p vanish and
// the z^p coefficient is h^{p-1}; reducing further mod h kills the series.
struct PSeriesReduction {
  Series reduced;        // [p](z) mod p, h kept
  bool low_vanish = true;
  bool leading_ok = true;
  bool vanishes_mod_h = true;
  bool ok() const { return low_vanish && leading_ok && vanishes_mod_h; }
};

inline PSeriesReduction p_series_mod_p(long p, int n_z) {
  auto c = fgl_ctx(n_z, {"h"}, Z(p));
  auto F = FormalGroupLaw::H_law(Series::var(c, "h"));
  PSeriesReduction r{n_series(F, p)};
  for (int k = 0; k < p && k <= n_z; ++k)
    if (!coeff_in(r.reduced, "z", k).is_zero()) r.low_vanish = false;
  if (p <= n_z) r.leading_ok = coeff_in(r.reduced, "z", static_cast<int>(p)) == Series::var(c, "h").pow(p - 1);
  r.vanishes_mod_h = r.reduced.substitute("h", 0).is_zero();
  return r;
}

}  // namespace prismlab
