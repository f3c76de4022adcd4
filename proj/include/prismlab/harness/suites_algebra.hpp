#pragma once

#include "harness.hpp"
#include "prismlab/fgl/fgl.hpp"
#include "prismlab/intpoly/intpoly.hpp"
#include "prismlab/pd_dual/pd_dual.hpp"
#include "prismlab/qhopf/b0.hpp"
#include "prismlab/ringcore/prec.hpp"
#include "prismlab/ringcore/series.hpp"
#include "prismlab/witt/bigwitt.hpp"
#include "prismlab/witt/wf_kernel.hpp"
#include "prismlab/witt/witt.hpp"

#include <string>
#include <vector>

namespace prismlab::harness {

// ---------------------------------------------------------------- helpers

inline Witt<Z> random_witt_z(long p, int L, CounterRng& rng, long bound = 20) {
  std::vector<Z> x;
  for (int i = 0; i < L; ++i) x.push_back(rng.range(-bound, bound));
  return Witt<Z>(p, x);
}

inline IntPoly random_intpoly(CounterRng& rng, int deg, long bound = 5) {
  std::vector<Z> a;
  for (int i = 0; i <= deg; ++i) a.push_back(rng.range(-bound, bound));
  return IntPoly(a);
}

inline B0Z random_b0(CounterRng& rng, int deg) {
  B0Z r;
  for (int k = 0; k <= deg; ++k) {
    std::vector<Z> v;
    for (int j = 0; j + k <= deg; ++j) v.push_back(rng.range(-3, 3));
    r.set(k, ZPoly(v));
  }
  return r;
}

// Signed Stirling numbers of the first kind from the recurrence.
inline std::vector<std::vector<Z>> stirling1(int N) {
  std::vector<std::vector<Z>> s(N + 1, std::vector<Z>(N + 1, Z(0)));
  s[0][0] = 1;
  for (int n = 0; n < N; ++n)
    for (int k = 1; k <= n + 1; ++k) s[n + 1][k] = s[n][k - 1] - Z(n) * s[n][k];
  return s;
}

// ---------------------------------------------------------------- ringcore

inline void suite_ringcore_padic_log(SuiteRun& run) {
  const int N = run.n_z(6);
  run.check("log_exp_inverse", [&](CounterRng& rng) {
    auto c = make_ctx({"z"}, [&](SeriesCtx& s) { s.total.push_back({1u, N}); });
    auto z = Series::var(c, "z");
    Tally t("log(exp(a z)) = a z");
    for (int i = 0; i < run.trials(20); ++i) {
      Q a(rng.range(-9, 9), rng.range(1, 5));
      t.add(padic_log(series_exp(z.scaled(a))) == z.scaled(a), [&] { return a.str(); });
    }
    Report r;
    t.into(r);
    return r;
  });
  run.check("log_multiplicative", [&](CounterRng& rng) {
    auto c = make_ctx({"z"}, [&](SeriesCtx& s) { s.total.push_back({1u, N}); });
    auto z = Series::var(c, "z");
    Tally t("log(uv) = log u + log v");
    for (int i = 0; i < run.trials(20); ++i) {
      Series u(c, 1), v(c, 1);
      for (int k = 1; k <= N; ++k) {
        u += z.pow(static_cast<unsigned>(k)).scaled(Q(rng.range(-5, 5)));
        v += z.pow(static_cast<unsigned>(k)).scaled(Q(rng.range(-5, 5)));
      }
      t.add(padic_log(u * v) == padic_log(u) + padic_log(v), [&] { return u.str(); });
    }
    Report r;
    t.into(r);
    return r;
  });
  for (long p : run.primes({2, 3, 5}))
    run.check("log_zeta " + at_p(p), [&](CounterRng&) {
      Prec pr;
      pr.p = p;
      pr.n_p = run.n_p(6);
      auto c = coeff_ctx(CoeffKind::Cyclotomic, pr, {}, true);
      Report r;
      r.add("log(zeta) = 0 mod p^n_p", padic_log(Series::var(c, "zeta"), p).is_zero());
      r.add("log(1+p) != 0", !padic_log(Series(c, 1 + p), p).is_zero());
      return r;
    });
}

// ---------------------------------------------------------------- witt

inline void suite_witt_kernel(SuiteRun& run, int default_trials) {
  for (long p : run.primes({2, 3, 5}))
    for (int L : run.lengths({1, 2, 3, 4}))
      run.check("ghost_universal " + at_pl(p, L), [&](CounterRng& rng) {
        Tally rt("from_ghost(ghost(a)) = a"), add("universal + = ghost +"), mul("universal * = ghost *"),
            neg("universal - = ghost -");
        for (int i = 0; i < run.trials(default_trials); ++i) {
          auto a = random_witt_z(p, L, rng), b = random_witt_z(p, L, rng);
          auto show = [&] { return witt_str(a) + ", " + witt_str(b); };
          rt.add(from_ghost(p, ghost(a)) == a, show);
          add.add(witt_add(a, b, WittBackend::Universal) == witt_add(a, b, WittBackend::Ghost), show);
          mul.add(witt_mul(a, b, WittBackend::Universal) == witt_mul(a, b, WittBackend::Ghost), show);
          neg.add(witt_neg(a, WittBackend::Universal) == witt_neg(a, WittBackend::Ghost), show);
        }
        Report r;
        rt.into(r);
        add.into(r);
        mul.into(r);
        neg.into(r);
        return r;
      });
  for (long p : run.primes({2, 3, 5}))
    run.check("frobenius " + at_p(p), [&](CounterRng& rng) {
      Report r;
      const int L = 4;
      Tally fv("F V x = p x");
      for (int i = 0; i < run.trials(default_trials) / 10 + 1; ++i) {
        auto x = random_witt_z(p, L, rng);
        fv.add(frobenius(verschiebung(x)) == truncate(witt_mul(witt_from_int(p, L, Z(0), Z(p)), x), L - 1),
               [&] { return witt_str(x); });
      }
      fv.into(r);
      auto c = make_ctx({"a"});
      auto a = Series::var(c, "a");
      bool teich = true;
      for (int l = 2; l <= L; ++l) teich = teich && frobenius(teichmuller(p, l, a)) == teichmuller(p, l - 1, a.pow(static_cast<unsigned>(p)));
      r.add("F [a] = [a^p]", teich, "symbolic a, L <= 4");
      return r;
    });
  run.check("big_frobenius", [&](CounterRng& rng) {
    const int N = run.N_big(12);
    auto c = make_ctx({"z"}, [&](SeriesCtx& s) { s.cap[0] = N; });
    Tally comp("F_m F_n = F_mn, mn <= 4");
    for (int i = 0; i < run.trials(default_trials) / 50 + 1; ++i) {
      Series s(c, 1);
      for (int k = 1; k <= N; ++k) s += Series::var(c, "z").pow(static_cast<unsigned>(k)).scaled(Q(rng.range(-3, 3)));
      BigWitt w(s, N);
      for (int m = 1; m <= 4; ++m)
        for (int n = 1; m * n <= 4; ++n)
          comp.add(w.frobenius(n).frobenius(m) == w.frobenius(m * n),
                   [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " w=" + s.str(); });
    }
    Report r;
    comp.into(r);
    return r;
  }, "Appendix C §sss:W_big, \"the subgroup of $A[[z]]^\\times$\"");
}

inline void suite_witt_joyal(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("joyal_lift " + at_p(p), [&](CounterRng& rng) {
      const int L = run.lengths({3})[0];
      auto c = make_ctx({"q"});
      auto q = Series::var(c, "q");
      auto phi = [&](const Series& f) { return f.compose("q", q.pow(static_cast<unsigned>(p))); };
      Report r;
      r.add("lift of q is [q]", joyal_lift(q, p, L, phi) == teichmuller(p, L, q));
      Tally hom("lift is a ring map"), gh("ghost_n = phi^n");
      for (int i = 0; i < run.trials(10); ++i) {
        Series a(c, rng.range(-3, 3)), b(c, rng.range(-3, 3));
        a += q.scaled(rng.range(-2, 2));
        b += q.pow(2).scaled(rng.range(-2, 2));
        auto la = joyal_lift(a, p, L, phi), lb = joyal_lift(b, p, L, phi);
        hom.add(joyal_lift(a + b, p, L, phi) == la + lb && joyal_lift(a * b, p, L, phi) == la * lb,
                [&] { return a.str() + ", " + b.str(); });
        auto g = ghost(la);
        Series it = a;
        bool ok = true;
        for (int n = 0; n < L; ++n, it = phi(it)) ok = ok && g[static_cast<std::size_t>(n)] == it;
        gh.add(ok, [&] { return a.str(); });
      }
      hom.into(r);
      gh.into(r);
      auto bad = [&](const Series& f) { return f.compose("q", q.scaled(2)); };
      bool refused = false;
      if (p != 2) {
        try {
          joyal_lift(q, p, 2, bad);
        } catch (const NotADeltaRing&) {
          refused = true;
        }
        r.add("non-Frobenius lift refused", refused);
      }
      return r;
    });
}

inline Report wf_report(const WfKernelReport& w, const std::string& what) {
  Report r;
  r.add("px = x^p = 0 and {Fy=py} = {Fy=0}", w.ok(),
        what + ", kernel " + tag(w.kernel, w.checked) + (w.ok() ? "" : ", " + w.counterexamples[0]));
  return r;
}

inline void suite_witt_wf_kernel(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    for (int L : run.lengths({4}))
      run.check("random " + at_pl(p, L), [&](CounterRng& rng) {
        return wf_report(wf_kernel_random(p, L, 3, run.trials(100), rng), "F_p[a]/(a^3)");
      });
}

// ---------------------------------------------------------------- fgl

inline void suite_fgl_laws(SuiteRun& run, const std::vector<long>& dflt_primes) {
  const int N = run.n_z(8);
  run.check("axioms order " + std::to_string(N), [&](CounterRng&) {
    auto c = fgl_ctx(N);
    auto h = Series::var(c, "h");
    Report r;
    auto ok = [&](const FormalGroupLaw& F) {
      try {
        F.check_axioms();
        return true;
      } catch (const AxiomFailure&) {
        return false;
      }
    };
    r.add("additive", ok(FormalGroupLaw::additive(c)));
    r.add("multiplicative", ok(FormalGroupLaw::multiplicative(c)));
    r.add("H_law(h)", ok(FormalGroupLaw::H_law(h)));
    for (long p : run.primes(dflt_primes)) r.add("F^*H_law " + at_p(p), ok(FormalGroupLaw::F_pullback_H_law(h, p)));
    return r;
  });
  run.check("n_series", [&](CounterRng&) {
    auto c = fgl_ctx(N);
    auto h = Series::var(c, "h"), z = Series::var(c, "z");
    auto H = FormalGroupLaw::H_law(h);
    Report r;
    bool closed = true;
    for (long n = 1; n <= 5; ++n) {
      Series oracle(c);
      for (long k = 1; k <= n; ++k) oracle += z.pow(static_cast<unsigned>(k)) * h.pow(static_cast<unsigned>(k - 1)).scaled(Q(binom(n, static_cast<unsigned>(k))));
      closed = closed && n_series(H, n) == oracle;
    }
    r.add("[n](z) = ((1+hz)^n - 1)/h", closed, "n <= 5");
    bool hom = true;
    for (long n = -2; n <= 3; ++n) hom = hom && n_hom(H, n).verify();
    r.add("[n] is an endomorphism", hom, "-2 <= n <= 3");
    return r;
  }, "§sss:structures on H_Q, \"\\varphi_Q (F^*s_Q)=ps_Q\"");
  for (long p : run.primes(dflt_primes))
    run.check("p_series_mod_p " + at_p(p), [&](CounterRng&) {
      auto red = p_series_mod_p(p, N);
      Report r;
      r.add("coefficients below z^p vanish mod (p, q-1)", red.low_vanish && red.vanishes_mod_h, red.reduced.str());
      r.add("leading term h^(p-1) z^p mod p", red.leading_ok);
      return r;
    });
}

inline void suite_fgl_rescale(SuiteRun& run) {
  const int N = run.n_z(8);
  run.check("rescale", [&](CounterRng&) {
    auto c = fgl_ctx(N);
    auto h = Series::var(c, "h"), a = Series::var(c, "a"), b = Series::var(c, "b");
    auto z1 = Series::var(c, "z1"), z2 = Series::var(c, "z2");
    auto G = FormalGroupLaw::multiplicative(c);
    auto H = FormalGroupLaw::H_law(h);
    Report r;
    r.add("G_m rescaled by h is H_law(h)", rescale(G, h).law() == H.law());
    r.add("rescale by 0 is additive", rescale(G, Series(c)).law() == FormalGroupLaw::additive(c).law());
    r.add("rescale(rescale(H, a), b) = rescale(H, ab)", rescale(rescale(H, a), b).law() == rescale(H, a * b).law());
    r.add("a F_a(z1, z2) = F(a z1, a z2)", a * rescale(H, a).law() == H.apply(a * z1, a * z2));
    bool homs = true;
    for (long n : {2, 3, -1}) {
      auto f = rescale_hom(n_hom(H, n), a);
      homs = homs && f.verify() && f.f == n_series(rescale(H, a), n);
    }
    r.add("rescaled [n] is [n] of the rescaled law", homs);
    return r;
  });
  run.check("deformation", [&](CounterRng&) {
    auto c = fgl_ctx(N);
    auto h = Series::var(c, "h"), a = Series::var(c, "a");
    auto D = deformation_family(FormalGroupLaw::multiplicative(c));
    Report r;
    r.add("a = 0 fibre is additive", specialize(D, "a", 0).law() == FormalGroupLaw::additive(c).law());
    r.add("a = 1 fibre is G_m", specialize(D, "a", 1).law() == FormalGroupLaw::multiplicative(c).law());
    r.add("family of H_law(h) is H_law(ah)",
          deformation_family(FormalGroupLaw::H_law(h)).law() == FormalGroupLaw::H_law(a * h).law());
    return r;
  }, "§3.5 (sss:deformation to normal cone), \"deformation to the normal cone\"");
  run.check("algebraize", [&](CounterRng&) {
    auto c = fgl_ctx(N);
    Report r;
    bool poly = true;
    try {
      algebraize(FormalGroupLaw::H_law(Series::var(c, "h")));
    } catch (const NotPolynomial&) {
      poly = false;
    }
    r.add("H_law is a polynomial law", poly);
    auto z1 = Series::var(c, "z1"), z2 = Series::var(c, "z2");
    auto T = FormalGroupLaw::make(padic_log(series_exp(z1) + series_exp(z2) - Series(c, 1)));
    bool refused = false;
    try {
      algebraize(T);
    } catch (const NotPolynomial&) {
      refused = true;
    }
    r.add("log(e^z1 + e^z2 - 1) is refused", refused);
    return r;
  }, "§sss:H_Q^alg, \"The r.h.s. of \\eqref{e:group law for H_Q} is a polynomial\"");
}

// ---------------------------------------------------------------- intpoly

inline void suite_intpoly_basis(SuiteRun& run) {
  run.check("multiplication", [&](CounterRng& rng) {
    Tally mul("product matches rational expansion and values");
    for (int i = 0; i < run.trials(50); ++i) {
      auto a = random_intpoly(rng, 5), b = random_intpoly(rng, 4);
      bool ok = a * b == to_binomial(to_monomial(a) * to_monomial(b));
      for (long m : {-7, -1, 0, 3, 11}) ok = ok && (a * b).eval(m) == a.eval(m) * b.eval(m);
      mul.add(ok, [&] { return a.str() + ", " + b.str(); });
    }
    Tally rt("binomial coordinates round trip");
    for (int i = 0; i < run.trials(50); ++i) {
      auto a = random_intpoly(rng, 8, 100);
      rt.add(to_binomial(to_monomial(a)) == a, [&] { return a.str(); });
    }
    Report r;
    mul.into(r);
    rt.into(r);
    bool refused = false;
    try {
      to_binomial(QPoly::monomial(1, Q(1, 2)));
    } catch (const NotIntegerValued&) {
      refused = true;
    }
    r.add("u/2 is refused", refused);
    return r;
  });
}

inline void suite_intpoly_lambda(SuiteRun& run) {
  run.check("lambda_addition", [&](CounterRng& rng) {
    Tally t("lambda_n(x+y) = sum lambda_i(x) lambda_{n-i}(y)");
    for (int i = 0; i < run.trials(20); ++i) {
      auto x = random_intpoly(rng, 3), y = random_intpoly(rng, 3);
      bool ok = true;
      for (unsigned n = 0; n <= 5; ++n) {
        IntPoly rhs;
        for (unsigned j = 0; j <= n; ++j) rhs = rhs + lambda_op(j, x) * lambda_op(n - j, y);
        ok = ok && lambda_op(n, x + y) == rhs;
      }
      t.add(ok, [&] { return x.str() + ", " + y.str(); });
    }
    Report r;
    t.into(r);
    r.add("lambda_2(u) = C(u,2)", lambda_op(2, IntPoly::u()) == IntPoly::binomial(2));
    r.add("psi^n = id", adams(3, IntPoly::u() * IntPoly::u()) == IntPoly::u() * IntPoly::u());
    return r;
  });
  for (long p : run.primes({2, 3, 5}))
    run.check("delta " + at_p(p), [&](CounterRng& rng) {
      Tally t("x^p = x mod p and delta_p(x) in Int");
      for (int i = 0; i < run.trials(100); ++i) {
        auto x = random_intpoly(rng, static_cast<int>(rng.range(0, 8)), 50);
        auto diff = x.pow(static_cast<unsigned>(p)) - x;
        bool ok = true;
        for (const auto& c : diff.coords()) ok = ok && c % p == 0;
        ok = ok && delta_p(x, p) * IntPoly(p) == x - x.pow(static_cast<unsigned>(p));
        t.add(ok, [&] { return x.str(); });
      }
      Report r;
      t.into(r);
      return r;
    }, "§sss:generators of Int otimesZ_p, \"\\delta (x):=(x-x^p)/p\"");
}

inline void suite_intpoly_mahler(SuiteRun& run) {
  run.check("binomial_table", [&](CounterRng&) {
    auto t = mahler_table(IntPoly::binomial(2), 2, 1);
    Report r;
    r.add("C(u,2) mod 2 has period 4", t.period == 4);
    r.add("C(u,2) mod 2 = [0,0,1,1]", t.residues == std::vector<Z>{0, 0, 1, 1});
    bool diff = true;
    for (unsigned n = 1; n <= 6; ++n) {
      auto d = difference(IntPoly::binomial(n));
      diff = diff && d.value == IntPoly::binomial(n - 1) && d.nilpotence == static_cast<int>(n) + 1;
    }
    r.add("Delta C(u,n) = C(u,n-1), nilpotent of order n+1", diff);
    return r;
  });
  for (long p : run.primes({2, 3}))
    run.check("isomorphism " + at_p(p), [&](CounterRng&) {
      Report r;
      for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= 2; ++k) {
          auto m = mahler_isomorphism_check(p, n, k);
          r.add("Int/p^" + std::to_string(n) + " onto period p^" + std::to_string(k), m.ok(),
                "rank " + tag(m.rank_image, m.rank_target) + (m.failures.empty() ? "" : ", " + m.failures[0]));
        }
      return r;
    });
}

inline Report delta_basis_report(long p, long step) {
  const long top = p * p * p;
  Tally t("delta-basis expansion of C(u,n) is p-integral and round trips");
  for (long n = 0; n <= top; n += step) {
    auto x = IntPoly::binomial(static_cast<unsigned>(n));
    auto e = delta_basis_expand(x, p);
    t.add(e.p_integral() && to_binomial(delta_basis_combine(e)) == x, [&] { return "n=" + std::to_string(n); });
  }
  if (top % step) {
    auto x = IntPoly::binomial(static_cast<unsigned>(top));
    auto e = delta_basis_expand(x, p);
    t.add(e.p_integral() && to_binomial(delta_basis_combine(e)) == x, [&] { return "n=" + std::to_string(top); });
  }
  Report r;
  t.into(r);
  return r;
}

inline void suite_intpoly_delta_basis(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("roundtrip " + at_p(p), [&](CounterRng&) { return delta_basis_report(p, p == 5 ? 7 : 1); });
}

// ---------------------------------------------------------------- qhopf

inline Report b0_structure_report(int total) {
  Report r;
  auto ctx = make_ctx({"t", "h"});
  Tally sc("c_m c_n = sum over Z[h] of c_k, m+n <= " + std::to_string(total));
  for (int m = 0; m <= total; ++m)
    for (int n = 0; m + n <= total; ++n) {
      auto prod = B0Z::c(m) * B0Z::c(n);
      sc.add(to_series(prod, ctx) == c_poly(ctx, m) * c_poly(ctx, n), [&] { return std::to_string(m) + "," + std::to_string(n); });
    }
  sc.into(r);
  Tally sp("h=1 is Int, h=0 is divided powers");
  for (int m = 0; m <= total / 2; ++m)
    for (int n = 0; m + n <= total; ++n) {
      auto prod = B0Z::c(m) * B0Z::c(n);
      std::vector<Z> at1(static_cast<std::size_t>(m + n + 1), Z(0));
      B0Z at0;
      for (const auto& [k, v] : prod.coords()) {
        at1[static_cast<std::size_t>(k)] = v.eval(Z(1));
        at0.set(k, ZPoly(v.eval(Z(0))));
      }
      sp.add(IntPoly(at1) == IntPoly::binomial(static_cast<unsigned>(m)) * IntPoly::binomial(static_cast<unsigned>(n)) &&
                 at0 == B0Z::c(m + n).scaled(ZPoly(binom(m + n, static_cast<unsigned>(n)))),
             [&] { return std::to_string(m) + "," + std::to_string(n); });
    }
  sp.into(r);
  return r;
}

inline Report b0_adams_report(int trials, int deg, unsigned nmax, CounterRng& rng) {
  Tally hom("psi^n is a ring map"), cop("psi^n commutes with the coproduct"), comp("psi^m psi^n = psi^mn");
  for (int i = 0; i < trials; ++i) {
    auto x = random_b0(rng, deg), y = random_b0(rng, deg);
    for (unsigned n = 1; n <= nmax; ++n) {
      auto what = [&] { return "n=" + std::to_string(n); };
      hom.add(adams(n, x * y) == adams(n, x) * adams(n, y) && adams(n, x + y) == adams(n, x) + adams(n, y), what);
      cop.add(b0_coproduct(adams(n, x)) == adams(n, b0_coproduct(x)), what);
      for (unsigned m = 1; m * n <= nmax; ++m) comp.add(adams(m, adams(n, x)) == adams(m * n, x), what);
    }
  }
  Report r;
  hom.into(r);
  cop.into(r);
  comp.into(r);
  return r;
}

inline void suite_qhopf_structure(SuiteRun& run) {
  run.check("structure_constants", [&](CounterRng&) { return b0_structure_report(run.n_z(8)); });
  run.check("coproduct", [&](CounterRng& rng) {
    Tally mult("coproduct is multiplicative"), coas("coassociative"), cou("counit");
    for (int i = 0; i < run.trials(10); ++i) {
      auto a = random_b0(rng, 4), b = random_b0(rng, 4);
      mult.add(b0_coproduct(a * b) == tensor_mul(b0_coproduct(a), b0_coproduct(b)));
      auto d = b0_coproduct(a);
      coas.add(coassoc_left(d) == coassoc_right(d));
      B0Z left;
      for (const auto& [ij, v] : d)
        if (ij.second == 0) left.add(ij.first, v);
      cou.add(left == a);
    }
    Report r;
    mult.into(r);
    coas.into(r);
    cou.into(r);
    return r;
  }, "Prop p:G=Spec B_0(iii), \"t\\mapsto t\\otimes 1+1\\otimes t\"");
}

inline void suite_qhopf_adams(SuiteRun& run) {
  run.check("adams", [&](CounterRng& rng) { return b0_adams_report(run.trials(6), 8, 4, rng); });
}

inline void suite_qhopf_delta(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("delta " + at_p(p), [&](CounterRng& rng) {
      Report r;
      auto t = B0Z::t();
      B0Z phi_p;
      for (long i = 0; i < p; ++i) phi_p = phi_p + B0Z::q().pow(static_cast<unsigned>(i));
      r.add("t^p + p delta(t) = Phi_p(q) t",
            t.pow(static_cast<unsigned>(p)) + b0_delta(t, p).scaled(ZPoly(Z(p))) == phi_p * t);
      Tally w("psi^p x = x^p + p delta(x)");
      for (int i = 0; i < run.trials(10); ++i) {
        auto x = random_b0(rng, 5);
        w.add(adams(static_cast<unsigned>(p), x) == x.pow(static_cast<unsigned>(p)) + b0_delta(x, p).scaled(ZPoly(Z(p))));
      }
      w.into(r);
      return r;
    });
  run.check("int_h", [&](CounterRng& rng) {
    Tally t("B0 -> Int[h] is an injective ring map onto sum h^n Int_{<=n}");
    for (int i = 0; i < run.trials(20); ++i) {
      auto a = random_b0(rng, 6), b = random_b0(rng, 6);
      IntH prod;
      for (const auto& [k, f] : b0_to_int_h(a))
        for (const auto& [j, g] : b0_to_int_h(b)) add_to(prod, k + j, f * g);
      bool ok = b0_from_int_h(b0_to_int_h(a)) == a && b0_to_int_h(a * b) == prod;
      for (const auto& [j, f] : b0_to_int_h(a)) ok = ok && f.degree() <= j;
      t.add(ok);
    }
    Report r;
    t.into(r);
    return r;
  }, "§sss:B_0 in terms of Int, \"takes $t$ to $hu$\"");
}

// ---------------------------------------------------------------- pd_dual

inline Report pairing_report(int mmax, int nmax) {
  Tally t("<delta_m, gamma_n> = C(m, n)");
  for (long m = -mmax; m <= mmax; ++m)
    for (int n = 0; n <= nmax; ++n)
      t.add(pair_xu(m, pd_gamma(n, nmax)) == binom(m, static_cast<unsigned>(n)),
            [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
  Report r;
  t.into(r);
  return r;
}

inline Report stirling_report(int N, int K) {
  auto s = stirling1(N);
  Tally t("(log x)^k/k! has Stirling coordinates");
  for (int k = 1; k <= K; ++k) {
    PDElem l = log_sharp_power(k, N);
    for (int n = 0; n <= N; ++n)
      t.add(l[n] == s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
            [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
  }
  Report r;
  t.into(r);
  return r;
}

inline void suite_pd_pairing(SuiteRun& run) {
  run.check("duality_matrix", [&](CounterRng&) { return pairing_report(6, run.n_z(12)); });
}

inline void suite_pd_distributions(SuiteRun& run) {
  run.check("convolution", [&](CounterRng&) {
    Tally t("delta_m delta_n = delta_{m+n}");
    for (long m = -6; m <= 6; ++m)
      for (long n = -6; n <= 6; ++n) {
        int order = static_cast<int>(std::labs(m) + std::labs(n)) + 2;
        t.add(distr_mul(delta_to_e(m, order), delta_to_e(n, order)) == delta_to_e(m + n, order));
      }
    Report r;
    t.into(r);
    return r;
  });
  run.check("bialgebra", [&](CounterRng& rng) { return bialgebra_duality_check(10, run.trials(100), rng); },
            "Lemma l:the dual of G_m^sharp, \"(\\delta_1-\\delta_0)^n\\in n!\\cdot \\Distr\"");
}

inline void suite_pd_log_sharp(SuiteRun& run) {
  run.check("stirling", [&](CounterRng&) { return stirling_report(20, 10); });
}

inline void suite_pd_mu_p(SuiteRun& run, int default_trials) {
  for (long p : run.primes({2, 3, 5}))
    run.check("pd " + at_p(p), [&](CounterRng& rng) { return mu_p_pd_check(p, run.trials(default_trials), rng); });
}

inline void suite_pd_gsharp(SuiteRun& run, int default_trials) {
  for (long p : run.primes({2, 3}))
    run.check("reduction " + at_p(p), [&](CounterRng& rng) {
      return gsharp_comparison(p, run.n_z(12), run.trials(default_trials), rng);
    });
}

inline void suite_pd_exact_sequence(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    run.check("sequence " + at_p(p), [&](CounterRng&) { return exact_sequence_check(p, run.n_p(4), 5); });
}

}  // namespace prismlab::harness
