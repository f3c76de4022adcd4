#pragma once

#include "harness.hpp"
#include "prismlab/cartier_witt/cartier_witt.hpp"
#include "prismlab/derham/derham.hpp"
#include "prismlab/qprism/qprism.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace prismlab::harness {

// ---------------------------------------------------------------- cartier_witt

inline Report eigen_universal_report(int N, int mmax) {
  auto f = universal_pairing(N);
  auto c = f.f.ctx();
  Series q = Series(c, 1) + Series::var(c, "h");
  auto w1 = embed_G_I(f), w2 = embed_G_II(f);
  Report r;
  r.add("pairing satisfies the functional equation", f.satisfies_equation(), "N=" + std::to_string(N));
  r.add("both embeddings have coefficients in B0", b0_certificate(w1) && b0_certificate(w2));
  for (int m = 2; m <= mmax; ++m) {
    r.add("F_m w = [q-1]^{m-1} w over B0", eigencheck_I(w1, f.qm1, m), "m=" + std::to_string(m));
    r.add("F_m w = (1+[q]+...+[q]^{m-1}) w over B0", eigencheck_II(w2, q, m), "m=" + std::to_string(m));
  }
  return r;
}

inline Report eigen_numeric_report(int N, int mmax, int trials, CounterRng& rng) {
  Tally t1("first eigen-equation at integer points"), t2("second eigen-equation at integer points");
  for (int i = 0; i < trials; ++i) {
    Z q = rng.range(2, 7);
    long u = rng.range(-5, 5);
    auto f = pairing_at(q, u, N);
    Series qs(f.f.ctx(), Q(q));
    auto w1 = embed_G_I(f), w2 = embed_G_II(f);
    for (int m = 1; m <= mmax; ++m) {
      auto what = [&] { return "q=" + q.str() + " u=" + std::to_string(u) + " m=" + std::to_string(m); };
      t1.add(eigencheck_I(w1, f.qm1, m), what);
      t2.add(eigencheck_II(w2, qs, m), what);
    }
  }
  Report r;
  t1.into(r);
  t2.into(r);
  return r;
}

inline Report q2_degeneration_report(int N) {
  Tally t("q=2: F_n w = w and w = embed_R");
  for (long u : {-3, -1, 0, 2, 7}) {
    auto w = embed_G_I(pairing_at(Z(2), u, N));
    t.add(is_frobenius_fixed(w, 4) && w == embed_R(r_point(u, N)), [&] { return "u=" + std::to_string(u); });
  }
  Report r;
  t.into(r);
  return r;
}

inline void suite_cw_embeddings(SuiteRun& run) {
  const int N = run.N_big(12);
  run.check("universal", [&](CounterRng&) { return eigen_universal_report(std::min(N, 8), 3); });
  run.check("numeric", [&](CounterRng& rng) { return eigen_numeric_report(N, 3, run.trials(20), rng); });
  run.check("q_equals_2", [&](CounterRng&) { return q2_degeneration_report(N); },
            "§sss:R to W, \"the formal power series $f(1-z)\\in A[[z]]^\\times$\"");
}

inline void suite_cw_psi(SuiteRun& run) {
  run.check("functoriality", [&](CounterRng&) {
    Tally eig("Psi_n preserves the eigen-equations"), comp("Psi_k Psi_n = Psi_kn");
    for (long qv : {2, 3})
      for (long u : {-1, 2}) {
        auto f = pairing_at(Z(qv), u, run.N_big(12));
        auto c = f.f.ctx();
        Series q(c, Q(qv)), one(c, 1);
        auto w1 = embed_G_I(f), w2 = embed_G_II(f);
        for (int n = 1; n <= 3; ++n) {
          auto [a1, qa] = psi_I(n, w1, q);
          auto [a2, qb] = psi_II(n, w2, q);
          for (int m = 1; m <= 4 && m <= a2.order(); ++m)
            eig.add(eigencheck_I(a1, qa - one, m) && eigencheck_II(a2, qb, m));
          for (int k = 1; n * k <= 4; ++k) {
            auto b1 = psi_I(k, a1, qa), c1 = psi_I(n * k, w1, q);
            auto b2 = psi_II(k, a2, qb), c2 = psi_II(n * k, w2, q);
            comp.add(b1 == c1 && b2 == c2, [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
          }
        }
      }
    Report r;
    eig.into(r);
    comp.into(r);
    return r;
  });
}

inline void suite_cw_wf_ring(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    run.check("normal_form " + at_p(p), [&](CounterRng& rng) {
      auto c = wf_ctx(6);
      Tally t("normal form agrees on F-fixed points of W(Z)");
      for (int it = 0; it < run.trials(15); ++it) {
        Series f(c);
        for (int k = 0; k < 4; ++k) {
          Mono m{};
          m[0] = static_cast<std::uint16_t>(rng.range(0, 2 * p));
          m[1] = static_cast<std::uint16_t>(rng.range(0, p));
          f += Series::monomial(c, m, Q(rng.range(-5, 5)));
        }
        Series red = wf_ring_reduce(f, p);
        bool ok = true;
        for (const auto& [m, cf] : red.terms())
          for (int i = 0; i < 6; ++i) ok = ok && m[i] < p;
        for (long a : {-2, 0, 1, 3}) {
          auto x = wf_point(p, Z(a), 6);
          ok = ok && wf_eval(red, x) == wf_eval(f, x);
        }
        t.add(ok, [&] { return f.str(); });
      }
      Report r;
      t.into(r);
      return r;
    });
}

inline void suite_cw_m_series(SuiteRun& run) {
  run.check("m_series", [&](CounterRng&) {
    Report r;
    for (int m = 1; m <= 4; ++m)
      for (const auto& f : m_series_identity(m, run.n_z(7)).items) r.add(f.name + " m=" + std::to_string(m), f.ok, f.detail);
    return r;
  });
  run.check("hom_pullback", [&](CounterRng&) {
    Report r;
    for (int n = 1; n <= 6; ++n)
      for (const auto& f : hom_pullback_check(n).items) r.add(f.name, f.ok, f.detail);
    return r;
  }, "Lemma l:motivation of lambda-structure(i) proof, \"given by $z=\\frac{q^n-1}{q-1}\\cdot y$\"");
}

// ---------------------------------------------------------------- qprism

inline void suite_qprism_gq_law(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("group " + at_p(p), [&](CounterRng& rng) {
      const int L = run.lengths({3})[0];
      auto c = qseries_ctx(run.n_q(4));
      Series q = q_of(c);
      auto s = sigma(q, p, L);
      Report r;
      r.add("sigma(q) maps to q^p", gq_to_unit(s) == q.pow(static_cast<unsigned>(p)));
      Tally ax("law is commutative, associative, with unit"), hom("unit map is a homomorphism");
      auto e = gq_unit_point(q, p, L);
      for (int i = 0; i < run.trials(5); ++i) {
        long r1 = rng.range(0, 9), r2 = rng.range(0, 9);
        auto a = gq_scalar(r1, s), b = gq_scalar(r2, s);
        ax.add(gq_op(a, e).x == a.x && gq_op(a, b).x == gq_op(b, a).x &&
               gq_op(gq_op(a, b), s).x == gq_op(a, gq_op(b, s)).x && gq_op(a, b).x == gq_scalar(r1 + r2, s).x);
        hom.add(gq_to_unit(gq_op(a, b)) == q.pow(static_cast<unsigned>((r1 + r2) * p)));
      }
      ax.into(r);
      hom.into(r);
      if (L >= 2) {
        auto fs = gq_frobenius(s);
        auto sp = sigma(q.pow(static_cast<unsigned>(p)), p, L - 1);
        r.add("F(sigma(q)) = sigma(q^p)", fs.x == sp.x && fs.q == sp.q);
      }
      return r;
    });
}

inline Report q_exp_report(long p, int n_p, int n_q, int d) {
  BHat B{p, n_p, n_q, d};
  auto a = q_exponential(B), b = q_exp_alt(B);
  Report r;
  r.add("q^{pt/(q-1)} = sum alpha_n exactly", a.value == b.value,
        "p=" + std::to_string(p) + " n_q=" + std::to_string(n_q) + " d=" + std::to_string(d) + ", alpha_n = 0 past n=" +
            std::to_string(b.last_exact));
  r.add("agreement mod p^n_p", B.congruent(a.value, b.value));
  return r;
}

inline void suite_qprism_q_exponential(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    run.check("agreement " + at_p(p), [&](CounterRng&) { return q_exp_report(p, run.n_p(4), run.n_q(4), 4); });
}

inline void suite_qprism_canonical_point(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({2}))
      run.check("teichmuller " + at_pl(p, L), [&](CounterRng&) {
        if (L >= 3) return canonical_point_check(BHat{p, run.n_p(4), run.n_q(3), 3}, L);
        return canonical_point_check(BHat{p, run.n_p(4), run.n_q(4), 4}, L);
      });
}

inline void suite_qprism_q_log(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    run.check("q_log " + at_p(p), [&](CounterRng& rng) {
      auto c = qseries_ctx(run.n_q(4));
      Series q = q_of(c), h = Series::var(c, "h");
      auto s = sigma(q, p, 2);
      Report r;
      r.add("log_q(sigma(q)) = q - 1", q_log(s) == h);
      r.add("log_q(unit) = 0", q_log(gq_unit_point(q, p, 2)).is_zero());
      Tally add("log_q is additive");
      for (int i = 0; i < run.trials(5); ++i) {
        long r1 = rng.range(0, 30), r2 = rng.range(0, 30);
        auto a = gq_scalar(r1, s), b = gq_scalar(r2, s);
        add.add(q_log(gq_op(a, b)) == q_log(a) + q_log(b));
      }
      add.into(r);
      BHat B{p, 4, 4, 4};
      r.add("log_q(canonical point) = t", q_log(canonical_point(B, 2).point) == B.t());
      return r;
    });
}

inline Report equivariance_all(long p, int n_q, int n_z) {
  Report r;
  for (long n : {2, 3, 4}) {
    if (n % p == 0) continue;
    for (const auto& f : equivariance_report(n, p, n_q, n_z).items) r.add(f.name, f.ok, f.detail);
  }
  return r;
}

inline void suite_qprism_equivariance(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("equivariance " + at_p(p), [&](CounterRng&) { return equivariance_all(p, run.n_q(6), run.n_z(6)); });
}

inline void suite_qprism_hodge_tate(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("lambda " + at_p(p), [&](CounterRng&) { return hodge_tate_check(p, run.n_p(6), run.n_z(5)); });
}

inline void suite_qprism_r0(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    run.check("relation " + at_p(p), [&](CounterRng&) { return r0_relation_check(BHat{p, run.n_p(4), run.n_q(4), 4}); });
  for (long p : run.primes({2, 3, 5}))
    run.check("identities " + at_p(p), [&](CounterRng&) { return qprism_identities(p); },
              "e:group law for F^*H_Q, \"y_1+y_2+(q^p-1)y_1y_2\"");
}

// ---------------------------------------------------------------- derham

inline void suite_derham_isomorphism(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({2, 3, 4})) {
      const int n_p = run.n_p(6);
      std::string name = "cell " + at_pl(p, L) + " n_p=" + std::to_string(n_p);
      if (L < 2) {
        run.skip(name, "the de Rham checks need L >= 2");
        continue;
      }
      run.check(name, [&](CounterRng& rng) { return derham_cell(p, L, n_p, run.trials(30), rng).rep; });
    }
}

inline void suite_derham_frobenius(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({3})) {
      if (L < 2) {
        run.skip("h " + at_pl(p, L), "needs L >= 2");
        continue;
      }
      run.check("h " + at_pl(p, L), [&](CounterRng& rng) {
        Tally t("F x = ((1+px)^p - 1)/p");
        for (int i = 0; i < run.trials(20); ++i) {
          auto x = g_exp(wfp_random_point(p, L, run.n_p(6), rng));
          t.add(frob_power_identity(x).ok(), [&] { return witt_str(x); });
        }
        Report r;
        t.into(r);
        return r;
      });
    }
}

inline void suite_derham_id_minus_v(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({4}))
      run.check("inverse " + at_pl(p, L), [&](CounterRng& rng) {
        Tally t("(id - V) lands in F = 0 and is inverted");
        for (int i = 0; i < run.trials(20); ++i) {
          auto y = wfp_random_point(p, L, run.n_p(6), rng);
          auto z = id_minus_V(y);
          t.add((L < 2 || witt_is_zero(frobenius(z))) && id_minus_V_inverse(z) == y, [&] { return witt_str(y); });
        }
        Report r;
        t.into(r);
        bool refused = false;
        try {
          std::vector<ModInt> one{ModInt(1, static_cast<std::uint64_t>(ipow64(p, 4)))};
          for (int i = 1; i < L; ++i) one.emplace_back(0, static_cast<std::uint64_t>(ipow64(p, 4)));
          id_minus_V(Witt<ModInt>(p, one));
        } catch (const EigenCheckFailed&) {
          refused = true;
        }
        r.add("input outside F = p is refused", refused || L < 2);
        return r;
      });
}

// Exhaustive scans are shared between the corrected and printed formula
// suites; the key is (p, L, k).
inline std::pair<Report, DiscrepancyStats> discrepancy_scan(long p, int L, int k) {
  static std::mutex mu;
  static std::map<std::tuple<long, int, int>, std::pair<Report, DiscrepancyStats>> memo;
  auto key = std::make_tuple(p, L, k);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  DiscrepancyStats st;
  Report rep = discrepancy_check(p, L, k, &st);
  std::lock_guard<std::mutex> lk(mu);
  return memo.emplace(key, std::make_pair(rep, st)).first->second;
}

constexpr long kExhaustiveLimit = 20000;

inline bool exhaustive_fits(long p, int L, int k) {
  long n = 1;
  for (int i = 0; i < L * k; ++i)
    if ((n *= p) > kExhaustiveLimit) return false;
  return true;
}

inline Report literal_report(long p, int L, int k) {
  auto st = discrepancy_scan(p, L, k).second;
  Report r;
  r.add("f(z) = f_naive(Vz - z)", st.literal == st.kernel,
        tag(st.literal, st.kernel) + " of W^(F) at " + at_pl(p, L) + " over F_p[a]/(a^" + std::to_string(k) + ")");
  return r;
}

inline void suite_derham_discrepancy(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({3})) {
      std::string name = "exhaustive " + at_pl(p, L);
      if (L < 2 || !exhaustive_fits(p, L, 3)) {
        run.skip(name, "W_L(F_p[a]/(a^3)) has more than " + std::to_string(kExhaustiveLimit) + " elements or L < 2");
        continue;
      }
      run.check(name, [&](CounterRng&) { return discrepancy_scan(p, L, 3).first; });
    }
}

inline void suite_derham_discrepancy_literal(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({3})) {
      std::string name = "printed " + at_pl(p, L);
      if (L < 2 || !exhaustive_fits(p, L, 3)) {
        run.skip(name, "W_L(F_p[a]/(a^3)) has more than " + std::to_string(kExhaustiveLimit) + " elements or L < 2");
        continue;
      }
      run.check(name, [&](CounterRng&) { return literal_report(p, L, 3); });
    }
}

inline void suite_derham_g_eta(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({3})) {
      if (L < 2) {
        run.skip("g_eta " + at_pl(p, L), "needs L >= 2");
        continue;
      }
      run.check("g_eta " + at_pl(p, L), [&](CounterRng& rng) { return g_eta_check(p, L, 3, run.trials(60), rng); });
    }
}

}  // namespace prismlab::harness
