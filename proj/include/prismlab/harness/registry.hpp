#pragma once

#include "harness.hpp"
#include "suites_algebra.hpp"
#include "suites_prism.hpp"

#include <string>
#include <vector>

namespace prismlab::harness {

inline Report wilkerson_report(long p, int trials, CounterRng& rng) {
  Tally t("x^p = x mod p Int");
  for (int i = 0; i < trials; ++i) {
    auto x = random_intpoly(rng, static_cast<int>(rng.range(0, 10)), 50);
    auto diff = x.pow(static_cast<unsigned>(p)) - x;
    bool ok = true;
    for (const auto& c : diff.coords()) ok = ok && c % p == 0;
    t.add(ok, [&] { return x.str(); });
  }
  Report r;
  t.into(r);
  return r;
}

// ---------------------------------------------------------------- acceptance

inline void acceptance_1(SuiteRun& run) { suite_witt_kernel(run, 1000); }

inline void acceptance_2(SuiteRun& run) {
  std::vector<int> nps = run.cfg().n_p ? std::vector<int>{*run.cfg().n_p} : std::vector<int>{4, 6};
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({2, 3, 4}))
      for (int n_p : nps) {
        std::string name = "cell " + at_pl(p, L) + " n_p=" + std::to_string(n_p);
        if (L < 2) {
          run.skip(name, "the de Rham checks need L >= 2");
          continue;
        }
        run.check(name, [&](CounterRng& rng) { return derham_cell(p, L, n_p, run.trials(100), rng).rep; });
      }
}

inline void acceptance_3(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({3})) {
      if (L < 2 || !exhaustive_fits(p, L, 3)) {
        run.skip("exhaustive " + at_pl(p, L), "scan too large or L < 2");
        continue;
      }
      run.check("exhaustive " + at_pl(p, L), [&](CounterRng&) { return discrepancy_scan(p, L, 3).first; },
                "Lemma l:W^F in characteristic p, \"px=x^p=0\"");
      run.check("printed formula " + at_pl(p, L), [&](CounterRng&) { return literal_report(p, L, 3); });
    }
}

inline void acceptance_4(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    for (int L : run.lengths({2}))
      run.check("canonical " + at_pl(p, L), [&](CounterRng&) {
        return canonical_point_check(BHat{p, run.n_p(4), run.n_q(L >= 3 ? 3 : 4), L >= 3 ? 3 : 4}, L);
      });
}

inline void acceptance_5(SuiteRun& run) {
  for (long p : run.primes({2, 3}))
    run.check("q_exp " + at_p(p), [&](CounterRng&) { return q_exp_report(p, run.n_p(4), run.n_q(4), 4); });
}

inline void acceptance_6(SuiteRun& run) {
  run.check("structure_constants", [&](CounterRng&) { return b0_structure_report(12); });
  run.check("adams", [&](CounterRng& rng) { return b0_adams_report(run.trials(8), 8, 4, rng); },
            "Lemma l:B_0 as lambda-ring, \"multiplication by $(\\frac{q^n-1}{q-1})^m$\"");
}

inline void acceptance_7(SuiteRun& run) {
  const int N = run.N_big(12);
  run.check("universal", [&](CounterRng&) { return eigen_universal_report(N, 3); });
  run.check("numeric", [&](CounterRng& rng) { return eigen_numeric_report(N, 3, run.trials(50), rng); });
  run.check("q_equals_2", [&](CounterRng&) { return q2_degeneration_report(N); },
            "§sss:R to W, \"the formal power series $f(1-z)\\in A[[z]]^\\times$\"");
}

inline void acceptance_8(SuiteRun& run) {
  run.check("pairing", [&](CounterRng&) { return pairing_report(6, 12); });
  run.check("stirling", [&](CounterRng&) { return stirling_report(20, 10); },
            "Lemma l:factorization of log proof, \"$(\\log x)^k$ is divisible by $k!$\"");
  for (long p : run.primes({2, 3, 5}))
    run.check("mu_p " + at_p(p), [&](CounterRng& rng) { return mu_p_pd_check(p, run.trials(200), rng); },
              "Lemma l:mu_p in G_m^sharp proof, \"$f^p\\in pI$ for $f\\in I$\"");
  for (long p : run.primes({2, 3}))
    run.check("gsharp " + at_p(p), [&](CounterRng& rng) { return gsharp_comparison(p, 12, 40, rng); },
              "Lemma l:G_m^sharp to G^sharp proof, \"z=\\frac{(1+t)^p-1}{p}\"");
}

inline void acceptance_9(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("wilkerson " + at_p(p), [&](CounterRng& rng) { return wilkerson_report(p, run.trials(300), rng); },
              "§sss:generators of Int otimesZ_p, \"\\delta (x):=(x-x^p)/p\"");
  run.check("mahler", [&](CounterRng&) {
    auto t = mahler_table(IntPoly::binomial(2), 2, 1);
    Report r;
    r.add("C(u,2) mod 2 = [0,0,1,1], period 4", t.period == 4 && t.residues == std::vector<Z>{0, 0, 1, 1});
    return r;
  }, "e:3Mahler, \"Locally constant functions\"");
  for (long p : run.primes({2, 3, 5}))
    run.check("delta_basis " + at_p(p), [&](CounterRng&) { return delta_basis_report(p, 1); },
              "Lemma l:generators of Int otimesZ_p(ii), \"form a basis of the ${\\mathbb{Z}}_{(p)}$-module\"");
}

inline void acceptance_10(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("equivariance " + at_p(p), [&](CounterRng&) { return equivariance_all(p, run.n_q(6), run.n_z(6)); });
}

inline void acceptance_11(SuiteRun& run) {
  for (long p : run.primes({2, 3, 5}))
    run.check("hodge_tate " + at_p(p), [&](CounterRng&) { return hodge_tate_check(p, run.n_p(6), 5); });
}

inline void acceptance_12(SuiteRun& run) { suite_fgl_laws(run, {2, 3, 5}); }

// ---------------------------------------------------------------- registry

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s = {
      {"ringcore.padic_log", "§4.5.4 (e:restriction of H_Q^alg), \"(\\zeta -1)^{-1}\\cdot\\log (1+(\\zeta-1)z)\"", suite_ringcore_padic_log},
      {"witt.kernel", "§sss:examples of group delta-schemes, \"The \\emph{Witt vector Frobenius}\"",
       [](SuiteRun& r) { suite_witt_kernel(r, 100); }},
      {"witt.joyal", "§5.4.5 (e:psi), \"homomorphism of $\\delta$-rings $\\psi:B\\to W(B)$\"", suite_witt_joyal},
      {"witt.wf_kernel", "Lemma l:W^F in characteristic p, \"px=x^p=0\"", suite_witt_wf_kernel},
      {"fgl.laws", "e:group law for H_Q, \"z_1+z_2+(q-1)z_1z_2\"", [](SuiteRun& r) { suite_fgl_laws(r, {2, 3, 5}); }},
      {"fgl.rescale", "§3.4.5 (e:action of alpha on morphisms), \"\\alpha^{-1} f_i(\\alpha x_1,\\ldots \\alpha x_m)\"", suite_fgl_rescale},
      {"intpoly.basis", "Prop p:Newton's description of sR, \"generated by the polynomials  $\\binom{u}{n}$\"", suite_intpoly_basis},
      {"intpoly.lambda", "e:lambda-operations, \"\\lambda_n(x)=\\frac{x(x-1)\\ldots (x-n+1)}{n!}\"", suite_intpoly_lambda},
      {"intpoly.mahler", "e:3Mahler, \"Locally constant functions\"", suite_intpoly_mahler},
      {"intpoly.delta_basis", "Lemma l:generators of Int otimesZ_p(ii), \"form a basis of the ${\\mathbb{Z}}_{(p)}$-module\"", suite_intpoly_delta_basis},
      {"qhopf.structure", "Prop p:G=Spec B_0, \"\\frac{t(t-h)\\ldots (t-h(n-1))}{n!}\"", suite_qhopf_structure},
      {"qhopf.adams", "Lemma l:B_0 as lambda-ring, \"multiplication by $(\\frac{q^n-1}{q-1})^m$\"", suite_qhopf_adams},
      {"qhopf.delta", "e:defining relation, \"t^p+p\\delta (t)=\\Phi_p(q)\\cdot t\"", suite_qhopf_delta},
      {"pd_dual.pairing", "e:BM_m times Gamma^+ to BM_m, \"x^u:=\\sum_{n=0}^\\infty f_{0,n}(u)\\cdot \\frac{(x-1)^n}{n!}\"", suite_pd_pairing},
      {"pd_dual.distributions", "§sss:Distributions, \"\\delta_m\\delta_n=\\delta_{m+n}\"", suite_pd_distributions},
      {"pd_dual.log_sharp", "Lemma l:factorization of log", suite_pd_log_sharp},
      {"pd_dual.mu_p", "Lemma l:mu_p in G_m^sharp proof, \"$f^p\\in pI$ for $f\\in I$\"", [](SuiteRun& r) { suite_pd_mu_p(r, 50); }},
      {"pd_dual.gsharp", "Lemma l:G_m^sharp to G^sharp proof, \"z=\\frac{(1+t)^p-1}{p}\"", [](SuiteRun& r) { suite_pd_gsharp(r, 20); }},
      {"pd_dual.exact_sequence", "e:G_m^sharp sequence, \"0\\to (\\mu_p)_{\\Spf{\\mathbb{Z}}_p}\\to ({\\mathbb{G}}_m^\\sharp)\"", suite_pd_exact_sequence},
      {"cartier_witt.embeddings", "e:G^!? in terms of big Witt, \"F_m (w)=[q-1]^{m-1}w\"", suite_cw_embeddings},
      {"cartier_witt.psi", "e:3 Psi_n, \"\\Psi_n(w,q)=(F_n(w),q^n)\"", suite_cw_psi},
      {"cartier_witt.wf_ring", "e:equations for W^F, \"x_n^p+px_{n+1}-x_n\"", suite_cw_wf_ring},
      {"cartier_witt.m_series", "Lemma l:simple lemma(iii), \"v:=\\frac{(1+hz)^m-1}{hz}\"", suite_cw_m_series},
      {"qprism.gq_law", "§sss:Who is who, \"(q,x_1+x_2+\\Phi_p([q])x_1x_2)\"", suite_qprism_gq_law},
      {"qprism.q_exponential", "Prop p:G_Q^!=SpfB(c'), \"\\alpha_n:= \\frac{pt(pt-q+1)\\ldots (pt-(n-1)(q-1))}{n!}\"", suite_qprism_q_exponential},
      {"qprism.canonical_point", "Prop p:formula for tilde x", suite_qprism_canonical_point},
      {"qprism.q_log", "§sss:q-logarithm, \"t=\\log_q(u)\"", suite_qprism_q_log},
      {"qprism.equivariance", "Prop p:sigma^* is equivariant, \"raising to the power of $n$\"", suite_qprism_equivariance},
      {"qprism.hodge_tate", "e:restriction of H_Q^alg to Delta_0_Q, \"(\\zeta -1)^{-1}\\cdot\\log (1+(\\zeta-1)z)\"", suite_qprism_hodge_tate},
      {"qprism.r0_relation", "Prop p:coordinate ring of G_Q, \"single defining relation $\\delta (1+\\Phi_p(q)x_0)=0$\"", suite_qprism_r0},
      {"derham.isomorphism", "Lemma l:G_dR=W^{F=p}", suite_derham_isomorphism},
      {"derham.frobenius", "e:Fx=h(x), \"h(x)=\\frac{(1+px)^p-1}{p}\"", suite_derham_frobenius},
      {"derham.id_minus_v", "e:1-V, \"\\id -V:W_{\\Spf{\\mathbb{Z}}_p}^{F=p}\\buildrel{\\sim}\\over{\\longrightarrow} W^{(F)}\"", suite_derham_id_minus_v},
      {"derham.discrepancy", "e:f_naive & f, \"f(x)=f_{naive}(Vx-x)\"", suite_derham_discrepancy},
      {"derham.discrepancy_literal", "e:f_naive & f, \"f(x)=f_{naive}(Vx-x)\"", suite_derham_discrepancy_literal},
      {"derham.g_eta", "Prop p:G_eta proof, \"(x_1,x_2)\\mapsto x_1+x_2+V(1)\\cdot x_1x_2\"", suite_derham_g_eta},
      {"acceptance.1", "§sss:examples of group delta-schemes, \"The \\emph{Witt vector Frobenius}\"", acceptance_1},
      {"acceptance.2", "Lemma l:G_dR=W^{F=p}", acceptance_2},
      {"acceptance.3", "e:f_naive & f, \"f(x)=f_{naive}(Vx-x)\"", acceptance_3},
      {"acceptance.4", "Prop p:formula for tilde x", acceptance_4},
      {"acceptance.5", "Prop p:G_Q^!=SpfB(c'), \"\\alpha_n:= \\frac{pt(pt-q+1)\\ldots (pt-(n-1)(q-1))}{n!}\"", acceptance_5},
      {"acceptance.6", "Prop p:G=Spec B_0, \"\\frac{t(t-h)\\ldots (t-h(n-1))}{n!}\"", acceptance_6},
      {"acceptance.7", "e:G^!? in terms of big Witt, \"F_m (w)=[q-1]^{m-1}w\"", acceptance_7},
      {"acceptance.8", "e:BM_m times Gamma^+ to BM_m, \"x^u:=\\sum_{n=0}^\\infty f_{0,n}(u)\\cdot \\frac{(x-1)^n}{n!}\"", acceptance_8},
      {"acceptance.9", "Prop p:Newton's description of sR, \"generated by the polynomials  $\\binom{u}{n}$\"", acceptance_9},
      {"acceptance.10", "Prop p:sigma^* is equivariant, \"raising to the power of $n$\"", acceptance_10},
      {"acceptance.11", "e:restriction of H_Q^alg to Delta_0_Q, \"(\\zeta -1)^{-1}\\cdot\\log (1+(\\zeta-1)z)\"", acceptance_11},
      {"acceptance.12", "e:group law for H_Q, \"z_1+z_2+(q-1)z_1z_2\"", acceptance_12},
  };
  return s;
}

// "all", a full id, or a prefix ending at a dot ("derham" selects derham.*).
inline std::vector<const Suite*> select_suites(const std::string& sel) {
  std::vector<const Suite*> out;
  for (const auto& s : all_suites())
    if (sel == "all" || s.id == sel || s.id.rfind(sel + ".", 0) == 0) out.push_back(&s);
  if (out.empty()) throw ConfigError("unknown suite '" + sel + "'");
  return out;
}

inline RunReport run(const SuiteConfig& cfg) {
  cfg.validate();
  RunReport rep{cfg.suite, cfg, {}};
  for (const Suite* s : select_suites(cfg.suite)) {
    SuiteRun r(cfg, s->id, s->paper_ref, rep.checks);
    s->body(r);
  }
  return rep;
}

inline std::string list_suites() {
  std::string out;
  for (const auto& s : all_suites()) {
    // the citation label is the text before the first quoted fragment
    std::string ref = s.paper_ref.substr(0, s.paper_ref.find(", \""));
    out += s.id + " \u2014 " + ref + "\n";
  }
  return out;
}

}  // namespace prismlab::harness
