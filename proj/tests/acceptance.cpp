// Runs the twelve acceptance criteria at their stated matrix and prints one
// PASS/FAIL line each. Every criterion runs through its acceptance.N suite;
// where a value can be produced without the library, a local oracle is
// compared as well.

#include "prismlab/harness/registry.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace prismlab;
using namespace prismlab::harness;

namespace {

struct Criterion {
  int n;
  const char* title;
  std::function<Report()> oracle;  // may be empty
  const char* note = nullptr;       // printed under a FAIL line
};

const char* kDiscrepancyNote =
    "f_naive is multiplicative on W^(F) because V(u)V(v) = V(p u v) = 0 there, so\n"
    "      Psi(f_naive(Vz - z)) = (1 - V)^2 z rather than z. Observed: 81/729 at p=3, L=3;\n"
    "      at p=2 it survives L <= 3 and fails 8/16 at L=4.\n"
    "      The sign-corrected form f(z) = f_naive(-(1 - V)^{-1} z) holds on the full scan.";

// Ghost components by the defining sum.
Report ghost_oracle() {
  Report r;
  CounterRng rng(7, 1);
  int good = 0, total = 0;
  for (long p : {2, 3, 5})
    for (int it = 0; it < 50; ++it) {
      auto w = random_witt_z(p, 4, rng);
      auto g = ghost(w);
      bool ok = true;
      for (int n = 0; n < 4; ++n) {
        Z s = 0;
        for (int i = 0; i <= n; ++i) s += ipow(Z(p), static_cast<unsigned>(i)) * ipow(w[i], static_cast<unsigned>(ipow64(p, static_cast<unsigned>(n - i))));
        ok = ok && s == g[static_cast<std::size_t>(n)];
      }
      good += ok;
      ++total;
    }
  r.add("ghost map matches sum p^i x_i^{p^{n-i}}", good == total, tag(good, total));
  return r;
}

// (1+t)^m by repeated multiplication (geometric series for m < 0), paired
// against the PD basis; (log(1+t))^k/k! by rational series powers.
Report pd_oracle() {
  Report r;
  const int N = 12;
  bool pair = true;
  for (long m = -6; m <= 6; ++m) {
    std::vector<Q> row(N + 1, Q(0));
    row[0] = 1;
    for (long i = 0; i < std::labs(m); ++i) {
      std::vector<Q> nxt(N + 1, Q(0));
      for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b) {
          Q c = m >= 0 ? (b <= 1 ? Q(1) : Q(0)) : Q(b % 2 ? -1 : 1);
          nxt[static_cast<std::size_t>(a + b)] += row[static_cast<std::size_t>(a)] * c;
        }
      row = nxt;
    }
    for (int n = 0; n <= N; ++n) pair = pair && Q(pair_xu(m, pd_gamma(n, N))) == row[static_cast<std::size_t>(n)];
  }
  r.add("<delta_m, gamma_n> against (1+t)^m", pair);

  const int M = 20;
  std::vector<Q> lg(M + 1, Q(0));
  for (int n = 1; n <= M; ++n) lg[static_cast<std::size_t>(n)] = Q(n % 2 ? 1 : -1, n);
  std::vector<Q> pw(M + 1, Q(0));
  pw[0] = 1;
  bool stir = true;
  for (int k = 1; k <= 10; ++k) {
    std::vector<Q> nxt(M + 1, Q(0));
    for (int a = 0; a <= M; ++a)
      for (int b = 1; a + b <= M; ++b) nxt[static_cast<std::size_t>(a + b)] += pw[static_cast<std::size_t>(a)] * lg[static_cast<std::size_t>(b)];
    pw = nxt;
    PDElem l = log_sharp_power(k, M);
    for (int n = 0; n <= M; ++n)
      stir = stir && Q(l[n]) == pw[static_cast<std::size_t>(n)] * Q(factorial(static_cast<unsigned>(n))) / Q(factorial(static_cast<unsigned>(k)));
  }
  r.add("(log x)^k/k! against rational powers of log(1+t)", stir);
  return r;
}

Report mahler_oracle() {
  Report r;
  std::vector<long> v;
  for (long a = 0; a < 8; ++a) v.push_back((a * (a - 1) / 2) % 2);
  r.add("C(a,2) mod 2 for a = 0..7 is [0,0,1,1,0,0,1,1]", v == std::vector<long>{0, 0, 1, 1, 0, 0, 1, 1});
  return r;
}

// [p](z) = sum_k C(p,k) h^{k-1} z^k for z1 + z2 + h z1 z2; mod p only k = p survives.
Report p_series_oracle() {
  Report r;
  for (long p : {2, 3, 5}) {
    auto red = p_series_mod_p(p, 8);
    auto c = red.reduced.ctx();
    Series want(c);
    for (long k = 1; k <= p; ++k) {
      long row = 1;
      for (long i = 0; i < k; ++i) row = row * (p - i) / (i + 1);
      if (row % p) want += Series::var(c, "z").pow(static_cast<unsigned>(k)) * Series::var(c, "h").pow(static_cast<unsigned>(k - 1)).scaled(Q(row % p));
    }
    r.add("[p](z) mod p = h^(p-1) z^p, " + at_p(p), red.reduced == want);
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Witt kernel", ghost_oracle},
      {2, "de Rham isomorphism grid", {}},
      {3, "characteristic p discrepancy and px = x^p = 0", {}, kDiscrepancyNote},
      {4, "q-prism canonical point", {}},
      {5, "q-exponential agreement", {}},
      {6, "Hopf algebra B0", {}},
      {7, "eigen-embeddings into big Witt vectors", {}},
      {8, "PD hulls and distributions", pd_oracle},
      {9, "integer-valued polynomials", mahler_oracle},
      {10, "Z_p^x equivariance", {}},
      {11, "Hodge-Tate fibre", {}},
      {12, "formal group laws", p_series_oracle},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    SuiteConfig cfg;
    cfg.suite = "acceptance." + std::to_string(c.n);
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep = run(cfg);
    std::vector<std::string> bad;
    for (const auto& ch : rep.checks)
      if (ch.status != Status::Pass) bad.push_back(std::string(status_name(ch.status)) + " " + ch.id + ": " + ch.detail);
    if (c.oracle) {
      Report o = c.oracle();
      if (!o.ok()) bad.push_back("oracle: " + o.summary());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = bad.empty();
    failed += !ok;
    std::printf("%s  criterion %2d  %-48s %3zu checks  %.1f s\n", ok ? "PASS" : "FAIL", c.n, c.title,
                rep.checks.size(), secs);
    for (const auto& b : bad) std::printf("      %s\n", b.c_str());
    if (!ok) {
      for (const auto& ch : rep.checks)
        if (ch.status == Status::Pass) std::printf("      holds: %s: %s\n", ch.id.c_str(), ch.detail.c_str());
      if (c.note) std::printf("      %s\n", c.note);
    }
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
