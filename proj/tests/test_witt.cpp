#include <gtest/gtest.h>

#include "prismlab/ringcore/modint.hpp"
#include "prismlab/ringcore/rng.hpp"
#include "prismlab/witt/bigwitt.hpp"
#include "prismlab/witt/wf_kernel.hpp"
#include "prismlab/witt/witt.hpp"

using namespace prismlab;

namespace {

constexpr int kIterations = 60;

Witt<Z> random_witt(long p, int L, CounterRng& rng, long bound = 20) {
  std::vector<Z> x;
  for (int i = 0; i < L; ++i) x.push_back(rng.range(-bound, bound));
  return Witt<Z>(p, x);
}

// Hand-rolled ghost map used as an oracle.
std::vector<Z> ghost_oracle(const Witt<Z>& w) {
  std::vector<Z> g;
  for (int n = 0; n < w.length(); ++n) {
    Z s = 0;
    for (int i = 0; i <= n; ++i) s += ipow(Z(w.p()), i) * ipow(w[i], static_cast<unsigned>(ipow64(w.p(), n - i)));
    g.push_back(s);
  }
  return g;
}

}  // namespace

TEST(Ghost, TeichmullerComponents) {
  auto c = make_ctx({"a"});
  auto a = Series::var(c, "a");
  for (long p : {2, 3}) {
    auto g = ghost(teichmuller(p, 3, a));
    EXPECT_EQ(g[0], a);
    EXPECT_EQ(g[1], a.pow(p));
    EXPECT_EQ(g[2], a.pow(p * p));
  }
}

TEST(Ghost, FromGhostExamples) {
  EXPECT_EQ(from_ghost<Z>(2, {2, 2}), Witt<Z>(2, {2, -1}));
  EXPECT_THROW(from_ghost<Z>(2, {0, 1}), NonIntegralGhost);
  EXPECT_THROW(from_ghost<Z>(3, {0, 1}), NonIntegralGhost);
}

TEST(Ghost, RoundTripAndHomomorphism) {
  CounterRng rng(1, 10);
  for (long p : {2, 3, 5})
    for (int L = 1; L <= 4; ++L)
      for (int it = 0; it < kIterations / 4; ++it) {
        auto a = random_witt(p, L, rng), b = random_witt(p, L, rng);
        EXPECT_EQ(ghost(a), ghost_oracle(a));
        EXPECT_EQ(from_ghost(p, ghost(a)), a);
        auto gs = ghost(a + b), gp = ghost(a * b), ga = ghost(a), gb = ghost(b);
        for (int n = 0; n < L; ++n) {
          EXPECT_EQ(gs[n], ga[n] + gb[n]);
          EXPECT_EQ(gp[n], ga[n] * gb[n]);
        }
      }
}

TEST(Universal, SmallExample) {
  Witt<Z> one(2, {1, 0});
  EXPECT_EQ(witt_add(one, one, WittBackend::Universal), Witt<Z>(2, {2, -1}));
  EXPECT_EQ(witt_add(one, one, WittBackend::Ghost), Witt<Z>(2, {2, -1}));
  // S_1 for p = 2: a1 + b1 - a0 b0
  const auto& T = witt_universal(WittOp::Add, 2, 2);
  auto c = make_ctx({"a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"});
  EXPECT_EQ(T.comp[1].terms.size(), 3u);
}

TEST(Universal, AgreesWithGhostOverZ) {
  CounterRng rng(2, 11);
  for (long p : {2, 3})
    for (int L = 1; L <= 4; ++L)
      for (int it = 0; it < kIterations / 4; ++it) {
        auto a = random_witt(p, L, rng, 5), b = random_witt(p, L, rng, 5);
        EXPECT_EQ(witt_add(a, b, WittBackend::Universal), witt_add(a, b, WittBackend::Ghost));
        EXPECT_EQ(witt_mul(a, b, WittBackend::Universal), witt_mul(a, b, WittBackend::Ghost));
        EXPECT_EQ(witt_neg(a, WittBackend::Universal), witt_neg(a, WittBackend::Ghost));
        if (L >= 2) {
          EXPECT_EQ(frobenius(a, WittBackend::Universal), frobenius(a, WittBackend::Ghost));
        }
      }
}

TEST(Universal, ModularAgreesWithReducedGhost) {
  CounterRng rng(3, 12);
  const long p = 5;
  const std::uint64_t m = static_cast<std::uint64_t>(ipow64(5, 8));
  auto red = [&](const Witt<Z>& w) { return map_coeffs(w, [&](const Z& c) { return ModInt(c, m); }); };
  for (int it = 0; it < 20; ++it) {
    auto a = random_witt(p, 3, rng, 1000), b = random_witt(p, 3, rng, 1000);
    EXPECT_EQ(witt_add(red(a), red(b)), red(a + b));
    EXPECT_EQ(witt_mul(red(a), red(b)), red(a * b));
  }
}

TEST(Universal, TeichmullerMultiplicative) {
  auto c = make_ctx({"a", "b"});
  auto a = Series::var(c, "a"), b = Series::var(c, "b");
  for (long p : {2, 3}) {
    EXPECT_EQ(teichmuller(p, 3, a) * teichmuller(p, 3, b), teichmuller(p, 3, a * b));
    EXPECT_EQ(teichmuller(p, 3, a) + witt_zero(p, 3, a), teichmuller(p, 3, a));
  }
}

TEST(Frobenius, Identities) {
  auto c = make_ctx({"a"});
  auto a = Series::var(c, "a");
  for (long p : {2, 3, 5}) {
    const int L = 3;
    EXPECT_EQ(frobenius(teichmuller(p, L, a)), teichmuller(p, L - 1, a.pow(p)));
    auto V1 = verschiebung(witt_one(p, L, a));
    EXPECT_EQ(V1[1], Series(c, 1));
    EXPECT_EQ(frobenius(V1), witt_from_int(p, L - 1, a, Z(p)));
  }
}

TEST(Frobenius, FVIsMultiplicationByP) {
  CounterRng rng(4, 13);
  for (long p : {2, 3})
    for (int it = 0; it < kIterations; ++it) {
      auto x = random_witt(p, 4, rng);
      auto lhs = frobenius(verschiebung(x));
      auto rhs = truncate(witt_mul(witt_from_int(p, 4, Z(0), Z(p)), x), 3);
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Frobenius, RingHomomorphism) {
  CounterRng rng(5, 14);
  for (long p : {2, 3})
    for (int it = 0; it < kIterations / 2; ++it) {
      auto a = random_witt(p, 4, rng), b = random_witt(p, 4, rng);
      EXPECT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
      EXPECT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
    }
}

TEST(Frobenius, ReducesToPthPowerModP) {
  CounterRng rng(6, 15);
  for (long p : {2, 3, 5})
    for (int it = 0; it < kIterations / 2; ++it) {
      std::vector<ModInt> x;
      for (int i = 0; i < 4; ++i) x.push_back(ModInt(rng.range(0, p - 1), static_cast<std::uint64_t>(p)));
      Witt<ModInt> w(p, x);
      EXPECT_EQ(frobenius(w), truncate(frobenius_charp(w), 3));
    }
}

TEST(JoyalLift, Examples) {
  auto id = [](const Z& x) { return x; };
  EXPECT_EQ(joyal_lift(Z(2), 2, 2, id), Witt<Z>(2, {2, -1}));
  auto bj = bj_coords(Z(2), 2, 2, id);
  EXPECT_EQ(bj[1], Z(-1));
  // over Z with trivial Frobenius the lift of n is n * 1 = 1 + ... + 1
  for (long p : {2, 3})
    for (long n : {3, -4, 7}) {
      auto acc = witt_zero(p, 3, Z(0));
      auto one = witt_one(p, 3, Z(0));
      for (long i = 0; i < std::labs(n); ++i) acc = witt_add(acc, one, WittBackend::Universal);
      if (n < 0) acc = witt_neg(acc, WittBackend::Universal);
      EXPECT_EQ(joyal_lift(Z(n), p, 3, id), acc);
    }
}

TEST(JoyalLift, QIsTeichmuller) {
  auto c = make_ctx({"q"});
  auto q = Series::var(c, "q");
  for (long p : {2, 3}) {
    auto phi = [&](const Series& f) { return f.compose("q", q.pow(p)); };
    EXPECT_EQ(joyal_lift(q, p, 3, phi), teichmuller(p, 3, q));
    EXPECT_TRUE(delta(q, p, phi).is_zero());
    // ghost components are the iterated Frobenius
    auto b = q * q + q.scaled(3) + Series(c, 1);
    auto g = ghost(joyal_lift(b, p, 3, phi));
    EXPECT_EQ(g[1], phi(b));
    EXPECT_EQ(g[2], phi(phi(b)));
    // phi(x) = x^p + p delta(x)
    EXPECT_EQ(phi(b), b.pow(p) + delta(b, p, phi).scaled(p));
  }
}

TEST(JoyalLift, RingHomomorphism) {
  auto c = make_ctx({"q"});
  auto q = Series::var(c, "q");
  CounterRng rng(7, 16);
  const long p = 2;
  auto phi = [&](const Series& f) { return f.compose("q", q.pow(p)); };
  for (int it = 0; it < 10; ++it) {
    Series a(c, rng.range(-3, 3)), b(c, rng.range(-3, 3));
    a += q.scaled(rng.range(-2, 2));
    b += q.pow(2).scaled(rng.range(-2, 2));
    EXPECT_EQ(joyal_lift(a + b, p, 3, phi), joyal_lift(a, p, 3, phi) + joyal_lift(b, p, 3, phi));
    EXPECT_EQ(joyal_lift(a * b, p, 3, phi), joyal_lift(a, p, 3, phi) * joyal_lift(b, p, 3, phi));
  }
}

TEST(JoyalLift, NotADeltaRing) {
  auto c = make_ctx({"q"});
  auto q = Series::var(c, "q");
  auto bad = [&](const Series& f) { return f.compose("q", q.scaled(2)); };  // not a Frobenius lift at p = 3
  EXPECT_THROW(joyal_lift(q, 3, 2, bad), NotADeltaRing);
}

TEST(BigWitt, TeichmullerAndFrobenius) {
  auto c = make_ctx({"h", "z"}, [](SeriesCtx& s) { s.cap[1] = 12; });
  auto h = Series::var(c, "h");
  auto t = BigWitt::teichmuller(h, 12);
  auto g = t.ghost();
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(g[n], h.pow(n));
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(t.frobenius(m), BigWitt::teichmuller(h.pow(m), 12 / m));
  EXPECT_THROW(t.frobenius(4, 4), PrecisionExhausted);
}

TEST(BigWitt, FrobeniusComposition) {
  auto c = make_ctx({"z"}, [](SeriesCtx& s) { s.cap[0] = 12; });
  CounterRng rng(8, 17);
  for (int it = 0; it < 10; ++it) {
    Series s(c, 1);
    for (int k = 1; k <= 12; ++k) s += Series::var(c, "z").pow(k).scaled(rng.range(-3, 3));
    BigWitt w(s, 12);
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; m * n <= 4; ++n) {
        auto lhs = w.frobenius(n).frobenius(m);
        auto rhs = w.frobenius(m * n);
        EXPECT_EQ(lhs, rhs);
        EXPECT_NO_THROW(require_integral(rhs.series()));
      }
    // the ghost map is additive and multiplicative
    BigWitt v = BigWitt::teichmuller(Series(c, rng.range(-3, 3)), 12);
    auto gs = (w + v).ghost(), gp = (w * v).ghost(), gw = w.ghost(), gv = v.ghost();
    for (int n = 1; n <= 12; ++n) {
      EXPECT_EQ(gs[n], gw[n] + gv[n]);
      EXPECT_EQ(gp[n], gw[n] * gv[n]);
    }
    EXPECT_NO_THROW(require_integral((w * v).series()));
  }
}

TEST(WfKernel, VTeichmuller) {
  // F V [a] = V [a^p], so a^p = 0 is needed for Fx = 0
  for (long p : {2, 3}) {
    TruncPoly a = TruncPoly::gen(static_cast<std::uint64_t>(p), static_cast<int>(p));
    auto x = verschiebung(teichmuller(p, 3, a));
    auto zero = witt_zero(p, 3, a);
    EXPECT_EQ(frobenius_charp(x), zero);
    EXPECT_EQ(witt_mul(witt_from_int(p, 3, a, Z(p)), x), zero);
    EXPECT_EQ(witt_pow(x, static_cast<unsigned long>(p)), zero);
  }
  TruncPoly a = TruncPoly::gen(2, 3);
  EXPECT_NE(frobenius_charp(verschiebung(teichmuller(2, 3, a))), witt_zero(2, 3, a));
}

TEST(WfKernel, RandomP3) {
  CounterRng rng(9, 18);
  auto rep = wf_kernel_random(3, 3, 3, 200, rng);
  EXPECT_TRUE(rep.ok()) << (rep.counterexamples.empty() ? "" : rep.counterexamples[0]);
  EXPECT_EQ(rep.kernel, 200);
}

TEST(WfKernel, ExhaustiveP2) {
  auto rep = wf_kernel_exhaustive(2, 3, 3);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checked, 512);
  EXPECT_EQ(rep.kernel, rep.eigen);
  EXPECT_EQ(rep.kernel, 8);  // each coordinate in F_2 a^2
}
