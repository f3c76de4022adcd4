#include <gtest/gtest.h>

#include "prismlab/intpoly/intpoly.hpp"
#include "prismlab/ringcore/rng.hpp"

using namespace prismlab;

namespace {

IntPoly random_int(CounterRng& rng, int deg, long bound = 5) {
  std::vector<Z> a;
  for (int i = 0; i <= deg; ++i) a.push_back(rng.range(-bound, bound));
  return IntPoly(a);
}

QPoly U() { return QPoly::monomial(1, Q(1)); }

}  // namespace

TEST(IntPoly, ToBinomial) {
  auto x = to_binomial(U() * U());
  EXPECT_EQ(x, IntPoly({0, 1, 2}));
  EXPECT_EQ(U() + U() * (U() - QPoly(Q(1))), U() * U());
  EXPECT_THROW(to_binomial(U().scaled(Q(1, 2))), NotIntegerValued);
  EXPECT_EQ(to_binomial(binomial_poly(3)), IntPoly::binomial(3));
}

TEST(IntPoly, Multiplication) {
  auto u = IntPoly::u();
  EXPECT_EQ(u * u, IntPoly({0, 1, 2}));
  EXPECT_EQ(IntPoly(1) * u, u);
  EXPECT_EQ(u * IntPoly::binomial(2), IntPoly({0, 0, 2, 3}));
  CounterRng rng(1, 20);
  for (int it = 0; it < 50; ++it) {
    auto a = random_int(rng, 5), b = random_int(rng, 4);
    // rational expansion oracle
    EXPECT_EQ(a * b, to_binomial(to_monomial(a) * to_monomial(b)));
    for (long m : {-7, -1, 0, 3, 11}) EXPECT_EQ((a * b).eval(m), a.eval(m) * b.eval(m));
  }
}

TEST(IntPoly, BasisRoundTrip) {
  CounterRng rng(2, 21);
  for (int it = 0; it < 50; ++it) {
    auto a = random_int(rng, 8, 100);
    EXPECT_EQ(to_binomial(to_monomial(a)), a);
  }
}

TEST(IntPoly, Lambda) {
  auto u = IntPoly::u();
  EXPECT_EQ(lambda_op(2, u), IntPoly::binomial(2));
  EXPECT_EQ(lambda_op(1, u * u), u * u);
  QPoly u2 = U() * U();
  EXPECT_EQ(lambda_op(2, u * u), to_binomial((u2 * (u2 - QPoly(Q(1)))).scaled(Q(1, 2))));
  EXPECT_EQ(adams(3, u * u), u * u);
  CounterRng rng(3, 22);
  for (int it = 0; it < 20; ++it) {
    auto x = random_int(rng, 3), y = random_int(rng, 3);
    for (unsigned n = 0; n <= 5; ++n) {
      IntPoly rhs;
      for (unsigned i = 0; i <= n; ++i) rhs = rhs + lambda_op(i, x) * lambda_op(n - i, y);
      EXPECT_EQ(lambda_op(n, x + y), rhs);
    }
  }
}

TEST(IntPoly, DeltaP) {
  auto u = IntPoly::u();
  EXPECT_EQ(delta_p(u, 2), -IntPoly::binomial(2));
  EXPECT_EQ(delta_p(IntPoly(), 3), IntPoly());
  auto d = delta_p(u, 2);
  QPoly dm = to_monomial(d);
  EXPECT_EQ(delta_p(d, 2), to_binomial((dm - dm * dm).scaled(Q(1, 2))));
}

TEST(IntPoly, WilkersonCongruence) {
  CounterRng rng(4, 23);
  for (long p : {2, 3, 5})
    for (int it = 0; it < 300; ++it) {
      auto x = random_int(rng, static_cast<int>(rng.range(0, 10)), 50);
      auto diff = x.pow(static_cast<unsigned>(p)) - x;
      for (const auto& c : diff.coords()) ASSERT_EQ(c % p, 0) << x.str();
    }
}

TEST(IntPoly, Difference) {
  for (unsigned n = 1; n <= 6; ++n) {
    auto d = difference(IntPoly::binomial(n));
    EXPECT_EQ(d.value, IntPoly::binomial(n - 1));
    EXPECT_EQ(d.nilpotence, static_cast<int>(n) + 1);
  }
  CounterRng rng(5, 24);
  auto x = random_int(rng, 6);
  auto d = difference(x).value;
  for (long m = -3; m < 5; ++m) EXPECT_EQ(d.eval(m), x.eval(m + 1) - x.eval(m));
}

TEST(IntPoly, MahlerTable) {
  auto t = mahler_table(IntPoly::binomial(2), 2, 1);
  EXPECT_EQ(t.period, 4);
  EXPECT_EQ(t.residues, (std::vector<Z>{0, 0, 1, 1}));
  for (long a = 0; a < 4; ++a) EXPECT_EQ(binom(a, 2) % 2, t.residues[a]);
  for (long p : {2, 3, 5})
    for (int n = 1; n <= 3; ++n) {
      auto tu = mahler_table(IntPoly::u(), p, n);
      EXPECT_EQ(tu.period, ipow64(p, n));
      for (long a = 0; a < tu.period; ++a) EXPECT_EQ(tu.residues[a], Z(a));
    }
  // values agree with direct evaluation at representatives
  CounterRng rng(6, 25);
  for (int it = 0; it < 20; ++it) {
    auto x = random_int(rng, 6);
    auto tt = mahler_table(x, 3, 2);
    for (long m = -20; m < 20; ++m) EXPECT_EQ(mod_floor(x.eval(m), 9), tt.residues[mod_floor(m, tt.period).convert_to<long>()]);
  }
}

TEST(IntPoly, MahlerIsomorphism) {
  for (long p : {2, 3})
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 2; ++k) {
        auto r = mahler_isomorphism_check(p, n, k);
        EXPECT_TRUE(r.ok()) << p << " " << n << " " << k << (r.failures.empty() ? "" : r.failures[0]);
        EXPECT_EQ(r.rank_image, ipow64(p, k));
      }
}

TEST(IntPoly, DeltaBasisExamples) {
  auto e = delta_basis_expand(IntPoly::u(), 2);
  EXPECT_EQ(e.coeff, (std::map<long, Q>{{1, Q(1)}}));
  auto e2 = delta_basis_expand(IntPoly::binomial(2), 2);
  EXPECT_EQ(e2.coeff, (std::map<long, Q>{{2, Q(-1)}}));
  auto e3 = delta_basis_expand(IntPoly::binomial(3), 3);
  EXPECT_EQ(vp(e3.coeff.at(3), 3), 0);
  EXPECT_TRUE(e3.p_integral());
}

TEST(IntPoly, DeltaBasisRoundTrip) {
  for (long p : {2, 3, 5}) {
    const long top = p * p * p;
    for (long n = 0; n <= top; n += (p == 5 ? 7 : 1)) {
      auto x = IntPoly::binomial(static_cast<unsigned>(n));
      auto e = delta_basis_expand(x, p);
      EXPECT_TRUE(e.p_integral()) << p << " " << n;
      EXPECT_EQ(to_binomial(delta_basis_combine(e)), x);
    }
    auto e = delta_basis_expand(IntPoly::binomial(static_cast<unsigned>(top)), p);
    EXPECT_TRUE(e.p_integral());
  }
}
