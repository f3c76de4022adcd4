#include <gtest/gtest.h>

#include "prismlab/qprism/qprism.hpp"
#include "prismlab/ringcore/rng.hpp"

using namespace prismlab;

namespace {

Witt<Series> teich_s(long p, int L, const Series& a) { return teichmuller(p, L, a); }

// alpha_n straight from the product formula in Q[h, t].
B0Q alpha_oracle(long p, int n, const B0Trunc& tr) {
  auto c = make_ctx({"h", "t"});
  auto t = Series::var(c, "t"), h = Series::var(c, "h");
  Series s(c, 1);
  for (int i = 0; i < n; ++i) s = s * (t.scaled(Q(p)) - h.scaled(Q(i)));
  return b0_from_series(s.scaled(Q(1) / Q(factorial(static_cast<unsigned>(n))))).with_trunc(tr);
}

}  // namespace

TEST(GQ, SigmaMapsToQp) {
  for (long p : {2, 3}) {
    auto c = qseries_ctx(4);
    Series q = q_of(c);
    auto s = sigma(q, p, 3);
    EXPECT_EQ(gq_to_unit(s), q.pow(static_cast<unsigned>(p)));
    // F(sigma(q)) = sigma(q^p)
    auto fs = gq_frobenius(s);
    auto sp = sigma(q.pow(static_cast<unsigned>(p)), p, 2);
    EXPECT_EQ(fs.x, sp.x);
    EXPECT_EQ(fs.q, sp.q);
  }
}

TEST(GQ, GroupAxioms) {
  const long p = 3;
  auto c = qseries_ctx(4);
  Series q = q_of(c);
  auto s = sigma(q, p, 3);
  auto a = gq_scalar(2, s), b = gq_scalar(5, s), e = gq_unit_point(q, p, 3);
  EXPECT_EQ(gq_op(a, e).x, a.x);
  EXPECT_EQ(gq_op(a, b).x, gq_op(b, a).x);
  EXPECT_EQ(gq_op(gq_op(a, b), s).x, gq_op(a, gq_op(b, s)).x);
  EXPECT_EQ(gq_op(a, b).x, gq_scalar(7, s).x);
  // The unit map is a homomorphism: q^{2p} q^{5p} = q^{7p}.
  EXPECT_EQ(gq_to_unit(gq_op(a, b)), q.pow(static_cast<unsigned>(7 * p)));
}

TEST(GQ, NonMemberRejected) {
  auto c = qseries_ctx(4);
  Series q = q_of(c);
  GQPoint<Series> bad{q, teich_s(2, 2, Series::var(c, "h"))};
  EXPECT_FALSE(gq_is_member(bad));
  EXPECT_THROW(gq_to_unit(bad), NotTeichmuller);
}

TEST(GQ, QEqualsOneIsDeRhamLaw) {
  // At q = 1, Phi_p([1]) = p and the law is x1 + x2 + p x1 x2.
  for (long p : {2, 3}) {
    auto c = make_ctx({"a", "b"}, [](SeriesCtx& s) { s.total.push_back({3u, 4}); });
    Series one(c, 1);
    Witt<Series> x1(p, {Series::var(c, "a"), Series::var(c, "b")});
    Witt<Series> x2(p, {Series::var(c, "b"), one});
    auto got = gq_op(GQPoint<Series>{one, x1}, GQPoint<Series>{one, x2}).x;
    auto pw = witt_from_int(p, 2, one, Z(p));
    EXPECT_EQ(got, x1 + x2 + pw * x1 * x2);
  }
}

TEST(QExp, ConstantAndQEqualsOne) {
  BHat B{3, 4, 4, 4};
  auto e = q_exponential(B).value;
  EXPECT_EQ(e.coord(0), QPoly(Q(1)));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(e.coord(n)[0], Q(ipow(Z(3), static_cast<unsigned>(n))));
}

TEST(QExp, AlphaTermsMatchProductFormula) {
  BHat B{2, 4, 4, 4};
  B0Q alpha = B.one();
  for (int n = 1; n <= 6; ++n) {
    alpha = scale_by(alpha * (scale_by(B.t(), Q(2)) - scale_by(B.h(), Q(n - 1))), Q(1, n));
    EXPECT_EQ(alpha, alpha_oracle(2, n, B.trunc())) << n;
  }
}

TEST(QExp, TwoFormulasAgree) {
  for (long p : {2, 3})
    for (int d = 0; d <= 4; ++d) {
      BHat B{p, 4, 4, d};
      auto a = q_exponential(B), b = q_exp_alt(B);
      EXPECT_EQ(a.value, b.value) << p << " " << d;
      EXPECT_TRUE(B.congruent(a.value, b.value));
      EXPECT_LE(b.last_exact, static_cast<int>(p) * d);
    }
  BHat small{2, 4, 3, 2};
  EXPECT_EQ(q_exponential(small).value, q_exp_alt(small).value);
}

TEST(QExp, TailWindowEnforced) {
  BHat B{2, 4, 4, 4};
  EXPECT_THROW(q_exp_alt(B, 5), TailNotStabilized);
}

TEST(Canonical, ZerothComponentAndDeRhamFibre) {
  BHat B{2, 4, 4, 4};
  auto cp = canonical_point(B, 2);
  EXPECT_EQ(cp.point.x[0], cp.x0);
  // h = 0: x_0 = (exp(pt) - 1)/p, i.e. coordinate p^{k-1} on t^k/k!.
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(cp.x0.coord(k)[0], Q(ipow(Z(2), static_cast<unsigned>(k - 1))));
  EXPECT_EQ(cp.x0.coord(0), QPoly());
}

TEST(Canonical, TeichmullerIdentity) {
  for (long p : {2, 3}) {
    auto rep = canonical_point_check(BHat{p, 4, 4, 4}, 2);
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
  auto rep3 = canonical_point_check(BHat{2, 4, 3, 3}, 3);
  EXPECT_TRUE(rep3.ok()) << rep3.summary();
}

TEST(Canonical, TeichmullerOfPhiIsWrong) {
  // [Phi_p(q)] in place of Phi_p([q]) breaks the identity in component 1.
  BHat B{2, 4, 4, 4};
  auto cp = canonical_point(B, 2);
  auto lhs = witt_one(2, 2, B.one()) + teichmuller(2, 2, B.phi_p_q()) * cp.point.x;
  EXPECT_EQ(lhs[0], cp.X);
  EXPECT_FALSE(lhs[1].is_zero());
}

TEST(Canonical, R0Relation) {
  for (long p : {2, 3}) {
    auto rep = r0_relation_check(BHat{p, 4, 4, 4});
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
}

TEST(QLog, SigmaAndUnit) {
  for (long p : {2, 3}) {
    auto c = qseries_ctx(4);
    Series q = q_of(c);
    EXPECT_EQ(q_log(sigma(q, p, 2)), Series::var(c, "h"));
    EXPECT_TRUE(q_log(gq_unit_point(q, p, 2)).is_zero());
  }
}

TEST(QLog, AdditiveOnRandomPairs) {
  const long p = 3;
  auto c = qseries_ctx(4);
  Series q = q_of(c);
  auto s = sigma(q, p, 2);
  CounterRng rng(11, 3);
  for (int it = 0; it < 10; ++it) {
    long r1 = rng.range(0, 40), r2 = rng.range(0, 40);
    auto a = gq_scalar(r1, s), b = gq_scalar(r2, s);
    Series la = q_log(a), lb = q_log(b);
    EXPECT_EQ(q_log(gq_op(a, b)), la + lb);
    EXPECT_EQ(la, Series::var(c, "h").scaled(Q(r1)));
  }
}

TEST(QLog, CanonicalPointGivesT) {
  for (long p : {2, 3}) {
    BHat B{p, 4, 4, 4};
    auto cp = canonical_point(B, 2);
    EXPECT_EQ(q_log(cp.point), B.t());
  }
}

TEST(ZpAction, SquareFormula) {
  auto c = hq_ctx(6, 6);
  HQPoint u{Series::var(c, "h"), Series::var(c, "z")};
  auto a = zp_action(2, u, 3);
  Series h = u.qm1, z = u.z, one(c, 1);
  EXPECT_EQ(a.z * (h + one + one), z.scaled(Q(2)) + h * z * z);
  EXPECT_EQ(a.qm1, (one + h).pow(2) - one);
  EXPECT_THROW(zp_action(3, u, 3), ConfigError);
}

TEST(ZpAction, Equivariance) {
  for (long p : {2, 3, 5})
    for (long n : {2, 3, 4}) {
      if (n % p == 0) continue;
      auto rep = equivariance_report(n, p, 6, 6);
      EXPECT_TRUE(rep.ok()) << rep.summary();
    }
}

TEST(HodgeTate, Checks) {
  for (long p : {2, 3, 5}) {
    HodgeTateInfo info;
    auto rep = hodge_tate_check(p, 6, 5, &info);
    EXPECT_TRUE(rep.ok()) << rep.summary();
    EXPECT_GT(info.terms, 0);
  }
}

TEST(HodgeTate, ZetaAtTwo) {
  // p = 2: zeta = -1, so zeta - 1 = -2.
  Prec pr;
  pr.p = 2;
  auto c = coeff_ctx(CoeffKind::Cyclotomic, pr, {});
  Series e = Series::var(c, "zeta") - Series(c, 1);
  EXPECT_EQ(e, Series(c, -2));
}

TEST(Identities, Polynomial) {
  for (long p : {2, 3, 5}) {
    auto rep = qprism_identities(p);
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
}
