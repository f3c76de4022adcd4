#pragma once

#include "prismlab/ringcore/errors.hpp"
#include "prismlab/ringcore/series.hpp"

#include <string>
#include <vector>

namespace prismlab {

// Big Witt vector: a series 1 + z A[[z]] truncated after z^N. The context
// must contain the variable "z" (its cap, if any, must be >= N); other
// variables describe A. Addition is multiplication of series, [a] = 1 - a z.
class BigWitt {
 public:
  BigWitt(Series s, int N) : s_(truncate_in(std::move(s), "z", N)), N_(N) {
    if (s_.constant_term() != 1) throw NonzeroConstantTerm("big Witt vector must have constant term 1");
    for (const auto& [m, c] : s_.terms()) {
      Mono mm = m;
      mm[z()] = 0;
      if (m[z()] == 0 && mm != Mono{}) throw NonzeroConstantTerm("big Witt vector must have constant term 1");
    }
  }

  static BigWitt one(const CtxPtr& c, int N) { return BigWitt(Series(c, 1), N); }
  static BigWitt teichmuller(const Series& a, int N) {
    return BigWitt(Series(a.ctx(), 1) - a * Series::var(a.ctx(), "z"), N);
  }

  const Series& series() const { return s_; }
  int order() const { return N_; }
  const CtxPtr& ctx() const { return s_.ctx(); }

  friend BigWitt operator+(const BigWitt& a, const BigWitt& b) {
    int N = std::min(a.N_, b.N_);
    return BigWitt(a.s_ * b.s_, N);
  }

  // ghost_n = coefficient of z^n in -z d/dz log w, n = 1..N (index 0 unused).
  std::vector<Series> ghost() const {
    Series lg = padic_log(s_);
    std::vector<Series> g{Series(ctx())};
    for (int n = 1; n <= N_; ++n) g.push_back(coeff_in(lg, "z", n).scaled(Q(-n)));
    return g;
  }

  static BigWitt from_ghost(const CtxPtr& c, const std::vector<Series>& g) {
    int N = static_cast<int>(g.size()) - 1;
    Series x(c);
    auto z = Series::var(c, "z");
    for (int n = 1; n <= N; ++n) x -= g[n] * z.pow(static_cast<unsigned>(n)).scaled(Q(1, n));
    return BigWitt(series_exp(truncate_in(x, "z", N)), N);
  }

  BigWitt neg() const {
    auto g = ghost();
    for (auto& x : g) x = -x;
    return from_ghost(ctx(), g);
  }

  friend BigWitt operator*(const BigWitt& a, const BigWitt& b) {
    auto ga = a.ghost(), gb = b.ghost();
    int N = std::min(a.N_, b.N_);
    std::vector<Series> g{Series(a.ctx())};
    for (int n = 1; n <= N; ++n) g.push_back(ga[n] * gb[n]);
    return from_ghost(a.ctx(), g);
  }

  // F_m: ghost_d(F_m w) = ghost_{md}(w); valid to order floor(N/m).
  BigWitt frobenius(int m, int needed = 0) const {
    if (m < 1) throw PrecisionExhausted("F_m needs m >= 1");
    if (needed > 0 && m * needed > N_)
      throw PrecisionExhausted("F_" + std::to_string(m) + " to order " + std::to_string(needed) + " needs N >= " +
                               std::to_string(m * needed));
    auto g = ghost();
    int M = N_ / m;
    std::vector<Series> h{Series(ctx())};
    for (int d = 1; d <= M; ++d) h.push_back(g[static_cast<std::size_t>(m * d)]);
    return from_ghost(ctx(), h);
  }

  // V_m: w(z) -> w(z^m).
  BigWitt verschiebung(int m) const {
    return BigWitt(s_.compose("z", Series::var(ctx(), "z").pow(static_cast<unsigned>(m))), N_);
  }

  friend bool operator==(const BigWitt& a, const BigWitt& b) { return a.N_ == b.N_ && a.s_ == b.s_; }

 private:
  int z() const { return s_.ctx()->var("z"); }

  Series s_;
  int N_;
};

}  // namespace prismlab
