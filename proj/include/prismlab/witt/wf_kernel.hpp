#pragma once

#include "prismlab/ringcore/rng.hpp"
#include "prismlab/ringcore/truncpoly.hpp"
#include "witt.hpp"

#include <string>
#include <vector>

namespace prismlab {

// Checks, over W_L(F_p[a]/(a^k)), that Fx = 0 forces px = 0 and x^p = 0, and
// that the solution sets of Fy = py and Fy = 0 coincide.
struct WfKernelReport {
  long p = 0;
  int L = 0;
  long checked = 0;
  long kernel = 0;       // elements with Fx = 0
  long eigen = 0;        // elements with Fy = py
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

namespace detail {

inline void wf_check_one(const Witt<TruncPoly>& x, WfKernelReport& rep) {
  const long p = x.p();
  const auto& like = x.like();
  auto Fx = frobenius_charp(x);
  auto zero = witt_zero(p, x.length(), like);
  auto px = witt_mul(witt_from_int(p, x.length(), like, Z(p)), x);
  bool f0 = Fx == zero;
  bool fp = Fx == px;
  ++rep.checked;
  if (f0) ++rep.kernel;
  if (fp) ++rep.eigen;
  if (f0 != fp && rep.counterexamples.size() < 5)
    rep.counterexamples.push_back("Fy=py differs from Fy=0 at " + witt_str(x));
  if (!f0) return;
  if (px != zero && rep.counterexamples.size() < 5) rep.counterexamples.push_back("px != 0 at " + witt_str(x));
  if (witt_pow(x, static_cast<unsigned long>(p)) != zero && rep.counterexamples.size() < 5)
    rep.counterexamples.push_back("x^p != 0 at " + witt_str(x));
}

}  // namespace detail

inline WfKernelReport wf_kernel_exhaustive(long p, int L, int k) {
  WfKernelReport rep;
  rep.p = p;
  rep.L = L;
  const long per = ipow64(p, static_cast<unsigned>(k));
  const long total = ipow64(per, static_cast<unsigned>(L));
  TruncPoly like(static_cast<std::uint64_t>(p), k);
  for (long idx = 0; idx < total; ++idx) {
    std::vector<TruncPoly> xs;
    long r = idx;
    for (int i = 0; i < L; ++i) {
      TruncPoly c(static_cast<std::uint64_t>(p), k);
      for (int j = 0; j < k; ++j, r /= p) c.set(j, r % p);
      xs.push_back(c);
    }
    detail::wf_check_one(Witt<TruncPoly>(p, xs), rep);
  }
  return rep;
}

// Random x with Fx = 0: a coordinate sum c_j a^j has p-th power sum c_j a^{jp},
// so only the c_j with jp >= k survive.
inline WfKernelReport wf_kernel_random(long p, int L, int k, int trials, CounterRng& rng) {
  WfKernelReport rep;
  rep.p = p;
  rep.L = L;
  for (int t = 0; t < trials; ++t) {
    std::vector<TruncPoly> xs;
    for (int i = 0; i < L; ++i) {
      TruncPoly c(static_cast<std::uint64_t>(p), k);
      for (int j = 0; j < k; ++j)
        if (j * p >= k) c.set(j, rng.range(0, p - 1));
      xs.push_back(c);
    }
    Witt<TruncPoly> x(p, xs);
    if (frobenius_charp(x) != witt_zero(p, L, xs[0]))
      rep.counterexamples.push_back("sampler produced Fx != 0 at " + witt_str(x));
    detail::wf_check_one(x, rep);
  }
  return rep;
}

}  // namespace prismlab
