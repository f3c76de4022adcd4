#pragma once

#include "errors.hpp"
#include "numbers.hpp"
#include "series.hpp"

#include <string>
#include <vector>

namespace prismlab {

// Desk-scale truncation parameters.
struct Prec {
  long p = 2;
  int n_p = 8;   // coefficients mod p^n_p
  int n_q = 8;   // (q-1)-adic cutoff
  int n_z = 8;   // series order per formal variable
  int L = 4;     // p-typical Witt length
  int N_big = 12;

  void validate() const {
    if (!is_prime(p)) throw ConfigError("p must be prime");
    if (n_p < 1 || n_q < 1 || n_z < 1 || L < 1 || N_big < 1) throw ConfigError("precisions must be >= 1");
  }
  Z modulus() const { return ipow(Z(p), n_p); }
};

enum class CoeffKind { ExactInt, ExactRat, ModP, QPoly, QSeries, Cyclotomic };

// Context for series in `vars` (total degree <= n_z) over the given
// coefficient ring. QPoly/QSeries add a variable "h" = q-1, Cyclotomic adds
// "zeta" subject to Phi_p(zeta) = 0. `reduce_mod_p` applies to QSeries and
// Cyclotomic.
inline CtxPtr coeff_ctx(CoeffKind kind, const Prec& pr, const std::vector<std::string>& vars,
                        bool reduce_mod_p = false) {
  std::vector<std::string> names = vars;
  if (kind == CoeffKind::QPoly || kind == CoeffKind::QSeries) names.push_back("h");
  if (kind == CoeffKind::Cyclotomic) names.push_back("zeta");
  auto c = std::make_shared<SeriesCtx>(names);
  if (!vars.empty()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) mask |= 1u << i;
    c->total.push_back({mask, pr.n_z});
  }
  if (kind == CoeffKind::QSeries) c->cap[c->var("h")] = pr.n_q - 1;
  if (kind == CoeffKind::Cyclotomic) {
    c->rel_var = c->var("zeta");
    c->rel.assign(static_cast<std::size_t>(pr.p - 1), Q(1));  // zeta^{p-1} = -(1 + ... + zeta^{p-2})
  }
  if (kind == CoeffKind::ModP || (reduce_mod_p && (kind == CoeffKind::QSeries || kind == CoeffKind::Cyclotomic)))
    c->modulus = pr.modulus();
  return c;
}

}  // namespace prismlab
