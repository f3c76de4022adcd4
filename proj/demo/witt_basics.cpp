// Small tour of p-typical Witt vectors over Z.
#include "prismlab/witt/witt.hpp"

#include <iostream>

using namespace prismlab;

template <class R>
void show(const char* label, const Witt<R>& w) {
  std::cout << "  " << label << " = " << witt_str(w) << "\n";
}

int main() {
  const long p = 3;
  const int L = 3;
  Witt<Z> a(p, {2, 1, 0}), b(p, {1, 4, 5});

  std::cout << "W_" << L << "(Z), p = " << p << "\n";
  show("a", a);
  show("b", b);
  show("a + b", a + b);
  show("a * b", a * b);

  std::cout << "ghost components of a*b equal the products of ghost components:\n  ";
  auto ga = ghost(a), gb = ghost(b), gab = ghost(a * b);
  for (int n = 0; n < L; ++n) std::cout << gab[n] << (gab[n] == ga[n] * gb[n] ? " ok  " : " BAD  ");
  std::cout << "\n";

  // Teichmuller lifts are multiplicative but not additive.
  auto t2 = teichmuller(p, L, Z(2)), t5 = teichmuller(p, L, Z(5));
  show("[2]*[5]", t2 * t5);
  show("[10]", teichmuller(p, L, Z(10)));
  show("[2]+[5]", t2 + t5);

  // F V = p, and V is additive.
  show("F(V(a))", frobenius(verschiebung(a)));
  show("p * a (length 2)", truncate(witt_from_int(p, L, Z(0), Z(p)) * a, L - 1));
  show("3 in W_3(Z)", witt_from_int(p, L, Z(0), Z(3)));
}
