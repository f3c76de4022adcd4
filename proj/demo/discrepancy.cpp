// Scans W^(F)(F_p[a]/(a^k)) and counts where each candidate inverse of
// id - V reproduces z.
#include "prismlab/derham/derham.hpp"

#include <cstdio>

using namespace prismlab;

int main() {
  std::printf("%3s %3s %3s %8s %8s %14s %14s\n", "p", "L", "k", "|W_L|", "|W^F|", "f_naive(Vz-z)", "corrected");
  for (auto [p, L, k] : {std::tuple{2L, 2, 3}, {2L, 3, 3}, {2L, 4, 2}, {3L, 2, 3}, {3L, 3, 3}}) {
    DiscrepancyStats st;
    discrepancy_check(p, L, k, &st);
    std::printf("%3ld %3d %3d %8d %8d %8d/%-5d %8d/%-5d\n", p, L, k, st.elements, st.kernel, st.literal, st.kernel,
                st.corrected, st.kernel);
  }
}
