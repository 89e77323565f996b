// Prints beta_i(B_k(Sigma_2)) for i, k <= 8, with the provenance of each entry.

#include <iostream>

#include "confbetti/engine.hpp"

int main() {
  using namespace confbetti;
  const Surface s = Surface::closed_orientable(2);
  const BettiTable table = betti_table(s, 8, 8);
  std::cout << s.name() << "\n  k\\i";
  for (int i = 0; i <= 8; ++i) std::cout << '\t' << i;
  std::cout << '\n';
  for (int k = 0; k <= 8; ++k) {
    std::cout << "  " << k;
    for (int i = 0; i <= 8; ++i) std::cout << '\t' << table.at(GradedIndex(i, k)).str();
    std::cout << '\n';
  }
  std::cout << "beta_3(B_5) comes from " << to_string(betti(s, 3, 5).provenance) << '\n';
}
