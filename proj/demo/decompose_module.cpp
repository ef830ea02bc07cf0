// Splits V_3 + V_1 + V_0 after a random-looking change of basis.

#include <iostream>

#include "leibniz/leibniz.hpp"

using namespace leibniz;

int main() {
  ModuleAction V = direct_sum({irreducible_module(3), irreducible_module(1), irreducible_module(0)});
  const std::size_t d = V.module_dim;
  Matrix P = Matrix::identity(d);
  for (std::size_t i = 0; i + 1 < d; ++i) P(i, i + 1) = Gaussian(static_cast<long>(i) + 1, 1);
  const Matrix Pinv = *inverse(P);
  for (auto& R : V.matrices) R = Pinv * R * P;

  std::cout << "homomorphism law: " << (homomorphism_law_holds(V) ? "yes" : "no") << "\n";
  for (const auto& [w, s] : weight_decomposition(V, sl2_h)) std::cout << "weight " << w << ": dim " << s.dim() << "\n";
  for (const auto& part : decompose(V)) std::cout << "V_" << part.highest_weight << " (dim " << part.submodule.dim() << ")\n";
}
