// Builds sl2 + sl2 acting on two copies of V_m through a non-canonical
// coefficient choice and brings it to the canonical table.

#include <iostream>

#include "leibniz/leibniz.hpp"

using namespace leibniz;

int main() {
  const std::size_t m = 2;
  const Algebra L = build_generic_action(m, 1, 1, -1, 0, 1, 0);
  std::cout << "dim " << L.dim() << ", Leibniz: " << (check_leibniz(L).passed() ? "yes" : "no") << "\n";
  std::cout << render_report(check_action_relations(extract_coefficients(L)), Format::text);

  const auto n = normalize_action(m, 1, 1, -1, 0, 1, 0);
  std::cout << "basis change on x^1, x^2 (index 0):\n";
  const std::size_t x1 = 6, x2 = 6 + m + 1;
  for (std::size_t r : {x1, x2})
    std::cout << "  " << L.label(r) << "' = " << n.change.matrix()(r, x1).to_string() << "*" << L.label(x1) << " + "
              << n.change.matrix()(r, x2).to_string() << "*" << L.label(x2) << "\n";
  std::cout << write_document({n.algebra, {{"family", "THM42"}, {"m", "2"}}});
}
