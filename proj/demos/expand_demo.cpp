// Expands a few commutative monomials into the diassociative normal-form
// basis and prints the results.

#include <iostream>

#include "disym/expansion.hpp"

using namespace disym;

int main() {
  for (const char* s : {"ab", "(ab)c", "((ab)c)d"}) {
    const Tree t = parse_monomial(s);
    const DiasPoly p = expand(t);
    std::cout << tree_str(t) << "  ->  " << p.size() << " terms\n";
    std::cout << "  " << poly_str(p) << "\n\n";
  }

  // expansion is equivariant: relabeling before or after gives the same result
  const Tree t = parse_monomial("(ab)(cd)");
  std::cout << "equivariant under relabeling: "
            << (check_expansion_equivariance(t, {2, 0, 3, 1}) ? "yes" : "no")
            << "\n";
  return 0;
}
