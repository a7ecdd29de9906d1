// Finds the one-variable identities of degree 6: builds the collapsed
// expansion matrix, extracts its integer kernel by Hermite normal form,
// and reduces the kernel basis with LLL.

#include <iostream>

#include "disym/pipeline.hpp"

using namespace disym;

int main() {
  const NonlinearResult r = nonlinear_analyze(Pattern::XN);

  std::cout << "monomials:";
  for (const auto& m : r.monomials) std::cout << " " << m;
  std::cout << "\n";
  std::cout << "matrix " << r.e.rows() << "x" << r.e.cols() << ", rank "
            << r.rank_q << ", kernel dimension " << r.nullity << "\n\n";

  std::cout << "reduced kernel basis (each row is an identity):\n";
  for (std::size_t i = 0; i < r.identities.rows(); ++i) {
    for (std::size_t j = 0; j < r.identities.cols(); ++j)
      std::cout << (j ? " " : "  ") << r.identities.at(i, j);
    std::cout << "\n";
  }

  // double-check: every kernel row expands to zero
  const Matrix<ZRing> prod = r.e.mul(r.identities.transpose());
  bool zero = true;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      zero = zero && prod.at(i, j) == 0;
  std::cout << "\nall identities vanish under expansion: " << (zero ? "yes" : "no")
            << "\n";
  return zero ? 0 : 1;
}
