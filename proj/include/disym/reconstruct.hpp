#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace disym {

// Lift a row over F_p to integers: multiply by a small scale, take symmetric
// representatives in (-p/2, p/2), then divide out the content (gcd).
// Returns the primitive integer row; content receives the removed gcd.
inline std::vector<long long> rational_reconstruct(const Fp& F,
                                                   const std::vector<std::uint64_t>& row,
                                                   std::uint64_t scale,
                                                   long long* content = nullptr) {
  std::vector<long long> out(row.size());
  long long g = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = F.lift(F.mul(row[j], scale % F.modulus()));
    g = std::gcd(g, std::llabs(out[j]));
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  if (content) *content = g ? g : 1;
  return out;
}

// Smallest scale in 1..max_scale whose lifted entries are all below the
// threshold in absolute value (i.e. the lift looks like genuine small
// integers rather than random residues).  Default threshold p/1000.
inline std::optional<std::uint64_t> find_scale(const Fp& F,
                                               const Matrix<Fp>& rows,
                                               std::uint64_t max_scale = 1000,
                                               std::uint64_t threshold = 0) {
  if (threshold == 0) threshold = F.modulus() / 1000;
  for (std::uint64_t s = 1; s <= max_scale; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < rows.rows() && ok; ++i)
      for (std::size_t j = 0; j < rows.cols() && ok; ++j) {
        long long v = F.lift(F.mul(rows.at(i, j), s));
        if (std::llabs(v) >= static_cast<long long>(threshold)) ok = false;
      }
    if (ok) return s;
  }
  return std::nullopt;
}

}  // namespace disym
