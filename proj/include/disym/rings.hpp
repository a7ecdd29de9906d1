#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace disym {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Deterministic Miller-Rabin, sufficient for the 31-bit primes we accept.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = 1, b = a % n, e = d;
    while (e) {
      if (e & 1) x = (unsigned __int128)x * b % n;
      b = (unsigned __int128)b * b % n;
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = (unsigned __int128)x * x % n;
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

// Prime field F_p for odd p < 2^31, with Barrett-reduced multiplication.
// Elements are canonical representatives 0..p-1 in uint64.
class Fp {
 public:
  using Elem = std::uint64_t;

  explicit Fp(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (1ull << 31) || !is_prime_u64(p))
      throw std::invalid_argument("Fp: modulus must be an odd prime < 2^31");
    magic_ = static_cast<std::uint64_t>(((unsigned __int128)1 << 64) / p);
    // floor(2^64 / p); the estimate q = (t * magic_) >> 64 is at most 2
    // below floor(t / p) for t < 2^62, so mul needs at most two corrections
  }

  std::uint64_t modulus() const { return p_; }
  std::string tag() const { return "F" + std::to_string(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    return m < 0 ? m + p_ : m;
  }
  Elem from_rat(const Rat& q) const;  // defined after ZRing helpers

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a ? p_ - a : 0; }

  Elem mul(Elem a, Elem b) const {
    std::uint64_t t = a * b;  // a,b < 2^31 so no overflow
    std::uint64_t q = static_cast<std::uint64_t>(((unsigned __int128)t * magic_) >> 64);
    std::uint64_t r = t - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem x = 1;
    while (e) {
      if (e & 1) x = mul(x, a);
      a = mul(a, a);
      e >>= 1;
    }
    return x;
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // symmetric representative in (-p/2, p/2)
  long long lift(Elem a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_)
                      : static_cast<long long>(a);
  }

  std::string str(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const { return from_int(std::stoll(s)); }

 private:
  std::uint64_t p_;
  std::uint64_t magic_;
};

// Ring of integers (arbitrary precision).
struct ZRing {
  using Elem = Int;

  std::string tag() const { return "Z"; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(long long v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  // exact division; throws if not divisible
  Elem div(const Elem& a, const Elem& b) const {
    Elem q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::domain_error("ZRing: inexact division");
    return q;
  }
  std::string str(const Elem& a) const { return a.str(); }
  Elem parse(const std::string& s) const { return Elem(s); }
};

// Field of rationals (always stored in lowest terms by cpp_rational).
struct QRing {
  using Elem = Rat;

  std::string tag() const { return "Q"; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(long long v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("QRing: inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("QRing: division by zero");
    return a / b;
  }
  std::string str(const Elem& a) const { return a.str(); }
  Elem parse(const std::string& s) const { return Elem(s); }
};

inline Fp::Elem Fp::from_rat(const Rat& q) const {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Elem n = static_cast<Elem>(((num % p_ + p_) % p_).convert_to<std::uint64_t>());
  Elem d = static_cast<Elem>(((den % p_ + p_) % p_).convert_to<std::uint64_t>());
  return div(n, d);
}

}  // namespace disym
