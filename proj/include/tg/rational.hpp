#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tg/rng.hpp"

namespace tg {

// Exact rational p/q in lowest terms, q > 0. Arithmetic runs through 128-bit
// intermediates and throws on (desk-scale-irrelevant) overflow rather than
// silently wrapping. No floating point anywhere.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  static Rat of(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  std::string to_string() const;  // "a/b" or "a"
  static Rat parse(std::string_view text);

  static Rat pow(long long base, int exp);  // base^exp, exp may be negative

 private:
  static Rat normalized(__int128 num, __int128 den);
  long long num_;
  long long den_;
};

// Ring configuration for the matrix instances: Q, or Z[1/p] for a prime p
// enforced as a membership predicate over Q.
struct RingSpec {
  enum class Kind { Rationals, ZInvP };
  Kind kind = Kind::Rationals;
  long long p = 2;

  static RingSpec rationals() { return RingSpec{Kind::Rationals, 0}; }
  static RingSpec z_inv_p(long long p) { return RingSpec{Kind::ZInvP, p}; }

  bool contains(const Rat& x) const;  // denominator a power of p (or anything, for Q)
  bool is_unit(const Rat& x) const;   // nonzero (Q) or +-p^k (Z[1/p])
  std::string name() const;

  Rat sample_unit(Rng& rng) const;
  Rat sample_element(Rng& rng) const;
};

}  // namespace tg
