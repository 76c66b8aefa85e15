#include "tg/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace tg {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<long long>(v);
}

}  // namespace

Rat Rat::normalized(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = num == 0 ? den : gcd128(num, den);
  Rat r;
  r.num_ = narrow(num / g);
  r.den_ = narrow(den / g);
  return r;
}

Rat Rat::of(long long num, long long den) { return normalized(num, den); }

Rat operator+(const Rat& a, const Rat& b) {
  return Rat::normalized(static_cast<__int128>(a.num_) * b.den_ +
                             static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  return Rat::normalized(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rat::normalized(static_cast<__int128>(a.num_) * b.den_,
                         static_cast<__int128>(a.den_) * b.num_);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool operator<(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rat::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw std::invalid_argument("empty rational");
  std::string s(text.substr(b, e - b + 1));
  const std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat::of(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

Rat Rat::pow(long long base, int exp) {
  Rat r(1);
  const Rat b = exp < 0 ? Rat::of(1, base) : Rat(base);
  for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) r = r * b;
  return r;
}

bool RingSpec::contains(const Rat& x) const {
  if (kind == Kind::Rationals) return true;
  long long den = x.den();
  while (den % p == 0) den /= p;
  return den == 1;
}

bool RingSpec::is_unit(const Rat& x) const {
  if (x.is_zero()) return false;
  if (kind == Kind::Rationals) return true;
  // unit iff x = +-p^k
  long long num = x.num() < 0 ? -x.num() : x.num();
  long long den = x.den();
  while (num % p == 0) num /= p;
  while (den % p == 0) den /= p;
  return num == 1 && den == 1;
}

std::string RingSpec::name() const {
  return kind == Kind::Rationals ? "Q" : "Z[1/" + std::to_string(p) + "]";
}

Rat RingSpec::sample_unit(Rng& rng) const {
  if (kind == Kind::ZInvP) {
    const int e = rng.range(-1, 1);
    const Rat u = Rat::pow(p, e);
    return rng.coin() ? u : -u;
  }
  static const long long nums[] = {1, 2, 3, 1, 1, 5};
  static const long long dens[] = {1, 1, 1, 2, 3, 1};
  const std::size_t i = static_cast<std::size_t>(rng.below(6));
  const Rat u = Rat::of(nums[i], dens[i]);
  return rng.coin() ? u : -u;
}

Rat RingSpec::sample_element(Rng& rng) const {
  if (rng.below(4) == 0) return Rat(0);
  if (kind == Kind::ZInvP) {
    const long long a = rng.range(-3, 3);
    return Rat(a) * Rat::pow(p, rng.range(-1, 1));
  }
  return Rat::of(rng.range(-4, 4), rng.range(1, 3));
}

}  // namespace tg
