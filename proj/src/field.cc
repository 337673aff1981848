#include "zkpcp/field.h"

#include <limits>
#include <stdexcept>
#include <string>

namespace zkpcp {

Rng::Rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  for (;;) {
    std::uint64_t w = engine_();
    if (w <= limit) return w % n;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 17; q <= n / q; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ull << 62) || !is_prime(p)) {
    throw std::invalid_argument("field modulus is not a supported prime: " +
                                std::to_string(p));
  }
}

Fe PrimeField::of(std::int64_t x) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = x % p;
  if (r < 0) r += p;
  return Fe(static_cast<std::uint64_t>(r));
}

Fe PrimeField::canonical(std::uint64_t x) const {
  if (x >= p_) {
    throw std::invalid_argument("value " + std::to_string(x) +
                                " is not a canonical element of F_" +
                                std::to_string(p_));
  }
  return Fe(x);
}

Fe PrimeField::pow(Fe a, std::uint64_t e) const {
  Fe r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fe PrimeField::inv(Fe a) const {
  if (a.value() == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

Fe PrimeField::sample(Rng& rng) const {
  return Fe(rng.below(p_));
}

std::vector<Fe> PrimeField::elements() const {
  std::vector<Fe> out;
  out.reserve(p_);
  for (std::uint64_t i = 0; i < p_; ++i) out.emplace_back(i);
  return out;
}

}  // namespace zkpcp
