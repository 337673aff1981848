#ifndef ZKPCP_FIELD_H_
#define ZKPCP_FIELD_H_

#include <compare>
#include <cstdint>
#include <random>
#include <vector>

namespace zkpcp {

// Canonical residue in [0, p). Arithmetic goes through PrimeField.
class Fe {
 public:
  constexpr Fe() = default;
  constexpr explicit Fe(std::uint64_t v) : v_(v) {}
  constexpr std::uint64_t value() const { return v_; }
  friend constexpr auto operator<=>(Fe, Fe) = default;

 private:
  std::uint64_t v_ = 0;
};

// Deterministic source of uniform 64-bit words.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Independent stream for (seed, stream), e.g. one per trial.
  Rng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next_u64() { return engine_(); }
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

bool is_prime(std::uint64_t n);
// Smallest prime strictly greater than n.
std::uint64_t next_prime_above(std::uint64_t n);

class PrimeField {
 public:
  // Throws std::invalid_argument unless p is prime and below 2^62.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t size() const { return p_; }
  bool characteristic_two() const { return p_ == 2; }

  Fe zero() const { return Fe(0); }
  Fe one() const { return Fe(1); }
  Fe of(std::int64_t x) const;
  // Throws unless x < p.
  Fe canonical(std::uint64_t x) const;

  Fe add(Fe a, Fe b) const {
    std::uint64_t s = a.value() + b.value();
    return Fe(s >= p_ ? s - p_ : s);
  }
  Fe sub(Fe a, Fe b) const {
    return Fe(a.value() >= b.value() ? a.value() - b.value()
                                     : a.value() + p_ - b.value());
  }
  Fe neg(Fe a) const { return Fe(a.value() == 0 ? 0 : p_ - a.value()); }
  Fe mul(Fe a, Fe b) const {
    return Fe(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.value()) * b.value()) % p_));
  }
  Fe pow(Fe a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  // Rejection sampling on uniform 64-bit words.
  Fe sample(Rng& rng) const;
  // 0, 1, ..., p-1.
  std::vector<Fe> elements() const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace zkpcp

#endif  // ZKPCP_FIELD_H_
