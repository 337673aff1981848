#ifndef ZKPCP_VALUE_DOMAIN_H_
#define ZKPCP_VALUE_DOMAIN_H_

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "zkpcp/field.h"
#include "zkpcp/linalg.h"

namespace zkpcp {

// Raised when simulator state contradicts every codeword.
class InconsistentState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Samples concrete field elements.
class ConcreteDomain {
 public:
  using Value = Fe;
  ConcreteDomain(const PrimeField& f, Rng& rng) : f_(f), rng_(rng) {}
  const PrimeField& field() const { return f_; }
  Value constant(Fe c) const { return c; }
  Value fresh() { return f_.sample(rng_); }
  Value add(const Value& a, const Value& b) const { return f_.add(a, b); }
  Value scale(Fe c, const Value& a) const { return f_.mul(c, a); }
  bool is_zero(const Value& a) const { return a.value() == 0; }
  bool equal(const Value& a, const Value& b) const { return a == b; }

 private:
  PrimeField f_;
  Rng& rng_;
};

// c + sum_j coeffs[j] u_j over independent uniform symbols u_j.
struct AffineForm {
  Fe constant;
  std::vector<Fe> coeffs;
};

// Replaces every uniform draw by a fresh symbol, so a run computes the
// exact law of its outputs as an affine image of a uniform vector.
class SymbolicDomain {
 public:
  using Value = AffineForm;
  explicit SymbolicDomain(const PrimeField& f) : f_(f) {}
  const PrimeField& field() const { return f_; }
  std::size_t symbols() const { return symbols_; }

  Value constant(Fe c) const { return {c, {}}; }
  Value fresh() {
    Value v{Fe(0), std::vector<Fe>(symbols_ + 1, Fe(0))};
    v.coeffs[symbols_++] = f_.one();
    return v;
  }
  Value add(const Value& a, const Value& b) const {
    Value out{f_.add(a.constant, b.constant),
              std::vector<Fe>(std::max(a.coeffs.size(), b.coeffs.size()))};
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) out.coeffs[j] = a.coeffs[j];
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[j] = f_.add(out.coeffs[j], b.coeffs[j]);
    return out;
  }
  Value scale(Fe c, const Value& a) const {
    Value out{f_.mul(c, a.constant), a.coeffs};
    for (auto& x : out.coeffs) x = f_.mul(c, x);
    return out;
  }
  bool is_zero(const Value& a) const {
    if (a.constant.value() != 0) return false;
    for (Fe x : a.coeffs)
      if (x.value() != 0) return false;
    return true;
  }
  bool equal(const Value& a, const Value& b) const {
    return is_zero(add(a, scale(f_.neg(f_.one()), b)));
  }

 private:
  PrimeField f_;
  std::size_t symbols_ = 0;
};

// Uniform solution of A x = rhs, with free variables drawn from the domain.
// Throws InconsistentState when the system has no solution.
template <class D>
std::vector<typename D::Value> solve_uniform(D& dom, const AffineSolver& s,
                                             std::span<const typename D::Value> rhs) {
  using V = typename D::Value;
  const PrimeField& f = dom.field();
  if (rhs.size() != s.equations())
    throw std::invalid_argument("solve_uniform: right-hand side size mismatch");
  std::vector<V> eb;
  for (std::size_t i = 0; i < s.equations(); ++i) {
    V acc = dom.constant(Fe(0));
    for (std::size_t k = 0; k < rhs.size(); ++k) {
      const Fe t = s.transform().at(i, k);
      if (t.value() != 0) acc = dom.add(acc, dom.scale(t, rhs[k]));
    }
    eb.push_back(std::move(acc));
  }
  for (std::size_t i = s.rank(); i < eb.size(); ++i)
    if (!dom.is_zero(eb[i])) throw InconsistentState("affine system has no solution");
  std::vector<V> x(s.unknowns(), dom.constant(Fe(0)));
  for (std::size_t c : s.free_columns()) x[c] = dom.fresh();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    V v = eb[i];
    for (std::size_t c : s.free_columns()) {
      const Fe r = s.reduced().at(i, c);
      if (r.value() != 0) v = dom.add(v, dom.scale(f.neg(r), x[c]));
    }
    x[s.pivots()[i]] = std::move(v);
  }
  return x;
}

}  // namespace zkpcp

#endif  // ZKPCP_VALUE_DOMAIN_H_
