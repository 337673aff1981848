#ifndef ZKPCP_POLY_H_
#define ZKPCP_POLY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "zkpcp/field.h"
#include "zkpcp/point.h"

namespace zkpcp {

// Per-variable degree bounds. Negative entries never appear here; callers
// that would need one treat the axis as contributing nothing.
using DegreeVector = std::vector<std::size_t>;

// Dense multivariate polynomial with individual degree bounds. Coefficient
// of X^e lives at the mixed-radix index of e, variable 0 most significant.
class MultiPoly {
 public:
  MultiPoly() : coeffs_(1) {}
  explicit MultiPoly(DegreeVector bounds);

  std::size_t arity() const { return bounds_.size(); }
  const DegreeVector& bounds() const { return bounds_; }
  std::size_t num_coeffs() const { return coeffs_.size(); }
  std::vector<Fe>& coeffs() { return coeffs_; }
  const std::vector<Fe>& coeffs() const { return coeffs_; }

  std::size_t index_of(std::span<const std::size_t> exps) const;
  std::vector<std::size_t> exponents_of(std::size_t index) const;
  Fe coeff(std::span<const std::size_t> exps) const {
    return coeffs_[index_of(exps)];
  }
  void set_coeff(std::span<const std::size_t> exps, Fe v) {
    coeffs_[index_of(exps)] = v;
  }

  Fe eval(const PrimeField& f, std::span<const Fe> x) const;
  Fe eval(const PrimeField& f, const Point& x) const {
    return eval(f, std::span<const Fe>(x.coords()));
  }
  bool is_zero() const;
  // Largest exponent of each variable carrying a nonzero coefficient.
  DegreeVector degrees() const;
  // Same polynomial under different bounds. Throws std::invalid_argument
  // when a nonzero coefficient would not fit.
  MultiPoly rebound(const DegreeVector& bounds) const;

  bool operator==(const MultiPoly&) const = default;

 private:
  DegreeVector bounds_;
  std::vector<std::size_t> strides_;
  std::vector<Fe> coeffs_;
};

MultiPoly add(const PrimeField& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const PrimeField& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const PrimeField& f, Fe c, const MultiPoly& a);
MultiPoly mul(const PrimeField& f, const MultiPoly& a, const MultiPoly& b);
// X_i -> X_{m-1-i}.
MultiPoly reverse_variables(const MultiPoly& p);
// The univariate polynomial with `coeffs` (ascending) placed in variable
// `var` of an arity-`arity` polynomial.
MultiPoly in_variable(std::size_t arity, std::size_t var,
                      std::span<const Fe> coeffs);

// prod_{s in S} (X - s), ascending coefficients.
std::vector<Fe> vanishing(const PrimeField& f, std::span<const Fe> s);
Fe eval_univariate(const PrimeField& f, std::span<const Fe> coeffs, Fe x);
// Degree < |nodes| interpolant; nodes must be distinct.
std::vector<Fe> interpolate_univariate(const PrimeField& f,
                                       std::span<const Fe> nodes,
                                       std::span<const Fe> values);

// Lagrange basis polynomial of S at w, bounds (|S_i| - 1).
MultiPoly lagrange(const PrimeField& f, const ProductSet& s, const Point& w);
// Unique interpolant with bounds (|S_i| - 1); values follow S.points().
MultiPoly interpolate(const PrimeField& f, const ProductSet& s,
                      std::span<const Fe> values);
// Uniform polynomial with bounds d agreeing with `values` on S.
// Requires d_i + 1 >= |S_i|.
MultiPoly sample_lde(const PrimeField& f, const ProductSet& s,
                     std::span<const Fe> values, const DegreeVector& d,
                     Rng& rng);
MultiPoly random_poly(const PrimeField& f, const DegreeVector& d, Rng& rng);

// sum over a in H_{l+1} x ... x H_m of P(prefix, a), with l = |prefix|.
Fe subcube_sum(const PrimeField& f, const MultiPoly& p, const ProductSet& h,
               const Point& prefix);

// Values of every monomial X^e (coefficient order) at x.
std::vector<Fe> monomial_values(const PrimeField& f, const DegreeVector& d,
                                std::span<const Fe> x);
// P on all of F^m, lexicographic order.
std::vector<Fe> evaluate_on_grid(const PrimeField& f, const MultiPoly& p);

}  // namespace zkpcp

#endif  // ZKPCP_POLY_H_
