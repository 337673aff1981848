#ifndef ZKPCP_SIGMA_RM_H_
#define ZKPCP_SIGMA_RM_H_

#include <map>
#include <span>
#include <vector>

#include "zkpcp/locator.h"
#include "zkpcp/rm.h"

namespace zkpcp {

// Partial word on F^{<=m}.
using SumWord = std::map<Point, Fe>;

// Subcube sums of P over A at each of the given points.
SumWord sum_word(const PrimeField& f, const MultiPoly& p, const ProductSet& a,
                 std::span<const Point> points);

// Summation constraint at s: +1 on s, -1 on each (s, a) with a in A_{|s|+1}.
SumWord summation_constraint(const PrimeField& f, const Point& s,
                             const ProductSet& a);

// Points s of S with |s| < m whose full sibling set of children lies in S.
std::vector<Point> expandable(const PointSet& s, const ProductSet& a);

// The flattening map for axis i (1-based) at a in A_i: children of length i
// are folded onto their parents in S* weighted by the Lagrange polynomial
// of A_i at a; the result lives on S minus its length-i points.
SumWord flatten(const PrimeField& f, const SumWord& z, std::size_t axis, Fe a,
                const PointSet& s, const ProductSet& cube);

// Locator for subcube sums of a uniform extension of degree dv.
// Message positions are prefixes of A; requires d_i >= 2(|A_i| - 1).
LocatorOutput sigma_rm_locate(const CodeView& view, const ProductSet& a,
                              std::span<const Point> points);

class SigmaRmLocator final : public Locator {
 public:
  SigmaRmLocator(CodeView view, ProductSet a);
  LocatorOutput locate(std::span<const Point> queries) const override;
  std::string message_domain() const override { return "cube-prefixes"; }
  std::string output_domain() const override { return "sum-code"; }

 private:
  CodeView view_;
  ProductSet a_;
};

}  // namespace zkpcp

#endif  // ZKPCP_SIGMA_RM_H_
