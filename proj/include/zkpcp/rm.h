#ifndef ZKPCP_RM_H_
#define ZKPCP_RM_H_

#include <optional>
#include <span>
#include <vector>

#include "zkpcp/field.h"
#include "zkpcp/linalg.h"
#include "zkpcp/point.h"
#include "zkpcp/poly.h"

namespace zkpcp {

// RM[F, m, dv], or its zero code on `zero_on` when present.
struct CodeView {
  PrimeField field;
  DegreeVector dv;
  std::optional<ProductSet> zero_on;

  std::size_t arity() const { return dv.size(); }
  CodeView plain() const { return {field, dv, std::nullopt}; }
  CodeView with_degrees(DegreeVector d) const { return {field, std::move(d), zero_on}; }
  CodeView vanishing_on(ProductSet s) const { return {field, dv, std::move(s)}; }
  // Throws std::invalid_argument when the zero set cannot be supported,
  // i.e. some |S_i| > d_i + 1.
  void validate() const;
};

// Rows of `z` span the constraints on `domain`.
struct ConstraintBasis {
  std::vector<Point> domain;
  Matrix z;
  bool empty() const { return z.rows() == 0; }
};

// One row per point of I, one column per monomial X^e with e <= dv.
Matrix rm_generator(const CodeView& view, std::span<const Point> points);

// Dual of RM|_I. Duplicate points are dropped, first occurrence kept.
ConstraintBasis cd_rm(const CodeView& view, std::span<const Point> points);

// Dual of Z_S(RM)|_I via the per-axis block construction. Axes with
// d_i < |S_i| carry no multiple of the vanishing polynomial and are
// skipped, which is exact whenever |S_i| <= d_i + 1.
ConstraintBasis cd_zero_rm(const CodeView& view, std::span<const Point> points);

// Dispatches on view.zero_on.
ConstraintBasis detect(const CodeView& view, std::span<const Point> points);

// Smallest A-closed superset of X: closed under prefixes and under
// completing each point's siblings over the factor at its length.
PointSet a_closure(const PointSet& x, const ProductSet& a);
bool is_a_closed(const PointSet& s, const ProductSet& a);

}  // namespace zkpcp

#endif  // ZKPCP_RM_H_
