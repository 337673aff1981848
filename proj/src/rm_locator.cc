#include "zkpcp/rm_locator.h"

#include <algorithm>
#include <stdexcept>

namespace zkpcp {

bool check_constraints(const CodeView& view, std::span<const Point> points,
                       const ProductSet& s) {
  const CodeView zero = view.plain().vanishing_on(s);
  zero.validate();
  std::vector<Point> outside;
  for (const auto& p : points)
    if (!s.contains(p)) outside.push_back(p);
  return !cd_zero_rm(zero, outside).empty();
}

std::vector<Point> interpolating_set(const CodeView& view,
                                     std::span<const Point> points) {
  const ConstraintBasis cd = cd_rm(view.plain(), points);
  const RrefResult r = rref(view.field, cd.z);
  std::vector<bool> pivot(cd.domain.size(), false);
  for (auto c : r.pivots) pivot[c] = true;
  std::vector<Point> out;
  for (std::size_t c = 0; c < cd.domain.size(); ++c)
    if (!pivot[c]) out.push_back(cd.domain[c]);
  return out;
}

namespace {

// Depth-first search over prefixes t of A, keeping those whose suffix cube
// is constrained together with the interpolating set.
void search(const CodeView& reduced, const ProductSet& a,
            std::span<const Point> interp, std::vector<std::vector<Fe>>& fixed,
            std::vector<Point>& found) {
  const std::size_t level = fixed.size();
  const std::size_t m = a.arity();
  for (Fe s : a.factor(level)) {
    std::vector<std::vector<Fe>> factors = fixed;
    factors.push_back({s});
    for (std::size_t j = level + 1; j < m; ++j) factors.push_back(a.factor(j));
    if (!check_constraints(reduced, interp, ProductSet(factors))) continue;
    fixed.push_back({s});
    if (level + 1 == m) {
      std::vector<Fe> c;
      for (const auto& f : fixed) c.push_back(f[0]);
      found.emplace_back(std::move(c));
    } else {
      search(reduced, a, interp, fixed, found);
    }
    fixed.pop_back();
  }
}

}  // namespace

LocatorOutput rm_locate(const CodeView& view, const ProductSet& a,
                        std::span<const Point> points) {
  const std::size_t m = view.arity();
  if (a.arity() != m) throw std::invalid_argument("rm_locate: arity mismatch");
  DegreeVector reduced_dv(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ai = a.factor(i).size();
    if (ai == 0) throw std::invalid_argument("rm_locate: empty factor");
    if (view.dv[i] < 2 * (ai - 1))
      throw std::invalid_argument(
          "rm_locate: degree precondition d_i >= 2(|A_i| - 1) violated");
    reduced_dv[i] = view.dv[i] - (ai - 1);
  }
  for (const auto& p : points)
    if (p.length() != m)
      throw std::invalid_argument("rm_locate: query " + to_string(p) +
                                  " is not of full length");
  const std::vector<Point> queries = dedup(points);

  // Queries on A are systematic and go straight into R.
  std::vector<Point> off_cube;
  PointSet r;
  for (const auto& q : queries) {
    if (a.contains(q)) {
      r.insert(q);
    } else {
      off_cube.push_back(q);
    }
  }
  // The search asks whether a suffix cube is constrained together with the
  // interpolating set at the reduced degree. The set must be unconstrained
  // at that degree too, or constraints living inside it answer yes for
  // every cube and R grows to all of A.
  const CodeView reduced = view.plain().with_degrees(reduced_dv);
  const std::vector<Point> interp =
      interpolating_set(reduced, interpolating_set(view, off_cube));
  std::vector<Point> found;
  if (!interp.empty()) {
    std::vector<std::vector<Fe>> fixed;
    search(reduced, a, interp, fixed, found);
  }
  r.insert(found.begin(), found.end());

  std::vector<Point> r_list(r.begin(), r.end());
  std::vector<Point> domain = queries;
  for (const auto& p : r_list)
    if (std::find(queries.begin(), queries.end(), p) == queries.end())
      domain.push_back(p);
  const ConstraintBasis cd = cd_rm(view.plain(), domain);
  return split_columns(view.field, std::move(r_list), queries, cd.domain, cd.z);
}

RmLocator::RmLocator(CodeView view, ProductSet a)
    : view_(std::move(view)), a_(std::move(a)) {}

LocatorOutput RmLocator::locate(std::span<const Point> queries) const {
  return rm_locate(view_, a_, queries);
}

}  // namespace zkpcp
