#include "zkpcp/sigma_rm.h"

#include <algorithm>
#include <stdexcept>

#include "zkpcp/rm_locator.h"

namespace zkpcp {

SumWord sum_word(const PrimeField& f, const MultiPoly& p, const ProductSet& a,
                 std::span<const Point> points) {
  SumWord w;
  for (const auto& x : points) w[x] = subcube_sum(f, p, a, x);
  return w;
}

SumWord summation_constraint(const PrimeField& f, const Point& s,
                             const ProductSet& a) {
  if (s.length() >= a.arity())
    throw std::invalid_argument("summation constraint needs |s| < m");
  SumWord z;
  z[s] = f.one();
  for (Fe v : a.factor(s.length())) z[s.extended(v)] = f.neg(f.one());
  return z;
}

std::vector<Point> expandable(const PointSet& s, const ProductSet& a) {
  std::vector<Point> out;
  for (const auto& p : s) {
    if (p.length() >= a.arity()) continue;
    bool all = true;
    for (Fe v : a.factor(p.length())) all = all && s.contains(p.extended(v));
    if (all) out.push_back(p);
  }
  return out;
}

SumWord flatten(const PrimeField& f, const SumWord& z, std::size_t axis, Fe a,
                const PointSet& s, const ProductSet& cube) {
  if (axis == 0 || axis > cube.arity())
    throw std::invalid_argument("flatten: axis out of range");
  const auto& ai = cube.factor(axis - 1);
  if (!std::binary_search(ai.begin(), ai.end(), a))
    throw std::invalid_argument("flatten: a is not in A_i");
  std::vector<Fe> indicator(ai.size(), Fe(0));
  for (std::size_t k = 0; k < ai.size(); ++k)
    if (ai[k] == a) indicator[k] = f.one();
  const auto lag = interpolate_univariate(f, ai, indicator);

  PointSet star;
  for (const auto& p : s)
    if (p.length() + 1 == axis)
      for (const auto& q : s)
        if (q.length() == axis && p.is_prefix_of(q)) {
          star.insert(p);
          break;
        }

  SumWord out;
  for (const auto& p : s) {
    if (p.length() == axis) continue;
    auto it = z.find(p);
    Fe v = it == z.end() ? Fe(0) : it->second;
    if (star.contains(p)) {
      for (const auto& [q, zq] : z)
        if (q.length() == axis && p.is_prefix_of(q))
          v = f.add(v, f.mul(zq, eval_univariate(f, lag, q[axis - 1])));
    }
    out[p] = v;
  }
  return out;
}

LocatorOutput sigma_rm_locate(const CodeView& view, const ProductSet& a,
                              std::span<const Point> points) {
  const PrimeField& f = view.field;
  const std::size_t m = view.arity();
  if (a.arity() != m)
    throw std::invalid_argument("sigma_rm_locate: arity mismatch");
  for (std::size_t i = 0; i < m; ++i)
    if (view.dv[i] < 2 * (a.factor(i).size() - 1))
      throw std::invalid_argument(
          "sigma_rm_locate: degree precondition d_i >= 2(|A_i| - 1) violated");
  for (const auto& p : points)
    if (p.length() > m)
      throw std::invalid_argument("sigma_rm_locate: query longer than m");
  const std::vector<Point> queries = dedup(points);
  const PointSet closed = a_closure(PointSet(queries.begin(), queries.end()), a);

  std::vector<std::vector<Point>> layer(m + 1);
  for (const auto& p : closed) layer[p.length()].push_back(p);

  // The root sum equals the message's total, so it is a message position
  // whenever it is reachable from the queries.
  PointSet r(layer[0].begin(), layer[0].end());
  std::vector<LocatorOutput> per_arity(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    if (layer[i].empty()) continue;
    const CodeView vi{f, DegreeVector(view.dv.begin(), view.dv.begin() + i),
                      std::nullopt};
    per_arity[i] = rm_locate(vi, a.leading(i), layer[i]);
    r.insert(per_arity[i].r.begin(), per_arity[i].r.end());
  }
  const PointSet r_hat = a_closure(r, a);

  PointSet u = closed;
  u.insert(r_hat.begin(), r_hat.end());
  std::vector<Point> domain(u.begin(), u.end());
  std::map<Point, std::size_t> col;
  for (std::size_t k = 0; k < domain.size(); ++k) col[domain[k]] = k;

  Matrix rows(0, domain.size());
  std::vector<Fe> row(domain.size());
  for (std::size_t i = 1; i <= m; ++i) {
    const LocatorOutput& li = per_arity[i];
    for (std::size_t k = 0; k < li.z.rows(); ++k) {
      std::fill(row.begin(), row.end(), Fe(0));
      for (std::size_t c = 0; c < li.r.size(); ++c) {
        const std::size_t t = col.at(li.r[c]);
        row[t] = f.add(row[t], li.z.at(k, c));
      }
      for (std::size_t c = 0; c < li.queries.size(); ++c) {
        const std::size_t t = col.at(li.queries[c]);
        row[t] = f.add(row[t], li.z.at(k, li.query_column(c)));
      }
      rows.append_row(row);
    }
  }
  for (const auto& s : expandable(u, a)) {
    std::fill(row.begin(), row.end(), Fe(0));
    for (const auto& [p, v] : summation_constraint(f, s, a)) row[col.at(p)] = v;
    rows.append_row(row);
  }

  std::vector<Point> r_list(r_hat.begin(), r_hat.end());
  std::vector<Point> kept_points;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    const bool is_query =
        std::find(queries.begin(), queries.end(), domain[k]) != queries.end();
    if (is_query || r_hat.contains(domain[k])) {
      keep.push_back(k);
      kept_points.push_back(domain[k]);
    }
  }
  const Matrix b = eliminate_columns(f, rows, keep);
  return split_columns(f, std::move(r_list), queries, kept_points, b);
}

SigmaRmLocator::SigmaRmLocator(CodeView view, ProductSet a)
    : view_(std::move(view)), a_(std::move(a)) {}

LocatorOutput SigmaRmLocator::locate(std::span<const Point> queries) const {
  return sigma_rm_locate(view_, a_, queries);
}

}  // namespace zkpcp
