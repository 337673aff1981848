#include "zkpcp/rm.h"

#include <algorithm>
#include <stdexcept>

namespace zkpcp {

void CodeView::validate() const {
  if (!zero_on) return;
  if (zero_on->arity() != dv.size())
    throw std::invalid_argument("zero set arity does not match the code");
  for (std::size_t i = 0; i < dv.size(); ++i)
    if (zero_on->factor(i).size() > dv[i] + 1)
      throw std::invalid_argument(
          "zero code degree precondition violated: |S_i| > d_i + 1");
}

namespace {

void require_arity(const CodeView& view, std::span<const Point> points) {
  for (const auto& p : points)
    if (p.length() != view.arity())
      throw std::invalid_argument("point " + to_string(p) +
                                  " does not match code arity");
}

}  // namespace

Matrix rm_generator(const CodeView& view, std::span<const Point> points) {
  require_arity(view, points);
  std::size_t width = 1;
  for (auto d : view.dv) width *= d + 1;
  Matrix g(0, width);
  for (const auto& p : points)
    g.append_row(monomial_values(view.field, view.dv, p.coords()));
  return g;
}

ConstraintBasis cd_rm(const CodeView& view, std::span<const Point> points) {
  require_arity(view, points);
  ConstraintBasis out;
  out.domain = dedup(points);
  const Matrix g = rm_generator(view, out.domain);
  out.z = kernel_basis(view.field, g.transpose());
  return out;
}

ConstraintBasis cd_zero_rm(const CodeView& view, std::span<const Point> points) {
  if (!view.zero_on) throw std::invalid_argument("cd_zero_rm: no zero set");
  view.validate();
  require_arity(view, points);
  const PrimeField& f = view.field;
  const ProductSet& s = *view.zero_on;
  ConstraintBasis out;
  out.domain = dedup(points);
  const std::size_t n = out.domain.size();
  const std::size_t m = view.arity();

  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < m; ++i)
    if (view.dv[i] >= s.factor(i).size()) axes.push_back(i);

  // Block diagonal detector for the reduced-degree codes, one block per axis.
  Matrix block(0, axes.size() * n);
  for (std::size_t b = 0; b < axes.size(); ++b) {
    DegreeVector di = view.dv;
    di[axes[b]] -= s.factor(axes[b]).size();
    const Matrix zi = cd_rm(view.plain().with_degrees(di), out.domain).z;
    std::vector<Fe> row(axes.size() * n);
    for (std::size_t r = 0; r < zi.rows(); ++r) {
      std::fill(row.begin(), row.end(), Fe(0));
      for (std::size_t c = 0; c < n; ++c) row[b * n + c] = zi.at(r, c);
      block.append_row(row);
    }
  }

  // A_I^T: (t_b)_b  ->  sum_b Z_{S_b}(x_b) t_b(x).
  Matrix a_t(n, axes.size() * n);
  for (std::size_t b = 0; b < axes.size(); ++b) {
    const auto z = vanishing(f, s.factor(axes[b]));
    for (std::size_t c = 0; c < n; ++c)
      a_t.at(c, b * n + c) = eval_univariate(f, z, out.domain[c][axes[b]]);
  }
  out.z = image_dual_basis(f, a_t, block);
  return out;
}

ConstraintBasis detect(const CodeView& view, std::span<const Point> points) {
  return view.zero_on ? cd_zero_rm(view, points) : cd_rm(view, points);
}

PointSet a_closure(const PointSet& x, const ProductSet& a) {
  PointSet out;
  for (const auto& p : x) {
    if (p.length() > a.arity())
      throw std::invalid_argument("a_closure: point longer than arity");
    out.insert(p);
  }
  for (std::size_t len = a.arity(); len >= 1; --len) {
    std::vector<Point> level;
    for (const auto& p : out)
      if (p.length() == len) level.push_back(p);
    for (const auto& p : level) {
      const Point parent = p.parent();
      out.insert(parent);
      for (Fe v : a.factor(len - 1)) out.insert(parent.extended(v));
    }
  }
  return out;
}

bool is_a_closed(const PointSet& s, const ProductSet& a) {
  for (const auto& p : s) {
    if (p.is_root()) continue;
    const Point parent = p.parent();
    if (!s.contains(parent)) return false;
    for (Fe v : a.factor(p.length() - 1))
      if (!s.contains(parent.extended(v))) return false;
  }
  return true;
}

}  // namespace zkpcp
