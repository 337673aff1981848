#include "zkpcp/antisym.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace zkpcp {

namespace {

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("cube size overflows 64 bits");
  return a * b;
}

void require_symmetric(const ProductSet& cube) {
  if (!cube.symmetric())
    throw std::invalid_argument("cube is not reversal-symmetric");
}

void require_prefix(const Point& a, const ProductSet& cube) {
  if (!is_cube_prefix(a, cube))
    throw std::invalid_argument("point " + to_string(a) +
                                " is not a prefix of the cube");
}

// Product of |A_j| over factor indices [lo, hi).
std::uint64_t factor_product(const ProductSet& cube, std::size_t lo,
                             std::size_t hi) {
  std::uint64_t n = 1;
  for (std::size_t j = lo; j < hi; ++j) n = mul_checked(n, cube.factor(j).size());
  return n;
}

void collect_complement(const Point& node, const std::vector<Point>& h,
                        const ProductSet& cube, std::vector<Point>& out) {
  bool below = false;
  for (const auto& a : h) {
    if (a.is_prefix_of(node)) return;
    below = below || node.is_prefix_of(a);
  }
  if (!below) {
    const auto pts = expand_prefix(node, cube);
    out.insert(out.end(), pts.begin(), pts.end());
    return;
  }
  for (Fe v : cube.factor(node.length()))
    collect_complement(node.extended(v), h, cube, out);
}

}  // namespace

bool is_cube_prefix(const Point& a, const ProductSet& cube) {
  if (a.length() > cube.arity()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (!std::binary_search(cube.factor(i).begin(), cube.factor(i).end(), a[i]))
      return false;
  return true;
}

std::uint64_t cube_size(const Point& a, const ProductSet& cube) {
  require_prefix(a, cube);
  return factor_product(cube, a.length(), cube.arity());
}

std::uint64_t rev_intersection_size(const Point& a, const Point& b,
                                    const ProductSet& cube) {
  require_symmetric(cube);
  require_prefix(a, cube);
  require_prefix(b, cube);
  const std::size_t m = cube.arity();
  if (a.length() + b.length() < m)
    return factor_product(cube, a.length(), m - b.length());
  // Coordinate i (0-based) of rev(b) is b_{m-1-i} once i >= m - |b|.
  for (std::size_t i = m - b.length(); i < a.length(); ++i)
    if (a[i] != b[m - 1 - i]) return 0;
  return 1;
}

std::vector<Point> expand_prefix(const Point& a, const ProductSet& cube) {
  require_prefix(a, cube);
  std::vector<Point> out{a};
  for (std::size_t j = a.length(); j < cube.arity(); ++j) {
    std::vector<Point> next;
    for (const auto& p : out)
      for (Fe v : cube.factor(j)) next.push_back(p.extended(v));
    out = std::move(next);
  }
  return out;
}

PrefixFreeFamily prefix_free(const PointSet& points, const ProductSet& cube) {
  PrefixFreeFamily out;
  for (const auto& a : points) {
    require_prefix(a, cube);
    out.g.insert(a);
    out.lambda[a] = {a};
  }
  for (;;) {
    // Smallest element with a strict extension in G, then its smallest one.
    const Point* star = nullptr;
    const Point* child = nullptr;
    for (const auto& a : out.g) {
      for (auto it = out.g.upper_bound(a); it != out.g.end(); ++it) {
        if (it->length() > a.length() && a.is_prefix_of(*it)) {
          child = &*it;
          break;
        }
      }
      if (child) {
        star = &a;
        break;
      }
    }
    if (!star) break;
    const Point a_star = *star;
    const Point a_child = *child;
    std::vector<Point> pieces;
    for (std::size_t j = a_star.length(); j < a_child.length(); ++j) {
      const Point base = a_child.prefix(j);
      for (Fe v : cube.factor(j))
        if (v != a_child[j]) pieces.push_back(base.extended(v));
    }
    out.g.erase(a_star);
    out.g.insert(pieces.begin(), pieces.end());
    for (auto& [key, cover] : out.lambda) {
      if (!cover.erase(a_star)) continue;
      cover.insert(pieces.begin(), pieces.end());
      cover.insert(a_child);
    }
  }
  return out;
}

bool is_symmetric_family(std::span<const Point> h, const ProductSet& cube) {
  unsigned __int128 total = 0, overlap = 0;
  for (const auto& a : h) {
    total += cube_size(a, cube);
    for (const auto& b : h) overlap += rev_intersection_size(a, b, cube);
  }
  return total == overlap;
}

std::vector<std::vector<Point>> sym_sets(const PointSet& g,
                                         const ProductSet& cube) {
  require_symmetric(cube);
  const std::vector<Point> pts(g.begin(), g.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].is_prefix_of(pts[j]))
        throw std::invalid_argument("sym_sets: family is not prefix-free");
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (rev_intersection_size(pts[i], pts[j], cube) > 0)
        parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<Point>> comps;
  for (std::size_t i = 0; i < pts.size(); ++i) comps[find(i)].push_back(pts[i]);
  std::vector<std::vector<Point>> out;
  for (auto& [root, h] : comps)
    if (is_symmetric_family(h, cube)) out.push_back(std::move(h));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Plan {
  PrefixFreeFamily family;
  std::vector<std::vector<Point>> sets;
  std::vector<bool> large;  // union covers more than half the cube
  PointSet r;
};

Plan make_plan(const ProductSet& cube, const std::vector<Point>& queries) {
  require_symmetric(cube);
  Plan plan;
  plan.family = prefix_free(PointSet(queries.begin(), queries.end()), cube);
  plan.sets = sym_sets(plan.family.g, cube);
  const unsigned __int128 k = cube.size();
  for (const auto& h : plan.sets) {
    unsigned __int128 u = 0;
    for (const auto& a : h) u += cube_size(a, cube);
    const bool large = 2 * u > k;
    plan.large.push_back(large);
    if (large) {
      plan.r.insert(Point());
      std::vector<Point> rest;
      collect_complement(Point(), h, cube, rest);
      plan.r.insert(rest.begin(), rest.end());
    } else {
      for (const auto& a : h) {
        const auto pts = expand_prefix(a, cube);
        plan.r.insert(pts.begin(), pts.end());
      }
    }
  }
  return plan;
}

}  // namespace

LocatorOutput antisym_locate(const PrimeField& f, const ProductSet& cube,
                             std::span<const Point> points) {
  const std::vector<Point> queries = dedup(points);
  const Plan plan = make_plan(cube, queries);
  const std::vector<Point> r(plan.r.begin(), plan.r.end());
  const std::vector<Point> g(plan.family.g.begin(), plan.family.g.end());
  std::map<Point, std::size_t> rcol, gcol;
  for (std::size_t k = 0; k < r.size(); ++k) rcol[r[k]] = k;
  for (std::size_t k = 0; k < g.size(); ++k) gcol[g[k]] = r.size() + k;
  const std::size_t qbase = r.size() + g.size();
  const std::size_t width = qbase + queries.size();
  const Fe one = f.one(), minus = f.neg(f.one());

  // Columns: message on R, beta on G, answers on the queries.
  Matrix y(0, width);
  std::vector<Fe> row(width);
  for (std::size_t h = 0; h < plan.sets.size(); ++h) {
    std::fill(row.begin(), row.end(), Fe(0));
    if (plan.large[h]) {
      row[rcol.at(Point())] = one;
      std::vector<Point> rest;
      collect_complement(Point(), plan.sets[h], cube, rest);
      for (const auto& x : rest) row[rcol.at(x)] = f.add(row[rcol.at(x)], minus);
    } else {
      for (const auto& a : plan.sets[h])
        for (const auto& x : expand_prefix(a, cube)) row[rcol.at(x)] = one;
    }
    for (const auto& a : plan.sets[h]) row[gcol.at(a)] = minus;
    y.append_row(row);
  }
  for (std::size_t k = 0; k < queries.size(); ++k) {
    std::fill(row.begin(), row.end(), Fe(0));
    for (const auto& a : plan.family.lambda.at(queries[k])) row[gcol.at(a)] = one;
    row[qbase + k] = minus;
    y.append_row(row);
  }
  std::vector<std::size_t> keep(r.size());
  std::iota(keep.begin(), keep.end(), 0);
  for (std::size_t k = 0; k < queries.size(); ++k) keep.push_back(qbase + k);
  return {r, queries, eliminate_columns(f, y, keep)};
}

AntisymStats antisym_stats(const ProductSet& cube, std::span<const Point> points) {
  const Plan plan = make_plan(cube, dedup(points));
  return {plan.family.g.size(), plan.sets.size(), plan.r.size()};
}

AntisymLocator::AntisymLocator(PrimeField f, ProductSet cube)
    : f_(f), cube_(std::move(cube)) {}

LocatorOutput AntisymLocator::locate(std::span<const Point> queries) const {
  return antisym_locate(f_, cube_, queries);
}

}  // namespace zkpcp
