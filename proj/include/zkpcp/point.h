#ifndef ZKPCP_POINT_H_
#define ZKPCP_POINT_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "zkpcp/field.h"

namespace zkpcp {

// Element of F^{<=m}. The empty point plays the role of the root.
// Ordered by length first, then lexicographically by coordinate value.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Fe> coords) : c_(std::move(coords)) {}
  Point(std::initializer_list<std::uint64_t> coords);

  std::size_t length() const { return c_.size(); }
  bool is_root() const { return c_.empty(); }
  Fe operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Fe>& coords() const { return c_; }

  Point prefix(std::size_t len) const;
  Point parent() const { return prefix(c_.size() - 1); }
  Point extended(Fe a) const;
  Point reversed() const;
  // True when this point is a (not necessarily strict) prefix of `o`.
  bool is_prefix_of(const Point& o) const;

  friend std::strong_ordering operator<=>(const Point& a, const Point& b);
  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  std::vector<Fe> c_;
};

std::string to_string(const Point& p);
// Accepts "(1,2)", "()" and bare "1,2".
Point parse_point(const std::string& text, const PrimeField& f);
// Points separated by ';'.
std::vector<Point> parse_points(const std::string& text, const PrimeField& f);

using PointSet = std::set<Point>;

// First-occurrence order is kept.
std::vector<Point> dedup(std::span<const Point> pts);

// S_1 x ... x S_m with each factor sorted and duplicate free.
class ProductSet {
 public:
  ProductSet() = default;
  explicit ProductSet(std::vector<std::vector<Fe>> factors);
  // The same set H in every one of m coordinates.
  static ProductSet power(std::vector<Fe> h, std::size_t m);

  std::size_t arity() const { return factors_.size(); }
  const std::vector<Fe>& factor(std::size_t i) const { return factors_[i]; }
  const std::vector<std::vector<Fe>>& factors() const { return factors_; }
  std::uint64_t size() const;
  bool contains(const Point& p) const;
  // Points of length equal to the arity, lexicographic order.
  std::vector<Point> points() const;
  // Product of the first `len` factors.
  ProductSet leading(std::size_t len) const;
  // Product of the factors after position `len`.
  ProductSet trailing(std::size_t len) const;
  // True iff factor i equals factor m-1-i for every i.
  bool symmetric() const;

 private:
  std::vector<std::vector<Fe>> factors_;
};

// Every point of F^len in lexicographic order.
std::vector<Point> all_points(const PrimeField& f, std::size_t len);
// Rank of p among F^{|p|} in lexicographic order.
std::uint64_t lex_index(const Point& p, std::uint64_t modulus);
// Rank of p among F^{<=m} in (length, lexicographic) order.
std::uint64_t graded_index(const Point& p, std::uint64_t modulus);
// |F|^len with an overflow check against `cap`; throws when exceeded.
std::uint64_t checked_power(std::uint64_t base, std::size_t exp,
                            std::uint64_t cap);

}  // namespace zkpcp

#endif  // ZKPCP_POINT_H_
