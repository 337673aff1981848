#include "zkpcp/point.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zkpcp {

Point::Point(std::initializer_list<std::uint64_t> coords) {
  for (auto v : coords) c_.emplace_back(v);
}

Point Point::prefix(std::size_t len) const {
  if (len > c_.size()) throw std::out_of_range("Point::prefix");
  return Point(std::vector<Fe>(c_.begin(), c_.begin() + len));
}

Point Point::extended(Fe a) const {
  std::vector<Fe> c = c_;
  c.push_back(a);
  return Point(std::move(c));
}

Point Point::reversed() const {
  return Point(std::vector<Fe>(c_.rbegin(), c_.rend()));
}

bool Point::is_prefix_of(const Point& o) const {
  return c_.size() <= o.c_.size() &&
         std::equal(c_.begin(), c_.end(), o.c_.begin());
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(),
                                                b.c_.begin(), b.c_.end());
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i].value());
  }
  return s + ")";
}

Point parse_point(const std::string& text, const PrimeField& f) {
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') t += ch;
  std::vector<Fe> c;
  if (!t.empty()) {
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed point: " + text);
      c.push_back(f.canonical(std::stoull(tok)));
    }
  }
  return Point(std::move(c));
}

std::vector<Point> parse_points(const std::string& text, const PrimeField& f) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (tok.find_first_not_of(' ') == std::string::npos) continue;
    out.push_back(parse_point(tok, f));
  }
  return out;
}

std::vector<Point> dedup(std::span<const Point> pts) {
  std::vector<Point> out;
  PointSet seen;
  for (const auto& p : pts)
    if (seen.insert(p).second) out.push_back(p);
  return out;
}

ProductSet::ProductSet(std::vector<std::vector<Fe>> factors)
    : factors_(std::move(factors)) {
  for (auto& s : factors_) {
    if (s.empty()) throw std::invalid_argument("product set factor is empty");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("product set factor has duplicates");
  }
}

ProductSet ProductSet::power(std::vector<Fe> h, std::size_t m) {
  return ProductSet(std::vector<std::vector<Fe>>(m, std::move(h)));
}

std::uint64_t ProductSet::size() const {
  std::uint64_t n = 1;
  for (const auto& s : factors_) n *= s.size();
  return n;
}

bool ProductSet::contains(const Point& p) const {
  if (p.length() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!std::binary_search(factors_[i].begin(), factors_[i].end(), p[i]))
      return false;
  return true;
}

std::vector<Point> ProductSet::points() const {
  std::vector<Point> out{Point()};
  for (const auto& s : factors_) {
    std::vector<Point> next;
    next.reserve(out.size() * s.size());
    for (const auto& p : out)
      for (Fe a : s) next.push_back(p.extended(a));
    out = std::move(next);
  }
  return out;
}

ProductSet ProductSet::leading(std::size_t len) const {
  return ProductSet(std::vector<std::vector<Fe>>(factors_.begin(),
                                                 factors_.begin() + len));
}

ProductSet ProductSet::trailing(std::size_t len) const {
  return ProductSet(std::vector<std::vector<Fe>>(factors_.begin() + len,
                                                 factors_.end()));
}

bool ProductSet::symmetric() const {
  const std::size_t m = factors_.size();
  for (std::size_t i = 0; i < m; ++i)
    if (factors_[i] != factors_[m - 1 - i]) return false;
  return true;
}

std::vector<Point> all_points(const PrimeField& f, std::size_t len) {
  return ProductSet::power(f.elements(), len).points();
}

std::uint64_t lex_index(const Point& p, std::uint64_t modulus) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < p.length(); ++i) idx = idx * modulus + p[i].value();
  return idx;
}

std::uint64_t graded_index(const Point& p, std::uint64_t modulus) {
  std::uint64_t offset = 0, block = 1;
  for (std::size_t l = 0; l < p.length(); ++l) {
    offset += block;
    block *= modulus;
  }
  return offset + lex_index(p, modulus);
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp,
                            std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base)
      throw std::length_error("table size exceeds cap of " +
                              std::to_string(cap) + " entries");
    r *= base;
  }
  if (r > cap)
    throw std::length_error("table size exceeds cap of " +
                            std::to_string(cap) + " entries");
  return r;
}

}  // namespace zkpcp
