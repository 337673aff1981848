#include "zkpcp/locator.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zkpcp {

LocatorOutput split_columns(const PrimeField& f, std::vector<Point> r,
                            std::vector<Point> queries,
                            std::span<const Point> domain, const Matrix& z) {
  LocatorOutput out{std::move(r), std::move(queries), {}};
  std::map<Point, std::size_t> rcol, qcol;
  for (std::size_t k = 0; k < out.r.size(); ++k) rcol[out.r[k]] = k;
  for (std::size_t k = 0; k < out.queries.size(); ++k)
    qcol[out.queries[k]] = out.query_column(k);
  const std::size_t width = out.r.size() + out.queries.size();

  std::vector<std::size_t> target(domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    if (auto it = qcol.find(domain[c]); it != qcol.end()) {
      target[c] = it->second;
    } else if (auto jt = rcol.find(domain[c]); jt != rcol.end()) {
      target[c] = jt->second;
    } else {
      throw std::logic_error("split_columns: point outside R and queries");
    }
  }
  out.z = Matrix(0, width);
  std::vector<Fe> row(width);
  for (std::size_t i = 0; i < z.rows(); ++i) {
    std::fill(row.begin(), row.end(), Fe(0));
    for (std::size_t c = 0; c < domain.size(); ++c)
      row[target[c]] = f.add(row[target[c]], z.at(i, c));
    out.z.append_row(row);
  }
  for (const auto& [p, k] : rcol) {
    auto it = qcol.find(p);
    if (it == qcol.end()) continue;
    std::fill(row.begin(), row.end(), Fe(0));
    row[k] = f.one();
    row[it->second] = f.neg(f.one());
    out.z.append_row(row);
  }
  return out;
}

}  // namespace zkpcp
