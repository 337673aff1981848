#ifndef ZKPCP_LOCATOR_H_
#define ZKPCP_LOCATOR_H_

#include <span>
#include <string>
#include <vector>

#include "zkpcp/linalg.h"
#include "zkpcp/point.h"

namespace zkpcp {

// Message positions R and constraints over the columns R followed by the
// query points. (m|_R, beta) lies in ker(z) exactly when beta is an
// attainable restriction of the encoding of m to the queries.
struct LocatorOutput {
  std::vector<Point> r;
  std::vector<Point> queries;
  Matrix z;

  std::size_t message_column(std::size_t k) const { return k; }
  std::size_t query_column(std::size_t k) const { return r.size() + k; }
};

// Builds a LocatorOutput from constraints on a plain point set whose points
// each lie in R, in the queries, or in both. A point in both gets its
// coefficient on the query column plus a row tying the two copies.
LocatorOutput split_columns(const PrimeField& f, std::vector<Point> r,
                            std::vector<Point> queries,
                            std::span<const Point> domain, const Matrix& z);

class Locator {
 public:
  virtual ~Locator() = default;
  virtual LocatorOutput locate(std::span<const Point> queries) const = 0;
  // Labels used to check that compositions line up.
  virtual std::string message_domain() const = 0;
  virtual std::string output_domain() const = 0;
};

}  // namespace zkpcp

#endif  // ZKPCP_LOCATOR_H_
