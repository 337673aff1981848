#include "zkpcp/encoding.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zkpcp/antisym.h"
#include "zkpcp/sigma_rm.h"

namespace zkpcp {

LocatorOutput IdentityLocator::locate(std::span<const Point> queries) const {
  LocatorOutput out{dedup(queries), {}, {}};
  out.queries = out.r;
  const std::size_t n = out.r.size();
  out.z = Matrix(n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.z.at(k, k) = f_.one();
    out.z.at(k, n + k) = f_.neg(f_.one());
  }
  return out;
}

ComposedLocator::ComposedLocator(PrimeField f,
                                 std::shared_ptr<const Locator> inner,
                                 std::shared_ptr<const Locator> outer)
    : f_(f), inner_(std::move(inner)), outer_(std::move(outer)) {
  if (inner_->output_domain() != outer_->message_domain())
    throw std::invalid_argument("cannot compose: inner output '" +
                                inner_->output_domain() +
                                "' differs from outer message domain '" +
                                outer_->message_domain() + "'");
}

LocatorOutput ComposedLocator::locate(std::span<const Point> queries) const {
  const LocatorOutput out = outer_->locate(queries);
  const LocatorOutput in = inner_->locate(out.r);
  const std::size_t n_in = in.r.size();
  const std::size_t n_mid = out.r.size();
  const std::size_t n_q = out.queries.size();
  if (in.queries.size() != n_mid)
    throw std::logic_error("inner locator changed the outer message positions");

  // Columns: R_in, R_out, queries.
  Matrix stacked(0, n_in + n_mid + n_q);
  std::vector<Fe> row(stacked.cols());
  for (std::size_t i = 0; i < out.z.rows(); ++i) {
    std::fill(row.begin(), row.end(), Fe(0));
    for (std::size_t k = 0; k < n_mid; ++k) row[n_in + k] = out.z.at(i, k);
    for (std::size_t k = 0; k < n_q; ++k)
      row[n_in + n_mid + k] = out.z.at(i, out.query_column(k));
    stacked.append_row(row);
  }
  for (std::size_t i = 0; i < in.z.rows(); ++i) {
    std::fill(row.begin(), row.end(), Fe(0));
    for (std::size_t k = 0; k < n_in; ++k) row[k] = in.z.at(i, k);
    for (std::size_t k = 0; k < n_mid; ++k)
      row[n_in + k] = in.z.at(i, in.query_column(k));
    stacked.append_row(row);
  }
  std::vector<std::size_t> keep(n_in);
  std::iota(keep.begin(), keep.end(), 0);
  for (std::size_t k = 0; k < n_q; ++k) keep.push_back(n_in + n_mid + k);
  return {in.r, out.queries, eliminate_columns(f_, stacked, keep)};
}

EncodingSpec compose(const PrimeField& f, const EncodingSpec& inner,
                     const EncodingSpec& outer) {
  return {std::make_shared<ComposedLocator>(f, inner.locator, outer.locator),
          inner.message};
}

std::shared_ptr<const Locator> make_enc_pcp_locator(const PrimeField& f,
                                                    std::size_t m, std::size_t d,
                                                    const std::vector<Fe>& h) {
  const ProductSet cube = ProductSet::power(h, m);
  auto inner = std::make_shared<AntisymLocator>(f, cube);
  auto outer = std::make_shared<SigmaRmLocator>(
      CodeView{f, DegreeVector(m, d), std::nullopt}, cube);
  return std::make_shared<ComposedLocator>(f, inner, outer);
}

EncodingSpec enc_pcp_spec(const PrimeField& f, std::size_t m, std::size_t d,
                          const std::vector<Fe>& h, MessageOracle cube_values,
                          Fe gamma) {
  if (d + 2 < 2 * h.size())
    throw std::invalid_argument("enc_pcp_spec: need d >= 2(|H| - 1)");
  MessageOracle msg = [cube_values = std::move(cube_values), gamma](const Point& x) {
    return x.is_root() ? gamma : cube_values(x);
  };
  return {make_enc_pcp_locator(f, m, d, h), std::move(msg)};
}

}  // namespace zkpcp
