#ifndef ZKPCP_ENCODING_H_
#define ZKPCP_ENCODING_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zkpcp/locator.h"
#include "zkpcp/poly.h"
#include "zkpcp/value_domain.h"

namespace zkpcp {

using MessageOracle = std::function<Fe(const Point&)>;

struct EncodingSpec {
  std::shared_ptr<const Locator> locator;
  MessageOracle message;
};

// Enc(m) = m on a named domain.
class IdentityLocator final : public Locator {
 public:
  explicit IdentityLocator(PrimeField f, std::string domain)
      : f_(f), domain_(std::move(domain)) {}
  LocatorOutput locate(std::span<const Point> queries) const override;
  std::string message_domain() const override { return domain_; }
  std::string output_domain() const override { return domain_; }

 private:
  PrimeField f_;
  std::string domain_;
};

// Locator for outer(inner(m)): the outer message positions are located
// through the inner locator and then eliminated.
class ComposedLocator final : public Locator {
 public:
  // Throws std::invalid_argument when the domains do not line up.
  ComposedLocator(PrimeField f, std::shared_ptr<const Locator> inner,
                  std::shared_ptr<const Locator> outer);
  LocatorOutput locate(std::span<const Point> queries) const override;
  std::string message_domain() const override { return inner_->message_domain(); }
  std::string output_domain() const override { return outer_->output_domain(); }

 private:
  PrimeField f_;
  std::shared_ptr<const Locator> inner_;
  std::shared_ptr<const Locator> outer_;
};

EncodingSpec compose(const PrimeField& f, const EncodingSpec& inner,
                     const EncodingSpec& outer);

// Sum code of a uniform degree-d extension applied after the antisymmetric
// masking, over the cube H^m. The message oracle answers cube points from
// `values` and the root with `gamma`.
std::shared_ptr<const Locator> make_enc_pcp_locator(const PrimeField& f,
                                                    std::size_t m, std::size_t d,
                                                    const std::vector<Fe>& h);
EncodingSpec enc_pcp_spec(const PrimeField& f, std::size_t m, std::size_t d,
                          const std::vector<Fe>& h, MessageOracle cube_values,
                          Fe gamma);

// Answers queries to a codeword drawn from Enc(m) conditioned on earlier
// answers. Generic over concrete or symbolic values.
template <class D>
class LocalSimulator {
 public:
  using Value = typename D::Value;

  LocalSimulator(const EncodingSpec& spec, D& dom) : spec_(spec), dom_(dom) {}

  Value query(const Point& alpha);

  // Linear conditions on the values at `fresh` (points not yet answered)
  // given everything answered so far: rows * x = rhs, columns in the order
  // of `fresh`. Lets a caller solve these jointly with its own constraints
  // and then commit the solution with record().
  struct Conditions {
    Matrix rows;
    std::vector<Value> rhs;
  };
  Conditions conditions(std::span<const Point> fresh);
  void record(const Point& alpha, Value v);
  bool answered(const Point& alpha) const { return index_.contains(alpha); }
  const Value& answer(const Point& alpha) const {
    return answers_[index_.at(alpha)].second;
  }

  const std::vector<std::pair<Point, Value>>& answers() const { return answers_; }
  const PointSet& message_reads() const { return reads_; }
  std::size_t locator_calls() const { return calls_; }

 private:
  const EncodingSpec& spec_;
  D& dom_;
  std::vector<std::pair<Point, Value>> answers_;
  std::map<Point, std::size_t> index_;
  PointSet reads_;
  std::size_t calls_ = 0;
};

template <class D>
typename D::Value LocalSimulator<D>::query(const Point& alpha) {
  if (auto it = index_.find(alpha); it != index_.end())
    return answers_[it->second].second;
  const PrimeField& f = dom_.field();
  std::vector<Point> pts;
  for (const auto& [p, v] : answers_) pts.push_back(p);
  pts.push_back(alpha);
  const LocatorOutput out = spec_.locator->locate(pts);
  ++calls_;
  std::vector<Fe> msg;
  for (const auto& x : out.r) {
    msg.push_back(spec_.message(x));
    reads_.insert(x);
  }
  const std::size_t acol = out.query_column(pts.size() - 1);
  std::optional<Value> forced;
  for (std::size_t i = 0; i < out.z.rows(); ++i) {
    Value known = dom_.constant(Fe(0));
    for (std::size_t k = 0; k < out.r.size(); ++k)
      known = dom_.add(known, dom_.constant(f.mul(out.z.at(i, k), msg[k])));
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const Fe c = out.z.at(i, out.query_column(k));
      if (c.value() != 0) known = dom_.add(known, dom_.scale(c, answers_[k].second));
    }
    const Fe za = out.z.at(i, acol);
    if (za.value() == 0) {
      if (!dom_.is_zero(known))
        throw InconsistentState("query-answer set violates a constraint");
      continue;
    }
    Value beta = dom_.scale(f.neg(f.inv(za)), known);
    if (forced && !dom_.equal(*forced, beta))
      throw InconsistentState("constraints force two different answers");
    forced = std::move(beta);
  }
  Value v = forced ? *forced : dom_.fresh();
  index_[alpha] = answers_.size();
  answers_.emplace_back(alpha, v);
  return v;
}

template <class D>
typename LocalSimulator<D>::Conditions LocalSimulator<D>::conditions(
    std::span<const Point> fresh) {
  const PrimeField& f = dom_.field();
  std::vector<Point> pts;
  for (const auto& [p, v] : answers_) pts.push_back(p);
  const std::size_t old = pts.size();
  for (const auto& x : fresh) {
    if (index_.contains(x)) throw std::invalid_argument("point already answered");
    pts.push_back(x);
  }
  const LocatorOutput out = spec_.locator->locate(pts);
  ++calls_;
  // The locator deduplicates and may reorder, so map columns by point.
  std::map<Point, std::size_t> qcol;
  for (std::size_t k = 0; k < out.queries.size(); ++k) qcol[out.queries[k]] = out.query_column(k);
  std::vector<Fe> msg;
  for (const auto& x : out.r) {
    msg.push_back(spec_.message(x));
    reads_.insert(x);
  }
  Conditions c{Matrix(0, fresh.size()), {}};
  std::vector<Fe> row(fresh.size());
  for (std::size_t i = 0; i < out.z.rows(); ++i) {
    Value known = dom_.constant(Fe(0));
    for (std::size_t k = 0; k < out.r.size(); ++k)
      known = dom_.add(known, dom_.constant(f.mul(out.z.at(i, k), msg[k])));
    for (std::size_t k = 0; k < old; ++k) {
      const Fe z = out.z.at(i, qcol.at(pts[k]));
      if (z.value() != 0) known = dom_.add(known, dom_.scale(z, answers_[k].second));
    }
    for (std::size_t k = 0; k < fresh.size(); ++k) row[k] = out.z.at(i, qcol.at(fresh[k]));
    c.rows.append_row(row);
    c.rhs.push_back(dom_.scale(f.neg(f.one()), known));
  }
  return c;
}

template <class D>
void LocalSimulator<D>::record(const Point& alpha, Value v) {
  if (index_.contains(alpha)) throw std::invalid_argument("point already answered");
  index_[alpha] = answers_.size();
  answers_.emplace_back(alpha, std::move(v));
}

}  // namespace zkpcp

#endif  // ZKPCP_ENCODING_H_
