#ifndef ZKPCP_PCP_SIMULATOR_H_
#define ZKPCP_PCP_SIMULATOR_H_

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "zkpcp/encoding.h"
#include "zkpcp/pcp.h"
#include "zkpcp/rm.h"
#include "zkpcp/value_domain.h"

namespace zkpcp {

// Answers proof queries without the prover's randomness. A query to pi_Q
// or pi_Ti at alpha fills Q and every T_i at alpha and rev(alpha) at once,
// together with pi_Sigma at both points, uniformly subject to the degree
// constraints of each table, the Sigma-code conditions of the composed
// encoding's local simulator and the mask rows
// R(beta) = pi_Sigma(beta) - F(beta). A non-root pi_Sigma query first fills
// every H-completion of its point the same way, so F is read on at most
// |H|^(m - |x|) points per query. With mask_row = false the mask rows and
// all coupling are dropped; that variant is wrong on purpose.
template <class D>
class PcpSimulator {
 public:
  using Value = typename D::Value;

  PcpSimulator(const PcpParams& params, FieldFunction f_eval, D& dom,
               bool mask_row = true);

  Value sigma(const Point& x) {
    // pi_Sigma(x) is the sum of the masked values at the completions of x,
    // each tied to Q and T there. The root is gamma and needs nothing.
    if (mask_row_ && !x.is_root() && x.length() <= params_.m)
      for (const auto& y : completions(x)) touch(y);
    return sigma_sim_.query(x);
  }
  Value q(const Point& x) { return table_value(0, x); }
  Value t(std::size_t i, const Point& x) {
    if (i == 0 || i > params_.m) throw std::out_of_range("no such T table");
    return table_value(i, x);
  }
  Value read(Oracle o, std::size_t index, const Point& x) {
    switch (o) {
      case Oracle::kSigma:
        return sigma(x);
      case Oracle::kQ:
        return q(x);
      case Oracle::kT:
        return t(index, x);
    }
    throw std::invalid_argument("unknown oracle");
  }
  const PointSet& message_reads() const { return sigma_sim_.message_reads(); }

 private:
  Value table_value(std::size_t table, const Point& x);
  std::vector<Point> completions(const Point& x) const;
  void touch(const Point& alpha);

  PcpParams params_;
  FieldFunction f_eval_;
  D& dom_;
  bool mask_row_;
  EncodingSpec spec_;
  LocalSimulator<D> sigma_sim_;
  // Index 0 is Q, i >= 1 is T_i; order_ keeps insertion order.
  std::vector<std::map<Point, Value>> tables_;
  std::vector<std::vector<Point>> order_;
};

template <class D>
PcpSimulator<D>::PcpSimulator(const PcpParams& params, FieldFunction f_eval,
                              D& dom, bool mask_row)
    : params_(params),
      f_eval_(std::move(f_eval)),
      dom_(dom),
      mask_row_(mask_row),
      spec_(enc_pcp_spec(params.field, params.m, params.d, params.h, f_eval_,
                         params.gamma)),
      sigma_sim_(spec_, dom_),
      tables_(params.m + 1),
      order_(params.m + 1) {
  params_.validate_for_prover();
  Fe total(0);
  for (const auto& x : params_.cube().points())
    total = params_.field.add(total, f_eval_(x));
  if (total != params_.gamma)
    throw std::invalid_argument("simulator needs a true claim: sum of F over H^m is not gamma");
}

template <class D>
std::vector<Point> PcpSimulator<D>::completions(const Point& x) const {
  std::vector<Point> out;
  for (const auto& tail : params_.cube().trailing(x.length()).points()) {
    std::vector<Fe> c = x.coords();
    c.insert(c.end(), tail.coords().begin(), tail.coords().end());
    out.emplace_back(std::move(c));
  }
  return out;
}

template <class D>
typename D::Value PcpSimulator<D>::table_value(std::size_t table, const Point& x) {
  if (x.length() != params_.m) throw std::out_of_range("point is not in F^m");
  touch(x);
  return tables_[table].at(x);
}

template <class D>
void PcpSimulator<D>::touch(const Point& alpha) {
  const PrimeField& f = params_.field;
  const std::size_t m = params_.m;
  if (tables_[0].contains(alpha)) return;
  std::vector<Point> pair{alpha};
  if (alpha.reversed() != alpha) pair.push_back(alpha.reversed());

  // Unknowns: (table, beta) for every table and beta in the pair, then the
  // masked values pi_Sigma(beta) not yet fixed by the Sigma session.
  std::map<std::pair<std::size_t, Point>, std::size_t> unknown;
  for (std::size_t k = 0; k <= m; ++k)
    for (const auto& b : pair) {
      if (tables_[k].contains(b)) throw std::logic_error("tables out of step");
      unknown.emplace(std::make_pair(k, b), unknown.size());
    }
  const std::size_t kSigma = m + 1;
  std::vector<Point> fresh;
  if (mask_row_)
    for (const auto& b : pair)
      if (!sigma_sim_.answered(b)) {
        fresh.push_back(b);
        unknown.emplace(std::make_pair(kSigma, b), unknown.size());
      }
  const std::size_t n = unknown.size();
  Matrix a(0, n);
  std::vector<Value> rhs;
  std::vector<Fe> row(n);

  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<Point> pts = order_[k];
    pts.insert(pts.end(), pair.begin(), pair.end());
    const ConstraintBasis cd =
        cd_rm(CodeView{f, params_.table_degrees(k), std::nullopt}, pts);
    for (std::size_t i = 0; i < cd.z.rows(); ++i) {
      std::fill(row.begin(), row.end(), Fe(0));
      Value known = dom_.constant(Fe(0));
      for (std::size_t c = 0; c < cd.domain.size(); ++c) {
        const Fe z = cd.z.at(i, c);
        if (z.value() == 0) continue;
        const auto it = tables_[k].find(cd.domain[c]);
        if (it != tables_[k].end()) {
          known = dom_.add(known, dom_.scale(f.neg(z), it->second));
        } else {
          const std::size_t u = unknown.at({k, cd.domain[c]});
          row[u] = f.add(row[u], z);
        }
      }
      a.append_row(row);
      rhs.push_back(std::move(known));
    }
  }

  if (mask_row_) {
    // Sigma-code conditions on the masked values at the pair.
    if (!fresh.empty()) {
      auto cond = sigma_sim_.conditions(fresh);
      for (std::size_t i = 0; i < cond.rows.rows(); ++i) {
        std::fill(row.begin(), row.end(), Fe(0));
        for (std::size_t c = 0; c < fresh.size(); ++c)
          row[unknown.at({kSigma, fresh[c]})] = cond.rows.at(i, c);
        a.append_row(row);
        rhs.push_back(std::move(cond.rhs[i]));
      }
    }
    // Q(beta) - Q(rev beta) + sum_i Z_H(beta_i) T_i(beta) - pi_Sigma(beta)
    // = -F(beta).
    const auto zh = vanishing(f, params_.h);
    for (const auto& b : pair) {
      std::fill(row.begin(), row.end(), Fe(0));
      const std::size_t qb = unknown.at({0, b});
      const std::size_t qr = unknown.at({0, b.reversed()});
      row[qb] = f.add(row[qb], f.one());
      row[qr] = f.sub(row[qr], f.one());
      for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t ti = unknown.at({i, b});
        row[ti] = f.add(row[ti], eval_univariate(f, zh, b[i - 1]));
      }
      Value r = dom_.constant(f.neg(f_eval_(b)));
      if (sigma_sim_.answered(b)) {
        r = dom_.add(r, sigma_sim_.answer(b));
      } else {
        row[unknown.at({kSigma, b})] = f.neg(f.one());
      }
      a.append_row(row);
      rhs.push_back(std::move(r));
    }
  }

  const AffineSolver solver(f, a);
  const auto x = solve_uniform(dom_, solver, std::span<const Value>(rhs));
  for (const auto& [key, u] : unknown) {
    if (key.first == kSigma) {
      sigma_sim_.record(key.second, x[u]);
    } else {
      tables_[key.first].emplace(key.second, x[u]);
    }
  }
  for (std::size_t k = 0; k <= m; ++k)
    order_[k].insert(order_[k].end(), pair.begin(), pair.end());
}

// The simulator with concrete sampling, usable wherever a proof is read.
class SimulatedProof final : public ProofAccess {
 public:
  SimulatedProof(const PcpParams& params, FieldFunction f_eval, std::uint64_t seed,
                 bool mask_row = true)
      : rng_(std::make_unique<Rng>(seed)),
        dom_(std::make_unique<ConcreteDomain>(params.field, *rng_)),
        sim_(std::make_unique<PcpSimulator<ConcreteDomain>>(params, std::move(f_eval),
                                                            *dom_, mask_row)) {}
  Fe sigma(const Point& x) override { return sim_->sigma(x); }
  Fe q(const Point& x) override { return sim_->q(x); }
  Fe t(std::size_t i, const Point& x) override { return sim_->t(i, x); }

 private:
  std::unique_ptr<Rng> rng_;
  std::unique_ptr<ConcreteDomain> dom_;
  std::unique_ptr<PcpSimulator<ConcreteDomain>> sim_;
};

}  // namespace zkpcp

#endif  // ZKPCP_PCP_SIMULATOR_H_
