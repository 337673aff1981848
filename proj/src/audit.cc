#include "zkpcp/audit.h"

#include <stdexcept>

#include "zkpcp/pcp_simulator.h"

namespace zkpcp {

namespace {

std::vector<Point> completions(const Point& x, const ProductSet& cube) {
  std::vector<Point> out;
  for (const auto& tail : cube.trailing(x.length()).points()) {
    std::vector<Fe> c = x.coords();
    c.insert(c.end(), tail.coords().begin(), tail.coords().end());
    out.emplace_back(std::move(c));
  }
  return out;
}

std::size_t block_size(const DegreeVector& d) {
  std::size_t n = 1;
  for (auto e : d) n *= e + 1;
  return n;
}

void check_query(const PcpParams& params, const ScriptQuery& q) {
  const std::size_t len = q.point.length();
  if (q.oracle == Oracle::kSigma ? len > params.m : len != params.m)
    throw std::invalid_argument("query point " + to_string(q.point) +
                                " has the wrong length");
  if (q.oracle == Oracle::kT && (q.index == 0 || q.index > params.m))
    throw std::invalid_argument("T index out of range");
}

}  // namespace

AffineLaw honest_law(const PcpParams& params, const FieldFunction& f_eval,
                     const std::vector<ScriptQuery>& queries) {
  params.validate_for_prover();
  const PrimeField& f = params.field;
  const std::size_t m = params.m;
  std::vector<std::size_t> start{0};
  for (std::size_t k = 0; k <= m; ++k)
    start.push_back(start.back() + block_size(params.table_degrees(k)));
  const auto zh = vanishing(f, params.h);
  const ProductSet cube = params.cube();

  AffineLaw law{{}, Matrix(0, start.back())};
  std::vector<Fe> row(start.back());
  auto add_block = [&](std::size_t table, const Point& y, Fe scale) {
    const auto mv = monomial_values(f, params.table_degrees(table), y.coords());
    for (std::size_t j = 0; j < mv.size(); ++j)
      row[start[table] + j] = f.add(row[start[table] + j], f.mul(scale, mv[j]));
  };
  for (const auto& q : queries) {
    check_query(params, q);
    std::fill(row.begin(), row.end(), Fe(0));
    Fe offset(0);
    switch (q.oracle) {
      case Oracle::kQ:
        add_block(0, q.point, f.one());
        break;
      case Oracle::kT:
        add_block(q.index, q.point, f.one());
        break;
      case Oracle::kSigma:
        for (const auto& y : completions(q.point, cube)) {
          offset = f.add(offset, f_eval(y));
          add_block(0, y, f.one());
          add_block(0, y.reversed(), f.neg(f.one()));
          for (std::size_t i = 1; i <= m; ++i)
            add_block(i, y, eval_univariate(f, zh, y[i - 1]));
        }
        break;
    }
    law.offset.push_back(offset);
    law.coeffs.append_row(row);
  }
  return law;
}

AffineLaw simulated_law(const PcpParams& params, const FieldFunction& f_eval,
                        const std::vector<ScriptQuery>& queries, bool mask_row) {
  SymbolicDomain dom(params.field);
  PcpSimulator<SymbolicDomain> sim(params, f_eval, dom, mask_row);
  std::vector<AffineForm> answers;
  for (const auto& q : queries) {
    check_query(params, q);
    answers.push_back(sim.read(q.oracle, q.index, q.point));
  }
  AffineLaw law{{}, Matrix(0, dom.symbols())};
  for (auto& a : answers) {
    law.offset.push_back(a.constant);
    a.coeffs.resize(dom.symbols(), Fe(0));
    law.coeffs.append_row(a.coeffs);
  }
  return law;
}

LawSupport::LawSupport(const PrimeField& f, const AffineLaw& law)
    : f_(f), offset_(law.offset) {
  const std::size_t k = law.offset.size();
  if (law.coeffs.cols() == 0) {
    checks_ = Matrix::identity(k);
    rank_ = 0;
    return;
  }
  // y (a - c) = 0 for every y in the left kernel of the coefficients.
  checks_ = kernel_basis(f, law.coeffs.transpose());
  rank_ = k - checks_.rows();
}

bool LawSupport::contains(std::span<const Fe> answers) const {
  if (answers.size() != offset_.size())
    throw std::invalid_argument("answer vector has the wrong length");
  for (std::size_t r = 0; r < checks_.rows(); ++r) {
    Fe s(0);
    for (std::size_t c = 0; c < answers.size(); ++c)
      s = f_.add(s, f_.mul(checks_.at(r, c), f_.sub(answers[c], offset_[c])));
    if (s.value() != 0) return false;
  }
  return true;
}

std::uint64_t LawSupport::scaled_probability(std::span<const Fe> answers) const {
  if (!contains(answers)) return 0;
  return checked_power(f_.modulus(), answers.size() - rank_, UINT64_MAX);
}

AuditReport audit_script(const PcpParams& params, const FieldFunction& f_eval,
                         const ScriptBlock& script, bool mask_row,
                         std::uint64_t max_paths) {
  params.validate_for_prover();
  const PrimeField& f = params.field;
  const std::uint64_t p = f.modulus();
  AuditReport rep;
  rep.depth = script_depth(script);
  const std::uint64_t scale = checked_power(p, rep.depth, max_paths);
  if (scale > max_paths)
    throw std::length_error("script has too many answer paths to enumerate");

  std::map<std::vector<ScriptQuery>, std::pair<LawSupport, LawSupport>> laws;
  const auto paths = enumerate_paths(script, f);
  rep.paths = paths.size();
  std::uint64_t diff = 0;
  for (const auto& path : paths) {
    auto it = laws.find(path.queries);
    if (it == laws.end()) {
      it = laws
               .emplace(path.queries,
                        std::make_pair(
                            LawSupport(f, honest_law(params, f_eval, path.queries)),
                            LawSupport(f, simulated_law(params, f_eval, path.queries,
                                                        mask_row))))
               .first;
    }
    // Bring both probabilities to the common denominator p^depth.
    const std::uint64_t lift = checked_power(p, rep.depth - path.answers.size(), UINT64_MAX);
    const std::uint64_t a = it->second.first.scaled_probability(path.answers) * lift;
    const std::uint64_t b = it->second.second.scaled_probability(path.answers) * lift;
    if ((a == 0) != (b == 0)) rep.support_equal = false;
    if (a != b && rep.witness_queries.empty()) {
      rep.witness_queries = path.queries;
      rep.witness_answers = path.answers;
    }
    diff += a > b ? a - b : b - a;
  }
  // Each side sums to p^depth, so diff is even.
  rep.tv_numerator = diff / 2;
  rep.tv_denominator = scale;
  return rep;
}

}  // namespace zkpcp
