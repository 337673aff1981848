#include "zkpcp/pcp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zkpcp {

PcpParams PcpParams::make(std::uint64_t p, std::size_t m, std::size_t d,
                          std::vector<Fe> h, Fe gamma) {
  PcpParams out;
  out.field = PrimeField(p);
  out.m = m;
  out.d = d;
  std::sort(h.begin(), h.end());
  out.h = std::move(h);
  for (std::size_t k = 0; k <= d; ++k) out.nodes.push_back(out.field.of(k));
  out.gamma = gamma;
  return out;
}

void PcpParams::validate_for_prover() const {
  if (m == 0) throw std::invalid_argument("m must be at least 1");
  if (h.empty()) throw std::invalid_argument("H must be nonempty");
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k].value() >= field.modulus())
      throw std::invalid_argument("H element outside the field");
    if (k > 0 && h[k] == h[k - 1]) throw std::invalid_argument("H has repeats");
  }
  if (d < h.size() + 1) throw std::invalid_argument("need d >= |H| + 1");
}

void PcpParams::validate_for_verifier() const {
  validate_for_prover();
  if (field.modulus() <= d)
    throw std::invalid_argument("need p > d for the sumcheck reading nodes");
  for (Fe a : h)
    if (a.value() > d) throw std::invalid_argument("H must lie in {0, ..., d}");
}

std::size_t PcpParams::line_tests() const {
  return static_cast<std::size_t>(std::ceil(4.0 * (m + 2) * std::log(2.0)));
}

DegreeVector PcpParams::table_degrees(std::size_t table) const {
  DegreeVector dv(m, d);
  if (table > m) throw std::out_of_range("no such table");
  if (table > 0) dv[table - 1] = d - h.size();
  return dv;
}

ProofPolys prove_polys(const PcpParams& params, const MultiPoly& f, Rng& rng) {
  params.validate_for_prover();
  const PrimeField& fld = params.field;
  const std::size_t m = params.m;
  if (f.arity() != m) throw std::invalid_argument("F has the wrong arity");
  for (auto e : f.degrees())
    if (e > params.d) throw std::invalid_argument("F exceeds degree d");
  const DegreeVector full(m, params.d);
  ProofPolys out;
  out.f = f.rebound(full);
  out.q = random_poly(fld, params.table_degrees(0), rng);
  const auto zh = vanishing(fld, params.h);
  MultiPoly r = sub(fld, out.q, reverse_variables(out.q));
  for (std::size_t i = 1; i <= m; ++i) {
    out.t.push_back(random_poly(fld, params.table_degrees(i), rng));
    r = add(fld, r, mul(fld, in_variable(m, i - 1, zh), out.t.back()));
  }
  out.masked = add(fld, out.f, r).rebound(full);
  return out;
}

std::string oracle_name(Oracle o, std::size_t index) {
  switch (o) {
    case Oracle::kSigma:
      return "sigma";
    case Oracle::kQ:
      return "q";
    case Oracle::kT:
      return "t" + std::to_string(index);
  }
  return "?";
}

Fe ProofAccess::read(Oracle o, std::size_t index, const Point& x) {
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

namespace {

std::uint64_t full_index(const Point& x, std::uint64_t p, std::size_t m) {
  if (x.length() != m) throw std::out_of_range("point " + to_string(x) + " is not in F^m");
  return lex_index(x, p);
}

Fe at(const std::vector<Fe>& table, std::uint64_t k) {
  if (k >= table.size()) throw std::out_of_range("proof table is truncated");
  return table[k];
}

}  // namespace

Fe ProofTables::sigma(const Point& x) {
  if (x.length() > m) throw std::out_of_range("point longer than m");
  return at(sigma_table, graded_index(x, p));
}

Fe ProofTables::q(const Point& x) { return at(q_table, full_index(x, p, m)); }

Fe ProofTables::t(std::size_t i, const Point& x) {
  if (i == 0 || i > t_tables.size()) throw std::out_of_range("no such T table");
  return at(t_tables[i - 1], full_index(x, p, m));
}

ProofTables materialize(const PcpParams& params, const ProofPolys& polys,
                        std::uint64_t cap) {
  const std::uint64_t p = params.field.modulus();
  const std::size_t m = params.m;
  const std::uint64_t per_table = checked_power(p, m, cap);
  std::uint64_t total = per_table * (m + 1);
  for (std::size_t len = 0; len <= m; ++len) total += checked_power(p, len, cap);
  if (total > cap)
    throw std::length_error("proof needs " + std::to_string(total) +
                            " entries, above the cap of " + std::to_string(cap));
  const PrimeField& f = params.field;
  ProofTables out;
  out.p = p;
  out.m = m;
  out.q_table = evaluate_on_grid(f, polys.q);
  for (const auto& t : polys.t) out.t_tables.push_back(evaluate_on_grid(f, t));
  std::vector<std::vector<Fe>> layers(m + 1);
  layers[m] = evaluate_on_grid(f, polys.masked);
  for (std::size_t len = m; len-- > 0;) {
    const std::uint64_t n = layers[len + 1].size() / p;
    layers[len].assign(n, Fe(0));
    for (std::uint64_t x = 0; x < n; ++x)
      for (Fe a : params.h)
        layers[len][x] = f.add(layers[len][x], layers[len + 1][x * p + a.value()]);
  }
  for (const auto& layer : layers)
    out.sigma_table.insert(out.sigma_table.end(), layer.begin(), layer.end());
  return out;
}

LazyHonestProof::LazyHonestProof(const PcpParams& params, ProofPolys polys)
    : params_(params), polys_(std::move(polys)) {}

Fe LazyHonestProof::sigma(const Point& x) {
  if (x.length() > params_.m) throw std::out_of_range("point longer than m");
  if (auto it = sigma_cache_.find(x); it != sigma_cache_.end()) return it->second;
  const Fe v = subcube_sum(params_.field, polys_.masked, params_.cube(), x);
  sigma_cache_.emplace(x, v);
  return v;
}

Fe LazyHonestProof::q(const Point& x) {
  if (x.length() != params_.m) throw std::out_of_range("point is not in F^m");
  return polys_.q.eval(params_.field, x);
}

Fe LazyHonestProof::t(std::size_t i, const Point& x) {
  if (x.length() != params_.m) throw std::out_of_range("point is not in F^m");
  if (i == 0 || i > polys_.t.size()) throw std::out_of_range("no such T table");
  return polys_.t[i - 1].eval(params_.field, x);
}

Fe RandomQProof::q(const Point& x) {
  auto it = table_.find(x);
  if (it == table_.end()) it = table_.emplace(x, f_.sample(rng_)).first;
  return it->second;
}

VerifierCoins sample_coins(const PcpParams& params, Rng& rng) {
  const PrimeField& f = params.field;
  VerifierCoins coins;
  std::vector<Fe> c;
  for (std::size_t i = 0; i < params.m; ++i) c.push_back(f.sample(rng));
  coins.path = Point(c);
  const std::size_t r = params.line_tests();
  for (std::size_t table = 0; table <= params.m; ++table)
    for (std::size_t k = 0; k < r; ++k) {
      LineCoins lc;
      lc.table = table;
      lc.axis = rng.below(params.m);
      std::vector<Fe> b;
      for (std::size_t i = 0; i < params.m; ++i) b.push_back(f.sample(rng));
      b[lc.axis] = Fe(0);
      lc.base = Point(b);
      coins.lines.push_back(std::move(lc));
    }
  return coins;
}

namespace {

class LoggedReader {
 public:
  LoggedReader(ProofAccess& proof, std::vector<QueryRecord>& log)
      : proof_(proof), log_(log) {}
  Fe operator()(Oracle o, std::size_t index, const Point& x) {
    const Fe v = proof_.read(o, index, x);
    log_.push_back({o, index, x, v});
    return v;
  }

 private:
  ProofAccess& proof_;
  std::vector<QueryRecord>& log_;
};

VerifierResult reject(VerifierResult r, std::string why) {
  r.accept = false;
  r.reason = std::move(why);
  return r;
}

}  // namespace

VerifierResult verify(const PcpParams& params, const FieldFunction& f_eval,
                      ProofAccess& proof, const VerifierCoins& coins) {
  params.validate_for_verifier();
  const PrimeField& f = params.field;
  const std::size_t m = params.m;
  if (coins.path.length() != m) throw std::invalid_argument("path has the wrong length");
  VerifierResult res;
  LoggedReader read(proof, res.log);
  try {
    Fe claim = read(Oracle::kSigma, 0, Point());
    if (claim != params.gamma) return reject(std::move(res), "root sum differs from the claim");
    Point prefix;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Fe> vals;
      for (Fe x : params.nodes) vals.push_back(read(Oracle::kSigma, 0, prefix.extended(x)));
      const auto g = interpolate_univariate(f, params.nodes, vals);
      Fe s(0);
      for (Fe a : params.h) s = f.add(s, eval_univariate(f, g, a));
      if (s != claim)
        return reject(std::move(res), "round " + std::to_string(i + 1) + " sum mismatch");
      claim = eval_univariate(f, g, coins.path[i]);
      prefix = prefix.extended(coins.path[i]);
    }
    const Point& alpha = coins.path;
    const auto zh = vanishing(f, params.h);
    Fe r = f.sub(read(Oracle::kQ, 0, alpha), read(Oracle::kQ, 0, alpha.reversed()));
    for (std::size_t i = 1; i <= m; ++i) {
      const Fe z = eval_univariate(f, zh, alpha[i - 1]);
      if (z.value() != 0) r = f.add(r, f.mul(z, read(Oracle::kT, i, alpha)));
    }
    if (claim != f.add(f_eval(alpha), r))
      return reject(std::move(res), "final evaluation mismatch");

    for (const auto& line : coins.lines) {
      const std::size_t deg = params.table_degrees(line.table)[line.axis];
      if (deg + 1 >= f.modulus()) continue;
      const Oracle o = line.table == 0 ? Oracle::kQ : Oracle::kT;
      std::vector<Fe> xs, ys;
      for (Fe x : f.elements()) {
        std::vector<Fe> c = line.base.coords();
        c[line.axis] = x;
        xs.push_back(x);
        ys.push_back(read(o, line.table, Point(c)));
      }
      const auto g = interpolate_univariate(f, std::span(xs).first(deg + 1),
                                            std::span(ys).first(deg + 1));
      for (std::size_t k = deg + 1; k < xs.size(); ++k)
        if (eval_univariate(f, g, xs[k]) != ys[k])
          return reject(std::move(res), "line test failed on " + oracle_name(o, line.table));
    }
  } catch (const std::out_of_range& e) {
    return reject(std::move(res), std::string("proof is missing an entry: ") + e.what());
  }
  res.accept = true;
  return res;
}

SharpSat make_sharp_sat(const CnfInstance& cnf, std::uint64_t count,
                        std::optional<std::uint64_t> p) {
  const std::size_t n = cnf.num_vars;
  if (n == 0) throw std::invalid_argument("the CNF needs at least one variable");
  if (n > 40) throw std::invalid_argument("too many variables");
  std::size_t d = 3;
  for (auto o : occurrences(cnf)) d = std::max(d, o);
  const std::uint64_t models_bound = std::uint64_t{1} << n;
  std::uint64_t prime;
  if (p) {
    prime = *p;
    if (!is_prime(prime)) throw std::invalid_argument("p is not prime");
    if (prime <= models_bound)
      throw std::invalid_argument("p must exceed 2^n so counts do not wrap");
    if (prime <= d) throw std::invalid_argument("p must exceed d");
  } else {
    prime = next_prime_above(std::max<std::uint64_t>(10 * n * d, models_bound));
  }
  SharpSat out;
  out.cnf = cnf;
  out.count = count;
  const PrimeField f(prime);
  out.params = PcpParams::make(prime, n, d, {Fe(0), Fe(1)}, f.canonical(count));
  out.f = arithmetize(f, cnf);
  out.f_eval = [f, cnf = normalized(cnf)](const Point& x) {
    return eval_arithmetization(f, cnf, x.coords());
  };
  return out;
}

}  // namespace zkpcp
