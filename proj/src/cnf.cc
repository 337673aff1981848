#include "zkpcp/cnf.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace zkpcp {

CnfInstance parse_dimacs(std::istream& in) {
  CnfInstance cnf;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (header || !(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 ||
          clauses < 0)
        throw CnfParseError("line " + std::to_string(lineno) + ": bad problem line");
      header = true;
      cnf.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!header)
      throw CnfParseError("line " + std::to_string(lineno) +
                          ": clause before the problem line");
    ls.clear();
    ls.str(line);
    while (ls >> tok) {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0')
        throw CnfParseError("line " + std::to_string(lineno) + ": bad literal '" +
                            tok + "'");
      if (v == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(v)) > cnf.num_vars)
        throw CnfParseError("line " + std::to_string(lineno) + ": variable " +
                            std::to_string(std::labs(v)) + " out of range");
      current.push_back(static_cast<int>(v));
    }
  }
  if (!header) throw CnfParseError("missing problem line");
  if (!current.empty()) cnf.clauses.push_back(std::move(current));
  if (cnf.clauses.size() != declared_clauses)
    throw CnfParseError("expected " + std::to_string(declared_clauses) +
                        " clauses, found " + std::to_string(cnf.clauses.size()));
  return cnf;
}

CnfInstance parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfInstance normalized(const CnfInstance& cnf) {
  CnfInstance out{cnf.num_vars, {}};
  for (const auto& c : cnf.clauses) {
    std::vector<int> lits;
    bool tautology = false;
    for (int l : c) {
      if (std::find(lits.begin(), lits.end(), -l) != lits.end()) tautology = true;
      if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
    }
    if (!tautology) out.clauses.push_back(std::move(lits));
  }
  return out;
}

std::vector<std::size_t> occurrences(const CnfInstance& cnf) {
  std::vector<std::size_t> occ(cnf.num_vars, 0);
  for (const auto& c : normalized(cnf).clauses)
    for (int l : c) ++occ[std::abs(l) - 1];
  return occ;
}

MultiPoly arithmetize(const PrimeField& f, const CnfInstance& cnf) {
  const CnfInstance norm = normalized(cnf);
  const std::size_t n = cnf.num_vars;
  MultiPoly out(DegreeVector(n, 0));
  out.coeffs()[0] = f.one();
  for (const auto& c : norm.clauses) {
    // 1 - prod (1 - enc(l)); 1 - X for a positive literal, X for a negative.
    MultiPoly falsified(DegreeVector(n, 0));
    falsified.coeffs()[0] = f.one();
    for (int l : c) {
      const std::size_t v = std::abs(l) - 1;
      const std::vector<Fe> lin = l > 0 ? std::vector<Fe>{f.one(), f.neg(f.one())}
                                        : std::vector<Fe>{Fe(0), f.one()};
      falsified = mul(f, falsified, in_variable(n, v, lin));
    }
    MultiPoly one(DegreeVector(n, 0));
    one.coeffs()[0] = f.one();
    out = mul(f, out, sub(f, one, falsified));
  }
  return out;
}

Fe eval_arithmetization(const PrimeField& f, const CnfInstance& cnf,
                        std::span<const Fe> x) {
  if (x.size() != cnf.num_vars)
    throw std::invalid_argument("eval_arithmetization: arity mismatch");
  Fe acc = f.one();
  for (const auto& c : normalized(cnf).clauses) {
    Fe falsified = f.one();
    for (int l : c) {
      const Fe xv = x[std::abs(l) - 1];
      falsified = f.mul(falsified, l > 0 ? f.sub(f.one(), xv) : xv);
    }
    acc = f.mul(acc, f.sub(f.one(), falsified));
  }
  return acc;
}

bool satisfies(const CnfInstance& cnf, std::uint64_t assignment) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int l : c) {
      const bool v = (assignment >> (std::abs(l) - 1)) & 1;
      sat = sat || (l > 0 ? v : !v);
    }
    if (!sat) return false;
  }
  return true;
}

std::uint64_t count_models(const CnfInstance& cnf) {
  if (cnf.num_vars >= 40) throw std::length_error("count_models: too many variables");
  std::uint64_t n = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << cnf.num_vars); ++a)
    n += satisfies(cnf, a);
  return n;
}

}  // namespace zkpcp
