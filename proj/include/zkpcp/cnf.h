#ifndef ZKPCP_CNF_H_
#define ZKPCP_CNF_H_

#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zkpcp/field.h"
#include "zkpcp/poly.h"

namespace zkpcp {

// Clauses hold DIMACS literals: +v for x_v, -v for its negation, v >= 1.
struct CnfInstance {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

class CnfParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CnfInstance parse_dimacs(std::istream& in);
CnfInstance parse_dimacs_string(const std::string& text);

// Drops repeated literals within a clause and clauses containing both x
// and not x. The set of models is unchanged.
CnfInstance normalized(const CnfInstance& cnf);

// Number of clauses mentioning each variable, after normalisation.
std::vector<std::size_t> occurrences(const CnfInstance& cnf);

// prod_C (1 - prod_{l in C} (1 - enc(l))) with enc(x) = X, enc(-x) = 1 - X,
// on the normalised instance. Bounds are the occurrence counts.
MultiPoly arithmetize(const PrimeField& f, const CnfInstance& cnf);

// The same product evaluated at a point without expanding it.
Fe eval_arithmetization(const PrimeField& f, const CnfInstance& cnf,
                        std::span<const Fe> x);

bool satisfies(const CnfInstance& cnf, std::uint64_t assignment);
// Truth-table model count; bit i of an assignment is x_{i+1}.
std::uint64_t count_models(const CnfInstance& cnf);

}  // namespace zkpcp

#endif  // ZKPCP_CNF_H_
