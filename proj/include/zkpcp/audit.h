#ifndef ZKPCP_AUDIT_H_
#define ZKPCP_AUDIT_H_

#include <cstdint>
#include <map>
#include <vector>

#include "zkpcp/linalg.h"
#include "zkpcp/pcp.h"
#include "zkpcp/script.h"

namespace zkpcp {

// Answers = offset + coeffs * u for a uniform vector u.
struct AffineLaw {
  std::vector<Fe> offset;
  Matrix coeffs;
};

// Law of the honest answers to `queries` over the prover's randomness:
// the coefficients of Q followed by those of T_1, ..., T_m.
AffineLaw honest_law(const PcpParams& params, const FieldFunction& f_eval,
                     const std::vector<ScriptQuery>& queries);

// Law of the simulator's answers when it is asked `queries` in order.
AffineLaw simulated_law(const PcpParams& params, const FieldFunction& f_eval,
                        const std::vector<ScriptQuery>& queries, bool mask_row = true);

// Precomputed membership test for the support of an affine law.
class LawSupport {
 public:
  LawSupport(const PrimeField& f, const AffineLaw& law);
  std::size_t rank() const { return rank_; }
  bool contains(std::span<const Fe> answers) const;
  // p^K Pr[answers], where K is the number of answers.
  std::uint64_t scaled_probability(std::span<const Fe> answers) const;

 private:
  PrimeField f_;
  std::vector<Fe> offset_;
  Matrix checks_;
  std::size_t rank_ = 0;
};

struct AuditReport {
  std::size_t paths = 0;
  std::size_t depth = 0;
  // Total variation distance is tv_numerator / tv_denominator exactly.
  std::uint64_t tv_numerator = 0;
  std::uint64_t tv_denominator = 1;
  double tv() const { return double(tv_numerator) / double(tv_denominator); }
  bool identical() const { return tv_numerator == 0; }
  // Both laws give positive probability to the same answer paths.
  bool support_equal = true;
  // Filled when the laws differ: one path whose probabilities disagree.
  std::vector<ScriptQuery> witness_queries;
  std::vector<Fe> witness_answers;
};

// Exact distance between the transcripts of `script` against the honest
// prover and against the simulator. Enumerates every answer vector, so
// |F|^depth must stay below `max_paths`.
AuditReport audit_script(const PcpParams& params, const FieldFunction& f_eval,
                         const ScriptBlock& script, bool mask_row = true,
                         std::uint64_t max_paths = 2'000'000);

}  // namespace zkpcp

#endif  // ZKPCP_AUDIT_H_
