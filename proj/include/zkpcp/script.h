#ifndef ZKPCP_SCRIPT_H_
#define ZKPCP_SCRIPT_H_

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "zkpcp/pcp.h"

namespace zkpcp {

struct ScriptQuery {
  Oracle oracle = Oracle::kSigma;
  // 1-based table index for T, 0 otherwise.
  std::size_t index = 0;
  Point point;
  bool operator==(const ScriptQuery&) const = default;
  auto operator<=>(const ScriptQuery& o) const {
    return std::tie(oracle, index, point) <=> std::tie(o.oracle, o.index, o.point);
  }
};

struct ScriptStep;
using ScriptBlock = std::vector<ScriptStep>;

// Either a query or a branch on whether an earlier answer (0-based, in the
// order answers were produced) equals a constant.
struct ScriptStep {
  bool is_query = true;
  ScriptQuery query;
  std::size_t on = 0;
  Fe equals;
  ScriptBlock then_steps;
  ScriptBlock else_steps;
};

class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON: an array of steps; a query is {"oracle": "sigma"|"q"|"t",
// "index": i, "point": [..]} and a branch is {"branch": {"on": k,
// "equals": v}, "then": [..], "else": [..]}. Points and oracles are checked
// against the parameters.
ScriptBlock parse_script(const std::string& json_text, const PcpParams& params);
std::string script_to_json(const ScriptBlock& script);

// Longest number of queries along any path.
std::size_t script_depth(const ScriptBlock& script);

using QueryFn = std::function<Fe(const ScriptQuery&)>;

// Runs the script, returning the queries made and their answers in order.
std::vector<std::pair<ScriptQuery, Fe>> run_script(const ScriptBlock& script,
                                                   const QueryFn& answer);

// One complete execution: the queries issued and the answers seen.
struct ScriptPath {
  std::vector<ScriptQuery> queries;
  std::vector<Fe> answers;
};

// Every execution for every possible answer vector over F; |F|^depth paths
// at most.
std::vector<ScriptPath> enumerate_paths(const ScriptBlock& script,
                                        const PrimeField& f);

// Random adaptive script with at most `max_queries` queries on any path,
// mixing all oracles; branches test an earlier answer against a random
// field element.
ScriptBlock random_script(const PcpParams& params, Rng& rng, std::size_t max_queries);

}  // namespace zkpcp

#endif  // ZKPCP_SCRIPT_H_
