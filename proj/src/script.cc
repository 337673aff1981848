#include "zkpcp/script.h"

#include <json.hpp>

namespace zkpcp {

namespace {

using nlohmann::json;

ScriptBlock parse_block(const json& j, const PcpParams& params) {
  if (!j.is_array()) throw ScriptError("a script block must be a JSON array");
  ScriptBlock out;
  const PrimeField& f = params.field;
  for (const auto& s : j) {
    if (!s.is_object()) throw ScriptError("each step must be a JSON object");
    ScriptStep step;
    if (s.contains("branch")) {
      const auto& b = s.at("branch");
      step.is_query = false;
      if (!b.contains("on") || !b.contains("equals") || !b.at("on").is_number_unsigned() ||
          !b.at("equals").is_number_unsigned())
        throw ScriptError("branch needs unsigned 'on' and 'equals'");
      step.on = b.at("on").get<std::size_t>();
      const auto v = b.at("equals").get<std::uint64_t>();
      if (v >= f.modulus()) throw ScriptError("branch value outside the field");
      step.equals = Fe(v);
      step.then_steps = parse_block(s.value("then", json::array()), params);
      step.else_steps = parse_block(s.value("else", json::array()), params);
      out.push_back(std::move(step));
      continue;
    }
    const std::string name = s.value("oracle", "");
    if (name == "sigma") {
      step.query.oracle = Oracle::kSigma;
    } else if (name == "q") {
      step.query.oracle = Oracle::kQ;
    } else if (name == "t") {
      step.query.oracle = Oracle::kT;
      step.query.index = s.value("index", std::size_t{0});
      if (step.query.index == 0 || step.query.index > params.m)
        throw ScriptError("T index must be in 1..m");
    } else {
      throw ScriptError("unknown oracle '" + name + "'");
    }
    if (!s.contains("point") || !s.at("point").is_array())
      throw ScriptError("query needs a 'point' array");
    std::vector<Fe> c;
    for (const auto& x : s.at("point")) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= f.modulus())
        throw ScriptError("point coordinate outside the field");
      c.emplace_back(x.get<std::uint64_t>());
    }
    step.query.point = Point(c);
    const std::size_t len = step.query.point.length();
    if (step.query.oracle == Oracle::kSigma ? len > params.m : len != params.m)
      throw ScriptError("point " + to_string(step.query.point) +
                        " has the wrong length for " +
                        oracle_name(step.query.oracle, step.query.index));
    out.push_back(std::move(step));
  }
  return out;
}

json block_to_json(const ScriptBlock& block) {
  json out = json::array();
  for (const auto& s : block) {
    if (s.is_query) {
      json q;
      q["oracle"] = s.query.oracle == Oracle::kSigma ? "sigma"
                    : s.query.oracle == Oracle::kQ   ? "q"
                                                     : "t";
      if (s.query.oracle == Oracle::kT) q["index"] = s.query.index;
      json pt = json::array();
      for (Fe x : s.query.point.coords()) pt.push_back(x.value());
      q["point"] = pt;
      out.push_back(q);
    } else {
      out.push_back({{"branch", {{"on", s.on}, {"equals", s.equals.value()}}},
                     {"then", block_to_json(s.then_steps)},
                     {"else", block_to_json(s.else_steps)}});
    }
  }
  return out;
}

std::size_t depth_from(const ScriptBlock& b, std::size_t k) {
  if (k == b.size()) return 0;
  const auto& s = b[k];
  if (s.is_query) return 1 + depth_from(b, k + 1);
  return std::max(script_depth(s.then_steps), script_depth(s.else_steps)) +
         depth_from(b, k + 1);
}

// Runs `b` from step k, then the continuation.
void run_from(const std::vector<std::pair<const ScriptBlock*, std::size_t>>& stack,
              std::vector<std::pair<ScriptQuery, Fe>>& out, const QueryFn& answer) {
  auto frames = stack;
  while (!frames.empty()) {
    auto& [block, k] = frames.back();
    if (k == block->size()) {
      frames.pop_back();
      continue;
    }
    const ScriptStep& s = (*block)[k++];
    if (s.is_query) {
      out.emplace_back(s.query, answer(s.query));
      continue;
    }
    if (s.on >= out.size())
      throw ScriptError("branch refers to answer " + std::to_string(s.on) +
                        " before it exists");
    frames.emplace_back(out[s.on].second == s.equals ? &s.then_steps : &s.else_steps, 0);
  }
}

void enumerate_from(std::vector<std::pair<const ScriptBlock*, std::size_t>> frames,
                    ScriptPath& cur, const PrimeField& f, std::vector<ScriptPath>& out) {
  while (!frames.empty()) {
    auto& [block, k] = frames.back();
    if (k == block->size()) {
      frames.pop_back();
      continue;
    }
    const ScriptStep& s = (*block)[k++];
    if (s.is_query) {
      cur.queries.push_back(s.query);
      for (Fe v : f.elements()) {
        cur.answers.push_back(v);
        enumerate_from(frames, cur, f, out);
        cur.answers.pop_back();
      }
      cur.queries.pop_back();
      return;
    }
    if (s.on >= cur.answers.size())
      throw ScriptError("branch refers to answer " + std::to_string(s.on) +
                        " before it exists");
    frames.emplace_back(cur.answers[s.on] == s.equals ? &s.then_steps : &s.else_steps, 0);
  }
  out.push_back(cur);
}

ScriptQuery random_query(const PcpParams& params, Rng& rng) {
  const PrimeField& f = params.field;
  ScriptQuery q;
  const auto kind = rng.below(3);
  std::size_t len = params.m;
  if (kind == 0) {
    q.oracle = Oracle::kSigma;
    len = rng.below(params.m + 1);
  } else if (kind == 1) {
    q.oracle = Oracle::kQ;
  } else {
    q.oracle = Oracle::kT;
    q.index = 1 + rng.below(params.m);
  }
  std::vector<Fe> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(f.sample(rng));
  q.point = Point(c);
  return q;
}

ScriptBlock random_block(const PcpParams& params, Rng& rng, std::size_t budget,
                         std::size_t answered) {
  ScriptBlock out;
  while (budget > 0) {
    if (answered > 0 && rng.below(3) == 0) {
      ScriptStep b;
      b.is_query = false;
      b.on = rng.below(answered);
      b.equals = params.field.sample(rng);
      b.then_steps = random_block(params, rng, budget, answered);
      b.else_steps = random_block(params, rng, budget, answered);
      out.push_back(std::move(b));
      return out;
    }
    ScriptStep s;
    s.query = random_query(params, rng);
    out.push_back(std::move(s));
    --budget;
    ++answered;
  }
  return out;
}

}  // namespace

ScriptBlock random_script(const PcpParams& params, Rng& rng, std::size_t max_queries) {
  return random_block(params, rng, max_queries, 0);
}

ScriptBlock parse_script(const std::string& json_text, const PcpParams& params) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScriptError(std::string("script is not valid JSON: ") + e.what());
  }
  return parse_block(j, params);
}

std::string script_to_json(const ScriptBlock& script) { return block_to_json(script).dump(); }

std::size_t script_depth(const ScriptBlock& script) { return depth_from(script, 0); }

std::vector<std::pair<ScriptQuery, Fe>> run_script(const ScriptBlock& script,
                                                   const QueryFn& answer) {
  std::vector<std::pair<ScriptQuery, Fe>> out;
  run_from({{&script, 0}}, out, answer);
  return out;
}

std::vector<ScriptPath> enumerate_paths(const ScriptBlock& script, const PrimeField& f) {
  std::vector<ScriptPath> out;
  ScriptPath cur;
  enumerate_from({{&script, 0}}, cur, f, out);
  return out;
}

}  // namespace zkpcp
