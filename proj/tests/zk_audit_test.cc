#include "zkpcp/audit.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "zkpcp/pcp_simulator.h"

namespace zkpcp {
namespace {

using testing::fe_vec;

struct ZkInstance {
  PcpParams params;
  MultiPoly f;
  FieldFunction f_eval;
};

ZkInstance make_zk_instance(std::uint64_t p, std::uint64_t seed) {
  const PrimeField fld(p);
  Rng rng(seed);
  ZkInstance s;
  s.f = random_poly(fld, DegreeVector{3, 3}, rng);
  s.params = PcpParams::make(p, 2, 3, fe_vec({0, 1}), Fe(0));
  for (const auto& x : s.params.cube().points())
    s.params.gamma = fld.add(s.params.gamma, s.f.eval(fld, x));
  s.f_eval = [fld, f = s.f](const Point& x) { return f.eval(fld, x); };
  return s;
}

ScriptQuery sq(Oracle o, std::size_t index, std::vector<std::uint64_t> c) {
  std::vector<Fe> coords;
  for (auto v : c) coords.emplace_back(v);
  return {o, index, Point(coords)};
}

ScriptBlock linear(const std::vector<ScriptQuery>& qs) {
  ScriptBlock b;
  for (const auto& q : qs) {
    ScriptStep s;
    s.query = q;
    b.push_back(s);
  }
  return b;
}

std::vector<Fe> apply_law(const PrimeField& f, const AffineLaw& law,
                          const std::vector<Fe>& u) {
  std::vector<Fe> out = law.offset;
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < u.size(); ++c)
      out[r] = f.add(out[r], f.mul(law.coeffs.at(r, c), u[c]));
  return out;
}

class ZkAuditTest : public ::testing::TestWithParam<std::uint64_t> {};

// The affine law reproduces the actual prover on its own coefficients.
TEST_P(ZkAuditTest, HonestLawMatchesProver) {
  const ZkInstance s = make_zk_instance(GetParam(), 1);
  const PrimeField& f = s.params.field;
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const ProofPolys polys = prove_polys(s.params, s.f, rng);
    std::vector<Fe> u = polys.q.coeffs();
    for (const auto& t : polys.t) u.insert(u.end(), t.coeffs().begin(), t.coeffs().end());
    ASSERT_EQ(u.size(), 32u);
    std::vector<ScriptQuery> qs;
    for (int k = 0; k < 6; ++k) {
      const auto b = random_script(s.params, rng, 1);
      qs.push_back(b.front().query);
    }
    const AffineLaw law = honest_law(s.params, s.f_eval, qs);
    ASSERT_EQ(law.coeffs.cols(), 32u);
    LazyHonestProof proof(s.params, polys);
    std::vector<Fe> direct;
    for (const auto& q : qs) direct.push_back(proof.read(q.oracle, q.index, q.point));
    EXPECT_EQ(apply_law(f, law, u), direct);
  }
}

// Concrete simulator runs land in the support of both laws.
TEST_P(ZkAuditTest, ConcreteSimulatorStaysInSupport) {
  const ZkInstance s = make_zk_instance(GetParam(), 3);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ScriptQuery> qs;
    for (int k = 0; k < 4; ++k) qs.push_back(random_script(s.params, rng, 1).front().query);
    SimulatedProof sim(s.params, s.f_eval, 100 + trial);
    std::vector<Fe> answers;
    for (const auto& q : qs) answers.push_back(sim.read(q.oracle, q.index, q.point));
    EXPECT_TRUE(LawSupport(s.params.field, honest_law(s.params, s.f_eval, qs)).contains(answers));
    EXPECT_TRUE(
        LawSupport(s.params.field, simulated_law(s.params, s.f_eval, qs)).contains(answers));
  }
}

TEST_P(ZkAuditTest, EverySingleQueryHasDistanceZero) {
  const ZkInstance s = make_zk_instance(GetParam(), 5);
  const PrimeField& f = s.params.field;
  std::vector<ScriptQuery> all;
  for (std::size_t len = 0; len <= 2; ++len)
    for (const auto& x : all_points(f, len)) all.push_back({Oracle::kSigma, 0, x});
  for (const auto& x : all_points(f, 2)) {
    all.push_back({Oracle::kQ, 0, x});
    all.push_back({Oracle::kT, 1, x});
    all.push_back({Oracle::kT, 2, x});
  }
  for (const auto& q : all) {
    const auto rep = audit_script(s.params, s.f_eval, linear({q}));
    EXPECT_TRUE(rep.identical()) << oracle_name(q.oracle, q.index) << to_string(q.point);
    EXPECT_EQ(rep.paths, f.modulus());
  }
}

TEST_P(ZkAuditTest, SingleQueryLaws) {
  const ZkInstance s = make_zk_instance(GetParam(), 6);
  const PrimeField& f = s.params.field;
  // Sigma at the root is gamma with probability one.
  const AffineLaw root = simulated_law(s.params, s.f_eval, {{Oracle::kSigma, 0, Point()}});
  EXPECT_EQ(LawSupport(f, root).rank(), 0u);
  EXPECT_EQ(root.offset[0], s.params.gamma);
  // Q at a point with alpha != rev alpha is uniform.
  const auto q = sq(Oracle::kQ, 0, {1, 2});
  EXPECT_EQ(LawSupport(f, simulated_law(s.params, s.f_eval, {q})).rank(), 1u);
  EXPECT_EQ(LawSupport(f, honest_law(s.params, s.f_eval, {q})).rank(), 1u);
  // On the cube Sigma is F plus the antisymmetric mask: fixed on (0,0).
  const auto fixed = sq(Oracle::kSigma, 0, {0, 0});
  const AffineLaw on_cube = honest_law(s.params, s.f_eval, {fixed});
  EXPECT_EQ(LawSupport(f, on_cube).rank(), 0u);
  EXPECT_EQ(on_cube.offset[0], s.f.eval(f, fixed.point));
}

TEST_P(ZkAuditTest, RandomAdaptiveScripts) {
  const ZkInstance s = make_zk_instance(GetParam(), 7);
  Rng rng(8 + GetParam());
  int branching = 0;
  for (int k = 0; k < 25; ++k) {
    const ScriptBlock script = random_script(s.params, rng, 4);
    for (const auto& st : script) branching += !st.is_query;
    const auto rep = audit_script(s.params, s.f_eval, script);
    EXPECT_TRUE(rep.identical()) << script_to_json(script) << " tv=" << rep.tv();
  }
  EXPECT_GT(branching, 0);
}

TEST_P(ZkAuditTest, OmittingTheMaskRowIsDetected) {
  const ZkInstance s = make_zk_instance(GetParam(), 9);
  const auto script = linear({sq(Oracle::kSigma, 0, {2, 0}), sq(Oracle::kQ, 0, {2, 0}),
                              sq(Oracle::kQ, 0, {0, 2}), sq(Oracle::kT, 1, {2, 0})});
  EXPECT_TRUE(audit_script(s.params, s.f_eval, script).identical());
  const auto broken = audit_script(s.params, s.f_eval, script, false);
  EXPECT_FALSE(broken.identical());
  EXPECT_GT(broken.tv(), 0.0);
  EXPECT_FALSE(broken.witness_queries.empty());
}

INSTANTIATE_TEST_SUITE_P(Fields, ZkAuditTest, ::testing::Values(3, 5));

// [Sigma(2), Q(2,3), Sigma(2,0)]: as written over F_5, and over F_3 with
// the out-of-range coordinate 3 reduced to 0.
TEST(ZkAuditFixed, MixedThreeQueryScript) {
  const ZkInstance s5 = make_zk_instance(5, 10);
  const auto script5 = linear({sq(Oracle::kSigma, 0, {2}), sq(Oracle::kQ, 0, {2, 3}),
                               sq(Oracle::kSigma, 0, {2, 0})});
  const auto rep5 = audit_script(s5.params, s5.f_eval, script5);
  EXPECT_TRUE(rep5.identical());
  EXPECT_EQ(rep5.tv_denominator, 125u);

  const ZkInstance s3 = make_zk_instance(3, 10);
  const auto script3 = linear({sq(Oracle::kSigma, 0, {2}), sq(Oracle::kQ, 0, {2, 0}),
                               sq(Oracle::kSigma, 0, {2, 0})});
  const auto rep3 = audit_script(s3.params, s3.f_eval, script3);
  EXPECT_TRUE(rep3.identical());
  // Over the 32-dimensional coefficient space the three answers are
  // independent and uniform.
  EXPECT_EQ(LawSupport(s3.params.field,
                       honest_law(s3.params, s3.f_eval,
                                  {script3[0].query, script3[1].query, script3[2].query}))
                .rank(),
            3u);
}

// Sigma at a prefix sums masked values whose Q and T parts sit on lines
// already pinned down by earlier queries.
TEST(ZkAuditFixed, PrefixSumsCorrelateWithTables) {
  const ZkInstance s = make_zk_instance(5, 13);
  const std::vector<std::vector<ScriptQuery>> cases = {
      {sq(Oracle::kQ, 0, {3, 4}), sq(Oracle::kT, 2, {2, 3}), sq(Oracle::kSigma, 0, {3}),
       sq(Oracle::kQ, 0, {3, 3})},
      {sq(Oracle::kQ, 0, {1, 2}), sq(Oracle::kT, 1, {0, 2}), sq(Oracle::kSigma, 0, {2, 2}),
       sq(Oracle::kT, 1, {2, 2})},
      {sq(Oracle::kT, 1, {1, 0}), sq(Oracle::kT, 1, {1, 1}), sq(Oracle::kT, 2, {0, 1}),
       sq(Oracle::kQ, 0, {2, 1})}};
  for (const auto& qs : cases) EXPECT_TRUE(audit_script(s.params, s.f_eval, linear(qs)).identical());
}

// Longer non-adaptive sequences: equal laws means equal rank and the
// simulator's affine image inside the honest support.
TEST(ZkAuditFixed, LongSequencesHaveEqualLaws) {
  for (std::uint64_t p : {3, 5, 7}) {
    const ZkInstance s = make_zk_instance(p, 14);
    const PrimeField& f = s.params.field;
    Rng rng(15);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<ScriptQuery> qs;
      for (int k = 0; k < 10; ++k) qs.push_back(random_script(s.params, rng, 1).front().query);
      const LawSupport real(f, honest_law(s.params, s.f_eval, qs));
      const AffineLaw sim = simulated_law(s.params, s.f_eval, qs);
      ASSERT_EQ(real.rank(), LawSupport(f, sim).rank());
      ASSERT_TRUE(real.contains(sim.offset));
      for (std::size_t c = 0; c < sim.coeffs.cols(); ++c) {
        auto v = sim.offset;
        for (std::size_t r = 0; r < v.size(); ++r) v[r] = f.add(v[r], sim.coeffs.at(r, c));
        ASSERT_TRUE(real.contains(v));
      }
    }
  }
}

TEST(ZkAuditFixed, SimulatorRefusesFalseClaims) {
  ZkInstance s = make_zk_instance(5, 11);
  s.params.gamma = s.params.field.add(s.params.gamma, Fe(1));
  EXPECT_THROW(SimulatedProof(s.params, s.f_eval, 1), std::invalid_argument);
}

TEST(ZkAuditFixed, PathCapIsEnforced) {
  const ZkInstance s = make_zk_instance(5, 12);
  std::vector<ScriptQuery> qs(6, sq(Oracle::kQ, 0, {1, 2}));
  EXPECT_THROW(audit_script(s.params, s.f_eval, linear(qs), true, 1000), std::length_error);
}

}  // namespace
}  // namespace zkpcp
