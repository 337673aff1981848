#include "zkpcp/pcp.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.h"
#include "zkpcp/linalg.h"

namespace zkpcp {
namespace {

using testing::all_vectors;
using testing::fe_vec;

struct Instance {
  PcpParams params;
  MultiPoly f;
  FieldFunction f_eval;
};

Fe cube_total(const PrimeField& fld, const MultiPoly& f, const ProductSet& cube) {
  Fe s(0);
  for (const auto& x : cube.points()) s = fld.add(s, f.eval(fld, x));
  return s;
}

Instance random_instance(std::uint64_t p, std::size_t m, std::size_t d, Rng& rng) {
  const PrimeField fld(p);
  Instance in;
  in.f = random_poly(fld, DegreeVector(m, d), rng);
  in.params = PcpParams::make(p, m, d, fe_vec({0, 1}), Fe(0));
  in.params.gamma = cube_total(fld, in.f, in.params.cube());
  in.f_eval = [fld, f = in.f](const Point& x) { return f.eval(fld, x); };
  return in;
}

VerifierResult run(const Instance& in, ProofAccess& proof, Rng& rng) {
  return verify(in.params, in.f_eval, proof, sample_coins(in.params, rng));
}

TEST(PcpParamsTest, Validation) {
  EXPECT_THROW(PcpParams::make(101, 2, 2, fe_vec({0, 1}), Fe(0)).validate_for_prover(),
               std::invalid_argument);
  EXPECT_NO_THROW(PcpParams::make(101, 2, 3, fe_vec({0, 1}), Fe(0)).validate_for_verifier());
  EXPECT_THROW(PcpParams::make(3, 2, 3, fe_vec({0, 1}), Fe(0)).validate_for_verifier(),
               std::invalid_argument);
  EXPECT_THROW(PcpParams::make(101, 2, 3, fe_vec({0, 7}), Fe(0)).validate_for_verifier(),
               std::invalid_argument);
  EXPECT_THROW(PcpParams::make(101, 2, 3, fe_vec({1, 1}), Fe(0)).validate_for_prover(),
               std::invalid_argument);
  EXPECT_TRUE(PcpParams::make(101, 2, 3, fe_vec({0, 1}), Fe(0)).meets_soundness_margin());
  EXPECT_FALSE(PcpParams::make(11, 1, 3, fe_vec({0, 1}), Fe(0)).meets_soundness_margin());
  // ceil(4 (m + 2) ln 2) computed by hand: 4 * 4 * 0.6931 = 11.09.
  EXPECT_EQ(PcpParams::make(101, 2, 3, fe_vec({0, 1}), Fe(0)).line_tests(), 12u);
  EXPECT_EQ(PcpParams::make(101, 3, 3, fe_vec({0, 1}), Fe(0)).table_degrees(2),
            (DegreeVector{3, 1, 3}));
}

TEST(ProverTest, RootIsGammaAndDeterministic) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance in = random_instance(13, 2, 3, rng);
    Rng a(trial), b(trial);
    const ProofPolys pa = prove_polys(in.params, in.f, a);
    const ProofPolys pb = prove_polys(in.params, in.f, b);
    const ProofTables ta = materialize(in.params, pa, 1 << 20);
    const ProofTables tb = materialize(in.params, pb, 1 << 20);
    EXPECT_EQ(ta.sigma_table, tb.sigma_table);
    EXPECT_EQ(ta.q_table, tb.q_table);
    EXPECT_EQ(ta.t_tables, tb.t_tables);
    ProofTables t = ta;
    EXPECT_EQ(t.sigma(Point()), in.params.gamma);
  }
}

TEST(ProverTest, RejectsDegreeOverflow) {
  Rng rng(3);
  const PcpParams params = PcpParams::make(101, 2, 3, fe_vec({0, 1}), Fe(0));
  const MultiPoly big = random_poly(params.field, DegreeVector{4, 1}, rng);
  EXPECT_THROW(prove_polys(params, big, rng), std::invalid_argument);
}

TEST(ProverTest, MaterializedMatchesLazyAndDefinition) {
  Rng rng(5);
  const Instance in = random_instance(7, 2, 3, rng);
  const PrimeField& fld = in.params.field;
  const ProofPolys polys = prove_polys(in.params, in.f, rng);
  ProofTables tables = materialize(in.params, polys, 1 << 20);
  LazyHonestProof lazy(in.params, polys);
  const auto zh = vanishing(fld, in.params.h);
  for (std::size_t len = 0; len <= 2; ++len)
    for (const auto& x : all_points(fld, len)) {
      EXPECT_EQ(tables.sigma(x), lazy.sigma(x));
      if (len != 2) continue;
      EXPECT_EQ(tables.q(x), lazy.q(x));
      for (std::size_t i = 1; i <= 2; ++i) EXPECT_EQ(tables.t(i, x), lazy.t(i, x));
      // masked = F + Q - Q o rev + sum Z_H(x_i) T_i, pointwise.
      Fe want = fld.add(in.f.eval(fld, x), fld.sub(polys.q.eval(fld, x),
                                                   polys.q.eval(fld, x.reversed())));
      for (std::size_t i = 0; i < 2; ++i)
        want = fld.add(want, fld.mul(eval_univariate(fld, zh, x[i]), polys.t[i].eval(fld, x)));
      EXPECT_EQ(polys.masked.eval(fld, x), want);
    }
  EXPECT_THROW(materialize(in.params, polys, 100), std::length_error);
}

TEST(VerifierTest, ExhaustiveCoinsAcceptHonestProof) {
  Rng rng(11);
  const Instance in = random_instance(11, 1, 3, rng);
  ProofTables proof = materialize(in.params, prove_polys(in.params, in.f, rng), 1 << 20);
  VerifierCoins coins = sample_coins(in.params, rng);
  for (Fe c : in.params.field.elements()) {
    coins.path = Point(std::vector<Fe>{c});
    const auto res = verify(in.params, in.f_eval, proof, coins);
    EXPECT_TRUE(res.accept) << res.reason;
  }
}

TEST(VerifierTest, RandomInstancesAccept) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance in = random_instance(101, 2, 3, rng);
    LazyHonestProof proof(in.params, prove_polys(in.params, in.f, rng));
    const auto res = run(in, proof, rng);
    EXPECT_TRUE(res.accept) << res.reason;
  }
}

TEST(VerifierTest, QueryCountIsBounded) {
  Rng rng(19);
  for (std::size_t m = 1; m <= 3; ++m) {
    const Instance in = random_instance(31, m, 3, rng);
    LazyHonestProof proof(in.params, prove_polys(in.params, in.f, rng));
    const auto res = run(in, proof, rng);
    ASSERT_TRUE(res.accept);
    const std::size_t d = 3, p = 31, r = in.params.line_tests();
    const std::size_t bound = 1 + m * (d + 1) + 2 + m + (m + 1) * r * p;
    EXPECT_LE(res.log.size(), bound);
    EXPECT_EQ(res.log.front().point, Point());
  }
}

TEST(VerifierTest, MissingEntriesReject) {
  Rng rng(23);
  const Instance in = random_instance(11, 1, 3, rng);
  ProofTables proof = materialize(in.params, prove_polys(in.params, in.f, rng), 1 << 20);
  proof.q_table.resize(3);
  const auto res = run(in, proof, rng);
  EXPECT_FALSE(res.accept);
}

TEST(SoundnessTest, WrongClaimIsRejected) {
  Rng rng(29);
  const std::size_t m = 2, d = 3;
  const std::uint64_t p = 101;
  int rejected = 0;
  const int trials = 300;
  for (int trial = 0; trial < trials; ++trial) {
    const Instance in = random_instance(p, m, d, rng);
    const PrimeField& fld = in.params.field;
    // Honest prover for F' = F + delta L, where L is the Lagrange polynomial
    // of H^m at the origin, so that F' sums to gamma + delta.
    const Fe delta = fld.add(Fe(1), Fe(rng.below(p - 1)));
    const MultiPoly lag = lagrange(fld, in.params.cube(), Point(std::vector<Fe>(m, Fe(0))));
    const MultiPoly fp =
        add(fld, in.f, scale(fld, delta, lag)).rebound(DegreeVector(m, d));
    PcpParams claimed = in.params;
    claimed.gamma = fld.add(in.params.gamma, delta);
    LazyHonestProof proof(claimed, prove_polys(claimed, fp, rng));
    rejected += !verify(claimed, in.f_eval, proof, sample_coins(claimed, rng)).accept;
  }
  // Rejection probability is at least 1 - m d / p = 0.94.
  EXPECT_GE(rejected, static_cast<int>(trials * (1.0 - double(m * d) / p) - 20));
}

TEST(SoundnessTest, RandomQTableFailsLineTests) {
  Rng rng(31);
  int rejected = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    const Instance in = random_instance(101, 2, 3, rng);
    LazyHonestProof honest(in.params, prove_polys(in.params, in.f, rng));
    RandomQProof bad(honest, in.params.field, 1000 + trial);
    rejected += !run(in, bad, rng).accept;
  }
  EXPECT_GE(rejected, trials / 2);
}

TEST(SharpSatTest, OrOfTwoVariables) {
  const auto cnf = parse_dimacs_string("p cnf 2 1\n1 2 0\n");
  const SharpSat good = make_sharp_sat(cnf, 3);
  EXPECT_EQ(good.params.field.modulus(), 61u);
  EXPECT_EQ(good.params.d, 3u);
  Rng rng(37);
  LazyHonestProof proof(good.params, prove_polys(good.params, good.f, rng));
  EXPECT_TRUE(verify(good.params, good.f_eval, proof, sample_coins(good.params, rng)).accept);

  const SharpSat bad = make_sharp_sat(cnf, 2);
  const PrimeField& fld = bad.params.field;
  const MultiPoly fp = add(fld, bad.f, scale(fld, fld.neg(Fe(1)),
                                             lagrange(fld, bad.params.cube(),
                                                      Point({Fe(1), Fe(1)}))))
                           .rebound(DegreeVector(2, bad.params.d));
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    LazyHonestProof cheat(bad.params, prove_polys(bad.params, fp, rng));
    rejected += !verify(bad.params, bad.f_eval, cheat, sample_coins(bad.params, rng)).accept;
  }
  EXPECT_GE(rejected, 50);
}

TEST(SharpSatTest, ParameterSelection) {
  const auto cnf = parse_dimacs_string("p cnf 3 1\n1 2 3 0\n");
  EXPECT_THROW(make_sharp_sat(cnf, 7, 7), std::invalid_argument);   // p <= 2^n
  EXPECT_THROW(make_sharp_sat(cnf, 7, 15), std::invalid_argument);  // not prime
  EXPECT_NO_THROW(make_sharp_sat(cnf, 7, 11));
  // max(10 m d, 2^n) = 90, next prime 97.
  EXPECT_EQ(make_sharp_sat(cnf, 7).params.field.modulus(), 97u);
}

// (Q - Q o rev) on {0,1}^2 over F_3: Q restricted to the cube is uniform,
// and g - g o rev over all 81 cube words hits every antisymmetric word
// equally often.
TEST(MaskLawTest, AntisymmetricPartIsUniform) {
  const PrimeField f(3);
  const ProductSet cube = ProductSet::power(fe_vec({0, 1}), 2);
  const auto pts = cube.points();
  Matrix eval(0, 16);
  for (const auto& x : pts) eval.append_row(monomial_values(f, DegreeVector{3, 3}, x.coords()));
  EXPECT_EQ(rank(f, eval), pts.size());

  std::map<std::vector<Fe>, int> hist;
  for (const auto& g : all_vectors(f, pts.size())) {
    std::vector<Fe> w;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto j = std::find(pts.begin(), pts.end(), pts[k].reversed()) - pts.begin();
      w.push_back(f.sub(g[k], g[j]));
    }
    ++hist[w];
  }
  // Antisymmetric words on {0,1}^2: zero on 00 and 11, w(01) = -w(10).
  ASSERT_EQ(hist.size(), 3u);
  for (const auto& [w, n] : hist) {
    EXPECT_EQ(n, 27);
    EXPECT_EQ(w[0], Fe(0));
    EXPECT_EQ(w[3], Fe(0));
    EXPECT_EQ(w[1], f.neg(w[2]));
  }
}

// sum_i Z_H(X_i) T_i over F_3 with d = 3 spans exactly the degree-(3,3)
// polynomials vanishing on {0,1}^2, so a uniform T gives a uniform element.
TEST(MaskLawTest, VanishingPartCoversZeroCode) {
  const PrimeField f(3);
  const auto h = fe_vec({0, 1});
  const auto zh = vanishing(f, h);
  const DegreeVector full{3, 3};
  Matrix image(0, 16);
  for (std::size_t i = 0; i < 2; ++i) {
    DegreeVector dt = full;
    dt[i] = 1;
    MultiPoly t(dt);
    for (std::size_t j = 0; j < t.num_coeffs(); ++j) {
      std::fill(t.coeffs().begin(), t.coeffs().end(), Fe(0));
      t.coeffs()[j] = f.one();
      image.append_row(mul(f, in_variable(2, i, zh), t).rebound(full).coeffs());
    }
  }
  Matrix on_cube(0, 16);
  for (const auto& x : ProductSet::power(h, 2).points())
    on_cube.append_row(monomial_values(f, full, x.coords()));
  const Matrix zero_code = kernel_basis(f, on_cube);
  EXPECT_EQ(zero_code.rows(), 12u);
  EXPECT_TRUE(same_row_space(f, image, zero_code));
}

}  // namespace
}  // namespace zkpcp
