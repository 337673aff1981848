#include "zkpcp/sigma_rm.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace zkpcp {
namespace {

using testing::all_vectors;
using testing::fe_vec;
using testing::locator_contract;
using testing::sum_code_decomposition;
using testing::sum_code_dual;
using testing::sum_rm_model;

std::vector<Point> universe(const PrimeField& f, std::size_t m) {
  std::vector<Point> out;
  for (std::size_t len = 0; len <= m; ++len)
    for (const auto& x : all_points(f, len)) out.push_back(x);
  return out;
}

PointSet random_closed(const PrimeField& f, const ProductSet& a, Rng& rng,
                       std::size_t cap) {
  const auto all = universe(f, a.arity());
  for (;;) {
    PointSet x;
    const auto n = 1 + rng.below(4);
    for (std::uint64_t k = 0; k < n; ++k) x.insert(all[rng.below(all.size())]);
    auto c = a_closure(x, a);
    if (c.size() <= cap) return c;
  }
}

std::vector<Fe> dense(const SumWord& z, const std::vector<Point>& cols) {
  std::vector<Fe> v;
  for (const auto& p : cols) {
    auto it = z.find(p);
    v.push_back(it == z.end() ? Fe(0) : it->second);
  }
  return v;
}

TEST(SumWordTest, RecurrenceOnClosedDomains) {
  const PrimeField f(5);
  Rng rng(61);
  const ProductSet a({fe_vec({0, 1}), fe_vec({1, 2, 3})});
  for (int t = 0; t < 10; ++t) {
    const auto p = random_poly(f, {2, 4}, rng);
    const auto s = random_closed(f, a, rng, 40);
    const std::vector<Point> pts(s.begin(), s.end());
    const auto w = sum_word(f, p, a, pts);
    for (const auto& e : expandable(s, a)) {
      Fe acc(0);
      for (Fe v : a.factor(e.length())) acc = f.add(acc, w.at(e.extended(v)));
      EXPECT_EQ(w.at(e), acc);
    }
  }
}

TEST(FlattenTest, ShallowSupportPassesThrough) {
  const PrimeField f(5);
  const auto a = ProductSet::power(fe_vec({0, 1}), 2);
  const PointSet s = a_closure({Point{3, 4}, Point{0, 2}}, a);
  SumWord z{{Point(), Fe(2)}};
  const auto out = flatten(f, z, 2, Fe(1), s, a);
  for (const auto& p : s) {
    if (p.length() == 2) {
      EXPECT_FALSE(out.contains(p));
    } else {
      EXPECT_EQ(out.at(p), p.is_root() ? Fe(2) : Fe(0));
    }
  }
}

TEST(FlattenTest, SummationConstraintCancels) {
  const PrimeField f(5);
  const ProductSet a({fe_vec({0, 1}), fe_vec({0, 2, 4})});
  const PointSet s = a_closure({Point{3, 0}}, a);
  for (Fe v : a.factor(1)) {
    const auto out = flatten(f, summation_constraint(f, Point{3}, a), 2, v, s, a);
    for (const auto& [p, c] : out) EXPECT_EQ(c.value(), 0u) << to_string(p);
  }
  EXPECT_THROW(flatten(f, {}, 2, Fe(1), s, a), std::invalid_argument);
  EXPECT_THROW(flatten(f, {}, 3, Fe(0), s, a), std::invalid_argument);
}

TEST(FlattenTest, DeepestLayerConstraintLandsInLowerDual) {
  // Over F_3 the bivariate quadratics are every function, so use F_5.
  const PrimeField f(5);
  const auto a = ProductSet::power(fe_vec({0, 1}), 2);
  Rng rng(67);
  std::vector<MultiPoly> quads;
  for (const auto& c : all_vectors(f, 3)) {
    MultiPoly q({2});
    q.coeffs() = c;
    quads.push_back(q);
  }
  int checked = 0;
  for (int t = 0; t < 2000 && checked < 30; ++t) {
    const auto s = random_closed(f, a, rng, 40);
    std::vector<Point> leaves;
    for (const auto& p : s)
      if (p.length() == 2) leaves.push_back(p);
    const auto cd = cd_rm(CodeView{f, {2, 2}, std::nullopt}, leaves);
    for (std::size_t r = 0; r < cd.z.rows(); ++r) {
      SumWord z;
      for (std::size_t c = 0; c < cd.domain.size(); ++c) z[cd.domain[c]] = cd.z.at(r, c);
      for (Fe av : a.factor(1)) {
        const auto out = flatten(f, z, 2, av, s, a);
        for (const auto& q : quads) {
          Fe acc(0);
          for (const auto& [p, c] : out)
            if (p.length() == 1) acc = f.add(acc, f.mul(c, q.eval(f, p)));
            else EXPECT_EQ(c.value(), 0u);
          EXPECT_EQ(acc.value(), 0u);
        }
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

// Any dual vector of the sum code flattens into the dual of the sum code
// with one variable fewer.
TEST(FlattenTest, DualMapsToLowerSumCodeDual) {
  for (std::uint64_t p : {3, 5}) {
    const PrimeField f(p);
    const auto a = ProductSet::power(fe_vec({0, 1}), 2);
    Rng rng(71 + p);
    for (int t = 0; t < 15; ++t) {
      const auto s = random_closed(f, a, rng, 20);
      const std::vector<Point> cols(s.begin(), s.end());
      const auto dual = sum_code_dual(f, a, {2, 2}, false, cols);
      std::vector<Point> lower;
      for (const auto& x : cols)
        if (x.length() < 2) lower.push_back(x);
      const auto lower_dual = sum_code_dual(f, a.leading(1), {2}, false, lower);
      for (std::size_t r = 0; r < dual.rows(); ++r) {
        SumWord z;
        for (std::size_t c = 0; c < cols.size(); ++c) z[cols[c]] = dual.at(r, c);
        for (Fe av : a.factor(1))
          EXPECT_TRUE(in_row_space(f, lower_dual, dense(flatten(f, z, 2, av, s, a), lower)));
      }
    }
  }
}

TEST(DualDecompositionTest, MatchesBruteForceDual) {
  const auto a = ProductSet::power(fe_vec({0, 1}), 2);
  for (std::uint64_t p : {3, 5}) {
    const PrimeField f(p);
    Rng rng(73 + p);
    for (const DegreeVector& d : {DegreeVector{2, 2}, DegreeVector{3, 3}, DegreeVector{2, 3}})
      for (bool zero : {false, true})
        for (int t = 0; t < 8; ++t) {
          const auto s = random_closed(f, a, rng, 20);
          const std::vector<Point> cols(s.begin(), s.end());
          EXPECT_TRUE(same_row_space(f, sum_code_decomposition(f, a, d, zero, cols),
                                     sum_code_dual(f, a, d, zero, cols)))
              << "p=" << p << " zero=" << zero << " |S|=" << cols.size();
        }
  }
}

TEST(SigmaRmLocateTest, Examples) {
  const auto a = ProductSet::power(fe_vec({0, 1}), 2);
  const CodeView v{PrimeField(5), {2, 2}, std::nullopt};
  const PrimeField& f = v.field;

  const auto root = sigma_rm_locate(v, a, std::vector<Point>{Point()});
  EXPECT_EQ(root.r, std::vector<Point>{Point()});
  ASSERT_EQ(root.z.rows(), 1u);
  EXPECT_EQ(root.z.at(0, 0), f.neg(root.z.at(0, 1)));
  EXPECT_NE(root.z.at(0, 0).value(), 0u);

  const auto leaf = sigma_rm_locate(v, a, std::vector<Point>{Point{0, 1}});
  std::vector<Fe> tie(leaf.r.size() + 1);
  const auto at = std::find(leaf.r.begin(), leaf.r.end(), Point{0, 1});
  ASSERT_NE(at, leaf.r.end());
  tie[at - leaf.r.begin()] = f.one();
  tie.back() = f.neg(f.one());
  EXPECT_TRUE(in_row_space(f, leaf.z, tie));

  const auto free = sigma_rm_locate(v, a, std::vector<Point>{Point{2}});
  for (std::size_t i = 0; i < free.z.rows(); ++i)
    EXPECT_EQ(free.z.at(i, free.query_column(0)).value(), 0u);
}

TEST(SigmaRmLocateTest, RejectsBadInput) {
  const auto a = ProductSet::power(fe_vec({0, 1}), 2);
  const CodeView v{PrimeField(5), {1, 2}, std::nullopt};
  EXPECT_THROW(sigma_rm_locate(v, a, std::vector<Point>{Point{1}}), std::invalid_argument);
  const CodeView ok{PrimeField(5), {2, 2}, std::nullopt};
  EXPECT_THROW(sigma_rm_locate(ok, a, std::vector<Point>{Point{1, 1, 1}}),
               std::invalid_argument);
}

void contract_sweep(std::uint64_t p, const ProductSet& a, const DegreeVector& d,
                    std::size_t max_queries, int trials, std::uint64_t seed) {
  const PrimeField f(p);
  const CodeView v{f, d, std::nullopt};
  const auto model = sum_rm_model(f, a, d);
  const auto all = universe(f, a.arity());
  std::size_t amax = 0;
  std::size_t asum = 0;
  for (const auto& fac : a.factors()) {
    amax = std::max(amax, fac.size());
    asum += fac.size();
  }
  const std::size_t m = a.arity();
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<Point> pts;
    const auto n = 1 + rng.below(max_queries);
    for (std::uint64_t k = 0; k < n; ++k) pts.push_back(all[rng.below(all.size())]);
    const auto out = sigma_rm_locate(v, a, pts);
    const std::size_t q = out.queries.size();
    ASSERT_EQ(locator_contract(f, model, out), "");
    EXPECT_LE(out.r.size(), q * m * (m * (amax + 1) + 1) * (m * (amax + 1) + 1));
    EXPECT_LE(out.r.size(), (asum + m + 1) * (asum + m + 1) * q);
    EXPECT_TRUE(is_a_closed(PointSet(out.r.begin(), out.r.end()), a));
  }
}

TEST(SigmaRmLocateTest, ContractOnBinaryCubes) {
  const auto a2 = ProductSet::power(fe_vec({0, 1}), 2);
  contract_sweep(3, a2, {2, 2}, 3, 120, 79);
  contract_sweep(3, a2, {3, 3}, 3, 120, 83);
  contract_sweep(5, a2, {2, 2}, 3, 80, 89);
  contract_sweep(5, ProductSet::power(fe_vec({0, 1}), 3), {2, 2, 2}, 4, 40, 97);
}

TEST(SigmaRmLocateTest, ContractOnUnevenCubes) {
  contract_sweep(7, ProductSet({fe_vec({0, 1, 2}), fe_vec({3, 5})}), {4, 3}, 5, 60, 101);
  contract_sweep(5, ProductSet({fe_vec({1}), fe_vec({0, 4}), fe_vec({0, 1, 2})}), {1, 2, 4},
                 4, 30, 103);
}

}  // namespace
}  // namespace zkpcp
