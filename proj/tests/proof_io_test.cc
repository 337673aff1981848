#include "zkpcp/proof_io.h"

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.h"

namespace zkpcp {
namespace {

using testing::fe_vec;

struct Fixture {
  PcpParams params = PcpParams::make(5, 2, 3, fe_vec({0, 1}), Fe(0));
  ProofTables tables;
  Fixture() {
    Rng rng(1);
    const MultiPoly f = random_poly(params.field, DegreeVector{3, 3}, rng);
    tables = materialize(params, prove_polys(params, f, rng), 1 << 20);
  }
  std::string bytes() const {
    std::ostringstream out(std::ios::binary);
    write_proof(out, params, tables);
    return out.str();
  }
};

std::uint64_t word_at(const std::string& s, std::size_t offset) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(s[offset + i]);
  return v;
}

LoadedProof load(const std::string& s, std::uint64_t cap = 1 << 20) {
  std::istringstream in(s, std::ios::binary);
  return read_proof(in, cap);
}

TEST(ProofIoTest, LayoutIsLittleEndianWords) {
  const Fixture fx;
  const std::string s = fx.bytes();
  EXPECT_EQ(s.substr(0, 4), "ZKP1");
  EXPECT_EQ(word_at(s, 4), 5u);    // p
  EXPECT_EQ(word_at(s, 12), 2u);   // m
  EXPECT_EQ(word_at(s, 20), 3u);   // d
  EXPECT_EQ(word_at(s, 28), 2u);   // |H|
  EXPECT_EQ(word_at(s, 36), 0u);
  EXPECT_EQ(word_at(s, 44), 1u);
  EXPECT_EQ(word_at(s, 52), 4u);   // |D|
  for (std::uint64_t k = 0; k < 4; ++k) EXPECT_EQ(word_at(s, 60 + 8 * k), k);
  // 1 + 5 + 25 sigma entries, then Q and two T tables of 25 each.
  const std::size_t header = 92;
  EXPECT_EQ(s.size(), header + 8 * (31 + 3 * 25));
  EXPECT_EQ(word_at(s, header), fx.tables.sigma_table[0].value());
  EXPECT_EQ(word_at(s, header + 8 * 31), fx.tables.q_table[0].value());
}

TEST(ProofIoTest, RoundTrip) {
  const Fixture fx;
  const LoadedProof back = load(fx.bytes());
  EXPECT_EQ(back.params.field.modulus(), 5u);
  EXPECT_EQ(back.params.m, 2u);
  EXPECT_EQ(back.params.d, 3u);
  EXPECT_EQ(back.params.h, fx.params.h);
  EXPECT_EQ(back.params.nodes, fx.params.nodes);
  EXPECT_EQ(back.tables.sigma_table, fx.tables.sigma_table);
  EXPECT_EQ(back.tables.q_table, fx.tables.q_table);
  EXPECT_EQ(back.tables.t_tables, fx.tables.t_tables);
}

TEST(ProofIoTest, RejectsDamagedFiles) {
  const Fixture fx;
  const std::string good = fx.bytes();
  EXPECT_THROW(load("ZKP2" + good.substr(4)), ProofFormatError);
  EXPECT_THROW(load(good.substr(0, good.size() - 3)), ProofFormatError);
  EXPECT_THROW(load(good + "x"), ProofFormatError);
  std::string bad_entry = good;
  bad_entry[92] = 7;  // first sigma entry >= p
  EXPECT_THROW(load(bad_entry), ProofFormatError);
  std::string composite = good;
  composite[4] = 6;
  EXPECT_THROW(load(composite), ProofFormatError);
  std::string swapped_h = good;
  swapped_h[36] = 1;
  swapped_h[44] = 0;
  EXPECT_THROW(load(swapped_h), ProofFormatError);
  EXPECT_THROW(load(good, 50), ProofFormatError);
}

}  // namespace
}  // namespace zkpcp
