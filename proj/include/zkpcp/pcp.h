#ifndef ZKPCP_PCP_H_
#define ZKPCP_PCP_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zkpcp/cnf.h"
#include "zkpcp/field.h"
#include "zkpcp/point.h"
#include "zkpcp/poly.h"

namespace zkpcp {

struct PcpParams {
  PrimeField field{2};
  std::size_t m = 0;
  std::size_t d = 0;
  std::vector<Fe> h;
  // Sumcheck reading nodes {0, ..., d}.
  std::vector<Fe> nodes;
  Fe gamma;

  static PcpParams make(std::uint64_t p, std::size_t m, std::size_t d,
                        std::vector<Fe> h, Fe gamma);
  ProductSet cube() const { return ProductSet::power(h, m); }
  // Throws std::invalid_argument. The prover and simulator need
  // d >= |H| + 1; the verifier needs p > d so that the nodes are distinct.
  void validate_for_prover() const;
  void validate_for_verifier() const;
  // m d < p / 10.
  bool meets_soundness_margin() const { return 10 * m * d < field.modulus(); }
  // Line tests per table, ceil(4 (m + 2) ln 2).
  std::size_t line_tests() const;
  // Individual degree bounds of each table: 0 is Q, i >= 1 is T_i.
  DegreeVector table_degrees(std::size_t table) const;
};

// The polynomials behind an honest proof.
struct ProofPolys {
  MultiPoly f;
  MultiPoly q;
  std::vector<MultiPoly> t;
  // F + Q - Q o rev + sum_i Z_H(X_i) T_i.
  MultiPoly masked;
};

// Samples Q and T_i uniformly. Throws when F exceeds degree d.
ProofPolys prove_polys(const PcpParams& params, const MultiPoly& f, Rng& rng);

enum class Oracle { kSigma, kQ, kT };

std::string oracle_name(Oracle o, std::size_t index);

// Read access to pi = (pi_Sigma, pi_Q, pi_T1, ..., pi_Tm). Table indices
// for T are 1-based. Implementations may throw std::out_of_range for
// entries they do not hold.
class ProofAccess {
 public:
  virtual ~ProofAccess() = default;
  virtual Fe sigma(const Point& x) = 0;
  virtual Fe q(const Point& x) = 0;
  virtual Fe t(std::size_t i, const Point& x) = 0;
  Fe read(Oracle o, std::size_t index, const Point& x);
};

// Fully materialised tables. sigma is in (length, lex) order over F^{<=m};
// q and t[i-1] are in lex order over F^m.
struct ProofTables final : ProofAccess {
  std::uint64_t p = 0;
  std::size_t m = 0;
  std::vector<Fe> sigma_table;
  std::vector<Fe> q_table;
  std::vector<std::vector<Fe>> t_tables;

  Fe sigma(const Point& x) override;
  Fe q(const Point& x) override;
  Fe t(std::size_t i, const Point& x) override;
};

// Throws std::length_error when the tables would exceed `cap` entries.
ProofTables materialize(const PcpParams& params, const ProofPolys& polys,
                        std::uint64_t cap);

// Honest proof evaluated on demand from its polynomials.
class LazyHonestProof final : public ProofAccess {
 public:
  LazyHonestProof(const PcpParams& params, ProofPolys polys);
  Fe sigma(const Point& x) override;
  Fe q(const Point& x) override;
  Fe t(std::size_t i, const Point& x) override;
  const ProofPolys& polys() const { return polys_; }

 private:
  PcpParams params_;
  ProofPolys polys_;
  std::map<Point, Fe> sigma_cache_;
};

// Wraps a proof and replaces pi_Q by an independent uniform table.
class RandomQProof final : public ProofAccess {
 public:
  RandomQProof(ProofAccess& base, const PrimeField& f, std::uint64_t seed)
      : base_(base), f_(f), rng_(seed) {}
  Fe sigma(const Point& x) override { return base_.sigma(x); }
  Fe q(const Point& x) override;
  Fe t(std::size_t i, const Point& x) override { return base_.t(i, x); }

 private:
  ProofAccess& base_;
  PrimeField f_;
  Rng rng_;
  std::map<Point, Fe> table_;
};

struct LineCoins {
  // 0 is pi_Q, i >= 1 is pi_Ti.
  std::size_t table = 0;
  std::size_t axis = 0;
  // Coordinate `axis` is ignored.
  Point base;
};

struct VerifierCoins {
  Point path;
  std::vector<LineCoins> lines;
};

VerifierCoins sample_coins(const PcpParams& params, Rng& rng);

struct QueryRecord {
  Oracle oracle = Oracle::kSigma;
  std::size_t index = 0;
  Point point;
  Fe answer;
};

struct VerifierResult {
  bool accept = false;
  std::string reason;
  std::vector<QueryRecord> log;
};

using FieldFunction = std::function<Fe(const Point&)>;

// Unrolled sumcheck along coins.path followed by axis-parallel line tests.
// Missing proof entries lead to rejection.
VerifierResult verify(const PcpParams& params, const FieldFunction& f_eval,
                      ProofAccess& proof, const VerifierCoins& coins);

// #SAT instance wired to the proof system with H = {0, 1}.
struct SharpSat {
  CnfInstance cnf;
  std::uint64_t count = 0;
  PcpParams params;
  MultiPoly f;
  FieldFunction f_eval;
};

// d = max(|H| + 1, max occurrence), p = smallest prime above
// max(10 m d, 2^n) unless `p` is given. A given p must exceed 2^n and d.
SharpSat make_sharp_sat(const CnfInstance& cnf, std::uint64_t count,
                        std::optional<std::uint64_t> p = std::nullopt);

}  // namespace zkpcp

#endif  // ZKPCP_PCP_H_
