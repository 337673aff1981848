#include "zkpcp/proof_io.h"

#include <array>
#include <istream>
#include <ostream>

namespace zkpcp {

namespace {

constexpr std::array<char, 4> kMagic{'Z', 'K', 'P', '1'};

void put(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

std::uint64_t get(std::istream& in) {
  std::array<unsigned char, 8> b;
  in.read(reinterpret_cast<char*>(b.data()), b.size());
  if (in.gcount() != 8) throw ProofFormatError("proof file is truncated");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

Fe get_element(std::istream& in, std::uint64_t p) {
  const std::uint64_t v = get(in);
  if (v >= p) throw ProofFormatError("field element " + std::to_string(v) + " is not below p");
  return Fe(v);
}

std::vector<Fe> get_table(std::istream& in, std::uint64_t n, std::uint64_t p) {
  std::vector<Fe> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(get_element(in, p));
  return out;
}

}  // namespace

void write_proof(std::ostream& out, const PcpParams& params, const ProofTables& proof) {
  out.write(kMagic.data(), kMagic.size());
  put(out, params.field.modulus());
  put(out, params.m);
  put(out, params.d);
  put(out, params.h.size());
  for (Fe a : params.h) put(out, a.value());
  put(out, params.nodes.size());
  for (Fe a : params.nodes) put(out, a.value());
  for (Fe v : proof.sigma_table) put(out, v.value());
  for (Fe v : proof.q_table) put(out, v.value());
  for (const auto& t : proof.t_tables)
    for (Fe v : t) put(out, v.value());
  if (!out) throw std::runtime_error("failed to write proof");
}

LoadedProof read_proof(std::istream& in, std::uint64_t cap) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || magic != kMagic) throw ProofFormatError("not a proof file");
  const std::uint64_t p = get(in);
  if (!is_prime(p)) throw ProofFormatError("modulus is not prime");
  const std::uint64_t m = get(in);
  const std::uint64_t d = get(in);
  if (m == 0 || m > 64) throw ProofFormatError("m out of range");
  if (d >= p) throw ProofFormatError("d must be below p");
  const std::uint64_t nh = get(in);
  if (nh == 0 || nh > p) throw ProofFormatError("|H| out of range");
  std::vector<Fe> h = get_table(in, nh, p);
  const std::uint64_t nn = get(in);
  if (nn != d + 1) throw ProofFormatError("expected d + 1 sumcheck nodes");
  std::vector<Fe> nodes = get_table(in, nn, p);

  LoadedProof out;
  try {
    out.params = PcpParams::make(p, m, d, h, Fe(0));
    out.params.validate_for_prover();
  } catch (const std::invalid_argument& e) {
    throw ProofFormatError(e.what());
  }
  if (out.params.h != h) throw ProofFormatError("H is not sorted");
  if (out.params.nodes != nodes) throw ProofFormatError("unexpected sumcheck nodes");

  std::uint64_t per_table, sigma_size = 0;
  try {
    per_table = checked_power(p, m, cap);
    for (std::uint64_t len = 0; len <= m; ++len) sigma_size += checked_power(p, len, cap);
  } catch (const std::length_error& e) {
    throw ProofFormatError(e.what());
  }
  if (sigma_size + (m + 1) * per_table > cap)
    throw ProofFormatError("proof exceeds the cap of " + std::to_string(cap) + " entries");
  out.tables.p = p;
  out.tables.m = m;
  out.tables.sigma_table = get_table(in, sigma_size, p);
  out.tables.q_table = get_table(in, per_table, p);
  for (std::uint64_t i = 0; i < m; ++i) out.tables.t_tables.push_back(get_table(in, per_table, p));
  if (in.peek() != std::char_traits<char>::eof())
    throw ProofFormatError("trailing bytes after the proof");
  return out;
}

}  // namespace zkpcp
