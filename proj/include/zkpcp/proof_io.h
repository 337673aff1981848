#ifndef ZKPCP_PROOF_IO_H_
#define ZKPCP_PROOF_IO_H_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

#include "zkpcp/pcp.h"

namespace zkpcp {

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary layout, all integers 8-byte little endian: magic "ZKP1", p, m, d,
// |H|, the elements of H, the number of sumcheck nodes and the nodes, then
// pi_Sigma in (length, lex) order, pi_Q and each pi_Ti in lex order.
void write_proof(std::ostream& out, const PcpParams& params, const ProofTables& proof);

struct LoadedProof {
  PcpParams params;
  ProofTables tables;
};

// Validates the header and table sizes; refuses files whose tables would
// exceed `cap` entries. gamma is left at zero; the caller supplies it.
LoadedProof read_proof(std::istream& in, std::uint64_t cap);

}  // namespace zkpcp

#endif  // ZKPCP_PROOF_IO_H_
