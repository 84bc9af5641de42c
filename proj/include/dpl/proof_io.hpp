// Text format for proof trees:
//
//   ; optional comment lines
//   (cut [p, q |- r] {i: 0; c: 1; cut: p & q}
//     (id [p |- p])
//     ...)
//
// Each node is `(rule [sequent] {params} premises...)`; the params block is
// omitted when empty. Writing what was read reproduces the text exactly.

#ifndef DPL_PROOF_IO_HPP
#define DPL_PROOF_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dpl/sequent.hpp"

namespace dpl {

std::string write_proof(const ProofNode& p, const std::vector<std::string>& comments = {});

/// Throws ParseError (spans index `text`).
ProofNode read_proof(std::string_view text);

}  // namespace dpl

#endif  // DPL_PROOF_IO_HPP
