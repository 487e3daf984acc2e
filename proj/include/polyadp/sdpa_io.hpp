#pragma once

#include <string>

#include "polyadp/sdp.hpp"

namespace polyadp {

/// Serializes the problem in SDPA sparse format (.dat-s). The problem
///   maximize <C,X>  s.t.  <A_k,X> = b_k,  X >= 0
/// maps onto the SDPA dual: F_0 = C, F_k = A_k, c = b, so a conforming SDPA
/// solver's reported objective matches this problem's optimum. Diagonal
/// blocks are written with negative size, entries are emitted in a fixed
/// deterministic order.
std::string export_sdpa(const SdpProblem& prob);

/// Parses SDPA sparse format back into an SdpProblem. Accepts '*' and '"'
/// comment lines and the usual {,()} separators in the header lines.
SdpProblem parse_sdpa(const std::string& text);

}  // namespace polyadp
