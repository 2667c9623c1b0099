#pragma once

#include <string>

#include "spinwire/chain.hpp"

namespace spinwire {

// {"n": int, "model": "xx"|"dq"|"dipolar", "couplings": [...]}, plus the
// optional "family", "scale" and, for long-range chains, "coupling_matrix".
std::string chain_to_json(const ChainSpec& spec, int indent = 2);
ChainSpec chain_from_json(const std::string& text);

}  // namespace spinwire
