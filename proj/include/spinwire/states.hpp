#pragma once

#include "spinwire/pauli.hpp"
#include "spinwire/propagator.hpp"

namespace spinwire {

// Initial deviation states used by the transport and MQC observables:
//   kZEnds    : Z_1 + Z_n
//   kYLogical : (Y1 X2 + X1 Y2)/2 + (Y_{n-1} X_n + X_{n-1} Y_n)/2, double-quantum at both ends
//   kXLogical : kYLogical after a collective pi/4 rotation about z
//   kFullZ    : sum_j Z_j
DeviationState prepare_state(int n, StateKind kind);

StateKind parse_state_kind(std::string_view text);
std::string_view to_string(StateKind kind);

}  // namespace spinwire
