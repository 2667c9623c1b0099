#include "spinwire/states.hpp"

#include <numbers>

#include "spinwire/error.hpp"

namespace spinwire {

DeviationState prepare_state(int n, StateKind kind) {
  const bool logical = kind == StateKind::kYLogical || kind == StateKind::kXLogical;
  if (n < (logical ? 4 : 2)) {
    throw Error(ErrorCode::kChainTooShort, "state needs n >= " + std::to_string(logical ? 4 : 2));
  }
  PauliSum op(n);
  switch (kind) {
    case StateKind::kZEnds:
      op.add(1.0, {{1, 'Z'}}).add(1.0, {{n, 'Z'}});
      break;
    case StateKind::kFullZ:
      for (int j = 1; j <= n; ++j) op.add(1.0, {{j, 'Z'}});
      break;
    case StateKind::kYLogical:
    case StateKind::kXLogical:
      op.add(0.5, {{1, 'Y'}, {2, 'X'}})
          .add(0.5, {{1, 'X'}, {2, 'Y'}})
          .add(0.5, {{n - 1, 'Y'}, {n, 'X'}})
          .add(0.5, {{n - 1, 'X'}, {n, 'Y'}});
      if (kind == StateKind::kXLogical) op = rotate_about_z(op, std::numbers::pi / 4.0);
      break;
  }
  return DeviationState(std::move(op));
}

StateKind parse_state_kind(std::string_view text) {
  if (text == "z_ends") return StateKind::kZEnds;
  if (text == "y_logical") return StateKind::kYLogical;
  if (text == "x_logical") return StateKind::kXLogical;
  if (text == "full_z") return StateKind::kFullZ;
  throw Error(ErrorCode::kParse, "unknown initial state '" + std::string(text) + "'");
}

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::kZEnds: return "z_ends";
    case StateKind::kYLogical: return "y_logical";
    case StateKind::kXLogical: return "x_logical";
    case StateKind::kFullZ: return "full_z";
  }
  return "?";
}

}  // namespace spinwire
