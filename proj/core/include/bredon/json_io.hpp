#pragma once

#include "bredon/mackey.hpp"

#include <json.hpp>

namespace bredon {

/// Canonical JSON form of a Mackey functor: levels in the fixed subgroup
/// order, each level as Smith-normalized invariants, every structure map as a
/// row-major matrix in the canonical coordinates of its endpoints.
nlohmann::ordered_json mackey_to_json(const MackeyFunctor& m);

/// Rebuild a functor from its canonical JSON form (levels come back in
/// canonical presentation).
MackeyFunctor mackey_from_json(const nlohmann::ordered_json& j);

}  // namespace bredon
