#pragma once

// Machine-readable form of elements:
//   term    = {"eta": int, "a": [[mantissa, vexp], ...], "I": [int, ...]}
//   element = {"p": int, "n": int, "M": int, "terms": [term, ...]}
// Terms follow the canonical key order; partition indices are 1-based and
// listed in ⪯ order.

#include <nlohmann/json.hpp>

#include "drw/element.hpp"

namespace drw::cli {

nlohmann::json to_json(const DRWElement& x);

/// Throws std::invalid_argument on a malformed document.
DRWElement from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExtendedRational& q);

}  // namespace drw::cli
