#pragma once

#include <json.hpp>

#include "monochrome/limit_laws.hpp"

namespace monochrome {

inline constexpr const char* kLawSchema = "monochrome.law/1";

/// {"schema": ..., "kind": "Poisson", ...parameters}.
nlohmann::ordered_json law_to_json(const LimitLaw& law);
/// Errors: ParseError (unknown kind, missing fields), InvalidArgument.
LimitLaw law_from_json(const nlohmann::json& j);

}  // namespace monochrome
