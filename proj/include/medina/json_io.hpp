#pragma once

#include "json.hpp"

#include "medina/arctan_eval.hpp"
#include "medina/medina.hpp"
#include "medina/oracle.hpp"
#include "medina/polynomial.hpp"
#include "medina/verify.hpp"

namespace medina {

/// ["4","0","-4",...], index = power.
nlohmann::ordered_json to_json(const Polynomial &p);
/// Throws ParseError unless `j` is an array of rational strings.
Polynomial polynomial_from_json(const nlohmann::ordered_json &j);

/// {"m": int, "p": [...], "h": [...], "bound": "1/1024"}
nlohmann::ordered_json to_json(const MedinaPair &pair);

/// {"value", "error_bound", "m", "steps", "decimal", "decimal_digits_guaranteed"}.
/// `decimal` is rounded to the guaranteed digit count, or to `full_digits`
/// when that is nonzero.
nlohmann::ordered_json to_json(const ApproxResult &result, unsigned full_digits = 0);

/// {"lo": "p/q", "hi": "p/q"}
nlohmann::ordered_json to_json(const oracle::Enclosure &e);

nlohmann::ordered_json to_json(const verify::VerificationReport &report);

} // namespace medina
