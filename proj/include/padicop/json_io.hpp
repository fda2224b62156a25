#pragma once

#include <optional>

#include <json.hpp>

#include "padicop/spectral.hpp"
#include "padicop/unitary_group.hpp"

namespace padicop::io {

using nlohmann::json;

// Big integers always travel as decimal strings; prime and precision travel
// with every value. Malformed documents raise Error(InvalidArgument).

json to_json(const PadicInt& x);                         // {"p","prec","val"}
PadicInt padic_int_from_json(const json& j);

json to_json(const PadicMatrix& a);                      // {"p","prec","n","entries"}
/// Accepts a bare matrix object or any object carrying one under "matrix".
PadicMatrix matrix_from_json(const json& j);

json to_json(const StrongNormalCertificate& cert);
/// Rebuilds and re-verifies the certificate identities.
StrongNormalCertificate certificate_from_json(const json& j);

json to_json(const SeriesBudget& budget);
SeriesBudget budget_from_json(const json& j);

json to_json(const OneParamGroup& group);                // generator + certificate + budget
/// A group document needs "generator"; a missing "certificate" is recomputed
/// and a missing "budget" falls back to `fallback` (or the automatic one).
OneParamGroup group_from_json(const json& j, std::optional<SeriesBudget> fallback = std::nullopt);

json to_json(const Valuation& v);                        // integer, or {"at_least": N}

} // namespace padicop::io
