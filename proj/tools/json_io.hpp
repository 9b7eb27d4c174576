#pragma once

#include <json.hpp>

#include "mixsym/fock.hpp"
#include "mixsym/mixed.hpp"
#include "mixsym/partition.hpp"
#include "mixsym/polynomial.hpp"

namespace mixsym::io {

// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

/// {"terms":[{"coeff":"<num>/<den>","mono":{"<var>":"<exp>",...}},...]}
Json polynomial_to_json(const Polynomial& p);
/// Inverse of polynomial_to_json. Throws std::invalid_argument when the
/// document does not follow the schema.
Polynomial polynomial_from_json(const Json& doc);

Json parts_to_json(const std::vector<int>& parts);
Json term_to_json(const ExpansionTerm& term);
Json report_to_json(const VerificationReport& report);
Json fock_to_json(const FockVector& v);

}  // namespace mixsym::io
