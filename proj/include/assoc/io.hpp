#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "assoc/resistance.hpp"
#include "assoc/scheme.hpp"

namespace assoc {

/// {"n": N, "d": d, "name": ..., "class_names": [...], "relations": [[row-major 0/1], ...]}
nlohmann::json scheme_to_json(const AssociationScheme& scheme);

/// Parses and verifies. Throws Errc::ParseError for a malformed document;
/// axiom failures come from verify_scheme.
AssociationScheme scheme_from_json(const nlohmann::json& doc);

void write_scheme_file(const AssociationScheme& scheme, const std::string& path);
AssociationScheme read_scheme_file(const std::string& path);

/// "3/4", "-2", "0.125", "1e-3" and "2.5E2" parse exactly. Throws Errc::ParseError.
Rational parse_rational(std::string_view text);

/// Comma-separated c_1..c_d; missing trailing entries are zero.
ConductanceVector parse_conductances(std::string_view text, std::size_t d);

/// "num/den" or "num".
std::string format_rational(const Rational& r);

}  // namespace assoc
