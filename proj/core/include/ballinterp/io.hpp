#pragma once

#include <iosfwd>
#include <string>

#include "ballinterp/absorption.hpp"
#include "ballinterp/geometry.hpp"
#include "ballinterp/minimize.hpp"
#include "ballinterp/projector_norm.hpp"
#include "ballinterp/regular_simplex.hpp"

namespace ballinterp {

// --- simplex input ---------------------------------------------------------
// CSV: one vertex per row, no header.  JSON: {"vertices": [[...], ...]}.
// load_simplex sniffs the format (leading '{' means JSON).
Simplex load_simplex(const std::string& path);
Simplex simplex_from_csv(std::istream& in);
Simplex simplex_from_json(const std::string& text);

// --- ball input -------------------------------------------------------------
// Compact form "c1,c2,...,cn;R" and JSON {"center": [...], "radius": r}.
Ball ball_from_string(const std::string& text);
Ball ball_from_json(const std::string& text);

// --- JSON output ------------------------------------------------------------
// {"value":..., "signs":[...], "k":..., "extremal_point":[...], ...}
std::string to_json(const NormCertificate& cert);
NormCertificate certificate_from_json(const std::string& text);

std::string to_json(const AbsorptionResult& result);
std::string to_json(const SearchResult& result);

// --- CSV output -------------------------------------------------------------
// %.{digits}g with the C locale ('.' decimal separator, no grouping).
std::string format_significant(double v, int digits);

std::string regular_report_csv_header();
std::string to_csv_row(const RegularReport& report, int precision = 12);

}  // namespace ballinterp
