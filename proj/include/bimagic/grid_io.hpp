#pragma once

#include <iosfwd>
#include <string>

#include "bimagic/square.hpp"
#include "bimagic/verifier.hpp"

namespace bimagic {

/// Parse the grid file format:
///   # order=<n> width=<k> digits=<d1,d2,...>
///   <n lines of n space-separated width-k numerals>
/// Every cell digit must belong to the declared alphabet. Throws
/// ParseError with a one-line diagnosis.
Square parse_grid(std::istream& in);
Square parse_grid(const std::string& text);

/// Serialize a square to the grid file format (round-trips bit-exactly,
/// leading zeros included).
std::string serialize_grid(const Square& sq);

/// The square as JSON: {order, width, digits, cells}.
std::string square_to_json(const Square& sq);

/// The report as JSON with stable keys: order, width, digits, s1, s2,
/// block_sum, pandiagonal, pandiagonal_bimagic, universal,
/// per_family_pass, failures. Absent sums are null.
std::string report_to_json(const VerificationReport& report, const Square& sq);

/// Human-readable report.
std::string report_to_text(const VerificationReport& report, const Square& sq);

} // namespace bimagic
