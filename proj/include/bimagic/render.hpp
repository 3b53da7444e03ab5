#pragma once

#include <string>

#include "bimagic/square.hpp"

namespace bimagic {

enum class RenderStyle { sevenseg, plain };

/// Render one digit as a 3-column x 3-row seven-segment glyph
/// (rows: " _ " / "|_|" / "|_|" for 8). Returns the three rows joined by
/// newlines, no trailing newline.
std::string render_digit(int d);

/// Render a numeral: its digits' glyph rows concatenated side by side.
std::string render_numeral(const std::string& numeral);

/// Render a square. sevenseg: each grid row becomes three text lines,
/// numerals separated by two spaces, digits within a numeral adjacent.
/// plain: the grid body (numerals space-separated), no header.
std::string render_square(const Square& sq, RenderStyle style);

} // namespace bimagic
