#include "bimagic/render.hpp"

#include <array>
#include <sstream>

#include "bimagic/segment_algebra.hpp"

namespace bimagic {

namespace {

/// Rows of the 3x3 glyph for a segment mask.
/// row 0: segment a on the cell floor of the top row;
/// row 1: f (left pipe), g (floor), b (right pipe);
/// row 2: e (left pipe), d (floor), c (right pipe).
std::array<std::string, 3> glyph_rows(int mask) {
    const bool a = mask & 0b0000001, b = mask & 0b0000010,
               c = mask & 0b0000100, d = mask & 0b0001000,
               e = mask & 0b0010000, f = mask & 0b0100000,
               g = mask & 0b1000000;
    std::array<std::string, 3> rows;
    rows[0] = std::string(" ") + (a ? '_' : ' ') + ' ';
    rows[1] = std::string(1, f ? '|' : ' ') + (g ? '_' : ' ') +
              (b ? '|' : ' ');
    rows[2] = std::string(1, e ? '|' : ' ') + (d ? '_' : ' ') +
              (c ? '|' : ' ');
    return rows;
}

} // namespace

std::string render_digit(int d) {
    const auto rows = glyph_rows(segment_mask(d));
    return rows[0] + "\n" + rows[1] + "\n" + rows[2];
}

std::string render_numeral(const std::string& numeral) {
    std::array<std::string, 3> acc{"", "", ""};
    for (char c : numeral) {
        const auto rows = glyph_rows(segment_mask(c - '0'));
        for (int r = 0; r < 3; ++r) acc[r] += rows[r];
    }
    return acc[0] + "\n" + acc[1] + "\n" + acc[2];
}

std::string render_square(const Square& sq, RenderStyle style) {
    std::ostringstream out;
    if (style == RenderStyle::plain) {
        for (int i = 0; i < sq.order; ++i) {
            for (int j = 0; j < sq.order; ++j) {
                if (j) out << ' ';
                out << sq.at(i, j);
            }
            out << '\n';
        }
        return out.str();
    }
    for (int i = 0; i < sq.order; ++i) {
        std::array<std::string, 3> acc{"", "", ""};
        for (int j = 0; j < sq.order; ++j) {
            if (j) {
                for (auto& row : acc) row += "  ";
            }
            for (char c : sq.at(i, j)) {
                const auto rows = glyph_rows(segment_mask(c - '0'));
                for (int r = 0; r < 3; ++r) acc[r] += rows[r];
            }
        }
        for (const std::string& row : acc) out << row << '\n';
    }
    return out.str();
}

} // namespace bimagic
