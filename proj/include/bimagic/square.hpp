#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimagic/errors.hpp"

namespace bimagic {

/// Integer value of a fixed-width numeral string ("0125" -> 125).
long long numeral_value(const std::string& numeral);

/// The structured line families of a square.
enum class LineKind {
    row,
    column,
    main_diagonal,
    anti_diagonal,
    broken_diagonal,
    block,
};

const char* line_kind_name(LineKind k);

/// One member of a line family: n cell positions.
struct Line {
    LineKind kind;
    int index;
    std::vector<std::pair<int, int>> cells;
};

/// An n x n grid of fixed-width numerals over a digit alphabet.
///
/// Square is a plain data holder: any order/width/alphabet combination
/// whose cells conform is representable, so the verifier can score
/// arbitrary input grids. The generator's capacity rule q^k = n^2 is
/// enforced where squares are constructed, not here.
struct Square {
    int order = 0;
    int width = 0;
    std::vector<int> alphabet;       ///< ascending digit set
    std::vector<std::string> cells;  ///< row-major, order*order numerals

    const std::string& at(int i, int j) const { return cells[i * order + j]; }
    std::string& at(int i, int j) { return cells[i * order + j]; }
};

/// Block geometry for an order: 2x4 for order 8, sqrt(n) x sqrt(n) for
/// perfect squares, nullopt otherwise.
std::optional<std::pair<int, int>> block_shape(int order);

/// Enumerate the requested line families.
///
/// rows/columns: n members each. main/anti diagonal: 1 each. broken
/// diagonals: 2n members — cells (i, (i+s) mod n) then (i, (s-i) mod n)
/// for s = 0..n-1 (the two main diagonals appear among them). blocks: n
/// members tiling the grid (see block_shape); empty if the order has no
/// block geometry.
std::vector<Line> lines(const Square& sq, const std::set<LineKind>& kinds);

/// Move cell (i, j) to (n-1-i, n-1-j) and rotate every numeral.
/// Throws NonRotatableDigit with the offending cell position.
Square apply_rotate180(const Square& sq);

/// Move cell (i, j) to (i, n-1-j) and mirror every numeral.
/// Throws NonMirrorableDigit with the offending cell position.
Square apply_mirror(const Square& sq);

/// True iff the multiset of cell numerals is exactly the set of all
/// width^|alphabet| words over the alphabet, each exactly once (requires
/// q^k = n^2 to be possible at all).
bool distinct_cover(const Square& sq);

} // namespace bimagic
