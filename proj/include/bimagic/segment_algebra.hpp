#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimagic/errors.hpp"

namespace bimagic {

/// How a numeral string behaves under the seven-segment symmetry maps.
enum class StringClass {
    universal,     ///< fixed by both rotation and mirror
    rotation_only, ///< fixed by rotation, not by mirror
    neither,
};

/// Classification of a digit alphabet.
struct DigitSetProfile {
    std::vector<int> digits;        ///< the set, ascending
    bool universal_capable = false; ///< subset of {0,1,2,5,8}
    bool upside_down_capable = false; ///< subset of {0,1,2,5,6,8,9}
};

/// True iff d has a 180-degree-rotated image (d in {0,1,2,5,6,8,9}).
bool is_rotatable(int d);

/// True iff d has a mirror image (d in {0,1,2,5,8}).
bool is_mirrorable(int d);

/// 180-degree rotation of a single digit: 0,1,2,5,8 fixed; 6 <-> 9.
/// Throws NonRotatableDigit for 3, 4, 7.
int rotate_digit(int d);

/// Mirror reflection of a single digit: 0,1,8 fixed; 2 <-> 5.
/// Throws NonMirrorableDigit for 3, 4, 6, 7, 9.
int mirror_digit(int d);

/// Rotate a numeral 180 degrees: reverse digit order, rotate each digit.
/// Width is preserved. Throws NonRotatableDigit naming the offending
/// position.
std::string rotate_numeral(const std::string& s);

/// Mirror a numeral: reverse digit order, mirror each digit.
/// Throws NonMirrorableDigit naming the offending position.
std::string mirror_numeral(const std::string& s);

/// universal iff rotate_numeral(s) == s and mirror_numeral(s) == s;
/// rotation_only iff only the rotation condition holds; otherwise neither
/// (an undefined map counts as failing its condition).
StringClass classify_string(const std::string& s);

/// Profile of a digit set. Throws EmptyDigitSet.
DigitSetProfile classify_digit_set(const std::vector<int>& digits);

/// Seven-segment mask for a digit, bit p = segment (a,b,c,d,e,f,g)[p].
/// Normative table in docs/sevenseg.md.
int segment_mask(int d);

/// Recognize a digit from a segment mask. The one-stroke digit is accepted
/// on either side of the cell: both {b,c} and {e,f} read as 1. Returns
/// nullopt for masks that are no digit.
std::optional<int> digit_from_segments(int mask);

/// Segment mask after physically rotating the display 180 degrees
/// (swaps a<->d, b<->e, c<->f; g fixed).
int rotate_segments(int mask);

/// Segment mask after mirroring the display (swaps b<->f, c<->e).
int mirror_segments(int mask);

} // namespace bimagic
