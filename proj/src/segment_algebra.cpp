#include "bimagic/segment_algebra.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace bimagic {

namespace {

constexpr int kNoImage = -1;

// rotation: 0,1,2,5,8 fixed; 6 <-> 9; 3,4,7 undefined
constexpr std::array<int, 10> kRotate = {0, 1, 2, kNoImage, kNoImage,
                                         5, 9, kNoImage, 8, 6};
// mirror: 0,1,8 fixed; 2 <-> 5; 3,4,6,7,9 undefined
constexpr std::array<int, 10> kMirror = {0, 1, 5, kNoImage, kNoImage,
                                         2, kNoImage, kNoImage, 8, kNoImage};

// segment bits: a=1, b=2, c=4, d=8, e=16, f=32, g=64
// (a top, b top-right, c bottom-right, d bottom, e bottom-left,
//  f top-left, g middle) — the normative table in docs/sevenseg.md.
constexpr std::array<int, 10> kSegments = {
    0b0111111, // 0: a b c d e f
    0b0000110, // 1: b c
    0b1011011, // 2: a b d e g
    0b1001111, // 3: a b c d g
    0b1100110, // 4: b c f g
    0b1101101, // 5: a c d f g
    0b1111101, // 6: a c d e f g
    0b0000111, // 7: a b c
    0b1111111, // 8: all
    0b1101111, // 9: a b c d f g
};

int digit_of_char(char c, std::size_t pos) {
    if (c < '0' || c > '9') {
        throw Error("not a digit at position " + std::to_string(pos));
    }
    return c - '0';
}

} // namespace

bool is_rotatable(int d) {
    return d >= 0 && d <= 9 && kRotate[d] != kNoImage;
}

bool is_mirrorable(int d) {
    return d >= 0 && d <= 9 && kMirror[d] != kNoImage;
}

int rotate_digit(int d) {
    if (!is_rotatable(d)) {
        throw NonRotatableDigit("digit " + std::to_string(d) +
                                " has no 180-degree image");
    }
    return kRotate[d];
}

int mirror_digit(int d) {
    if (!is_mirrorable(d)) {
        throw NonMirrorableDigit("digit " + std::to_string(d) +
                                 " has no mirror image");
    }
    return kMirror[d];
}

std::string rotate_numeral(const std::string& s) {
    std::string out(s.size(), '0');
    for (std::size_t p = 0; p < s.size(); ++p) {
        const int d = digit_of_char(s[p], p);
        if (!is_rotatable(d)) {
            throw NonRotatableDigit("digit " + std::to_string(d) +
                                    " at position " + std::to_string(p) +
                                    " has no 180-degree image");
        }
        out[s.size() - 1 - p] = static_cast<char>('0' + kRotate[d]);
    }
    return out;
}

std::string mirror_numeral(const std::string& s) {
    std::string out(s.size(), '0');
    for (std::size_t p = 0; p < s.size(); ++p) {
        const int d = digit_of_char(s[p], p);
        if (!is_mirrorable(d)) {
            throw NonMirrorableDigit("digit " + std::to_string(d) +
                                     " at position " + std::to_string(p) +
                                     " has no mirror image");
        }
        out[s.size() - 1 - p] = static_cast<char>('0' + kMirror[d]);
    }
    return out;
}

StringClass classify_string(const std::string& s) {
    bool rotation_fixed = false;
    try {
        rotation_fixed = rotate_numeral(s) == s;
    } catch (const NonRotatableDigit&) {
        rotation_fixed = false;
    } catch (const Error&) {
        rotation_fixed = false;
    }
    bool mirror_fixed = false;
    try {
        mirror_fixed = mirror_numeral(s) == s;
    } catch (const NonMirrorableDigit&) {
        mirror_fixed = false;
    } catch (const Error&) {
        mirror_fixed = false;
    }
    if (rotation_fixed && mirror_fixed) return StringClass::universal;
    if (rotation_fixed) return StringClass::rotation_only;
    return StringClass::neither;
}

DigitSetProfile classify_digit_set(const std::vector<int>& digits) {
    if (digits.empty()) throw EmptyDigitSet("digit set is empty");
    DigitSetProfile profile;
    profile.digits.assign(digits.begin(), digits.end());
    std::sort(profile.digits.begin(), profile.digits.end());
    profile.digits.erase(
        std::unique(profile.digits.begin(), profile.digits.end()),
        profile.digits.end());
    profile.universal_capable = true;
    profile.upside_down_capable = true;
    for (int d : profile.digits) {
        if (!is_mirrorable(d)) profile.universal_capable = false;
        if (!is_rotatable(d)) profile.upside_down_capable = false;
    }
    // a mirrorable set is automatically rotatable ({0,1,2,5,8} subset)
    return profile;
}

int segment_mask(int d) {
    if (d < 0 || d > 9) throw Error("digit out of range");
    return kSegments[d];
}

std::optional<int> digit_from_segments(int mask) {
    constexpr int kLeftOne = 0b0110000; // segments e, f
    if (mask == kLeftOne) return 1;
    for (int d = 0; d <= 9; ++d) {
        if (kSegments[d] == mask) return d;
    }
    return std::nullopt;
}

int rotate_segments(int mask) {
    // a<->d (bits 0,3), b<->e (bits 1,4), c<->f (bits 2,5), g fixed
    int out = mask & 0b1000000;
    if (mask & 0b0000001) out |= 0b0001000;
    if (mask & 0b0001000) out |= 0b0000001;
    if (mask & 0b0000010) out |= 0b0010000;
    if (mask & 0b0010000) out |= 0b0000010;
    if (mask & 0b0000100) out |= 0b0100000;
    if (mask & 0b0100000) out |= 0b0000100;
    return out;
}

int mirror_segments(int mask) {
    // b<->f (bits 1,5), c<->e (bits 2,4); a, d, g fixed
    int out = mask & 0b1001001;
    if (mask & 0b0000010) out |= 0b0100000;
    if (mask & 0b0100000) out |= 0b0000010;
    if (mask & 0b0000100) out |= 0b0010000;
    if (mask & 0b0010000) out |= 0b0000100;
    return out;
}

} // namespace bimagic
