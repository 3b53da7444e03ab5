#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bimagic {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A digit with no 180-degree-rotated image (3, 4, 7).
struct NonRotatableDigit : Error {
    using Error::Error;
};

/// A digit with no mirror image (3, 4, 6, 7, 9).
struct NonMirrorableDigit : Error {
    using Error::Error;
};

/// classify_digit_set called with an empty set.
struct EmptyDigitSet : Error {
    using Error::Error;
};

/// Alphabet size does not divide the order as required (q | n, q^2 | n).
struct CapacityMismatch : Error {
    using Error::Error;
};

/// A LinearCandidate whose coefficient matrix is not invertible.
struct SingularMatrix : Error {
    using Error::Error;
};

/// No supported (order, alphabet size) pairing, or an invalid profile.
struct UnsupportedOrder : Error {
    using Error::Error;
};

/// Relabeling with an alphabet of mismatched size.
struct AlphabetMismatch : Error {
    using Error::Error;
};

/// A grid file that does not conform to the format.
struct ParseError : Error {
    using Error::Error;
};

/// Counters describing one search run.
struct SearchStats {
    std::uint64_t nodes = 0;       ///< partial row placements explored
    std::uint64_t leaves = 0;      ///< complete candidate matrices reached
    std::uint64_t verified = 0;    ///< full square verifications performed
    double elapsed_seconds = 0.0;
};

/// Search ran out of budget without finding a conforming square.
struct SearchExhausted : Error {
    SearchStats stats;
    explicit SearchExhausted(const std::string& message, SearchStats s)
        : Error(message), stats(s) {}
};

} // namespace bimagic
