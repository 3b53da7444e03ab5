#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bimagic/square.hpp"

namespace bimagic {

/// One line whose sum disagrees with the reference value.
struct Failure {
    LineKind family;
    int index;
    long long observed;
    int power; ///< 1 = element sum, 2 = squared-element sum
};

/// Result of verifying a square.
struct VerificationReport {
    std::optional<long long> s1;        ///< common line sum, if shared by
                                        ///< all rows/columns/diagonals
    std::optional<long long> s2;        ///< common squared sum, likewise
    std::optional<long long> block_sum; ///< common block sum, if checked
                                        ///< and shared by all blocks
    bool blocks_checked = false;
    bool pandiagonal_checked = false;
    bool pandiagonal = false;           ///< all 2n broken diagonals sum to s1
    bool pandiagonal_bimagic = false;   ///< informational: squared sums too
    bool universal = false;             ///< square, rotate180, mirror all
                                        ///< magic + bimagic
    /// Per family: true only when every checked line of the family matches
    /// the modal sums at both powers (a power-2 deviation fails the family).
    std::map<LineKind, bool> per_family_pass;
    std::vector<Failure> failures;
};

/// Verify magic/bimagic/block/pandiagonal/universality properties.
///
/// s1 (s2) is present iff every row, column, and both main diagonals share
/// one element (squared) sum. Failures are reported against the most
/// common value so a single bad line names itself rather than the other
/// 2n+1. universal is computed by transforming and re-verifying; a digit
/// with no image makes it false, never an error.
VerificationReport verify(const Square& sq, bool check_blocks,
                          bool check_pandiagonal);

/// Per-line verdict of the balance certificate.
struct LineBalance {
    LineKind kind;
    int index;
    bool position_uniform; ///< every digit n/q times at every position
    bool pair_uniform;     ///< every ordered digit pair n/q^2 times at
                           ///< every position pair
};

/// The balance certificate: per-line position frequency tables and
/// position-pair joint frequency tables, reduced to verdicts.
struct BalanceCertificate {
    bool pass = false;
    std::vector<LineBalance> lines;
};

/// Check the balance certificate on every member of the requested
/// families. Throws CapacityMismatch unless q | n and q^2 | n.
BalanceCertificate check_certificate(const Square& sq,
                                     const std::set<LineKind>& kinds);

/// Closed-form common line sum: (n/q) * (sum of D) * repunit(k).
/// Throws CapacityMismatch unless q | n.
long long expected_s1(int n, const std::vector<int>& digits, int k);

/// Closed-form common squared line sum:
/// (n/q) * (sum of d^2) * P + (n/q^2) * (sum of d)^2 * (T - P), where
/// P = sum of 100^p and T = repunit(k)^2. Throws CapacityMismatch unless
/// q | n and q^2 | n.
long long expected_s2(int n, const std::vector<int>& digits, int k);

} // namespace bimagic
