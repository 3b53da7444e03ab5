#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bimagic/field.hpp"
#include "bimagic/square.hpp"

namespace bimagic {

/// An affine construction attempt: digit vector = L*u + t over GF(q),
/// where u concatenates the base-q coordinates of the row and column
/// indices (most significant coordinate first, m coordinates each).
struct LinearCandidate {
    int q = 0;
    int m = 0;                           ///< 3 for order 8, else 2
    std::vector<FieldVec> L;             ///< 2m rows of length 2m
    FieldVec t;                          ///< length 2m
    std::vector<int> digit_assignment;   ///< field element -> digit, size q
};

enum class Profile { standard, pandiagonal };

/// What to search for.
struct SearchSpec {
    int order = 0;
    std::vector<int> digits;
    Profile profile = Profile::standard;
    std::uint64_t seed = 0;
    int worker_count = 1;
    double time_budget_seconds = 60.0;
};

/// Canonical digit assignment: field elements in canonical order map to
/// the digits sorted ascending.
std::vector<int> default_digit_assignment(const std::vector<int>& digits);

/// Materialize the square a candidate encodes.
/// Throws SingularMatrix when L is not invertible (an invertible L is
/// exactly what makes the square a distinct cover).
Square build_candidate_square(const LinearCandidate& c, int order,
                              const std::vector<int>& digits);

struct PruneResult {
    bool pass = false;
    std::string reason; ///< first violated condition, empty on pass
};

/// The balance-certificate prune, stated on the candidate's algebra.
///
/// For each digit-form row of L split as (a | b) (row-coordinate and
/// column-coordinate halves), the projections governing each structured
/// family are: rows -> b, columns -> a, main diagonal -> a+b,
/// anti-diagonal -> a-b (composed with the anti-diagonal's affine cell
/// parametrization), blocks -> the low-order coordinates (for m=3: the low
/// row coordinate and both low column coordinates). Pass requires every
/// projection nonzero and every pair of rows' projections linearly
/// independent, per family. Under the pandiagonal profile the
/// high-coordinate sums a[0]+b[0] and a[0]-b[0] must additionally be
/// nonzero (a sufficient condition for broken-diagonal balance when q is
/// prime; the profile only exists for order 25).
PruneResult prune_conditions(const LinearCandidate& c, Profile profile);

/// Relabel a square's alphabet onto `digits` (i-th ascending alphabet
/// digit -> i-th ascending target digit). Throws AlphabetMismatch when the
/// sizes differ.
Square assign_digits(const Square& sq, const std::vector<int>& digits);

/// Seeded backtracking search for a universal bimagic square.
///
/// Deterministic for a fixed (seed, worker_count): candidate orders are
/// seed-keyed permutations; with several workers each explores a disjoint
/// residue class of the first-stage order and the find with the smallest
/// first-stage index wins. Every returned square has passed full
/// verification (magic, bimagic, universality, blocks, distinct cover, and
/// the 50 broken diagonals under the pandiagonal profile).
///
/// Throws UnsupportedOrder for configurations outside
/// {(8,2),(9,3),(16,4),(25,5)} or pandiagonal with order != 25;
/// SearchExhausted (carrying SearchStats) when the budget runs out.
Square search_generate(const SearchSpec& spec, SearchStats* stats_out = nullptr);

} // namespace bimagic
