#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bimagic/errors.hpp"

namespace bimagic {

/// Arithmetic tables for GF(q), q in {2, 3, 4, 5}.
///
/// Elements are canonical representatives 0..q-1. For prime q the tables
/// are plain modular arithmetic; for q = 4 an element encodes a degree-<2
/// polynomial over GF(2) (value b1*x + b0 as the integer 2*b1 + b0) reduced
/// modulo x^2 + x + 1, the unique irreducible quadratic.
class Field {
public:
    explicit Field(int q);

    int q() const { return q_; }
    int add(int a, int b) const { return add_[a][b]; }
    int sub(int a, int b) const { return add_[a][neg_[b]]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    /// Multiplicative inverse; a must be nonzero.
    int inv(int a) const { return inv_[a]; }

private:
    int q_;
    std::array<std::array<std::uint8_t, 5>, 5> add_{};
    std::array<std::array<std::uint8_t, 5>, 5> mul_{};
    std::array<std::uint8_t, 5> neg_{};
    std::array<std::uint8_t, 5> inv_{};
};

/// Small fixed-size vector over GF(q); length m is 2 or 3 here, but any
/// small size works.
using FieldVec = std::vector<int>;

FieldVec vec_add(const Field& f, const FieldVec& u, const FieldVec& v);
FieldVec vec_sub(const Field& f, const FieldVec& u, const FieldVec& v);
FieldVec vec_scale(const Field& f, int c, const FieldVec& u);
bool vec_is_zero(const FieldVec& u);

/// Dot product of equal-length vectors.
int vec_dot(const Field& f, const FieldVec& u, const FieldVec& v);

/// True iff u and v span a 2-dimensional space (neither is a scalar
/// multiple of the other; zero vectors are never independent).
bool pairwise_independent(const Field& f, const FieldVec& u, const FieldVec& v);

/// Rank of a list of row vectors via Gaussian elimination over GF(q).
int matrix_rank(const Field& f, std::vector<FieldVec> rows);

} // namespace bimagic
