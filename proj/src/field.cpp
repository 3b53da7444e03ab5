#include "bimagic/field.hpp"

namespace bimagic {

namespace {

/// Carry-less polynomial product of two GF(4) representatives reduced
/// modulo x^2 + x + 1.
int gf4_mul(int a, int b) {
    int r = 0;
    for (int i = 0; i < 2; ++i) {
        if ((b >> i) & 1) r ^= a << i;
    }
    if ((r >> 2) & 1) r ^= 0b111; // x^2 = x + 1
    return r & 3;
}

} // namespace

Field::Field(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4 && q != 5) {
        throw Error("unsupported field size " + std::to_string(q));
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (q == 4) {
                add_[a][b] = static_cast<std::uint8_t>(a ^ b);
                mul_[a][b] = static_cast<std::uint8_t>(gf4_mul(a, b));
            } else {
                add_[a][b] = static_cast<std::uint8_t>((a + b) % q);
                mul_[a][b] = static_cast<std::uint8_t>((a * b) % q);
            }
        }
    }
    for (int a = 0; a < q; ++a) {
        neg_[a] = (q == 4) ? static_cast<std::uint8_t>(a)
                           : static_cast<std::uint8_t>((q - a) % q);
        for (int b = 0; b < q; ++b) {
            if (mul_[a][b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
        }
    }
}

FieldVec vec_add(const Field& f, const FieldVec& u, const FieldVec& v) {
    FieldVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = f.add(u[i], v[i]);
    return r;
}

FieldVec vec_sub(const Field& f, const FieldVec& u, const FieldVec& v) {
    FieldVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = f.sub(u[i], v[i]);
    return r;
}

FieldVec vec_scale(const Field& f, int c, const FieldVec& u) {
    FieldVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = f.mul(c, u[i]);
    return r;
}

bool vec_is_zero(const FieldVec& u) {
    for (int x : u) {
        if (x != 0) return false;
    }
    return true;
}

int vec_dot(const Field& f, const FieldVec& u, const FieldVec& v) {
    int acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc = f.add(acc, f.mul(u[i], v[i]));
    }
    return acc;
}

bool pairwise_independent(const Field& f, const FieldVec& u, const FieldVec& v) {
    if (vec_is_zero(u) || vec_is_zero(v)) return false;
    for (int c = 0; c < f.q(); ++c) {
        if (vec_scale(f, c, u) == v) return false;
    }
    return true;
}

int matrix_rank(const Field& f, std::vector<FieldVec> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][c] != 0) {
                pivot = static_cast<int>(i);
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const int scale = f.inv(rows[rank][c]);
        rows[rank] = vec_scale(f, scale, rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) != rank && rows[i][c] != 0) {
                const FieldVec scaled = vec_scale(f, rows[i][c], rows[rank]);
                rows[i] = vec_sub(f, rows[i], scaled);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace bimagic
