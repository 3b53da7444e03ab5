#include "bimagic/square.hpp"

#include <algorithm>
#include <cmath>

#include "bimagic/segment_algebra.hpp"

namespace bimagic {

long long numeral_value(const std::string& numeral) {
    long long v = 0;
    for (char c : numeral) {
        if (c < '0' || c > '9') throw Error("numeral contains a non-digit");
        v = v * 10 + (c - '0');
    }
    return v;
}

const char* line_kind_name(LineKind k) {
    switch (k) {
        case LineKind::row: return "row";
        case LineKind::column: return "column";
        case LineKind::main_diagonal: return "main_diagonal";
        case LineKind::anti_diagonal: return "anti_diagonal";
        case LineKind::broken_diagonal: return "broken_diagonal";
        case LineKind::block: return "block";
    }
    return "?";
}

std::optional<std::pair<int, int>> block_shape(int order) {
    if (order == 8) return std::make_pair(2, 4);
    const int s = static_cast<int>(std::lround(std::sqrt(order)));
    if (s * s == order) return std::make_pair(s, s);
    return std::nullopt;
}

std::vector<Line> lines(const Square& sq, const std::set<LineKind>& kinds) {
    const int n = sq.order;
    std::vector<Line> out;
    if (kinds.count(LineKind::row)) {
        for (int i = 0; i < n; ++i) {
            Line l{LineKind::row, i, {}};
            for (int j = 0; j < n; ++j) l.cells.emplace_back(i, j);
            out.push_back(std::move(l));
        }
    }
    if (kinds.count(LineKind::column)) {
        for (int j = 0; j < n; ++j) {
            Line l{LineKind::column, j, {}};
            for (int i = 0; i < n; ++i) l.cells.emplace_back(i, j);
            out.push_back(std::move(l));
        }
    }
    if (kinds.count(LineKind::main_diagonal)) {
        Line l{LineKind::main_diagonal, 0, {}};
        for (int i = 0; i < n; ++i) l.cells.emplace_back(i, i);
        out.push_back(std::move(l));
    }
    if (kinds.count(LineKind::anti_diagonal)) {
        Line l{LineKind::anti_diagonal, 0, {}};
        for (int i = 0; i < n; ++i) l.cells.emplace_back(i, n - 1 - i);
        out.push_back(std::move(l));
    }
    if (kinds.count(LineKind::broken_diagonal)) {
        // indices 0..n-1: (i, (i+s) mod n); indices n..2n-1: (i, (s-i) mod n)
        for (int s = 0; s < n; ++s) {
            Line l{LineKind::broken_diagonal, s, {}};
            for (int i = 0; i < n; ++i) l.cells.emplace_back(i, (i + s) % n);
            out.push_back(std::move(l));
        }
        for (int s = 0; s < n; ++s) {
            Line l{LineKind::broken_diagonal, n + s, {}};
            for (int i = 0; i < n; ++i) {
                l.cells.emplace_back(i, ((s - i) % n + n) % n);
            }
            out.push_back(std::move(l));
        }
    }
    if (kinds.count(LineKind::block)) {
        if (const auto shape = block_shape(n)) {
            const auto [bh, bw] = *shape;
            int index = 0;
            for (int bi = 0; bi < n; bi += bh) {
                for (int bj = 0; bj < n; bj += bw) {
                    Line l{LineKind::block, index++, {}};
                    for (int r = 0; r < bh; ++r) {
                        for (int c = 0; c < bw; ++c) {
                            l.cells.emplace_back(bi + r, bj + c);
                        }
                    }
                    out.push_back(std::move(l));
                }
            }
        }
    }
    return out;
}

namespace {

std::vector<int> map_alphabet(const std::vector<int>& alphabet, int (*f)(int)) {
    std::vector<int> out;
    out.reserve(alphabet.size());
    for (int d : alphabet) out.push_back(f(d));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Square apply_rotate180(const Square& sq) {
    Square out;
    out.order = sq.order;
    out.width = sq.width;
    out.cells.resize(sq.cells.size());
    const int n = sq.order;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            try {
                out.at(n - 1 - i, n - 1 - j) = rotate_numeral(sq.at(i, j));
            } catch (const NonRotatableDigit& e) {
                throw NonRotatableDigit("cell (" + std::to_string(i) + "," +
                                        std::to_string(j) + "): " + e.what());
            }
        }
    }
    out.alphabet = map_alphabet(sq.alphabet, &rotate_digit);
    return out;
}

Square apply_mirror(const Square& sq) {
    Square out;
    out.order = sq.order;
    out.width = sq.width;
    out.cells.resize(sq.cells.size());
    const int n = sq.order;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            try {
                out.at(i, n - 1 - j) = mirror_numeral(sq.at(i, j));
            } catch (const NonMirrorableDigit& e) {
                throw NonMirrorableDigit("cell (" + std::to_string(i) + "," +
                                         std::to_string(j) + "): " + e.what());
            }
        }
    }
    out.alphabet = map_alphabet(sq.alphabet, &mirror_digit);
    return out;
}

bool distinct_cover(const Square& sq) {
    const std::size_t q = sq.alphabet.size();
    double capacity = 1.0;
    for (int p = 0; p < sq.width; ++p) capacity *= static_cast<double>(q);
    if (capacity != static_cast<double>(sq.order) * sq.order) return false;
    std::vector<std::string> sorted = sq.cells;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    // n^2 distinct words over D of width k with q^k = n^2 is exactly all
    // of them, provided every digit is in the alphabet
    for (const std::string& cell : sorted) {
        for (char c : cell) {
            if (!std::binary_search(sq.alphabet.begin(), sq.alphabet.end(),
                                    c - '0')) {
                return false;
            }
        }
    }
    return true;
}

} // namespace bimagic
