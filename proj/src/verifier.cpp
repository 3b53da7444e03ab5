#include "bimagic/verifier.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "bimagic/segment_algebra.hpp"

namespace bimagic {

namespace {

long long line_sum(const Square& sq, const Line& l, int power) {
    long long acc = 0;
    for (const auto& [i, j] : l.cells) {
        const long long v = numeral_value(sq.at(i, j));
        acc += power == 1 ? v : v * v;
    }
    return acc;
}

/// The most common value (ties broken toward the smallest), so failure
/// reports blame the deviating line, not the other 2n+1.
long long modal_value(const std::vector<long long>& values) {
    std::map<long long, int> counts;
    for (long long v : values) ++counts[v];
    long long best = values.front();
    int best_count = 0;
    for (const auto& [v, c] : counts) {
        if (c > best_count) {
            best = v;
            best_count = c;
        }
    }
    return best;
}

bool all_equal(const std::vector<long long>& values) {
    return std::adjacent_find(values.begin(), values.end(),
                              std::not_equal_to<>()) == values.end();
}

/// Common s1/s2 over rows, columns, and both main diagonals, or nullopt.
struct CoreSums {
    std::optional<long long> s1, s2;
};

CoreSums core_sums(const Square& sq) {
    const auto ls = lines(sq, {LineKind::row, LineKind::column,
                               LineKind::main_diagonal,
                               LineKind::anti_diagonal});
    std::vector<long long> s1s, s2s;
    for (const Line& l : ls) {
        s1s.push_back(line_sum(sq, l, 1));
        s2s.push_back(line_sum(sq, l, 2));
    }
    CoreSums out;
    if (all_equal(s1s)) out.s1 = s1s.front();
    if (all_equal(s2s)) out.s2 = s2s.front();
    return out;
}

} // namespace

VerificationReport verify(const Square& sq, bool check_blocks,
                          bool check_pandiagonal) {
    VerificationReport report;
    report.blocks_checked = check_blocks;
    report.pandiagonal_checked = check_pandiagonal;

    const auto core = lines(sq, {LineKind::row, LineKind::column,
                                 LineKind::main_diagonal,
                                 LineKind::anti_diagonal});
    std::vector<long long> s1s, s2s;
    for (const Line& l : core) {
        s1s.push_back(line_sum(sq, l, 1));
        s2s.push_back(line_sum(sq, l, 2));
    }
    const long long ref1 = modal_value(s1s);
    const long long ref2 = modal_value(s2s);
    if (all_equal(s1s)) report.s1 = ref1;
    if (all_equal(s2s)) report.s2 = ref2;

    for (LineKind kind : {LineKind::row, LineKind::column,
                          LineKind::main_diagonal, LineKind::anti_diagonal}) {
        report.per_family_pass[kind] = true;
    }
    for (std::size_t idx = 0; idx < core.size(); ++idx) {
        const Line& l = core[idx];
        if (s1s[idx] != ref1) {
            report.per_family_pass[l.kind] = false;
            report.failures.push_back({l.kind, l.index, s1s[idx], 1});
        }
        if (s2s[idx] != ref2) {
            report.per_family_pass[l.kind] = false;
            report.failures.push_back({l.kind, l.index, s2s[idx], 2});
        }
    }

    if (check_blocks) {
        const auto blocks = lines(sq, {LineKind::block});
        if (!blocks.empty()) {
            std::vector<long long> sums;
            for (const Line& l : blocks) sums.push_back(line_sum(sq, l, 1));
            const long long ref = modal_value(sums);
            if (all_equal(sums)) report.block_sum = ref;
            report.per_family_pass[LineKind::block] = all_equal(sums);
            for (std::size_t idx = 0; idx < blocks.size(); ++idx) {
                if (sums[idx] != ref) {
                    report.failures.push_back(
                        {LineKind::block, blocks[idx].index, sums[idx], 1});
                }
            }
        } else {
            report.per_family_pass[LineKind::block] = false;
        }
    }

    if (check_pandiagonal) {
        const auto broken = lines(sq, {LineKind::broken_diagonal});
        bool pan1 = report.s1.has_value();
        bool pan2 = report.s2.has_value();
        for (const Line& l : broken) {
            const long long v1 = line_sum(sq, l, 1);
            const long long v2 = line_sum(sq, l, 2);
            if (!report.s1 || v1 != *report.s1) {
                pan1 = false;
                report.failures.push_back(
                    {LineKind::broken_diagonal, l.index, v1, 1});
            }
            if (!report.s2 || v2 != *report.s2) pan2 = false;
        }
        report.pandiagonal = pan1;
        report.pandiagonal_bimagic = pan2;
        report.per_family_pass[LineKind::broken_diagonal] = pan1;
    }

    report.universal = false;
    if (report.s1 && report.s2) {
        try {
            const CoreSums rot = core_sums(apply_rotate180(sq));
            const CoreSums mir = core_sums(apply_mirror(sq));
            report.universal = rot.s1.has_value() && rot.s2.has_value() &&
                               mir.s1.has_value() && mir.s2.has_value();
        } catch (const Error&) {
            report.universal = false; // a digit without an image
        }
    }
    return report;
}

BalanceCertificate check_certificate(const Square& sq,
                                     const std::set<LineKind>& kinds) {
    const int n = sq.order;
    const int q = static_cast<int>(sq.alphabet.size());
    // n/q and n/q^2 must both be integers for the frequency targets
    if (q == 0 || n % q != 0 || n % (q * q) != 0) {
        throw CapacityMismatch("certificate needs q | n and q^2 | n (q=" +
                               std::to_string(q) + ", n=" +
                               std::to_string(n) + ")");
    }
    const int per_position = n / q;
    const int per_pair = n / (q * q);
    const int k = sq.width;

    std::array<int, 10> digit_index{};
    digit_index.fill(-1);
    for (int idx = 0; idx < q; ++idx) digit_index[sq.alphabet[idx]] = idx;

    BalanceCertificate cert;
    cert.pass = true;
    for (const Line& l : lines(sq, kinds)) {
        LineBalance lb{l.kind, l.index, true, true};
        // digits of the line as indices into the alphabet, or -1
        std::vector<int> idx(l.cells.size() * k);
        for (std::size_t c = 0; c < l.cells.size(); ++c) {
            const std::string& cell = sq.at(l.cells[c].first, l.cells[c].second);
            for (int p = 0; p < k; ++p) {
                idx[c * k + p] = digit_index[cell[p] - '0'];
            }
        }
        for (int p = 0; p < k && lb.position_uniform; ++p) {
            std::vector<int> freq(q, 0);
            for (std::size_t c = 0; c < l.cells.size(); ++c) {
                const int d = idx[c * k + p];
                if (d < 0) {
                    lb.position_uniform = false;
                    break;
                }
                ++freq[d];
            }
            for (int d = 0; d < q && lb.position_uniform; ++d) {
                if (freq[d] != per_position) lb.position_uniform = false;
            }
        }
        for (int p = 0; p < k && lb.pair_uniform; ++p) {
            for (int p2 = p + 1; p2 < k && lb.pair_uniform; ++p2) {
                std::vector<int> joint(q * q, 0);
                for (std::size_t c = 0; c < l.cells.size(); ++c) {
                    const int d = idx[c * k + p];
                    const int e = idx[c * k + p2];
                    if (d < 0 || e < 0) {
                        lb.pair_uniform = false;
                        break;
                    }
                    ++joint[d * q + e];
                }
                for (int de = 0; de < q * q && lb.pair_uniform; ++de) {
                    if (joint[de] != per_pair) lb.pair_uniform = false;
                }
            }
        }
        if (!lb.position_uniform || !lb.pair_uniform) cert.pass = false;
        cert.lines.push_back(lb);
    }
    return cert;
}

namespace {

long long repunit(int k) {
    long long r = 0;
    for (int i = 0; i < k; ++i) r = r * 10 + 1;
    return r;
}

std::vector<int> canonical_digits(const std::vector<int>& digits) {
    std::vector<int> d(digits);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

} // namespace

long long expected_s1(int n, const std::vector<int>& digits, int k) {
    const auto d = canonical_digits(digits);
    const int q = static_cast<int>(d.size());
    if (q == 0 || n % q != 0) {
        throw CapacityMismatch("expected_s1 needs q | n");
    }
    long long digit_sum = 0;
    for (int x : d) digit_sum += x;
    return static_cast<long long>(n / q) * digit_sum * repunit(k);
}

long long expected_s2(int n, const std::vector<int>& digits, int k) {
    const auto d = canonical_digits(digits);
    const int q = static_cast<int>(d.size());
    if (q == 0 || n % q != 0 || n % (q * q) != 0) {
        throw CapacityMismatch("expected_s2 needs q | n and q^2 | n");
    }
    long long digit_sum = 0, digit_sq_sum = 0;
    for (int x : d) {
        digit_sum += x;
        digit_sq_sum += static_cast<long long>(x) * x;
    }
    long long P = 0, pow100 = 1;
    for (int p = 0; p < k; ++p) {
        P += pow100;
        pow100 *= 100;
    }
    const long long T = repunit(k) * repunit(k);
    return static_cast<long long>(n / q) * digit_sq_sum * P +
           static_cast<long long>(n / (q * q)) * digit_sum * digit_sum * (T - P);
}

} // namespace bimagic
