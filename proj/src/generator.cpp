#include "bimagic/generator.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "bimagic/verifier.hpp"

namespace bimagic {

namespace {

using Clock = std::chrono::steady_clock;

/// splitmix64 — stable across platforms, used only to key permutations.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic seed-keyed permutation of 0..size-1 (hand-rolled
/// Fisher-Yates over mt19937_64, whose output sequence is
/// standard-specified; std::shuffle is not).
std::vector<int> seeded_permutation(std::size_t size, std::uint64_t seed,
                                    std::uint64_t stage) {
    std::mt19937_64 rng(mix64(seed ^ mix64(stage + 1)));
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = size; i > 1; --i) {
        const std::size_t j = rng() % i;
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

struct OrderParams {
    int q;
    int m;
};

std::optional<OrderParams> order_params(int order) {
    switch (order) {
        case 8: return OrderParams{2, 3};
        case 9: return OrderParams{3, 2};
        case 16: return OrderParams{4, 2};
        case 25: return OrderParams{5, 2};
        default: return std::nullopt;
    }
}

/// Base-q coordinates of an index, most significant first.
FieldVec coords(int value, int q, int m) {
    FieldVec c(m);
    for (int p = m - 1; p >= 0; --p) {
        c[p] = value % q;
        value /= q;
    }
    return c;
}

FieldVec row_part(const FieldVec& row, int m) {
    return FieldVec(row.begin(), row.begin() + m);
}

FieldVec col_part(const FieldVec& row, int m) {
    return FieldVec(row.begin() + m, row.end());
}

/// Block projection: the coordinates that vary inside one block. For m=2
/// the blocks are q x q, varying the low row and column coordinates. For
/// m=3 (order 8, 2x4 blocks) the low row bit and both low column bits vary.
FieldVec block_projection(const FieldVec& a, const FieldVec& b, int m) {
    if (m == 2) return {a[1], b[1]};
    return {a[2], b[1], b[2]};
}

std::vector<int> canonical_digits(const std::vector<int>& digits) {
    std::vector<int> d(digits);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

/// Canonical direction id of a nonzero vector: the scalar multiple whose
/// first nonzero coordinate is 1, packed base q. Two nonzero vectors are
/// linearly independent iff their direction ids differ.
int direction_id(const Field& f, const FieldVec& v) {
    int lead = 0;
    while (lead < static_cast<int>(v.size()) && v[lead] == 0) ++lead;
    const FieldVec unit = vec_scale(f, f.inv(v[lead]), v);
    int packed = 0;
    for (int x : unit) packed = packed * f.q() + x;
    return packed;
}

/// One admissible digit-form row with its precomputed projections.
struct RowCandidate {
    FieldVec a, b;          // row/column coordinate halves
    FieldVec full;          // a ++ b
    int dir_a, dir_b, dir_sum, dir_diff, dir_blk;
    int packed_a, packed_b, packed_h; // base-q packs (GF(2) fast path)
};

/// All rows whose five projections are nonzero (plus the pandiagonal
/// high-coordinate conditions when requested).
std::vector<RowCandidate> row_pool(const Field& f, int m, bool pandiag) {
    const int q = f.q();
    int total = 1;
    for (int i = 0; i < 2 * m; ++i) total *= q;
    std::vector<RowCandidate> pool;
    for (int packed = 0; packed < total; ++packed) {
        const FieldVec full = coords(packed, q, 2 * m);
        const FieldVec a = row_part(full, m);
        const FieldVec b = col_part(full, m);
        const FieldVec sum = vec_add(f, a, b);
        const FieldVec diff = vec_sub(f, a, b);
        const FieldVec blk = block_projection(a, b, m);
        if (vec_is_zero(a) || vec_is_zero(b) || vec_is_zero(sum) ||
            vec_is_zero(diff) || vec_is_zero(blk)) {
            continue;
        }
        if (pandiag &&
            (f.add(a[0], b[0]) == 0 || f.sub(a[0], b[0]) == 0)) {
            continue;
        }
        RowCandidate rc;
        rc.a = a;
        rc.b = b;
        rc.full = full;
        rc.dir_a = direction_id(f, a);
        rc.dir_b = direction_id(f, b);
        rc.dir_sum = direction_id(f, sum);
        rc.dir_diff = direction_id(f, diff);
        rc.dir_blk = direction_id(f, blk);
        auto pack = [q](const FieldVec& v) {
            int p = 0;
            for (int x : v) p = p * q + x;
            return p;
        };
        rc.packed_a = pack(a);
        rc.packed_b = pack(b);
        rc.packed_h = pack(sum);
        pool.push_back(std::move(rc));
    }
    return pool;
}

/// The weight classes of position pairs for width 6: cancellation of
/// squared-sum excesses is only possible between pairs (p, p') with equal
/// p + p' (equal power of ten). Classes with a single pair can never
/// cancel, so those pairs must stay jointly balanced.
constexpr std::pair<int, int> kWidth6SingletonPairs[] = {
    {0, 1}, {0, 2}, {3, 5}, {4, 5}};

bool is_singleton_class_pair(int p, int p2) {
    for (const auto& [x, y] : kWidth6SingletonPairs) {
        if ((p == x && p2 == y) || (p == y && p2 == x)) return true;
    }
    return false;
}

/// Even number of equal-h pairs inside every width-6 weight class
/// (a lone unbalanced pair has nothing to cancel against).
bool width6_class_parity_ok(const std::vector<int>& h) {
    static const std::vector<std::vector<std::pair<int, int>>> classes = {
        {{0, 3}, {1, 2}},
        {{0, 4}, {1, 3}},
        {{0, 5}, {1, 4}, {2, 3}},
        {{1, 5}, {2, 4}},
        {{2, 5}, {3, 4}},
    };
    for (const auto& cls : classes) {
        int equal = 0;
        for (const auto& [p, p2] : cls) {
            if (h[p] == h[p2]) ++equal;
        }
        if (equal % 2 != 0) return false;
    }
    return true;
}

struct SearchContext {
    const SearchSpec* spec;
    const Field* field;
    int m = 0;
    int k = 0;
    std::vector<int> digits;
    long long exp1 = 0, exp2 = 0;
    std::vector<RowCandidate> pool;
    std::vector<std::vector<int>> stage_orders;
    Clock::time_point deadline;
};

/// Full post-construction gate: everything the caller is promised.
bool conforming(const SearchContext& ctx, const Square& sq) {
    if (!distinct_cover(sq)) return false;
    const bool want_pandiag = ctx.spec->profile == Profile::pandiagonal;
    const VerificationReport report = verify(sq, true, want_pandiag);
    if (!report.s1 || *report.s1 != ctx.exp1) return false;
    if (!report.s2 || *report.s2 != ctx.exp2) return false;
    if (!report.universal) return false;
    if (!report.block_sum || *report.block_sum != ctx.exp1) return false;
    if (want_pandiag && !report.pandiagonal) return false;
    return true;
}

Square build_from_rows(const SearchContext& ctx,
                       const std::vector<const RowCandidate*>& rows,
                       const FieldVec& t) {
    LinearCandidate c;
    c.q = ctx.field->q();
    c.m = ctx.m;
    for (const RowCandidate* rc : rows) c.L.push_back(rc->full);
    c.t = t;
    c.digit_assignment = default_digit_assignment(ctx.digits);
    int order = 1;
    for (int i = 0; i < ctx.m; ++i) order *= ctx.field->q();
    return build_candidate_square(c, order, ctx.digits);
}

/// Per-worker result: the first find, tagged by its first-stage index.
struct WorkerResult {
    bool found = false;
    int stage0_index = 0;
    Square square;
    SearchStats stats;
};

/// Backtracking over the four rows of L for the m=2 orders. The five
/// family projections must be pairwise independent (full balance
/// certificate), so the first invertible completion is already the
/// answer; verification is a re-check, not a filter.
void search_m2(const SearchContext& ctx, int worker, int worker_count,
               WorkerResult& out) {
    const Field& f = *ctx.field;
    std::vector<const RowCandidate*> rows;
    std::vector<FieldVec> matrix;

    auto pair_ok = [&](const RowCandidate& r1, const RowCandidate& r2) {
        return r1.dir_a != r2.dir_a && r1.dir_b != r2.dir_b &&
               r1.dir_sum != r2.dir_sum && r1.dir_diff != r2.dir_diff &&
               r1.dir_blk != r2.dir_blk;
    };

    std::function<bool(int)> descend = [&](int stage) -> bool {
        if (Clock::now() > ctx.deadline) return false;
        if (stage == 4) {
            ++out.stats.leaves;
            if (matrix_rank(f, matrix) != 4) return false;
            const Square sq = build_from_rows(ctx, rows, FieldVec(4, 0));
            ++out.stats.verified;
            if (!conforming(ctx, sq)) return false;
            out.square = sq;
            return true;
        }
        const std::vector<int>& order = ctx.stage_orders[stage];
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            if (stage == 0 && static_cast<int>(pos) % worker_count != worker) {
                continue;
            }
            const RowCandidate& cand = ctx.pool[order[pos]];
            bool ok = true;
            for (const RowCandidate* prev : rows) {
                if (!pair_ok(*prev, cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            ++out.stats.nodes;
            rows.push_back(&cand);
            matrix.push_back(cand.full);
            if (matrix_rank(f, matrix) == stage + 1 && descend(stage + 1)) {
                if (stage == 0) out.stage0_index = static_cast<int>(pos);
                return true;
            }
            rows.pop_back();
            matrix.pop_back();
            if (Clock::now() > ctx.deadline) return false;
        }
        return false;
    };
    out.found = descend(0);
}

/// Backtracking over the six rows of L for order 8 (q = 2).
///
/// Full pairwise balance on all five families is unsatisfiable for an
/// invertible L over GF(2)^6 (with a's, b's, and XORs all distinct the
/// matrix rank is provably 3), so the diagonals keep only positional
/// balance plus the weight-class cancellation conditions, and the exact
/// squared sums on both diagonals are checked numerically over the offset
/// t. Rows and columns retain the full certificate (distinct a's, b's).
void search_m3(const SearchContext& ctx, int worker, int worker_count,
               WorkerResult& out) {
    std::vector<const RowCandidate*> rows;
    std::vector<int> basis; // xor basis of the packed 6-bit rows

    auto rank_insert = [&](int v) -> bool {
        for (int w : basis) v = std::min(v, v ^ w);
        if (v == 0) return false;
        basis.push_back(v);
        return true;
    };

    auto leaf = [&]() -> bool {
        ++out.stats.leaves;
        std::vector<int> h(6);
        for (int p = 0; p < 6; ++p) h[p] = rows[p]->packed_h;
        if (!width6_class_parity_ok(h)) return false;

        // exact squared sums on both diagonals, numerically over t
        const int q = 2, n = 8;
        for (int tmask = 0; tmask < 64; ++tmask) {
            FieldVec t(6);
            for (int p = 0; p < 6; ++p) t[p] = (tmask >> (5 - p)) & 1;
            long long diag2 = 0, anti2 = 0;
            for (int i = 0; i < n; ++i) {
                const FieldVec ci = coords(i, q, 3);
                const FieldVec cj = coords(n - 1 - i, q, 3);
                long long vd = 0, va = 0;
                for (int p = 0; p < 6; ++p) {
                    const FieldVec& r = rows[p]->full;
                    int bd = t[p], ba = t[p];
                    for (int x = 0; x < 3; ++x) {
                        bd ^= r[x] & ci[x];
                        ba ^= r[x] & ci[x];
                        bd ^= r[3 + x] & ci[x];
                        ba ^= r[3 + x] & cj[x];
                    }
                    vd = vd * 10 + ctx.digits[bd];
                    va = va * 10 + ctx.digits[ba];
                }
                diag2 += vd * vd;
                anti2 += va * va;
            }
            if (diag2 != ctx.exp2 || anti2 != ctx.exp2) continue;
            const Square sq = build_from_rows(ctx, rows, t);
            ++out.stats.verified;
            if (conforming(ctx, sq)) {
                out.square = sq;
                return true;
            }
        }
        return false;
    };

    std::function<bool(int)> descend = [&](int stage) -> bool {
        if (Clock::now() > ctx.deadline) return false;
        if (stage == 6) return leaf();
        const std::vector<int>& order = ctx.stage_orders[stage];
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            if (stage == 0 && static_cast<int>(pos) % worker_count != worker) {
                continue;
            }
            const RowCandidate& cand = ctx.pool[order[pos]];
            bool ok = true;
            for (int p = 0; p < stage && ok; ++p) {
                const RowCandidate& prev = *rows[p];
                // full pair balance on rows and columns
                if (prev.packed_a == cand.packed_a ||
                    prev.packed_b == cand.packed_b) {
                    ok = false;
                } else if (is_singleton_class_pair(p, stage) &&
                           prev.packed_h == cand.packed_h) {
                    // a lone weight class cannot cancel its excess
                    ok = false;
                }
            }
            if (!ok) continue;
            ++out.stats.nodes;
            const std::size_t basis_size = basis.size();
            int packed = 0;
            for (int x : cand.full) packed = packed * 2 + x;
            if (!rank_insert(packed)) continue;
            rows.push_back(&cand);
            if (descend(stage + 1)) {
                if (stage == 0) out.stage0_index = static_cast<int>(pos);
                return true;
            }
            rows.pop_back();
            basis.resize(basis_size);
            if (Clock::now() > ctx.deadline) return false;
        }
        return false;
    };
    out.found = descend(0);
}

} // namespace

std::vector<int> default_digit_assignment(const std::vector<int>& digits) {
    return canonical_digits(digits);
}

Square build_candidate_square(const LinearCandidate& c, int order,
                              const std::vector<int>& digits) {
    const Field f(c.q);
    const int k = 2 * c.m;
    if (matrix_rank(f, c.L) != k) {
        throw SingularMatrix("coefficient matrix is singular over GF(" +
                             std::to_string(c.q) + ")");
    }
    Square sq;
    sq.order = order;
    sq.width = k;
    sq.alphabet = canonical_digits(digits);
    sq.cells.resize(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i) {
        const FieldVec ci = coords(i, c.q, c.m);
        for (int j = 0; j < order; ++j) {
            const FieldVec cj = coords(j, c.q, c.m);
            FieldVec u(ci);
            u.insert(u.end(), cj.begin(), cj.end());
            std::string cell(k, '0');
            for (int p = 0; p < k; ++p) {
                const int e = f.add(vec_dot(f, c.L[p], u), c.t[p]);
                cell[p] = static_cast<char>('0' + c.digit_assignment[e]);
            }
            sq.at(i, j) = cell;
        }
    }
    return sq;
}

PruneResult prune_conditions(const LinearCandidate& c, Profile profile) {
    const Field f(c.q);
    const int m = c.m;
    struct Family {
        const char* name;
        std::vector<FieldVec> projections;
    };
    std::vector<Family> families{{"row", {}},
                                 {"column", {}},
                                 {"main_diagonal", {}},
                                 {"anti_diagonal", {}},
                                 {"block", {}}};
    for (const FieldVec& row : c.L) {
        const FieldVec a = row_part(row, m);
        const FieldVec b = col_part(row, m);
        families[0].projections.push_back(b);
        families[1].projections.push_back(a);
        families[2].projections.push_back(vec_add(f, a, b));
        families[3].projections.push_back(vec_sub(f, a, b));
        families[4].projections.push_back(block_projection(a, b, m));
    }
    for (const Family& fam : families) {
        for (std::size_t p = 0; p < fam.projections.size(); ++p) {
            if (vec_is_zero(fam.projections[p])) {
                return {false, std::string(fam.name) + " projection of form " +
                                   std::to_string(p) + " is zero"};
            }
            for (std::size_t p2 = p + 1; p2 < fam.projections.size(); ++p2) {
                if (!pairwise_independent(f, fam.projections[p],
                                          fam.projections[p2])) {
                    return {false, std::string(fam.name) +
                                       " projections of forms " +
                                       std::to_string(p) + " and " +
                                       std::to_string(p2) +
                                       " are dependent"};
                }
            }
        }
    }
    if (profile == Profile::pandiagonal) {
        for (std::size_t p = 0; p < c.L.size(); ++p) {
            const FieldVec a = row_part(c.L[p], m);
            const FieldVec b = col_part(c.L[p], m);
            if (f.add(a[0], b[0]) == 0 || f.sub(a[0], b[0]) == 0) {
                return {false, "high-coordinate sum/difference of form " +
                                   std::to_string(p) +
                                   " is zero (broken diagonals)"};
            }
        }
    }
    return {true, ""};
}

Square assign_digits(const Square& sq, const std::vector<int>& digits) {
    const auto target = canonical_digits(digits);
    if (target.size() != sq.alphabet.size()) {
        throw AlphabetMismatch("alphabet sizes differ: " +
                               std::to_string(sq.alphabet.size()) + " vs " +
                               std::to_string(target.size()));
    }
    std::array<char, 10> map{};
    for (std::size_t i = 0; i < target.size(); ++i) {
        map[sq.alphabet[i]] = static_cast<char>('0' + target[i]);
    }
    Square out;
    out.order = sq.order;
    out.width = sq.width;
    out.alphabet = target;
    out.cells.reserve(sq.cells.size());
    for (const std::string& cell : sq.cells) {
        std::string mapped(cell.size(), '0');
        for (std::size_t p = 0; p < cell.size(); ++p) {
            mapped[p] = map[cell[p] - '0'];
        }
        out.cells.push_back(std::move(mapped));
    }
    return out;
}

Square search_generate(const SearchSpec& spec, SearchStats* stats_out) {
    const auto params = order_params(spec.order);
    const auto digits = canonical_digits(spec.digits);
    if (!params || static_cast<int>(digits.size()) !=
                       (spec.order == 8    ? 2
                        : spec.order == 9  ? 3
                        : spec.order == 16 ? 4
                                           : 5)) {
        throw UnsupportedOrder(
            "no capacity pairing for order " + std::to_string(spec.order) +
            " with " + std::to_string(digits.size()) + " digits");
    }
    for (int d : digits) {
        if (d < 0 || d > 9) throw UnsupportedOrder("digit out of range");
    }
    if (spec.profile == Profile::pandiagonal && spec.order != 25) {
        throw UnsupportedOrder("pandiagonal profile exists only for order 25");
    }
    if (spec.worker_count < 1) {
        throw UnsupportedOrder("worker_count must be at least 1");
    }

    if (spec.time_budget_seconds <= 0) {
        SearchStats zero;
        if (stats_out) *stats_out = zero;
        throw SearchExhausted("search exhausted before exploring: "
                              "time budget is not positive",
                              zero);
    }

    const Field field(params->q);
    SearchContext ctx;
    ctx.spec = &spec;
    ctx.field = &field;
    ctx.m = params->m;
    ctx.k = 2 * params->m;
    ctx.digits = digits;
    ctx.exp1 = expected_s1(spec.order, digits, ctx.k);
    ctx.exp2 = expected_s2(spec.order, digits, ctx.k);
    ctx.pool = row_pool(field, params->m,
                        spec.profile == Profile::pandiagonal);
    for (int stage = 0; stage < ctx.k; ++stage) {
        ctx.stage_orders.push_back(
            seeded_permutation(ctx.pool.size(), spec.seed, stage));
    }
    const auto start = Clock::now();
    ctx.deadline =
        start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(spec.time_budget_seconds));

    const int W = spec.worker_count;
    std::vector<WorkerResult> results(W);
    auto run_worker = [&](int w) {
        if (params->m == 2) {
            search_m2(ctx, w, W, results[w]);
        } else {
            search_m3(ctx, w, W, results[w]);
        }
    };
    if (W == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(W);
        for (int w = 0; w < W; ++w) threads.emplace_back(run_worker, w);
        for (std::thread& th : threads) th.join();
    }

    SearchStats total;
    const WorkerResult* best = nullptr;
    for (const WorkerResult& r : results) {
        total.nodes += r.stats.nodes;
        total.leaves += r.stats.leaves;
        total.verified += r.stats.verified;
        if (r.found && (!best || r.stage0_index < best->stage0_index)) {
            best = &r;
        }
    }
    total.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (stats_out) *stats_out = total;
    if (!best) {
        throw SearchExhausted(
            "search exhausted: nodes=" + std::to_string(total.nodes) +
                " leaves=" + std::to_string(total.leaves) +
                " verified=" + std::to_string(total.verified) + " elapsed=" +
                std::to_string(total.elapsed_seconds) + "s",
            total);
    }
    return best->square;
}

} // namespace bimagic
