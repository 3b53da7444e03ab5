#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bimagic/generator.hpp"
#include "bimagic/grid_io.hpp"
#include "bimagic/render.hpp"
#include "bimagic/verifier.hpp"

namespace {

using namespace bimagic;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSearchExhausted = 3;

std::vector<int> parse_digits_flag(const std::string& text) {
    std::vector<int> digits;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 1 || item[0] < '0' || item[0] > '9') {
            throw ParseError("--digits wants a comma-separated digit list");
        }
        digits.push_back(item[0] - '0');
    }
    if (digits.empty()) {
        throw ParseError("--digits wants a comma-separated digit list");
    }
    return digits;
}

Square read_square(const std::string& path) {
    if (path == "-") return parse_grid(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_grid(in);
}

/// Width from the capacity rule q^k = n^2.
int derive_width(int order, int q) {
    long long capacity = 1;
    const long long target = static_cast<long long>(order) * order;
    for (int k = 1; k <= 12; ++k) {
        capacity *= q;
        if (capacity == target) return k;
        if (capacity > target) break;
    }
    throw CapacityMismatch("no width k with q^k = n^2 for order " +
                           std::to_string(order) + " and " +
                           std::to_string(q) + " digits");
}

int cmd_generate(const SearchSpec& spec, const std::string& format) {
    SearchStats stats;
    const Square sq = search_generate(spec, &stats);
    if (format == "json") {
        std::cout << square_to_json(sq);
    } else {
        std::cout << serialize_grid(sq);
    }
    std::cerr << "search: nodes=" << stats.nodes << " leaves=" << stats.leaves
              << " verified=" << stats.verified
              << " elapsed=" << stats.elapsed_seconds << "s\n";
    return kExitOk;
}

int cmd_verify(const std::string& path, bool as_json, bool blocks,
               bool pandiagonal) {
    const Square sq = read_square(path);
    const VerificationReport report = verify(sq, blocks, pandiagonal);
    std::cout << (as_json ? report_to_json(report, sq)
                          : report_to_text(report, sq));
    bool pass = report.s1.has_value() && report.s2.has_value() &&
                report.universal;
    if (blocks) pass = pass && report.block_sum.has_value();
    if (pandiagonal) pass = pass && report.pandiagonal;
    return pass ? kExitOk : kExitPropertyFailure;
}

int cmd_transform(const std::string& op, const std::string& path) {
    const Square sq = read_square(path);
    try {
        const Square out =
            op == "rotate180" ? apply_rotate180(sq) : apply_mirror(sq);
        std::cout << serialize_grid(out);
        return kExitOk;
    } catch (const NonRotatableDigit& e) {
        std::cerr << "transform failed: " << e.what() << "\n";
        return kExitPropertyFailure;
    } catch (const NonMirrorableDigit& e) {
        std::cerr << "transform failed: " << e.what() << "\n";
        return kExitPropertyFailure;
    }
}

int cmd_expected_sums(int order, const std::vector<int>& digits) {
    std::vector<int> d(digits);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    const int k = derive_width(order, static_cast<int>(d.size()));
    std::cout << "order " << order << " width " << k << " digits ";
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::cout << (i ? "," : "") << d[i];
    }
    std::cout << "\nS1 = " << expected_s1(order, d, k)
              << "\nS2 = " << expected_s2(order, d, k)
              << "\nblock = " << expected_s1(order, d, k) << "\n";
    return kExitOk;
}

int cmd_render(const std::string& style, const std::string& path) {
    const Square sq = read_square(path);
    std::cout << render_square(sq, style == "plain" ? RenderStyle::plain
                                                    : RenderStyle::sevenseg);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal bimagic squares: generate, verify, transform, render"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "search for a universal bimagic square");
    int gen_order = 0;
    std::string gen_digits, gen_profile = "standard", gen_format = "grid";
    std::string gen_seed;
    int gen_workers = 1;
    double gen_budget = 60.0;
    gen->add_option("--order", gen_order, "square order")->required();
    gen->add_option("--digits", gen_digits, "comma-separated digit alphabet")
        ->required();
    gen->add_option("--seed", gen_seed, "search seed (default: BIMAGIC_SEED or 0)");
    gen->add_option("--profile", gen_profile, "standard|pandiagonal")
        ->check(CLI::IsMember({"standard", "pandiagonal"}));
    gen->add_option("--format", gen_format, "grid|json")
        ->check(CLI::IsMember({"grid", "json"}));
    gen->add_option("--workers", gen_workers, "parallel search workers");
    gen->add_option("--budget", gen_budget, "time budget in seconds");

    auto* ver = app.add_subcommand("verify", "verify a grid file");
    std::string ver_path;
    bool ver_json = false, ver_blocks = false, ver_pandiag = false;
    ver->add_option("path", ver_path, "grid file, or - for stdin")->required();
    ver->add_flag("--json", ver_json, "JSON report");
    ver->add_flag("--blocks", ver_blocks, "also check block sums");
    ver->add_flag("--pandiagonal", ver_pandiag, "also check broken diagonals");

    auto* tra = app.add_subcommand("transform", "rotate or mirror a grid file");
    std::string tra_op, tra_path;
    tra->add_option("--op", tra_op, "rotate180|mirror")
        ->required()
        ->check(CLI::IsMember({"rotate180", "mirror"}));
    tra->add_option("path", tra_path, "grid file, or - for stdin")->required();

    auto* exp = app.add_subcommand("expected-sums",
                                   "closed-form S1/S2 for a configuration");
    int exp_order = 0;
    std::string exp_digits;
    exp->add_option("--order", exp_order, "square order")->required();
    exp->add_option("--digits", exp_digits, "comma-separated digit alphabet")
        ->required();

    auto* ren = app.add_subcommand("render", "ASCII art for a grid file");
    std::string ren_style = "sevenseg", ren_path;
    ren->add_option("--style", ren_style, "sevenseg|plain")
        ->check(CLI::IsMember({"sevenseg", "plain"}));
    ren->add_option("path", ren_path, "grid file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the diagnostic
        return kExitBadInput;
    }

    try {
        if (gen->parsed()) {
            SearchSpec spec;
            spec.order = gen_order;
            spec.digits = parse_digits_flag(gen_digits);
            spec.profile = gen_profile == "pandiagonal" ? Profile::pandiagonal
                                                        : Profile::standard;
            if (!gen_seed.empty()) {
                spec.seed = std::stoull(gen_seed);
            } else if (const char* env = std::getenv("BIMAGIC_SEED")) {
                spec.seed = std::stoull(env);
            }
            spec.worker_count = gen_workers;
            spec.time_budget_seconds = gen_budget;
            return cmd_generate(spec, gen_format);
        }
        if (ver->parsed()) {
            return cmd_verify(ver_path, ver_json, ver_blocks, ver_pandiag);
        }
        if (tra->parsed()) return cmd_transform(tra_op, tra_path);
        if (exp->parsed()) {
            return cmd_expected_sums(exp_order, parse_digits_flag(exp_digits));
        }
        if (ren->parsed()) return cmd_render(ren_style, ren_path);
    } catch (const SearchExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitSearchExhausted;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const CapacityMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const UnsupportedOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
