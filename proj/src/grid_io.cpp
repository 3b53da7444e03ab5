#include "bimagic/grid_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace bimagic {

namespace {

using Json = nlohmann::ordered_json;

std::vector<int> parse_digit_list(const std::string& text) {
    std::vector<int> digits;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 1 || item[0] < '0' || item[0] > '9') {
            throw ParseError("bad digit '" + item + "' in header");
        }
        digits.push_back(item[0] - '0');
    }
    if (digits.empty()) throw ParseError("empty digit list in header");
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    return digits;
}

long long parse_header_int(const std::string& header, const std::string& key) {
    const std::string tag = key + "=";
    const auto pos = header.find(tag);
    if (pos == std::string::npos) {
        throw ParseError("header is missing " + key + "=");
    }
    std::size_t end = pos + tag.size();
    while (end < header.size() && header[end] != ' ') ++end;
    try {
        return std::stoll(header.substr(pos + tag.size(), end - pos - tag.size()));
    } catch (const std::exception&) {
        throw ParseError("bad " + key + "= value in header");
    }
}

} // namespace

Square parse_grid(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("# ", 0) != 0) {
        throw ParseError("missing '# order=<n> width=<k> digits=...' header");
    }
    Square sq;
    sq.order = static_cast<int>(parse_header_int(header, "order"));
    sq.width = static_cast<int>(parse_header_int(header, "width"));
    if (sq.order < 1 || sq.width < 1) {
        throw ParseError("order and width must be positive");
    }
    const std::string tag = "digits=";
    const auto pos = header.find(tag);
    if (pos == std::string::npos) throw ParseError("header is missing digits=");
    std::size_t end = pos + tag.size();
    while (end < header.size() && header[end] != ' ') ++end;
    sq.alphabet =
        parse_digit_list(header.substr(pos + tag.size(), end - pos - tag.size()));

    sq.cells.reserve(static_cast<std::size_t>(sq.order) * sq.order);
    std::string line;
    for (int i = 0; i < sq.order; ++i) {
        if (!std::getline(in, line)) {
            throw ParseError("expected " + std::to_string(sq.order) +
                             " grid rows, got " + std::to_string(i));
        }
        std::stringstream row(line);
        std::string cell;
        int count = 0;
        while (row >> cell) {
            if (static_cast<int>(cell.size()) != sq.width) {
                throw ParseError("cell '" + cell + "' in row " +
                                 std::to_string(i) + " is not width " +
                                 std::to_string(sq.width));
            }
            for (char c : cell) {
                if (c < '0' || c > '9' ||
                    !std::binary_search(sq.alphabet.begin(), sq.alphabet.end(),
                                        c - '0')) {
                    throw ParseError("cell '" + cell + "' in row " +
                                     std::to_string(i) +
                                     " uses a digit outside the alphabet");
                }
            }
            sq.cells.push_back(cell);
            ++count;
        }
        if (count != sq.order) {
            throw ParseError("row " + std::to_string(i) + " has " +
                             std::to_string(count) + " cells, expected " +
                             std::to_string(sq.order));
        }
    }
    return sq;
}

Square parse_grid(const std::string& text) {
    std::istringstream in(text);
    return parse_grid(in);
}

std::string serialize_grid(const Square& sq) {
    std::ostringstream out;
    out << "# order=" << sq.order << " width=" << sq.width << " digits=";
    for (std::size_t i = 0; i < sq.alphabet.size(); ++i) {
        if (i) out << ',';
        out << sq.alphabet[i];
    }
    out << '\n';
    for (int i = 0; i < sq.order; ++i) {
        for (int j = 0; j < sq.order; ++j) {
            if (j) out << ' ';
            out << sq.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string square_to_json(const Square& sq) {
    Json j;
    j["order"] = sq.order;
    j["width"] = sq.width;
    j["digits"] = sq.alphabet;
    Json rows = Json::array();
    for (int i = 0; i < sq.order; ++i) {
        Json row = Json::array();
        for (int jcol = 0; jcol < sq.order; ++jcol) row.push_back(sq.at(i, jcol));
        rows.push_back(std::move(row));
    }
    j["cells"] = std::move(rows);
    return j.dump(2) + "\n";
}

namespace {

Json sum_or_null(const std::optional<long long>& v) {
    if (v) return *v;
    return nullptr;
}

} // namespace

std::string report_to_json(const VerificationReport& report, const Square& sq) {
    Json j;
    j["order"] = sq.order;
    j["width"] = sq.width;
    j["digits"] = sq.alphabet;
    j["s1"] = sum_or_null(report.s1);
    j["s2"] = sum_or_null(report.s2);
    j["block_sum"] = sum_or_null(report.block_sum);
    j["pandiagonal"] = report.pandiagonal;
    j["pandiagonal_bimagic"] = report.pandiagonal_bimagic;
    j["universal"] = report.universal;
    Json per_family = Json::object();
    for (const auto& [kind, pass] : report.per_family_pass) {
        per_family[line_kind_name(kind)] = pass;
    }
    j["per_family_pass"] = std::move(per_family);
    Json failures = Json::array();
    for (const Failure& f : report.failures) {
        Json entry;
        entry["family"] = line_kind_name(f.family);
        entry["index"] = f.index;
        entry["observed"] = f.observed;
        entry["power"] = f.power;
        failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report, const Square& sq) {
    std::ostringstream out;
    out << "order " << sq.order << ", width " << sq.width << ", digits ";
    for (std::size_t i = 0; i < sq.alphabet.size(); ++i) {
        if (i) out << ',';
        out << sq.alphabet[i];
    }
    out << '\n';
    out << "s1: " << (report.s1 ? std::to_string(*report.s1) : "none") << '\n';
    out << "s2: " << (report.s2 ? std::to_string(*report.s2) : "none") << '\n';
    if (report.blocks_checked) {
        out << "block_sum: "
            << (report.block_sum ? std::to_string(*report.block_sum) : "none")
            << '\n';
    }
    if (report.pandiagonal_checked) {
        out << "pandiagonal: " << (report.pandiagonal ? "yes" : "no")
            << " (bimagic on broken diagonals: "
            << (report.pandiagonal_bimagic ? "yes" : "no") << ")\n";
    }
    out << "universal: " << (report.universal ? "yes" : "no") << '\n';
    for (const auto& [kind, pass] : report.per_family_pass) {
        out << "  " << line_kind_name(kind) << ": "
            << (pass ? "pass" : "FAIL") << '\n';
    }
    for (const Failure& f : report.failures) {
        out << "  " << line_kind_name(f.family) << " " << f.index
            << (f.power == 1 ? " sum " : " squared sum ") << f.observed
            << " deviates\n";
    }
    return out.str();
}

} // namespace bimagic
