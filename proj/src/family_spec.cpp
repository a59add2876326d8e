#include "monochrome/family_spec.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "monochrome/errors.hpp"

namespace monochrome {

namespace {

constexpr std::array kFamilyNames{"complete", "bipartite", "star", "path",  "cycle", "hypercube",
                                  "er",       "regular",   "gw",   "gadget", "inhom"};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

template <class T>
T parse_number(const std::string& token, const std::string& whole) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(ErrorCode::ParseError, "bad number '" + token + "' in family spec '" + whole + "'");
    }
    return value;
}

std::uint64_t parse_seed(const std::string& token, const std::string& whole) {
    const std::string digits = token.rfind("seed", 0) == 0 ? token.substr(4) : token;
    return parse_number<std::uint64_t>(digits, whole);
}

}  // namespace

bool looks_like_family_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    const std::string name = text.substr(0, colon);
    for (const char* known : kFamilyNames)
        if (name == known) return true;
    return false;
}

std::vector<double> load_kernel_csv(const std::string& path, std::size_t* n) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open kernel file '" + path + "'");
    std::vector<double> values;
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split(line, ',');
        if (rows == 0) *n = cells.size();
        if (cells.size() != *n) fail(ErrorCode::ParseError, "kernel row " + std::to_string(rows + 1) + " has wrong width");
        for (const auto& cell : cells) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0) fail(ErrorCode::ParseError, "bad kernel value '" + cell + "'");
            values.push_back(v);
        }
        ++rows;
    }
    if (rows == 0 || rows != *n) fail(ErrorCode::ParseError, "kernel grid in '" + path + "' is not square");
    return values;
}

FamilySpec parse_family_spec(const std::string& text, std::optional<std::uint64_t> default_seed) {
    const auto parts = split(text, ':');
    if (parts.empty() || !looks_like_family_spec(text)) {
        fail(ErrorCode::ParseError, "unknown family spec '" + text + "'");
    }
    const std::string& name = parts[0];
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
            fail(ErrorCode::ParseError, "family '" + name + "' takes " + std::to_string(lo) +
                                            (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments: '" + text + "'");
        }
    };
    auto size_at = [&](std::size_t i) { return parse_number<std::size_t>(parts[i], text); };
    auto seed_at = [&](std::size_t i) -> std::uint64_t {
        if (i < parts.size()) return parse_seed(parts[i], text);
        if (default_seed) return *default_seed;
        fail(ErrorCode::InvalidArgument, "random family '" + text + "' needs a seed (append :seedN or pass --seed)");
    };

    FamilySpec spec;
    if (name == "complete") {
        need(1, 1);
        spec = family::Complete{size_at(1)};
    } else if (name == "bipartite") {
        need(2, 2);
        spec = family::CompleteBipartite{size_at(1), size_at(2)};
    } else if (name == "star") {
        need(1, 1);
        spec = family::Star{size_at(1)};
    } else if (name == "path") {
        need(1, 1);
        spec = family::Path{size_at(1)};
    } else if (name == "cycle") {
        need(1, 1);
        spec = family::Cycle{size_at(1)};
    } else if (name == "hypercube") {
        need(1, 1);
        spec = family::Hypercube{size_at(1)};
    } else if (name == "er") {
        need(2, 3);
        spec = family::ErdosRenyi{size_at(1), parse_number<double>(parts[2], text), seed_at(3)};
    } else if (name == "regular") {
        need(2, 3);
        spec = family::RandomRegular{size_at(1), size_at(2), seed_at(3)};
    } else if (name == "gadget") {
        need(3, 3);
        spec = family::PathCycleGadget{size_at(1), size_at(2), size_at(3)};
    } else if (name == "gw") {
        need(2, 3);
        std::vector<double> pmf;
        for (const auto& token : split(parts[2], ',')) pmf.push_back(parse_number<double>(token, text));
        spec = family::GaltonWatson{std::move(pmf), size_at(1), seed_at(3)};
    } else {
        need(1, 2);
        std::size_t n = 0;
        auto kernel = load_kernel_csv(parts[1], &n);
        spec = family::Inhomogeneous{n, std::move(kernel), seed_at(2)};
    }
    validate(spec);
    return spec;
}

}  // namespace monochrome
