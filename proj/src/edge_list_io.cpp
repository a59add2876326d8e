#include "monochrome/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "monochrome/errors.hpp"

namespace monochrome {

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::int64_t> parse_ints(const std::string& line, std::size_t line_no) {
    std::istringstream ss(line);
    std::vector<std::int64_t> values;
    std::string token;
    while (ss >> token) {
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": not an integer: '" + token + "'");
        }
        values.push_back(value);
    }
    return values;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_content_line(in, line, line_no)) fail(ErrorCode::ParseError, "missing header line 'n m'");
    auto header = parse_ints(line, line_no);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": header must be 'n m'");
    }
    const auto n = static_cast<std::size_t>(header[0]);
    const auto m = static_cast<std::size_t>(header[1]);
    std::vector<VertexPair> pairs;
    pairs.reserve(m);
    while (next_content_line(in, line, line_no)) {
        auto values = parse_ints(line, line_no);
        if (values.size() != 2) {
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
        }
        pairs.emplace_back(values[0], values[1]);
    }
    if (pairs.size() != m) {
        fail(ErrorCode::ParseError,
             "header declares " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
    }
    return Graph::from_edge_list(n, pairs);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot open edge list '" + path + "'");
    return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    write_edge_list(out, g);
}

}  // namespace monochrome
