#include "cmaps/map_io.hpp"

#include <fstream>
#include <sstream>

namespace cmaps {

std::string format_cycles(const Permutation& p, bool include_fixed_points) {
    std::ostringstream out;
    bool any = false;
    for (const auto& c : p.cycles()) {
        if (c.size() == 1 && !include_fixed_points) continue;
        out << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out << ' ';
            out << c[i];
        }
        out << ')';
        any = true;
    }
    if (!any) out << "()";
    return out.str();
}

Permutation parse_cycles(const std::string& text, std::size_t m) {
    std::vector<std::vector<uint32_t>> cycles;
    std::vector<uint32_t> cur;
    bool in_cycle = false;
    std::string tok;
    auto flush_tok = [&] {
        if (!tok.empty()) {
            if (!in_cycle) throw MapError(MapErrorCode::BAD_INPUT, "number outside cycle");
            cur.push_back(static_cast<uint32_t>(std::stoul(tok)));
            tok.clear();
        }
    };
    for (char ch : text) {
        if (ch == '(') {
            if (in_cycle) throw MapError(MapErrorCode::BAD_INPUT, "nested '(' in cycle list");
            in_cycle = true;
        } else if (ch == ')') {
            flush_tok();
            if (!in_cycle) throw MapError(MapErrorCode::BAD_INPUT, "unmatched ')' in cycle list");
            if (!cur.empty()) cycles.push_back(std::move(cur));
            cur.clear();
            in_cycle = false;
        } else if (ch >= '0' && ch <= '9') {
            tok += ch;
        } else if (ch == ' ' || ch == ',' || ch == '\t') {
            flush_tok();
        } else {
            throw MapError(MapErrorCode::BAD_INPUT,
                           std::string("unexpected character '") + ch + "' in cycle list");
        }
    }
    if (in_cycle) throw MapError(MapErrorCode::BAD_INPUT, "unterminated cycle");
    return Permutation::from_cycles(cycles, m);
}

std::string write_map_v1(const Map& m) {
    std::ostringstream out;
    out << "map v1\n";
    out << "flags=" << m.flag_count() << "\n";
    out << "alpha: " << format_cycles(m.flags().alpha) << "\n";
    out << "beta: " << format_cycles(m.flags().beta) << "\n";
    out << "P: " << format_cycles(m.rotation()) << "\n";
    return out.str();
}

static std::string expect_line(std::istream& in, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        // Skip blank lines.
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return line;
        }
    }
    throw MapError(MapErrorCode::BAD_INPUT,
                   "unexpected end of input after line " + std::to_string(lineno));
}

Map read_map_v1(std::istream& in) {
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> MapError {
        return MapError(MapErrorCode::BAD_INPUT, "line " + std::to_string(lineno) + ": " + msg);
    };
    std::string line = expect_line(in, lineno);
    if (line != "map v1") throw fail("expected header 'map v1', got '" + line + "'");
    line = expect_line(in, lineno);
    if (line.rfind("flags=", 0) != 0) throw fail("expected 'flags=<N>'");
    std::size_t nflags = std::stoul(line.substr(6));
    auto read_perm = [&](const std::string& key) {
        std::string l = expect_line(in, lineno);
        std::string prefix = key + ":";
        if (l.rfind(prefix, 0) != 0) throw fail("expected '" + key + ": ...'");
        try {
            return parse_cycles(l.substr(prefix.size()), nflags);
        } catch (const MapError& e) {
            throw fail(std::string(e.what()));
        } catch (const std::exception& e) {
            throw fail(std::string(e.what()));
        }
    };
    FlagSet fs;
    fs.size = nflags;
    fs.alpha = read_perm("alpha");
    fs.beta = read_perm("beta");
    Permutation rot = read_perm("P");
    return Map::validate(std::move(fs), std::move(rot));
}

Map read_map_v1_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MapError(MapErrorCode::BAD_INPUT, "cannot open " + path);
    return read_map_v1(in);
}

}  // namespace cmaps
