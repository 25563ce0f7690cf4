#include "bipcm/colouring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace bipcm {

Colouring::Colouring(int n_left, int n_right, int k)
    : n_left_(n_left), n_right_(n_right), k_(k),
      entries_(static_cast<size_t>(n_left) * n_right, 0) {
    if (n_left < 1 || n_right < 1 || k < 1)
        throw std::invalid_argument("colouring dimensions and colour count must be >= 1");
}

Colouring::Colouring(int n_left, int n_right, int k, std::vector<int> entries)
    : n_left_(n_left), n_right_(n_right), k_(k), entries_(std::move(entries)) {
    if (n_left < 1 || n_right < 1 || k < 1)
        throw std::invalid_argument("colouring dimensions and colour count must be >= 1");
    if (entries_.size() != static_cast<size_t>(n_left) * n_right)
        throw std::invalid_argument("entry matrix size does not match dimensions");
    for (int v : entries_)
        if (v < 0 || v > k_) throw std::invalid_argument("entry out of range 0..k");
}

void Colouring::set(int x, int y, int colour) {
    if (x < 0 || x >= n_left_ || y < 0 || y >= n_right_)
        throw std::out_of_range("vertex index out of range");
    if (colour < 0 || colour > k_)
        throw std::invalid_argument("entry out of range 0..k");
    entries_[static_cast<size_t>(x) * n_right_ + y] = colour;
}

bool Colouring::complete() const {
    return std::find(entries_.begin(), entries_.end(), 0) == entries_.end();
}

int Colouring::absent_count() const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), 0));
}

ParseError::ParseError(int line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}

namespace {

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

// Next content line, skipping comments and blank lines. Returns false at EOF.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (blank(line)) continue;
        return true;
    }
    return false;
}

}  // namespace

Colouring parse_colouring(std::istream& in) {
    std::string line;
    int line_no = 0;

    if (!next_line(in, line, line_no))
        throw ParseError(line_no + 1, "malformed header: empty input");
    auto head = tokens(line);
    if (head.size() != 4 || head[0] != "bicol")
        throw ParseError(line_no, "malformed header: expected 'bicol <N> <M> <k>'");
    const int n = parse_int(head[1], line_no, "header field N");
    const int m = parse_int(head[2], line_no, "header field M");
    const int k = parse_int(head[3], line_no, "header field k");
    if (n < 1 || m < 1 || k < 1)
        throw ParseError(line_no, "malformed header: N, M and k must be >= 1");

    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(n) * m);
    for (int row = 0; row < n; ++row) {
        if (!next_line(in, line, line_no))
            throw ParseError(line_no + 1, "wrong row count: expected " + std::to_string(n) +
                                              " rows, got " + std::to_string(row));
        auto toks = tokens(line);
        if (static_cast<int>(toks.size()) != m)
            throw ParseError(line_no, "wrong row length: expected " + std::to_string(m) +
                                          " entries, got " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            const int v = parse_int(t, line_no, "entry");
            if (v < 0 || v > k)
                throw ParseError(line_no, "entry out of range: " + std::to_string(v) +
                                              " not in 0.." + std::to_string(k));
            entries.push_back(v);
        }
    }
    if (next_line(in, line, line_no))
        throw ParseError(line_no, "wrong row count: trailing content after " +
                                      std::to_string(n) + " rows");
    return Colouring(n, m, k, std::move(entries));
}

Colouring parse_colouring(const std::string& text) {
    std::istringstream in(text);
    return parse_colouring(in);
}

std::string emit_colouring(const Colouring& col) {
    std::string out = "bicol " + std::to_string(col.n_left()) + ' ' +
                      std::to_string(col.n_right()) + ' ' + std::to_string(col.colours()) + '\n';
    for (int x = 0; x < col.n_left(); ++x) {
        for (int y = 0; y < col.n_right(); ++y) {
            if (y > 0) out += ' ';
            out += std::to_string(col.at(x, y));
        }
        out += '\n';
    }
    return out;
}

Colouring read_colouring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_colouring(in);
}

void write_colouring_file(const std::string& path, const Colouring& col,
                          const std::vector<std::string>& comment_lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    for (const auto& c : comment_lines) out << "# " << c << '\n';
    out << emit_colouring(col);
}

}  // namespace bipcm
