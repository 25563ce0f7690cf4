#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace bipcm {

enum class Side { X, Y };

// Position of a vertex inside one side of the bipartition.
struct VertexRef {
    Side side = Side::X;
    int index = 0;

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

// A k-coloured bipartite graph on sides X (rows) and Y (columns).
// Entry 0 marks an absent edge; entries 1..k are colours. A colouring is
// "complete" when no entry is 0.
//
// Values are treated as immutable once shared between threads; builders
// mutate through set() before publishing.
class Colouring {
public:
    Colouring(int n_left, int n_right, int k);
    Colouring(int n_left, int n_right, int k, std::vector<int> entries);

    int n_left() const { return n_left_; }
    int n_right() const { return n_right_; }
    int colours() const { return k_; }

    int at(int x, int y) const { return entries_[static_cast<size_t>(x) * n_right_ + y]; }
    void set(int x, int y, int colour);

    bool complete() const;
    int absent_count() const;

    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    int n_left_;
    int n_right_;
    int k_;
    std::vector<int> entries_;  // row-major, X indexes rows
};

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& message);
    int line;  // 1-based; 0 when no line applies (e.g. unreadable file)
};

// Reads the canonical `bicol` text format. Lines whose first character is
// '#' are comments; whitespace-only lines are ignored. Header line:
// "bicol <N> <M> <k>", then exactly N rows of M integers in [0, k].
Colouring parse_colouring(std::istream& in);
Colouring parse_colouring(const std::string& text);

// Canonical emitter: deterministic bytes, single spaces, '\n' newlines,
// no comments, no trailing blank lines. parse(emit(c)) == c.
std::string emit_colouring(const Colouring& col);

Colouring read_colouring_file(const std::string& path);
void write_colouring_file(const std::string& path, const Colouring& col,
                          const std::vector<std::string>& comment_lines = {});

}  // namespace bipcm
