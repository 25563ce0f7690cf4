#include "bipcm/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace bipcm {

namespace {

// Hopcroft-Karp over bitset adjacency on a component-local index space.
// All scans run in ascending index order, so the final matching (and the
// Koenig cover derived from it) is a pure function of the subgraph.
struct HkSolver {
    int nx = 0, ny = 0, words = 0;
    std::vector<std::uint64_t> adj;  // nx rows of `words` words
    std::vector<int> match_x, match_y, dist;

    static constexpr int kInf = std::numeric_limits<int>::max();

    void init(int nx_, int ny_) {
        nx = nx_;
        ny = ny_;
        words = (ny + 63) / 64;
        adj.assign(static_cast<size_t>(nx) * words, 0);
        match_x.assign(nx, -1);
        match_y.assign(ny, -1);
        dist.assign(nx, 0);
    }

    void add_edge(int x, int y) { adj[static_cast<size_t>(x) * words + y / 64] |= 1ull << (y % 64); }

    template <typename Fn>
    void for_neighbours(int x, Fn&& fn) const {
        const std::uint64_t* row = &adj[static_cast<size_t>(x) * words];
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                fn(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    bool bfs() {
        std::vector<int> queue;
        queue.reserve(nx);
        for (int x = 0; x < nx; ++x) {
            if (match_x[x] < 0) {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = kInf;
            }
        }
        bool reachable_free_y = false;
        for (size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            for_neighbours(x, [&](int y) {
                const int x2 = match_y[y];
                if (x2 < 0) {
                    reachable_free_y = true;
                } else if (dist[x2] == kInf) {
                    dist[x2] = dist[x] + 1;
                    queue.push_back(x2);
                }
            });
        }
        return reachable_free_y;
    }

    bool try_augment(int x) {
        const std::uint64_t* row = &adj[static_cast<size_t>(x) * words];
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                const int y = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const int x2 = match_y[y];
                if (x2 < 0 || (dist[x2] == dist[x] + 1 && try_augment(x2))) {
                    match_x[x] = y;
                    match_y[y] = x;
                    return true;
                }
            }
        }
        dist[x] = kInf;
        return false;
    }

    int solve() {
        int size = 0;
        while (bfs()) {
            for (int x = 0; x < nx; ++x)
                if (match_x[x] < 0 && try_augment(x)) ++size;
        }
        return size;
    }

    // Alternating reachability from unmatched X vertices: X -> Y along any
    // edge, Y -> X along the matching edge.
    void alternating_reachable(std::vector<char>& zx, std::vector<char>& zy) const {
        zx.assign(nx, 0);
        zy.assign(ny, 0);
        std::vector<int> stack;
        for (int x = 0; x < nx; ++x)
            if (match_x[x] < 0) {
                zx[x] = 1;
                stack.push_back(x);
            }
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for_neighbours(x, [&](int y) {
                if (zy[y]) return;
                zy[y] = 1;
                const int x2 = match_y[y];
                if (x2 >= 0 && !zx[x2]) {
                    zx[x2] = 1;
                    stack.push_back(x2);
                }
            });
        }
    }
};

HkSolver build_solver(const Colouring& col, const Component& comp) {
    HkSolver hk;
    hk.init(static_cast<int>(comp.x_vertices.size()), static_cast<int>(comp.y_vertices.size()));
    for (int xi = 0; xi < hk.nx; ++xi) {
        const int gx = comp.x_vertices[xi];
        for (int yi = 0; yi < hk.ny; ++yi)
            if (col.at(gx, comp.y_vertices[yi]) == comp.colour) hk.add_edge(xi, yi);
    }
    return hk;
}

void check_colour(const Colouring& col, int colour) {
    if (colour < 1 || colour > col.colours()) throw std::invalid_argument("colour out of range");
}

Component trace_component(const Colouring& col, int colour, int x0, std::vector<char>& seen_x,
                          std::vector<char>& seen_y) {
    const int n = col.n_left(), m = col.n_right();
    Component comp;
    comp.colour = colour;
    std::vector<int> qx{x0}, qy;
    seen_x[x0] = 1;
    size_t hx = 0, hy = 0;
    while (hx < qx.size() || hy < qy.size()) {
        if (hx < qx.size()) {
            const int x = qx[hx++];
            for (int y = 0; y < m; ++y)
                if (col.at(x, y) == colour && !seen_y[y]) {
                    seen_y[y] = 1;
                    qy.push_back(y);
                }
        } else {
            const int y = qy[hy++];
            for (int x = 0; x < n; ++x)
                if (col.at(x, y) == colour && !seen_x[x]) {
                    seen_x[x] = 1;
                    qx.push_back(x);
                }
        }
    }
    std::sort(qx.begin(), qx.end());
    std::sort(qy.begin(), qy.end());
    comp.x_vertices = std::move(qx);
    comp.y_vertices = std::move(qy);
    for (int x : comp.x_vertices)
        for (int y : comp.y_vertices)
            if (col.at(x, y) == colour) ++comp.edge_count;
    return comp;
}

}  // namespace

std::vector<Component> components(const Colouring& col, int colour) {
    check_colour(col, colour);
    const int n = col.n_left(), m = col.n_right();
    std::vector<char> seen_x(n, 0), seen_y(m, 0);
    std::vector<Component> out;
    for (int x0 = 0; x0 < n; ++x0) {
        if (seen_x[x0]) continue;
        bool has_edge = false;
        for (int y = 0; y < m && !has_edge; ++y) has_edge = col.at(x0, y) == colour;
        if (!has_edge) continue;
        out.push_back(trace_component(col, colour, x0, seen_x, seen_y));
    }
    // Traversal starts at increasing x0, so the list is already ordered by
    // smallest X index; smallest Y index breaks (impossible) ties.
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        if (a.x_vertices.front() != b.x_vertices.front())
            return a.x_vertices.front() < b.x_vertices.front();
        return a.y_vertices.front() < b.y_vertices.front();
    });
    return out;
}

int component_matching_number(const Colouring& col, const Component& comp) {
    HkSolver hk = build_solver(col, comp);
    return hk.solve();
}

CoverCertificate max_matching(const Colouring& col, const Component& comp) {
    check_colour(col, comp.colour);
    if (comp.x_vertices.empty() || comp.y_vertices.empty())
        throw std::invalid_argument("component inconsistent with colouring: empty side");
    for (int x : comp.x_vertices)
        if (x < 0 || x >= col.n_left())
            throw std::invalid_argument("component inconsistent with colouring: X index out of range");
    for (int y : comp.y_vertices)
        if (y < 0 || y >= col.n_right())
            throw std::invalid_argument("component inconsistent with colouring: Y index out of range");
    {
        std::vector<char> seen_x(col.n_left(), 0), seen_y(col.n_right(), 0);
        Component traced = trace_component(col, comp.colour, comp.x_vertices.front(), seen_x, seen_y);
        if (traced != comp)
            throw std::invalid_argument("component inconsistent with colouring");
    }

    HkSolver hk = build_solver(col, comp);
    hk.solve();

    CoverCertificate cert;
    cert.component = comp;
    for (int xi = 0; xi < hk.nx; ++xi)
        if (hk.match_x[xi] >= 0)
            cert.matching.emplace_back(comp.x_vertices[xi], comp.y_vertices[hk.match_x[xi]]);

    std::vector<char> zx, zy;
    hk.alternating_reachable(zx, zy);
    for (int xi = 0; xi < hk.nx; ++xi)
        if (!zx[xi]) cert.cover.push_back({Side::X, comp.x_vertices[xi]});
    for (int yi = 0; yi < hk.ny; ++yi)
        if (zy[yi]) cert.cover.push_back({Side::Y, comp.y_vertices[yi]});

    if (cert.cover.size() != cert.matching.size())
        throw std::logic_error("Koenig equality violated by solver");
    return cert;
}

int connected_matching_number(const Colouring& col, int colour) {
    check_colour(col, colour);
    int best = 0;
    for (const Component& comp : components(col, colour))
        best = std::max(best, component_matching_number(col, comp));
    return best;
}

bool mono_cm_free(const Colouring& col, int target) {
    if (target < 1) throw std::invalid_argument("target must be >= 1");
    for (int c = 1; c <= col.colours(); ++c)
        if (connected_matching_number(col, c) >= target) return false;
    return true;
}

long long colour_excess(const Colouring& col, int colour, int n) {
    check_colour(col, colour);
    long long sum = 0;
    for (const Component& comp : components(col, colour))
        sum += std::max(0, component_matching_number(col, comp) - n);
    return sum;
}

bool certificate_self_checks(const Colouring& col, const CoverCertificate& cert) {
    const Component& comp = cert.component;
    if (cert.cover.size() != cert.matching.size()) return false;

    std::vector<char> in_x(col.n_left(), 0), in_y(col.n_right(), 0);
    for (int x : comp.x_vertices) in_x[x] = 1;
    for (int y : comp.y_vertices) in_y[y] = 1;

    std::vector<char> used_x(col.n_left(), 0), used_y(col.n_right(), 0);
    for (auto [x, y] : cert.matching) {
        if (x < 0 || x >= col.n_left() || y < 0 || y >= col.n_right()) return false;
        if (col.at(x, y) != comp.colour) return false;
        if (!in_x[x] || !in_y[y]) return false;
        if (used_x[x] || used_y[y]) return false;  // disjointness
        used_x[x] = used_y[y] = 1;
    }

    std::vector<char> cov_x(col.n_left(), 0), cov_y(col.n_right(), 0);
    for (const VertexRef& v : cert.cover) {
        if (v.side == Side::X) {
            if (v.index < 0 || v.index >= col.n_left() || !in_x[v.index]) return false;
            cov_x[v.index] = 1;
        } else {
            if (v.index < 0 || v.index >= col.n_right() || !in_y[v.index]) return false;
            cov_y[v.index] = 1;
        }
    }

    for (int x : comp.x_vertices)
        for (int y : comp.y_vertices)
            if (col.at(x, y) == comp.colour && !cov_x[x] && !cov_y[y]) return false;  // coverage
    return true;
}

std::optional<std::pair<int, std::vector<std::pair<int, int>>>>
find_connected_matching(const Colouring& col, int size) {
    if (size < 1) throw std::invalid_argument("size must be >= 1");
    for (int c = 1; c <= col.colours(); ++c) {
        for (const Component& comp : components(col, c)) {
            HkSolver hk = build_solver(col, comp);
            if (hk.solve() < size) continue;
            std::vector<std::pair<int, int>> edges;
            for (int xi = 0; xi < hk.nx && static_cast<int>(edges.size()) < size; ++xi)
                if (hk.match_x[xi] >= 0)
                    edges.emplace_back(comp.x_vertices[xi], comp.y_vertices[hk.match_x[xi]]);
            return std::make_pair(c, std::move(edges));
        }
    }
    return std::nullopt;
}

}  // namespace bipcm
