#include "bipcm/constructions.hpp"

#include "bipcm/matching.hpp"

#include <algorithm>
#include <numeric>

namespace bipcm {

namespace {

Colouring blow_up_impl(const Colouring& base, const BlowupWeights& w, bool allow_empty) {
    if (static_cast<int>(w.x_weights.size()) != base.n_left() ||
        static_cast<int>(w.y_weights.size()) != base.n_right())
        throw std::invalid_argument("weight vector length does not match base dimensions");
    const int min_weight = allow_empty ? 0 : 1;
    for (int v : w.x_weights)
        if (v < min_weight) throw std::invalid_argument("x weight below " + std::to_string(min_weight));
    for (int v : w.y_weights)
        if (v < min_weight) throw std::invalid_argument("y weight below " + std::to_string(min_weight));

    const int n_out = std::accumulate(w.x_weights.begin(), w.x_weights.end(), 0);
    const int m_out = std::accumulate(w.y_weights.begin(), w.y_weights.end(), 0);
    if (n_out < 1 || m_out < 1) throw std::invalid_argument("blow-up collapses a whole side");

    Colouring out(n_out, m_out, base.colours());
    int x_off = 0;
    for (int i = 0; i < base.n_left(); ++i) {
        int y_off = 0;
        for (int j = 0; j < base.n_right(); ++j) {
            const int c = base.at(i, j);
            for (int dx = 0; dx < w.x_weights[i]; ++dx)
                for (int dy = 0; dy < w.y_weights[j]; ++dy) out.set(x_off + dx, y_off + dy, c);
            y_off += w.y_weights[j];
        }
        x_off += w.x_weights[i];
    }
    return out;
}

}  // namespace

Colouring latin_base(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    Colouring out(k, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.set(i, j, (i + j) % k + 1);
    // Every colour class must be a perfect matching of single-edge components.
    for (int c = 1; c <= k; ++c)
        if (connected_matching_number(out, c) != 1)
            throw std::logic_error("latin base failed its star check");
    return out;
}

Colouring blow_up(const Colouring& base, const BlowupWeights& w) {
    return blow_up_impl(base, w, /*allow_empty=*/false);
}

Figure1Check verify_figure1_base(const Colouring& base) {
    Figure1Check res;
    if (base.n_left() != 7 || base.n_right() != 7)
        res.violations.push_back("expected K_{7,7}, got K_{" + std::to_string(base.n_left()) +
                                 "," + std::to_string(base.n_right()) + "}");
    if (base.colours() != 5)
        res.violations.push_back("expected 5 colours, got " + std::to_string(base.colours()));
    if (!res.violations.empty()) return res;

    const int absents = base.absent_count();
    if (absents != 1)
        res.violations.push_back("expected exactly one absent edge, found " +
                                 std::to_string(absents));
    else if (base.at(0, 0) != 0)
        res.violations.push_back("absent edge is not at (x0, y0)");
    if (!res.violations.empty()) return res;

    for (int c = 1; c <= 5; ++c)
        for (const Component& comp : components(base, c))
            if (component_matching_number(base, comp) > 1)
                res.violations.push_back("colour " + std::to_string(c) +
                                         " component at x" + std::to_string(comp.x_vertices.front()) +
                                         " is not a star");
    if (!res.violations.empty()) return res;

    for (int m = 1; m <= 5; ++m) {
        Colouring merged = base;
        merged.set(0, 0, m);
        bool covered = true;
        for (const Component& comp : components(merged, m)) {
            if (std::find(comp.x_vertices.begin(), comp.x_vertices.end(), 0) ==
                comp.x_vertices.end())
                continue;
            for (int x : comp.x_vertices)
                for (int y : comp.y_vertices)
                    if (merged.at(x, y) == m && x != 0 && y != 0) covered = false;
            break;  // components of one colour are vertex-disjoint
        }
        if (covered) res.merge_colours.push_back(m);
    }
    if (res.merge_colours.empty()) {
        res.violations.push_back("no insertion colour leaves the merged component covered by {x0, y0}");
        return res;
    }
    res.pass = true;
    return res;
}

Colouring thm15_construction(int n, const Colouring& base, int merge_colour) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const Figure1Check chk = verify_figure1_base(base);
    if (!chk.pass) {
        std::string msg = "base fails its verification:";
        for (const auto& v : chk.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    int m = merge_colour;
    if (m == 0) {
        m = chk.merge_colours.front();
    } else if (std::find(chk.merge_colours.begin(), chk.merge_colours.end(), m) ==
               chk.merge_colours.end()) {
        throw std::invalid_argument("colour " + std::to_string(m) +
                                    " does not admit the cover {x0, y0} after insertion");
    }

    Colouring merged = base;
    merged.set(0, 0, m);

    BlowupWeights w;
    w.x_weights.assign(7, n);
    w.y_weights.assign(7, n);
    w.x_weights[0] = w.y_weights[0] = n / 2;  // floor; empty index-0 blocks at n = 1
    Colouring out = blow_up_impl(merged, w, /*allow_empty=*/true);

    const int side = 6 * n + n / 2;
    if (out.n_left() != side || out.n_right() != side || !out.complete())
        throw std::logic_error("construction produced wrong shape");
    for (int c = 1; c <= 5; ++c)
        if (connected_matching_number(out, c) > n)
            throw std::logic_error("construction failed its cover re-verification");
    return out;
}

}  // namespace bipcm
