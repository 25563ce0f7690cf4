#include "bipcm/search.hpp"

#include "bipcm/constructions.hpp"
#include "bipcm/matching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

namespace bipcm {

std::string to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::CmFree: return "cm-free";
        case SearchMode::StarForest: return "star-forest";
        case SearchMode::Figure1: return "figure1";
    }
    return "?";
}

long long objective(const Colouring& col, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    long long sum = 0;
    for (int c = 1; c <= col.colours(); ++c) sum += colour_excess(col, c, n);
    return sum;
}

namespace {

// mt19937_64 has a pinned-down output sequence, so bounded draws built on
// raw words reproduce bit-for-bit everywhere.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t raw() { return eng(); }
    int below(int bound) { return static_cast<int>(raw() % static_cast<std::uint64_t>(bound)); }
    double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }
};

constexpr int kMaxSide = 64;

// Allocation-free evaluation of one colour's objective term on boards with
// sides <= 64: component decomposition over row masks, matchings by
// ascending-order augmenting paths.
struct FastBoard {
    int N, M, k, n;

    std::uint64_t rows[kMaxSide];  // per-x adjacency of the colour being scanned
    int match_y[kMaxSide];

    bool augment(int x, std::uint64_t& visited) {
        while (true) {
            const std::uint64_t avail = rows[x] & ~visited;
            if (!avail) return false;
            const int y = std::countr_zero(avail);
            visited |= 1ull << y;
            if (match_y[y] < 0 || augment(match_y[y], visited)) {
                match_y[y] = x;
                return true;
            }
        }
    }

    void load_colour(const Colouring& col, int colour) {
        for (int x = 0; x < N; ++x) {
            std::uint64_t m = 0;
            const int* row = col.entries().data() + static_cast<size_t>(x) * M;
            for (int y = 0; y < M; ++y)
                if (row[y] == colour) m |= 1ull << y;
            rows[x] = m;
        }
    }

    // Component of the loaded colour containing column y0 (with x-mask seed),
    // expanded to a fixpoint. Returns the x-set of the component.
    std::uint64_t component_x(std::uint64_t seed_x, std::uint64_t seed_y,
                              std::uint64_t* out_y = nullptr) const {
        std::uint64_t cx = seed_x, cy = seed_y;
        while (true) {
            std::uint64_t nx = cx, ny = cy;
            for (int x = 0; x < N; ++x) {
                if (!rows[x]) continue;
                if ((nx >> x) & 1) {
                    ny |= rows[x];
                } else if (rows[x] & ny) {
                    nx |= 1ull << x;
                    ny |= rows[x];
                }
            }
            if (nx == cx && ny == cy) break;
            cx = nx;
            cy = ny;
        }
        if (out_y) *out_y = cy;
        return cx;
    }

    int matching_of(std::uint64_t xs) {
        std::fill(match_y, match_y + M, -1);
        int size = 0;
        for (std::uint64_t m = xs; m; m &= m - 1) {
            const int x = std::countr_zero(m);
            std::uint64_t visited = 0;
            if (augment(x, visited)) ++size;
        }
        return size;
    }

    long long excess_of_loaded_colour() {
        long long sum = 0;
        std::uint64_t unseen = N == 64 ? ~0ull : (1ull << N) - 1;
        while (unseen) {
            const int x0 = std::countr_zero(unseen);
            unseen &= unseen - 1;
            if (!rows[x0]) continue;
            const std::uint64_t cx = component_x(1ull << x0, rows[x0]);
            unseen &= ~cx;
            sum += std::max(0, matching_of(cx) - n);
        }
        return sum;
    }

    // Edges of the colour-m components containing x0 or y0 that touch
    // neither; zero exactly when inserting (x0, y0) in colour m leaves its
    // component covered by {x0, y0}.
    long long merge_badness(const Colouring& col, int m) {
        load_colour(col, m);
        std::uint64_t cy = 0;
        std::uint64_t cx = component_x(rows[0] ? 1ull : 0ull, rows[0] | 1ull, &cy);
        long long bad = 0;
        for (std::uint64_t xm = cx; xm; xm &= xm - 1) {
            const int x = std::countr_zero(xm);
            std::uint64_t edges = rows[x] & cy;
            if (x != 0) {
                bad += std::popcount(edges & ~1ull);
            }
        }
        return bad;
    }
};

struct AnnealState {
    Colouring col;
    FastBoard board;
    std::vector<int> present;  // cell indices that carry an edge
    std::vector<long long> excess;   // per colour
    std::vector<long long> badness;  // per colour; figure1 only
    long long total = 0;
    bool figure1 = false;

    long long colour_term(int c) {
        board.load_colour(col, c);
        return board.excess_of_loaded_colour();
    }

    void recompute_all() {
        total = 0;
        for (int c = 1; c <= col.colours(); ++c) {
            excess[c] = colour_term(c);
            total += excess[c];
        }
        if (figure1) {
            for (int c = 1; c <= col.colours(); ++c) badness[c] = board.merge_badness(col, c);
            total += *std::min_element(badness.begin() + 1, badness.end());
        }
    }

    // Applies cell := colour, refreshing the two touched colour terms.
    // Returns the objective delta.
    long long apply(int cell, int colour) {
        const int old = col.entries()[cell];
        const int x = cell / col.n_right(), y = cell % col.n_right();
        long long before = excess[old] + excess[colour];
        long long min_bad_before = 0, min_bad_after = 0;
        if (figure1) min_bad_before = *std::min_element(badness.begin() + 1, badness.end());
        col.set(x, y, colour);
        excess[old] = colour_term(old);
        excess[colour] = colour_term(colour);
        if (figure1) {
            badness[old] = board.merge_badness(col, old);
            badness[colour] = board.merge_badness(col, colour);
            min_bad_after = *std::min_element(badness.begin() + 1, badness.end());
        }
        const long long delta =
            excess[old] + excess[colour] - before + (min_bad_after - min_bad_before);
        total += delta;
        return delta;
    }
};

void validate(const SearchConfig& cfg) {
    if (cfg.N < 1 || cfg.M < 1 || cfg.k < 1)
        throw std::invalid_argument("search dimensions must be >= 1");
    if (cfg.N > kMaxSide || cfg.M > kMaxSide)
        throw std::invalid_argument("anneal supports sides up to 64");
    if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
    if (cfg.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (!(cfg.initial_temperature > 0)) throw std::invalid_argument("initial temperature must be positive");
    if (!(cfg.cooling_factor > 0 && cfg.cooling_factor < 1))
        throw std::invalid_argument("cooling factor must lie in (0, 1)");
    if (cfg.steps_per_temperature < 1)
        throw std::invalid_argument("steps_per_temperature must be >= 1");
}

}  // namespace

SearchOutcome anneal(const SearchConfig& cfg_in) {
    SearchConfig cfg = cfg_in;
    if (cfg.mode == SearchMode::Figure1) {
        if (cfg.N == 0) cfg.N = 7;
        if (cfg.M == 0) cfg.M = 7;
        if (cfg.k == 0) cfg.k = 5;
        if (cfg.N != 7 || cfg.M != 7 || cfg.k != 5 || cfg.n != 1)
            throw std::invalid_argument("figure1 mode fixes N = M = 7, k = 5, n = 1");
    }
    if (cfg.mode == SearchMode::StarForest && cfg.n != 1)
        throw std::invalid_argument("star-forest mode fixes n = 1");
    validate(cfg);

    AnnealState proto{Colouring(cfg.N, cfg.M, cfg.k), {}, {}, {}, {}, 0,
                      cfg.mode == SearchMode::Figure1};
    proto.board.N = cfg.N;
    proto.board.M = cfg.M;
    proto.board.k = cfg.k;
    proto.board.n = cfg.n;
    proto.excess.assign(cfg.k + 1, 0);
    proto.badness.assign(cfg.k + 1, 0);
    for (int cell = 0; cell < cfg.N * cfg.M; ++cell) {
        if (proto.figure1 && cell == 0) continue;  // (x0, y0) stays absent
        proto.present.push_back(cell);
    }

    SearchOutcome out{proto.col, 0, 0, false, cfg.seed};
    long long best_total = -1;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(cfg.seed + static_cast<std::uint64_t>(restart));
        AnnealState st = proto;
        for (int cell : st.present) {
            st.col.set(cell / cfg.M, cell % cfg.M, 1 + rng.below(cfg.k));
        }
        st.recompute_all();

        long long restart_best = st.total;
        Colouring restart_col = st.col;

        double temperature = cfg.initial_temperature;
        long long step = 0;
        int at_temperature = 0;
        // k = 1 admits no recolouring move; the initial board is the answer.
        while (cfg.k > 1 && step < cfg.max_steps && st.total > 0) {
            ++step;
            const int cell = st.present[rng.below(static_cast<int>(st.present.size()))];
            const int old = st.col.entries()[cell];
            int next = 1 + rng.below(cfg.k - 1);
            if (next >= old) ++next;
            const long long delta = st.apply(cell, next);
            if (delta > 0 && rng.unit() >= std::exp(-static_cast<double>(delta) / temperature)) {
                st.apply(cell, old);  // reject
            } else if (st.total < restart_best) {
                restart_best = st.total;
                restart_col = st.col;
            }
            if (++at_temperature >= cfg.steps_per_temperature) {
                at_temperature = 0;
                temperature *= cfg.cooling_factor;
            }
        }
        out.steps_used += step;
        if (best_total < 0 || restart_best < best_total) {
            best_total = restart_best;
            out.best = restart_col;
        }
        if (best_total == 0) break;
    }

    out.objective = best_total;
    out.success = best_total == 0;

    // Re-verify the reported objective through the general engine before
    // anything downstream trusts it.
    long long verified = objective(out.best, cfg.n);
    if (cfg.mode == SearchMode::Figure1) {
        const Figure1Check chk = verify_figure1_base(out.best);
        if (out.success != (verified == 0 && chk.pass))
            throw std::logic_error("annealer success disagrees with re-verification");
    } else if (out.success != (verified == 0)) {
        throw std::logic_error("annealer success disagrees with re-verification");
    }
    return out;
}

}  // namespace bipcm
