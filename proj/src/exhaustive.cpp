#include "bipcm/search.hpp"

#include "bipcm/matching.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace bipcm {

namespace {

constexpr long long kFactorial[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
constexpr long long kMaxPermPairs = 600000;
constexpr int kMaxCanonicalSide = 6;

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// First-occurrence colour relabelling of a flattened matrix; absent entries
// stay 0. The relabelled sequence is the minimum of the colour orbit.
std::vector<int> relabel_sequence(const std::vector<int>& seq, int k) {
    std::vector<int> map(k + 1, 0);
    int next = 0;
    std::vector<int> out(seq.size());
    for (size_t q = 0; q < seq.size(); ++q) {
        const int v = seq[q];
        if (v == 0) {
            out[q] = 0;
            continue;
        }
        if (!map[v]) map[v] = ++next;
        out[q] = map[v];
    }
    return out;
}

struct Dfs {
    int N = 0, M = 0, kk = 0, true_k = 0, n = 0;
    std::vector<int> cells;
    std::vector<std::vector<std::uint64_t>> rowmask;  // [colour][row], bits over columns
    bool use_symmetry = false;
    std::vector<std::vector<int>> perms_r, perms_c;
    bool enumerate = false;
    std::vector<Colouring>* sink = nullptr;
    std::optional<Colouring> witness;
    unsigned long long nodes = 0;

    std::array<int, 64> match_y{};
    std::array<int, 64> relabel{};

    bool augment(const std::vector<std::uint64_t>& rows, int x, std::uint64_t& visited) {
        while (true) {
            const std::uint64_t avail = rows[x] & ~visited;
            if (!avail) return false;
            const int y = std::countr_zero(avail);
            visited |= 1ull << y;
            if (match_y[y] < 0 || augment(rows, match_y[y], visited)) {
                match_y[y] = x;
                return true;
            }
        }
    }

    // nu of the colour-c component containing the just-placed edge (i, j).
    bool creates_big_matching(int i, int j, int c) {
        const std::vector<std::uint64_t>& rows = rowmask[c];
        std::uint64_t cx = 1ull << i, cy = rows[i];
        (void)j;
        while (true) {
            std::uint64_t nx = cx, ny = cy;
            for (int x = 0; x < N; ++x) {
                if (!rows[x]) continue;
                if ((nx >> x) & 1)
                    ny |= rows[x];
                else if (rows[x] & ny) {
                    nx |= 1ull << x;
                    ny |= rows[x];
                }
            }
            if (nx == cx && ny == cy) break;
            cx = nx;
            cy = ny;
        }
        std::fill(match_y.begin(), match_y.begin() + M, -1);
        int size = 0;
        for (std::uint64_t m = cx; m; m &= m - 1) {
            std::uint64_t visited = 0;
            if (augment(rows, std::countr_zero(m), visited)) ++size;
        }
        return size > n;
    }

    // -1: permuted+relabelled prefix is lexicographically smaller (prune),
    //  1: larger (no information), 0: equal or source cells missing.
    int compare_perm(const std::vector<int>& pr, const std::vector<int>& pc, int rows_done) {
        std::fill(relabel.begin(), relabel.begin() + kk + 1, 0);
        int next = 0;
        const int filled = rows_done * M;
        for (int q = 0; q < filled; ++q) {
            const int a = q / M;
            const int sr = pr[a];
            if (sr >= rows_done) return 0;  // source row not filled yet
            const int v = cells[sr * M + pc[q % M]];
            int lab = relabel[v];
            if (!lab) lab = relabel[v] = ++next;
            const int cur = cells[q];
            if (lab != cur) return lab < cur ? -1 : 1;
        }
        return 0;
    }

    // True when some row/column permutation of the filled prefix relabels to
    // something strictly smaller; no completion of such a prefix is canonical.
    bool dominated(int rows_done) {
        for (const auto& pr : perms_r) {
            if (pr[0] >= rows_done) continue;
            for (const auto& pc : perms_c)
                if (compare_perm(pr, pc, rows_done) < 0) return true;
        }
        return false;
    }

    Colouring snapshot() const { return Colouring(N, M, true_k, cells); }

    // Returns true to stop the search (decide mode found a witness).
    bool run(int p, int maxused) {
        if (p == N * M) {
            if (enumerate) {
                if (!use_symmetry || !dominated(N)) sink->push_back(snapshot());
                return false;
            }
            witness = snapshot();
            return true;
        }
        const int i = p / M, j = p % M;
        const int limit = std::min(kk, maxused + 1);
        for (int c = 1; c <= limit; ++c) {
            cells[p] = c;
            rowmask[c][i] |= 1ull << j;
            ++nodes;
            bool prune = creates_big_matching(i, j, c);
            if (!prune && use_symmetry && j == M - 1 && dominated(i + 1)) prune = true;
            if (!prune && run(p + 1, std::max(maxused, c))) return true;
            rowmask[c][i] &= ~(1ull << j);
            cells[p] = 0;
        }
        return false;
    }
};

Dfs make_dfs(int N, int M, int k, int n) {
    if (N < 1 || M < 1 || k < 1 || n < 1)
        throw std::invalid_argument("exhaustive search arguments must be >= 1");
    if (N > 64 || M > 64) throw std::invalid_argument("exhaustive search supports sides up to 64");
    const double bits = static_cast<double>(N) * M * std::log2(static_cast<double>(k));
    if (bits > 40.0 + 1e-9) {
        std::ostringstream msg;
        msg << "raw search space for K_{" << N << "," << M << "} with " << k << " colours is "
            << bits << " bits, over the 40-bit budget";
        throw BudgetError(msg.str());
    }

    Dfs dfs;
    dfs.N = N;
    dfs.M = M;
    dfs.true_k = k;
    dfs.kk = std::min(k, N * M);  // extra colours can never appear
    dfs.n = n;
    dfs.cells.assign(static_cast<size_t>(N) * M, 0);
    dfs.rowmask.assign(dfs.kk + 1, std::vector<std::uint64_t>(N, 0));
    dfs.use_symmetry = dfs.kk >= 2 && N <= kMaxCanonicalSide && M <= kMaxCanonicalSide &&
                       kFactorial[N] * kFactorial[M] <= kMaxPermPairs;
    if (dfs.use_symmetry) {
        dfs.perms_r = all_permutations(N);
        dfs.perms_c = all_permutations(M);
    }
    return dfs;
}

}  // namespace

DecideResult exhaustive_decide(int N, int M, int k, int n) {
    Dfs dfs = make_dfs(N, M, k, n);
    DecideResult res;
    const bool stopped = dfs.run(0, 0);
    res.nodes = dfs.nodes;
    if (stopped) {
        // Pruning is only trusted after the witness re-verifies.
        if (!mono_cm_free(*dfs.witness, n + 1))
            throw std::logic_error("exhaustive search produced an invalid witness");
        res.arrowing = false;
        res.witness = std::move(dfs.witness);
    } else {
        res.arrowing = true;
    }
    return res;
}

std::vector<Colouring> enumerate_cmfree_canonical(int N, int M, int k, int n) {
    Dfs dfs = make_dfs(N, M, k, n);
    if (!dfs.use_symmetry && dfs.kk > 1)
        throw std::invalid_argument("canonical enumeration supports sides up to 6");
    std::vector<Colouring> out;
    dfs.enumerate = true;
    dfs.sink = &out;
    dfs.run(0, 0);
    return out;
}

Colouring canonical_form(const Colouring& col) {
    const int N = col.n_left(), M = col.n_right();
    if (N > kMaxCanonicalSide || M > kMaxCanonicalSide)
        throw std::invalid_argument("canonical_form supports sides up to 6");
    const auto perms_r = all_permutations(N);
    const auto perms_c = all_permutations(M);
    std::vector<int> best;
    std::vector<int> scratch(static_cast<size_t>(N) * M);
    for (const auto& pr : perms_r) {
        for (const auto& pc : perms_c) {
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < M; ++b)
                    scratch[static_cast<size_t>(a) * M + b] = col.at(pr[a], pc[b]);
            std::vector<int> seq = relabel_sequence(scratch, col.colours());
            if (best.empty() || seq < best) best = std::move(seq);
        }
    }
    return Colouring(N, M, col.colours(), std::move(best));
}

ComputeROutcome compute_r(int k, int n, int n_max) {
    if (k < 1 || n < 1 || n_max < 1)
        throw std::invalid_argument("compute_r arguments must be >= 1");
    ComputeROutcome out;
    std::optional<Colouring> prev;
    for (int side = 1; side <= n_max; ++side) {
        DecideResult d;
        try {
            d = exhaustive_decide(side, side, k, n);
        } catch (const BudgetError& e) {
            throw BudgetError("unresolved at N=" + std::to_string(side) + ": " + e.what());
        }
        out.scanned_up_to = side;
        if (d.arrowing) {
            out.resolved = true;
            out.r = side;
            out.witness = std::move(prev);
            return out;
        }
        prev = std::move(d.witness);
    }
    return out;
}

}  // namespace bipcm
