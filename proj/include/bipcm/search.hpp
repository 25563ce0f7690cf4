#pragma once

#include "bipcm/colouring.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bipcm {

enum class SearchMode { CmFree, StarForest, Figure1 };

std::string to_string(SearchMode mode);

struct SearchConfig {
    SearchMode mode = SearchMode::CmFree;
    int N = 0, M = 0, k = 0;
    int n = 1;  // matching threshold; forced to 1 by star-forest and figure1
    std::uint64_t seed = 0;
    long long max_steps = 10'000'000;  // per restart
    int restarts = 32;
    double initial_temperature = 2.0;
    double cooling_factor = 0.995;
    int steps_per_temperature = 100;
};

struct SearchOutcome {
    Colouring best;
    long long objective = 0;
    long long steps_used = 0;  // total across restarts
    bool success = false;      // objective == 0
    std::uint64_t seed_echo = 0;
};

// Sum over all monochromatic components C of max(0, nu(C) - n);
// zero iff mono_cm_free(col, n+1).
long long objective(const Colouring& col, int n);

// Simulated annealing over edge recolourings. Deterministic: restart i runs
// a single-threaded trajectory seeded with seed + i; the best outcome wins,
// earliest restart breaking ties. Figure1 mode fixes N = M = 7, k = 5,
// n = 1, keeps edge (x0, y0) absent, and extends the objective with a merge
// penalty so that objective 0 coincides with verify_figure1_base passing.
SearchOutcome anneal(const SearchConfig& cfg);

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& message) : std::runtime_error(message) {}
};

struct DecideResult {
    bool arrowing = false;
    std::optional<Colouring> witness;  // CM(n+1)-free complete colouring when !arrowing
    unsigned long long nodes = 0;      // DFS nodes explored
};

// Decides whether every complete k-colouring of K_{N,M} contains a
// monochromatic connected (n+1)-matching. DFS over edge assignments with
// incremental matching bounds and canonical-form pruning under row, column
// and colour permutations. Throws BudgetError when N*M*log2(k) > 40 bits.
DecideResult exhaustive_decide(int N, int M, int k, int n);

// All CM(n+1)-free complete colourings in canonical form (lexicographically
// minimal under row x column x colour permutations). Validation surface for
// the pruned DFS; same budget gate.
std::vector<Colouring> enumerate_cmfree_canonical(int N, int M, int k, int n);

// Lexicographically minimal matrix over row and column permutations, with
// colours relabelled by first occurrence (absent entries stay 0). Intended
// for small instances; sides are capped at 8.
Colouring canonical_form(const Colouring& col);

struct ComputeROutcome {
    bool resolved = false;
    int r = 0;                         // smallest arrowing side length
    std::optional<Colouring> witness;  // CM-free colouring of K_{r-1,r-1}
    int scanned_up_to = 0;             // largest N examined
};

// Scans N = 1..n_max with exhaustive_decide on K_{N,N}. BudgetError
// propagates with the offending N named.
ComputeROutcome compute_r(int k, int n, int n_max);

}  // namespace bipcm
