#pragma once

#include "bipcm/colouring.hpp"

#include <string>
#include <vector>

namespace bipcm {

// Per-vertex block sizes for a blow-up of a base colouring.
struct BlowupWeights {
    std::vector<int> x_weights;
    std::vector<int> y_weights;
};

// Complete k-colouring of K_{k,k} with colour(i, j) = ((i + j) mod k) + 1.
// Every colour class is a perfect matching, so every monochromatic
// component is a single edge.
Colouring latin_base(int k);

// Replaces vertex i by a block of weight[i] copies and each edge by a
// uniformly coloured complete bipartite block; absent edges blow up to
// absent blocks. Blocks are laid out contiguously in base vertex order.
// All weights must be >= 1.
Colouring blow_up(const Colouring& base, const BlowupWeights& w);

struct Figure1Check {
    bool pass = false;
    std::vector<std::string> violations;
    // Colours m such that inserting the missing edge (x0, y0) in colour m
    // leaves the enlarged component covered by {x0, y0}. Ascending.
    std::vector<int> merge_colours;
};

// Checks that `base` is a 5-colouring of K_{7,7} whose single absent edge
// is (x0, y0), that every monochromatic component is a star (cover number
// <= 1), and that at least one insertion colour admits the cover {x0, y0}.
Figure1Check verify_figure1_base(const Colouring& base);

// The 6.5n lower-bound construction: inserts the missing edge of a verified
// base in the merge colour, then blows up with weight n everywhere except
// weight floor(n/2) on index 0 of both sides. Result: a complete 5-coloured
// K_{floor(6.5n),floor(6.5n)} in which every monochromatic component has
// cover number <= n. merge_colour 0 selects the smallest admissible colour.
Colouring thm15_construction(int n, const Colouring& base, int merge_colour = 0);

}  // namespace bipcm
