#pragma once

#include "bipcm/colouring.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bipcm {

// One monochromatic connected component. Vertex lists are sorted ascending;
// edge_count counts the colour edges spanned by the listed vertices.
struct Component {
    int colour = 0;
    std::vector<int> x_vertices;
    std::vector<int> y_vertices;
    long long edge_count = 0;

    friend bool operator==(const Component&, const Component&) = default;
};

// Maximum matching plus minimum vertex cover of one component.
// Self-verifying: |cover| == |matching| (Koenig), matching edges are
// pairwise disjoint, and every component edge touches the cover. The
// certificate is canonical: augmenting paths explore vertices in ascending
// index order and the cover is (X \ Z) union (Y meet Z), Z the set reachable
// from unmatched X-side vertices by alternating paths. Consequence: a
// single-edge component is covered by its X endpoint.
struct CoverCertificate {
    Component component;
    std::vector<std::pair<int, int>> matching;  // (x, y), ascending by x
    std::vector<VertexRef> cover;               // X refs first, each side ascending
};

// Components of one colour class, ordered by smallest X index, then smallest
// Y index. Vertices without an edge of the colour are not reported.
std::vector<Component> components(const Colouring& col, int colour);

// Canonical maximum matching and minimum cover of a component previously
// produced by components(). Throws std::invalid_argument when the component
// is inconsistent with the colouring.
CoverCertificate max_matching(const Colouring& col, const Component& comp);

// nu(C) for a component of components(col, comp.colour); no certificate.
int component_matching_number(const Colouring& col, const Component& comp);

// Largest matching number over the components of one colour; 0 when the
// colour class is empty.
int connected_matching_number(const Colouring& col, int colour);

// True iff no colour reaches a connected matching of `target` edges.
bool mono_cm_free(const Colouring& col, int target);

// Sum over the colour's components of max(0, nu(C) - n); the search
// objective contribution of one colour.
long long colour_excess(const Colouring& col, int colour, int n);

// Checks every certificate invariant directly against the colouring,
// independently of how the certificate was produced.
bool certificate_self_checks(const Colouring& col, const CoverCertificate& cert);

// A connected matching with `size` edges in some colour, if one exists:
// (colour, matching edges). Used to attach witnesses to error reports.
std::optional<std::pair<int, std::vector<std::pair<int, int>>>>
find_connected_matching(const Colouring& col, int size);

}  // namespace bipcm
