#ifndef FANFREE_CANONICAL_HPP
#define FANFREE_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

/// Canonical labeling result. `form` is the invariant byte string (two bytes
/// of n little-endian, then the upper-triangle bits of the relabeled
/// adjacency row-major, MSB-first); `ordering[pos]` is the input vertex
/// placed at canonical position pos. Two graphs get equal `form` bytes iff
/// they are isomorphic.
struct CanonicalResult {
    std::vector<std::uint8_t> form;
    std::vector<int> ordering;
};

/// Default per-call vertex cap for canonicalization; the search cost grows
/// steeply with n, so larger inputs are refused rather than left to stall.
int canonicalization_cap();

/// Overrides the cap process-wide (the CLI wires FANFREE_MAX_N to this).
void set_canonicalization_cap(int n);

/// Labels by individualization-refinement: equitable degree refinement,
/// branching on the first non-singleton cell, minimizing the leaf adjacency
/// string. Automorphisms discovered at leaves prune sibling branches in the
/// same orbit. Throws CapacityError above the cap.
CanonicalResult canonicalize(const Graph& g);

std::vector<std::uint8_t> canonical_form(const Graph& g);

/// The canonically relabeled representative itself.
Graph canonical_graph(const Graph& g);

} // namespace fanfree

#endif
