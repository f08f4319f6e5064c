#pragma once

#include <string>

#include "rca/lattice.hpp"

namespace rca::io {

/// full: every node lists its whole extent and intent.
/// reduced: each attribute appears once, at its attribute concept, and each
/// object once, at its object concept (line-diagram style).
enum class Labeling { full, reduced };

/// Graphviz digraph with one node per concept ("c<index>") and one edge per
/// covering pair, drawn bottom-to-top. Output is deterministic.
std::string export_dot(const ConceptLattice& lattice, Labeling labeling = Labeling::reduced);

}  // namespace rca::io
