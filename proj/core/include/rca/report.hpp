#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rca/rough_concepts.hpp"
#include "rca/rules.hpp"

namespace rca::io {

/// Machine-readable record of a full analysis. Top-level keys: context,
/// space, lattices {base, upper, lower}, maps {to_upper, to_lower}, kernels,
/// rough_classes, rules. Concepts are referenced by canonical index and
/// every set is a name array in index order.
nlohmann::ordered_json build_report(const ConceptApproximationMaps& maps,
                                    const std::vector<Implication>& rules = {});

std::string render_report(const ConceptApproximationMaps& maps,
                          const std::vector<Implication>& rules = {});

}  // namespace rca::io
