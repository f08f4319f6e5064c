#include "rca/dot.hpp"

namespace rca::io {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += escape(names[i]);
  }
  return out;
}

}  // namespace

std::string export_dot(const ConceptLattice& lattice, Labeling labeling) {
  const auto& ctx = lattice.context();
  std::vector<std::vector<std::string>> own_attributes(lattice.size()), own_objects(lattice.size());
  if (labeling == Labeling::reduced) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      own_attributes[lattice.attribute_concept(m).index].push_back(ctx.attributes()[m]);
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
      own_objects[lattice.object_concept(g).index].push_back(ctx.objects()[g]);
  }

  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& c : lattice.concepts()) {
    std::string label = std::to_string(c.index);
    if (labeling == Labeling::full) {
      label += "\\nextent: {" + join(ctx.object_names(c.extent)) + "}";
      label += "\\nintent: {" + join(ctx.attribute_names(c.intent)) + "}";
    } else {
      if (!own_attributes[c.index].empty()) label += "\\n" + join(own_attributes[c.index]);
      if (!own_objects[c.index].empty()) label += "\\n" + join(own_objects[c.index]);
    }
    out += "  c" + std::to_string(c.index) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.covers())
    out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace rca::io
