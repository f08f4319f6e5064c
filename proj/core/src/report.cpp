#include "rca/report.hpp"

namespace rca::io {

namespace {

using ojson = nlohmann::ordered_json;

ojson incidence_rows(const FormalContext& ctx) {
  ojson rows = ojson::array();
  for (const auto& row : ctx.rows()) rows.push_back(ctx.attribute_names(row));
  return rows;
}

ojson lattice_json(const ConceptLattice& lattice) {
  const auto& ctx = lattice.context();
  ojson concepts = ojson::array();
  for (const auto& c : lattice.concepts()) {
    ojson entry;
    entry["index"] = c.index;
    entry["extent"] = ctx.object_names(c.extent);
    entry["intent"] = ctx.attribute_names(c.intent);
    concepts.push_back(std::move(entry));
  }
  ojson covers = ojson::array();
  for (const auto& [lo, hi] : lattice.covers()) covers.push_back({lo, hi});

  ojson out;
  out["incidence"] = incidence_rows(ctx);
  out["concept_count"] = lattice.size();
  out["concepts"] = std::move(concepts);
  out["covers"] = std::move(covers);
  return out;
}

ojson fibers_json(const std::vector<Fiber>& fibers) {
  ojson out = ojson::array();
  for (const auto& f : fibers) out.push_back({{"image", f.image}, {"members", f.members}});
  return out;
}

}  // namespace

ojson build_report(const ConceptApproximationMaps& maps, const std::vector<Implication>& rules) {
  const auto& ctx = maps.base().context();
  const auto& space = maps.space();
  ojson report;

  report["context"] = {
      {"objects", ctx.objects()},
      {"attributes", ctx.attributes()},
      {"incidence", incidence_rows(ctx)},
      {"incidence_count", ctx.incidence_count()},
  };

  ojson blocks = ojson::array();
  for (const auto& b : space.blocks()) blocks.push_back(ctx.object_names(b));
  const auto definable = definable_attributes(space, ctx);
  report["space"] = {
      {"blocks", std::move(blocks)},
      {"definable_attributes", ctx.attribute_names(definable)},
      {"definable_context", definable.is_full()},
  };

  report["lattices"] = {
      {"base", lattice_json(maps.base())},
      {"upper", lattice_json(maps.upper())},
      {"lower", lattice_json(maps.lower())},
  };
  report["maps"] = {
      {"to_upper", maps.upper_assignment()},
      {"to_lower", maps.lower_assignment()},
  };

  const auto kernels = indiscernibility_kernels(maps);
  report["kernels"] = {
      {"possibility", fibers_json(kernels.possibility)},
      {"necessity", fibers_json(kernels.necessity)},
  };

  ojson classes = ojson::array();
  for (const auto& rc : rough_concept_classes(maps))
    classes.push_back({{"members", rc.members},
                       {"upper_image", rc.upper_image},
                       {"lower_image", rc.lower_image}});
  report["rough_classes"] = std::move(classes);

  ojson rule_entries = ojson::array();
  for (const auto& imp : rules) {
    const auto k = rough_measure(ctx, imp);
    rule_entries.push_back({
        {"premise", ctx.attribute_names(imp.premise)},
        {"conclusion", ctx.attribute_names(imp.conclusion)},
        {"holds", implication_holds(ctx, imp)},
        {"certain", certain_rule(space, ctx, imp)},
        {"possible", possible_rule(space, ctx, imp)},
        {"measure", k.to_string()},
        {"numerator", k.numerator()},
        {"denominator", k.denominator()},
    });
  }
  report["rules"] = std::move(rule_entries);
  return report;
}

std::string render_report(const ConceptApproximationMaps& maps,
                          const std::vector<Implication>& rules) {
  return build_report(maps, rules).dump(2) + "\n";
}

}  // namespace rca::io
