#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rca/dot.hpp"
#include "rca/formats.hpp"
#include "rca/report.hpp"
#include "rca/rough_concepts.hpp"
#include "rca/rules.hpp"

namespace rca::cli {

namespace {

struct Options {
  std::string context_path;
  std::string format;
  std::string partition_path;
  std::vector<std::string> partition_by;
  bool strict_upper = false;
  std::size_t max_concepts = EnumerationOptions{}.max_concepts;

  std::string which = "base";
  std::string approx_mode;
  std::string extent_mode = "base";
  std::vector<std::string> attrs;
  std::vector<std::string> premise;
  std::vector<std::string> conclusion;
  bool certain = false;
  bool possible = false;
  bool measure = false;
  bool dot = false;
  std::string labeling = "reduced";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string comma_list(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

std::string index_list(const std::vector<std::size_t>& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i]);
  }
  return out + "}";
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {
    format_ = opt.format.empty()
                  ? io::format_from_path(opt.context_path).value_or(io::ContextFormat::json)
                  : io::parse_format_name(opt.format);
    doc_ = io::parse_context(read_file(opt.context_path), format_);
  }

  const FormalContext& context() const { return doc_.context; }
  io::ContextFormat format() const { return format_; }
  EnumerationOptions enumeration() const { return {opt_.max_concepts}; }

  const ApproximationSpace& space() {
    if (space_) return *space_;
    if (!opt_.partition_path.empty())
      space_ = io::parse_partition(read_file(opt_.partition_path), context().objects());
    else if (!opt_.partition_by.empty())
      space_ = ApproximationSpace::by_attributes(context(), context().attribute_set(opt_.partition_by));
    else if (doc_.partition)
      space_ = *doc_.partition;
    else
      throw Error(ErrorKind::usage,
                  "this command needs an approximation space (--partition or --partition-by)");
    return *space_;
  }

  const ConceptApproximationMaps& maps() {
    if (!maps_) maps_.emplace(space(), context(), enumeration());
    return *maps_;
  }

  ConceptLattice lattice(const std::string& which) {
    if (which == "base") return enumerate_concepts(context(), enumeration());
    if (which == "upper") return enumerate_concepts(upper_context(space(), context()), enumeration());
    if (which == "lower") return enumerate_concepts(lower_context(space(), context()), enumeration());
    throw Error(ErrorKind::usage, "unknown lattice '" + which + "'");
  }

 private:
  const Options& opt_;
  io::ContextFormat format_;
  io::ContextDocument doc_;
  std::optional<ApproximationSpace> space_;
  std::optional<ConceptApproximationMaps> maps_;
};

void print_lattice(std::ostream& out, const ConceptLattice& lat) {
  const auto& ctx = lat.context();
  out << "# concepts " << lat.size() << '\n';
  for (const auto& c : lat.concepts())
    out << c.index << '\t' << format_names(ctx.object_names(c.extent)) << '\t'
        << format_names(ctx.attribute_names(c.intent)) << '\n';
  out << "# covers " << lat.covers().size() << '\n';
  for (const auto& [lo, hi] : lat.covers()) out << lo << '\t' << hi << '\n';
}

void print_fibers(std::ostream& out, const std::vector<Fiber>& fibers, const ConceptLattice& target) {
  const auto& ctx = target.context();
  for (const auto& f : fibers) {
    const auto& img = target[f.image];
    out << index_list(f.members) << "\t->\t" << f.image << '\t'
        << format_names(ctx.object_names(img.extent)) << '\t'
        << format_names(ctx.attribute_names(img.intent)) << '\n';
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return exit_usage;
    case ErrorKind::parse: return exit_parse;
    case ErrorKind::resource_limit: return exit_resource;
    default: return exit_semantic;
  }
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Rough concept analysis of formal contexts", "rca"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--context", opt.context_path, "Context file")->required();
  app.add_option("--format", opt.format, "cxt | csv | json (default: from file extension)")
      ->check(CLI::IsMember({"cxt", "csv", "json"}));
  app.add_option("--partition", opt.partition_path, "Partition file (one block per line)");
  app.add_option("--partition-by", opt.partition_by,
                 "Partition objects by equal rows on these attributes")
      ->delimiter(',');
  app.add_flag("--strict-upper", opt.strict_upper,
               "Use the strict upper extent upper(B↓) in extent operations");
  app.add_option("--max-concepts", opt.max_concepts, "Concept-count cap per lattice")
      ->check(CLI::PositiveNumber);

  auto* lattice_cmd = app.add_subcommand("lattice", "List concepts and covering pairs");
  lattice_cmd->add_option("--which", opt.which, "base | upper | lower")
      ->check(CLI::IsMember({"base", "upper", "lower"}));

  auto* approx_cmd = app.add_subcommand("approx", "Print an approximation context");
  approx_cmd->add_option("--mode", opt.approx_mode, "upper | lower")
      ->required()
      ->check(CLI::IsMember({"upper", "lower"}));

  auto* definable_cmd = app.add_subcommand("definable", "List definable attributes");
  auto* assignments_cmd =
      app.add_subcommand("assignments", "Both conceptual assignments and their kernels");
  auto* classes_cmd = app.add_subcommand("rough-classes", "Rough concept classes");

  auto* rules_cmd = app.add_subcommand("rules", "Evaluate an implication");
  rules_cmd->add_option("--premise", opt.premise, "Premise attributes")->delimiter(',');
  rules_cmd->add_option("--conclusion", opt.conclusion, "Conclusion attributes")->delimiter(',');
  auto* certain_flag = rules_cmd->add_flag("--certain", opt.certain, "Holds in the lower context");
  auto* possible_flag =
      rules_cmd->add_flag("--possible", opt.possible, "Holds in the upper context");
  auto* measure_flag = rules_cmd->add_flag("--measure", opt.measure, "Rough measure k");
  certain_flag->excludes(possible_flag)->excludes(measure_flag);
  possible_flag->excludes(measure_flag);

  auto* report_cmd = app.add_subcommand("report", "Full analysis as JSON");
  report_cmd->add_option("--premise", opt.premise, "Include this rule")->delimiter(',');
  report_cmd->add_option("--conclusion", opt.conclusion, "Include this rule")->delimiter(',');

  auto* export_cmd = app.add_subcommand("export", "Export a lattice diagram");
  export_cmd->add_flag("--dot", opt.dot, "Graphviz DOT output")->required();
  export_cmd->add_option("--labeling", opt.labeling, "full | reduced")
      ->check(CLI::IsMember({"full", "reduced"}));
  export_cmd->add_option("--which", opt.which, "base | upper | lower")
      ->check(CLI::IsMember({"base", "upper", "lower"}));

  auto* extent_cmd = app.add_subcommand("extent", "Objects having all listed attributes");
  extent_cmd->add_option("--attrs", opt.attrs, "Attributes")->delimiter(',');
  extent_cmd->add_option("--mode", opt.extent_mode, "base | upper | lower")
      ->check(CLI::IsMember({"base", "upper", "lower"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << '\n';
    return exit_usage;
  }

  std::ostringstream buf;
  try {
    Session session(opt);
    const auto& ctx = session.context();

    if (lattice_cmd->parsed()) {
      print_lattice(buf, session.lattice(opt.which));
    } else if (approx_cmd->parsed()) {
      const auto& space = session.space();
      auto approx = opt.approx_mode == "upper" ? upper_context(space, ctx) : lower_context(space, ctx);
      buf << io::render_context(approx, session.format());
    } else if (definable_cmd->parsed()) {
      buf << comma_list(ctx.attribute_names(definable_attributes(session.space(), ctx))) << '\n';
    } else if (assignments_cmd->parsed()) {
      const auto& maps = session.maps();
      const auto kernels = indiscernibility_kernels(maps);
      buf << "# upper assignment (indiscernibility of possibility) " << kernels.possibility.size()
          << '\n';
      print_fibers(buf, kernels.possibility, maps.upper());
      buf << "# lower assignment (indiscernibility of necessity) " << kernels.necessity.size()
          << '\n';
      print_fibers(buf, kernels.necessity, maps.lower());
    } else if (classes_cmd->parsed()) {
      for (const auto& rc : rough_concept_classes(session.maps()))
        buf << index_list(rc.members) << "\tupper=" << rc.upper_image
            << "\tlower=" << rc.lower_image << '\n';
    } else if (rules_cmd->parsed()) {
      Implication imp{ctx.attribute_set(opt.premise), ctx.attribute_set(opt.conclusion)};
      if (opt.measure)
        buf << rough_measure(ctx, imp).to_string() << '\n';
      else if (opt.certain)
        buf << std::boolalpha << certain_rule(session.space(), ctx, imp) << '\n';
      else if (opt.possible)
        buf << std::boolalpha << possible_rule(session.space(), ctx, imp) << '\n';
      else
        buf << std::boolalpha << implication_holds(ctx, imp) << '\n';
    } else if (report_cmd->parsed()) {
      std::vector<Implication> rules;
      if (!opt.premise.empty() || !opt.conclusion.empty())
        rules.push_back({ctx.attribute_set(opt.premise), ctx.attribute_set(opt.conclusion)});
      buf << io::render_report(session.maps(), rules);
    } else if (export_cmd->parsed()) {
      auto labeling = opt.labeling == "full" ? io::Labeling::full : io::Labeling::reduced;
      buf << io::export_dot(session.lattice(opt.which), labeling);
    } else if (extent_cmd->parsed()) {
      const auto attrs = ctx.attribute_set(opt.attrs);
      ObjectSet result = ctx.no_objects();
      if (opt.extent_mode == "base")
        result = derive_extent(ctx, attrs);
      else if (opt.extent_mode == "lower")
        result = extent_lower(session.space(), ctx, attrs);
      else if (opt.strict_upper)
        result = extent_upper_strict(session.space(), ctx, attrs);
      else
        result = extent_upper_free(session.space(), ctx, attrs);
      buf << comma_list(ctx.object_names(result)) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << one_line(e.what()) << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << '\n';
    return exit_semantic;
  }

  out << buf.str();
  return exit_ok;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace rca::cli
