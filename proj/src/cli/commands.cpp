#include "ultra/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ultra/analysis.hpp"
#include "ultra/cli/document.hpp"
#include "ultra/cli/report.hpp"
#include "ultra/errors.hpp"
#include "ultra/groupoid.hpp"
#include "ultra/semigroup.hpp"

namespace ultra::cli {

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  bool timing = false;
  std::string file;
  std::size_t max_size = kDefaultLatticeLimit;
  std::size_t max_len = 2;
  std::string check = "all";
  std::size_t prefix_bound = 2;
  std::size_t cycle_bound = 3;
  std::size_t depth = 2;
  std::size_t loop_bound = 0;
  std::size_t window = 1;
  std::string out_file;
};

/// Input errors that map to exit code 2.
struct InputError {
  std::string message;
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

UltragraphDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot read file"};
  std::ostringstream text;
  text << in.rdbuf();
  auto doc = parse(text.str());
  if (!doc.ok()) {
    std::vector<std::string> lines;
    for (const auto& d : doc.errors) {
      lines.push_back(path + ":" + (d.line > 0 ? std::to_string(d.line) + ": " : " ") + d.message);
    }
    throw InputError{join(lines, "\n")};
  }
  return doc;
}

// --- subcommands -----------------------------------------------------------

void cmd_validate(const Options&, const UltragraphDocument& doc, Report& r) {
  const auto v = validate(*doc.graph);
  CheckResult c("validation");
  c.cases = doc.description.vertices.size() + doc.description.edges.size();
  c.detail("sinks", join(v.sinks, " "));
  c.detail("singular_vertices", join(v.singular_vertices, " "));
  for (std::size_t i = 0; i < doc.warnings.size(); ++i) {
    c.detail("warning." + std::to_string(i), format_diagnostic(doc.warnings[i]));
  }
  r.checks.push_back(std::move(c));
}

void cmd_lattice(const Options& o, const UltragraphDocument& doc, Report& r) {
  const auto& g = *doc.graph;
  CheckResult c("lattice");
  try {
    const auto lat = generate_lattice(g, o.max_size);
    c.cases = lat.size() * lat.size();
    if (!is_closed_under_union_intersection(lat)) c.fail("not closed under pairwise union/intersection");
    c.detail("size", std::to_string(lat.size()));
    for (std::size_t i = 0; i < lat.size(); ++i) {
      c.detail("set." + std::to_string(i), g.format_set(lat.sets()[i]) + " " + to_string(lat.origin(i)));
    }
  } catch (const SizeLimitError& e) {
    c.fail(e.what());
  }
  r.checks.push_back(std::move(c));
}

void cmd_paths(const Options& o, const UltragraphDocument& doc, Report& r) {
  const auto& g = *doc.graph;
  const auto lat = generate_lattice(g);
  const auto paths = enumerate_paths(g, lat, o.max_len);
  CheckResult c("paths");
  c.cases = paths.size();
  std::map<std::size_t, std::size_t> by_length;
  for (const auto& p : paths) {
    ++by_length[p.length()];
    if (!is_valid(g, lat, p)) c.fail("invalid ultrapath " + format(g, p));
  }
  c.detail("max_len", std::to_string(o.max_len));
  c.detail("count", std::to_string(paths.size()));
  for (const auto& [len, n] : by_length) c.detail("count.length_" + std::to_string(len), std::to_string(n));
  for (std::size_t i = 0; i < paths.size(); ++i) c.detail("path." + std::to_string(i), format(g, paths[i]));
  r.checks.push_back(std::move(c));
}

void cmd_semigroup(const Options& o, const UltragraphDocument& doc, Report& r) {
  const auto& g = *doc.graph;
  const auto lat = generate_lattice(g);
  const auto elements = element_set(g, lat, o.max_len);
  const bool all = o.check == "all";
  auto add = [&](CheckResult c) {
    c.detail("elements", std::to_string(elements.size()));
    r.checks.push_back(std::move(c));
  };
  if (all || o.check == "assoc") {
    add(check_associativity(g, elements));
    add(check_rule_agreement(g, elements));
  }
  if (all || o.check == "inverse") {
    add(check_unique_inverse(g, elements));
    add(check_idempotents(g, elements));
  }
  if (all || o.check == "order") add(check_order_coherence(g, elements));
  if (all || o.check == "filters") {
    g.require_no_sinks("semigroup --check filters");
    add(check_filter_injectivity(g, lat, o.max_len, 1, 3, o.max_len + 1));
  }
}

void cmd_groupoid(const Options& o, const UltragraphDocument& doc, Report& r) {
  const auto& g = *doc.graph;
  g.require_no_sinks("groupoid");
  const auto lat = generate_lattice(g);
  CheckResult y("unit_space");
  ++y.cases;
  if (!compute_Y_infinity(g, lat, o.max_len).empty()) y.fail("Y_infinity is nonempty");
  y.detail("Y_infinity", "empty");
  r.checks.push_back(std::move(y));

  const auto sample = sample_elements(g, lat, o.max_len, o.prefix_bound, o.cycle_bound);
  for (auto c : {check_groupoid_laws(g, sample),
                 check_bisection_homomorphism(g, lat, o.max_len, sample),
                 check_bisection_intersections(g, lat, o.max_len, sample),
                 check_separation(g, sample)}) {
    c.detail("prefix_bound", std::to_string(o.prefix_bound));
    c.detail("cycle_bound", std::to_string(o.cycle_bound));
    r.checks.push_back(std::move(c));
  }
}

void cmd_ck(const Options& o, const UltragraphDocument& doc, Report& r) {
  const auto& g = *doc.graph;
  g.require_no_sinks("ck");
  const auto lat = generate_lattice(g);
  const auto family = ck_family(g, lat);
  auto report = verify_ck(g, lat, family, o.depth);
  for (auto& c : report.checks) {
    c.detail("depth", std::to_string(o.depth));
    r.checks.push_back(std::move(c));
  }
  for (std::size_t d = 1; d <= o.depth; ++d) {
    auto c = check_projection_identities(g, lat, d);
    c.name += "_depth_" + std::to_string(d);
    r.checks.push_back(std::move(c));
  }
  r.facts.emplace_back("ck.projections", std::to_string(family.projections.size()));
  r.facts.emplace_back("ck.isometries", std::to_string(family.isometries.size()));
}

void cmd_analyze(const Options& o, const UltragraphDocument& doc, Report& r) {
  const auto& g = *doc.graph;
  const auto lat = generate_lattice(g);
  const auto report = simplicity_verdict(g, lat, o.loop_bound);

  CheckResult k("condition_K");
  k.cases = g.vertex_count();
  k.detail("bound", std::to_string(report.condition_K.bound));
  for (VertexId v : g.vertices()) {
    std::vector<std::string> loops;
    for (const auto& l : report.condition_K.loops[v.value]) loops.push_back(g.format_word(l.word));
    k.detail("loops." + g.vertex_name(v), join(loops, " "));
  }
  for (VertexId v : report.condition_K.failing) {
    k.fail(g.vertex_name(v) + " hosts exactly one loop");
  }
  r.checks.push_back(std::move(k));

  CheckResult c("cofinal");
  c.cases = g.vertex_count();
  c.detail("method", "no cycle among edges whose source v does not reach, for every v");
  if (!report.cofinal.holds) {
    c.fail(g.vertex_name(*report.cofinal.vertex) + " misses the cycle " +
           g.format_word(report.cofinal.cycle));
  }
  r.checks.push_back(std::move(c));

  CheckResult c2("condition_2");
  c2.cases = lat.size();
  c2.detail("vacuous", report.condition_2.vacuous ? "true" : "false");
  if (!report.condition_2.holds) c2.fail("some vertex does not reach an infinite-emitter set");
  r.checks.push_back(std::move(c2));

  CheckResult s("simplicity_verdict");
  s.cases = 3;
  s.detail("verdict", to_string(report.simplicity));
  s.detail("essentially_principal", report.essentially_principal ? "true" : "false");
  for (const auto& reason : report.reasons) s.fail(reason);
  r.checks.push_back(std::move(s));

  r.facts.emplace_back("loop_free", report.loop_free ? "true" : "false");
  r.facts.emplace_back("simplicity", to_string(report.simplicity));
  r.facts.emplace_back("amenable", "true (a theorem for every ultragraph groupoid; not computed)");
}

void cmd_skew(const Options& o, const UltragraphDocument& doc, Report& r, std::ostream& out,
              bool& report_suppressed) {
  const auto& g = *doc.graph;
  const auto s = skew_product(g, o.window);
  const std::string text = emit(s.graph);

  CheckResult lf("skew_loop_free");
  lf.cases = s.graph.vertex_count();
  if (!is_loop_free(s.graph)) lf.fail("skew product hosts a loop");
  lf.detail("window", std::to_string(o.window));
  lf.detail("vertices", std::to_string(s.graph.vertex_count()));
  lf.detail("edges", std::to_string(s.graph.edge_count()));
  r.checks.push_back(std::move(lf));

  CheckResult rt("round_trip");
  ++rt.cases;
  const auto again = parse(text);
  if (!again.ok() || emit(*again.graph) != text) rt.fail("emitted document does not re-parse");
  r.checks.push_back(std::move(rt));

  if (o.window >= 2) {
    CheckResult se("singular_equivalence");
    ++se.cases;
    if (!check_singular_equivalence(g, o.window)) se.fail("interior regularity differs from g");
    if (!check_skew_fibers(g, o.window)) se.fail("an interior source fibre differs from g");
    r.checks.push_back(std::move(se));
  }

  if (o.out_file == "-") {
    out << text;
    report_suppressed = true;
  } else if (!o.out_file.empty()) {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!(f << text)) throw InputError{o.out_file + ": cannot write file"};
    r.facts.emplace_back("written", o.out_file);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Combinatorial checks for finite ultragraphs", "ultra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Sampling seed (all current checks are exhaustive)");
  app.add_flag("--timing", o.timing, "Include wall-clock timing in the report");

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("FILE", o.file, "Ultragraph document")->required();
    return sub;
  };
  auto* validate_cmd = file_arg(app.add_subcommand("validate", "Structural validation"));
  auto* lattice_cmd = file_arg(app.add_subcommand("lattice", "Generate the lattice of vertex sets"));
  lattice_cmd->add_option("--max-size", o.max_size, "Refuse lattices larger than this");
  auto* paths_cmd = file_arg(app.add_subcommand("paths", "Enumerate ultrapaths"));
  paths_cmd->add_option("--max-len", o.max_len)->required();
  auto* semi_cmd = file_arg(app.add_subcommand("semigroup", "Inverse semigroup law checks"));
  semi_cmd->add_option("--max-len", o.max_len)->required();
  semi_cmd->add_option("--check", o.check)
      ->check(CLI::IsMember({"all", "assoc", "inverse", "order", "filters"}));
  auto* groupoid_cmd = file_arg(app.add_subcommand("groupoid", "Sampled groupoid checks"));
  groupoid_cmd->add_option("--prefix-bound", o.prefix_bound)->required();
  groupoid_cmd->add_option("--cycle-bound", o.cycle_bound)->required();
  groupoid_cmd->add_option("--max-len", o.max_len, "Witness length bound");
  auto* ck_cmd = file_arg(app.add_subcommand("ck", "Verify the Cuntz-Krieger family"));
  ck_cmd->add_option("--depth", o.depth)->required();
  auto* analyze_cmd = file_arg(app.add_subcommand("analyze", "Condition (K), cofinality, simplicity"));
  analyze_cmd->add_option("--loop-bound", o.loop_bound, "Loop length bound (default 2|E|)");
  auto* skew_cmd = file_arg(app.add_subcommand("skew", "Skew product over a window of levels"));
  skew_cmd->add_option("--window", o.window)->required()->check(CLI::PositiveNumber);
  skew_cmd->add_option("--out", o.out_file, "Write the skew document here ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "ultra: " << e.what() << "\n";
    return kExitInputError;
  }

  const std::map<CLI::App*, std::function<void(const Options&, const UltragraphDocument&, Report&)>>
      handlers{{validate_cmd, cmd_validate}, {lattice_cmd, cmd_lattice}, {paths_cmd, cmd_paths},
               {semi_cmd, cmd_semigroup},    {groupoid_cmd, cmd_groupoid}, {ck_cmd, cmd_ck},
               {analyze_cmd, cmd_analyze}};

  bool suppressed = false;
  Report report;
  report.command = join(args, " ");
  report.graph_file = o.file;
  try {
    const auto start = std::chrono::steady_clock::now();
    const auto doc = load(o.file);
    report.vertices = doc.graph->vertex_count();
    report.edges = doc.graph->edge_count();
    CLI::App* sub = app.get_subcommands().front();
    if (sub == skew_cmd) {
      cmd_skew(o, doc, report, out, suppressed);
    } else {
      handlers.at(sub)(o, doc, report);
    }
    if (o.seed != 0) report.facts.emplace_back("seed", std::to_string(o.seed));
    if (o.timing) {
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      report.timing_ms = ms.count();
    }
  } catch (const InputError& e) {
    err << e.message << "\n";
    return kExitInputError;
  } catch (const SinksPresentError& e) {
    err << o.file << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << o.file << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const SizeLimitError& e) {
    err << o.file << ": " << e.what() << "\n";
    return kExitCheckFailed;
  }

  std::ostream& sink = suppressed ? err : out;
  sink << (o.format == "json" ? render_json(report) : render_text(report));
  return report.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace ultra::cli
