// Command-line front end: build, validate, bound, invariant, export, demo.
#include <iostream>

#include <CLI11.hpp>

#include "latstick/bounds.hpp"
#include "latstick/diagram_invariants.hpp"
#include "latstick/fixtures.hpp"
#include "latstick/io.hpp"
#include "latstick/lattice_build.hpp"

using namespace latstick;

namespace {

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kSyntax = 2;

void print_counts(const StickCounts& c) {
  std::cout << "sticks: " << c.total << " (x " << c.x << ", y " << c.y << ", z " << c.z << ")\n";
}

void print_bound(const BoundReport& b) {
  std::cout << "construction bound: " << b.construction << "\n";
  if (b.theorem) {
    std::cout << "crossing bound: " << *b.theorem << (b.arc_witness_within_bound ? "" : " (not applicable)") << "\n";
  } else {
    std::cout << "crossing bound: n/a (no crossing count given)\n";
  }
}

int cmd_build(const std::string& input, const std::string& output) {
  const auto spec = parse_input(read_json(input));
  const auto r = build_full(spec);
  write_text(output, embedding_to_json(r.embedding, r.counts, &r.bound).dump(2) + "\n");
  print_counts(r.counts);
  print_bound(r.bound);
  std::cout << "merges: " << r.merges.merge_count() << ", connectors: " << r.connectors
            << ", straightened arcs: " << r.straighten.straightened << "\n";
  for (const auto& s : r.slides) {
    for (const auto& b : s.blocked) std::cout << "note: slide skipped: " << b << "\n";
  }
  for (const auto& w : r.straighten.warnings) std::cout << "warning: " << w << "\n";
  return kOk;
}

int cmd_validate(const std::string& embedding, const std::string& input) {
  const auto emb = parse_embedding(read_json(embedding));
  const auto spec = parse_input(read_json(input));
  const auto spec_report = validate_spec(spec);
  if (!spec_report.ok()) {
    std::cout << "invalid input: " << spec_report.violations.front().message << "\n";
    return kSemantic;
  }
  const auto consistency = check_consistency(emb);
  for (const auto& v : consistency.violations) std::cout << "inconsistent " << v.code << ": " << v.message << "\n";

  const auto complex = to_complex(emb);
  const auto a = audit(complex, spec);
  std::cout << "self-avoiding: " << (a.self_avoiding ? "yes" : "no") << "\n";
  for (const auto& c : a.violations) std::cout << "  " << c.kind << " at " << c.where << "\n";
  std::cout << "junctions: " << (a.junction_issues.ok() ? "ok" : "FAIL") << "\n";
  for (const auto& v : a.junction_issues.violations) std::cout << "  " << v.code << ": " << v.message << "\n";
  std::cout << "reconstruction: " << (a.reconstruction_ok ? "ok" : "FAIL") << "\n";
  for (const auto& v : a.reconstruction_issues.violations) std::cout << "  " << v.code << ": " << v.message << "\n";
  print_counts(a.counts);
  const auto bound = evaluate_bound(a.counts, census(spec), spec.declared_crossings);
  print_bound(bound);

  std::string first;
  if (!consistency.ok()) first = "inconsistent document";
  else if (!a.self_avoiding) first = "not self-avoiding";
  else if (!a.junction_issues.ok()) first = "junction audit";
  else if (!a.reconstruction_ok) first = "reconstruction mismatch";
  else if (!bound.ok()) first = "bound violated";
  if (!first.empty()) {
    std::cout << "FAIL: " << first << "\n";
    return kSemantic;
  }
  std::cout << "OK\n";
  return kOk;
}

int cmd_bound(const std::string& input, std::optional<int> crossings) {
  const auto spec = parse_input(read_json(input));
  const auto report = validate_spec(spec);
  if (!report.ok()) {
    std::cout << "invalid input: " << report.violations.front().message << "\n";
    return kSemantic;
  }
  const auto c = census(spec);
  std::cout << "e " << c.e << ", v " << c.v << ", s " << c.s << ", b " << c.b << ", k " << c.k << ", alpha "
            << c.alpha_total << "\n";
  for (const auto& comp : spec.components) {
    const auto edges = static_cast<std::int64_t>(derive_edges(comp).size());
    std::cout << "component " << comp.id << " (" << to_string(classify_component(comp, spec.attachments))
              << "): binding points " << comp.presentation.beta() << ", lemma "
              << lemma_binding(comp.presentation.alpha(), comp.presentation.labeled_count(), edges) << "\n";
  }
  std::cout << "construction bound: " << construction_count(c.alpha_total, c.e, c.v, c.s, c.k) << "\n";
  if (crossings) std::cout << "crossing bound: " << main_upper(*crossings, c.e, c.v, c.s, c.b, c.k) << "\n";
  return kOk;
}

int cmd_invariant(const std::string& embedding, const std::string& component) {
  const auto emb = parse_embedding(read_json(embedding));
  const auto diagram = project_generic(emb, component);
  const auto gauss = extract_knot_cycle(diagram);
  std::cout << "crossings: " << crossing_count(diagram) << "\n";
  std::cout << "determinant: " << knot_determinant(gauss) << "\n";
  return kOk;
}

int cmd_export(const std::string& embedding, const std::string& format, const std::string& output) {
  if (format != "obj") {
    std::cerr << "unknown format '" << format << "'\n";
    return kSyntax;
  }
  write_text(output, to_obj(parse_embedding(read_json(embedding))));
  return kOk;
}

int cmd_demo(const std::string& name, const std::string& output) {
  const auto spec = demo_fixture(name);
  if (!spec) {
    std::cerr << "unknown demo '" << name << "'\n";
    return kSyntax;
  }
  write_text(output, input_to_json(*spec).dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice stick embeddings of spatial graphs from arc presentations"};
  app.require_subcommand(1);

  std::string input, output, embedding, component, format = "obj", name;
  std::optional<int> crossings;

  auto* build = app.add_subcommand("build", "Build a lattice embedding from an input document");
  build->add_option("--input", input)->required();
  build->add_option("--output", output)->required();

  auto* validate = app.add_subcommand("validate", "Audit an embedding against its input document");
  validate->add_option("--embedding", embedding)->required();
  validate->add_option("--input", input)->required();

  auto* bound = app.add_subcommand("bound", "Print census and bounds for an input document");
  bound->add_option("--input", input)->required();
  bound->add_option("--crossings", crossings)->check(CLI::NonNegativeNumber);

  auto* invariant = app.add_subcommand("invariant", "Crossings and determinant of one knot component");
  invariant->add_option("--embedding", embedding)->required();
  invariant->add_option("--component", component)->required();

  auto* exp = app.add_subcommand("export", "Export an embedding");
  exp->add_option("--embedding", embedding)->required();
  exp->add_option("--format", format);
  exp->add_option("--output", output)->required();

  auto* demo = app.add_subcommand("demo", "Write a built-in input document");
  demo->add_option("--name", name)->required();
  demo->add_option("--output", output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSyntax;
  }

  try {
    if (*build) return cmd_build(input, output);
    if (*validate) return cmd_validate(embedding, input);
    if (*bound) return cmd_bound(input, crossings);
    if (*invariant) return cmd_invariant(embedding, component);
    if (*exp) return cmd_export(embedding, format, output);
    if (*demo) return cmd_demo(name, output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? kSyntax : kSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kSyntax;
}
