// k0: Grothendieck groups and Grothendieck heaps from presentation files.
//
// Exit codes: 0 success / PASS, 1 mathematical failure, 2 input error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "k0/abheap.hpp"
#include "k0/error.hpp"
#include "k0/grothendieck.hpp"
#include "k0/heap_core.hpp"
#include "k0/io.hpp"
#include "k0/toycats.hpp"

namespace {

using nlohmann::json;
using namespace k0;

constexpr int kOk = 0;
constexpr int kMathFail = 1;
constexpr int kInputError = 2;

json integer_json(const linalg::Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json vector_json(const linalg::IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

json matrix_json(const linalg::IntegerMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row_vector(i)));
  return out;
}

json invariants_json(const linalg::AbelianInvariants& inv) {
  return {{"group", inv.to_string()}, {"free_rank", inv.free_rank}, {"invariant_factors", vector_json(inv.torsion)}};
}

std::string factors_text(const linalg::AbelianInvariants& inv) {
  if (inv.torsion.empty()) return "none";
  std::string s;
  for (const auto& d : inv.torsion) s += (s.empty() ? "" : " ") + d.get_str();
  return s;
}

// Collects a report once and prints it as text lines or sorted-key JSON.
struct Report {
  json data = json::object();
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }
  void print(bool as_json) const {
    if (as_json) {
      std::cout << data.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
};

io::PresentationFile load(const std::string& path) { return io::parse_presentation(io::read_file(path)); }

bool all_bicartesian(const std::vector<grothendieck::PushoutSquare>& squares) {
  return !squares.empty() && std::all_of(squares.begin(), squares.end(), [](const auto& s) {
    return s.kind == grothendieck::SquareKind::Bicartesian;
  });
}

grothendieck::HeapK0 build_heap(const io::PresentationFile& f) {
  return all_bicartesian(f.heap_relations) ? grothendieck::heap_k0_stable(f.generators, f.heap_relations)
                                           : grothendieck::heap_k0(f.generators, f.heap_relations);
}

int cmd_heap(const std::string& path, bool as_json) {
  auto f = load(path);
  auto heap = build_heap(f);
  const auto& inv = heap.torsor.invariants();
  const std::string setting = all_bicartesian(f.heap_relations) ? "stable" : "waldhausen";
  Report r;
  r.data = {{"command", "heap"},
            {"generators", f.generators.size()},
            {"relations", f.heap_relations.size()},
            {"setting", setting},
            {"empty_heap", heap.torsor.empty_heap},
            {"torsor", invariants_json(inv)}};
  r.line("generators: " + std::to_string(f.generators.size()));
  r.line("relations: " + std::to_string(f.heap_relations.size()));
  r.line("setting: " + setting);
  if (heap.torsor.empty_heap) {
    r.line("empty heap");
  } else {
    r.line("torsor over " + inv.to_string());
  }
  r.line("free rank: " + std::to_string(inv.free_rank));
  r.line("invariant factors: " + factors_text(inv));
  r.print(as_json);
  return kOk;
}

int cmd_group(const std::string& path, bool as_json) {
  auto f = load(path);
  auto k0 = grothendieck::classical_k0(f.generators, f.group_relations);
  const auto& inv = k0.invariants();
  Report r;
  r.data = {{"command", "group"},
            {"generators", f.generators.size()},
            {"relations", f.group_relations.size()},
            {"group", invariants_json(inv)}};
  r.line("generators: " + std::to_string(f.generators.size()));
  r.line("relations: " + std::to_string(f.group_relations.size()));
  r.line("group " + inv.to_string());
  r.line("free rank: " + std::to_string(inv.free_rank));
  r.line("invariant factors: " + factors_text(inv));
  r.print(as_json);
  return kOk;
}

int cmd_retract(const std::string& path, const std::string& at, bool as_json) {
  auto f = load(path);
  auto heap = build_heap(f);
  auto retract = abheap::retract_at(heap.presentation, at);
  const auto& inv = retract.group().invariants();
  Report r;
  json classes = json::object();
  r.line("retract at " + at);
  r.line("group " + inv.to_string());
  r.line("free rank: " + std::to_string(inv.free_rank));
  r.line("invariant factors: " + factors_text(inv));
  r.line("generator classes:");
  for (const auto& g : f.generators) {
    auto coords = retract.coordinates(abheap::HeapElement::generator(heap.presentation, g));
    classes[g] = vector_json(coords);
    r.line("  " + g + " -> " + linalg::to_string(coords));
  }
  r.data = {{"command", "retract"}, {"at", at}, {"group", invariants_json(inv)}, {"generator_classes", classes}};
  r.print(as_json);
  return kOk;
}

int cmd_verify(const std::string& path, bool as_json) {
  auto f = load(path);
  if (!f.zero) throw InputError("missing field \"zero\": verify needs pointed data");
  auto v = grothendieck::verify_theorem(f.generators, *f.zero, f.heap_relations, f.group_relations);
  Report r;
  r.data = {{"command", "verify"},
            {"verdict", v.pass ? "PASS" : "FAIL"},
            {"setting", v.stable ? "stable" : "waldhausen"},
            {"heap_relations", v.heap_relations},
            {"registered_cofibers", v.registered_cofibers},
            {"retract", invariants_json(v.retract_invariants)},
            {"classical", invariants_json(v.classical_invariants)},
            {"psi", matrix_json(v.psi)}};
  r.line("setting: " + std::string(v.stable ? "stable" : "waldhausen"));
  r.line("heap relations: " + std::to_string(v.heap_relations) + " (" + std::to_string(v.registered_cofibers) +
         " from cofiber sequences)");
  r.line("retract at " + *f.zero + ": " + v.retract_invariants.to_string());
  r.line("classical K0: " + v.classical_invariants.to_string());
  if (v.witness) {
    r.data["witness"] = {{"check", v.witness->check},
                         {"description", v.witness->description},
                         {"vector", vector_json(v.witness->vector)}};
    r.line("witness (" + v.witness->check + "): " + v.witness->description);
    if (!v.witness->vector.empty()) r.line("  vector " + linalg::to_string(v.witness->vector));
  }
  r.line(v.pass ? "PASS" : "FAIL");
  r.print(as_json);
  return v.pass ? kOk : kMathFail;
}

int cmd_gen(const std::string& kind_name, int bound, bool bicartesian, const std::string& output) {
  auto data = toycats::generate(toycats::parse_kind(kind_name), bound, bicartesian);
  const std::string text = io::serialize(io::from_category(data));
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw InputError("cannot write " + output);
    out << text;
  }
  return kOk;
}

int cmd_map(const std::string& src_path, const std::string& dst_path, const std::string& map_path,
            const std::string& mode_name, bool as_json) {
  auto src = load(src_path);
  auto dst = load(dst_path);
  auto mapping = io::parse_mapping(io::read_file(map_path));
  if (mode_name != "heap" && mode_name != "group") throw InputError("--mode must be heap or group");
  const auto mode = mode_name == "heap" ? grothendieck::MapMode::Heap : grothendieck::MapMode::Group;
  auto m = grothendieck::induced_map({src.generators, src.group_relations, src.heap_relations},
                                     {dst.generators, dst.group_relations, dst.heap_relations}, mapping, mode);
  Report r;
  r.data = {{"command", "map"},
            {"mode", mode_name},
            {"valid", m.valid},
            {"generator_matrix", matrix_json(m.generator_matrix)}};
  r.line("mode: " + mode_name);
  if (m.valid) {
    r.data["matrix"] = matrix_json(m.matrix);
    r.line("valid: yes");
    r.line("induced matrix: " + m.matrix.to_string());
    if (m.basepoint_image) {
      r.data["basepoint_image"] = *m.basepoint_image;
      r.line("basepoint " + src.generators.front() + " -> " + *m.basepoint_image);
    }
  } else {
    r.data["witness"] = {{"relation", m.witness->relation}, {"image", vector_json(m.witness->image)}};
    r.line("valid: no");
    r.line("relation not preserved: " + m.witness->relation);
    r.line("  image " + linalg::to_string(m.witness->image) + " is not a target relation");
  }
  r.print(as_json);
  return m.valid ? kOk : kMathFail;
}

int cmd_axioms(const std::string& path, bool as_json) {
  auto table = io::parse_heap_table(io::read_file(path));
  auto report = heap::check_heap_axioms(table);
  Report r;
  json violations = json::array();
  r.line("elements: " + std::to_string(table.size()));
  if (report.empty_heap) r.line("note: empty heap, axioms hold vacuously");
  for (const auto& v : report.violations) {
    json args = json::array();
    for (auto a : v.arguments) args.push_back(table.label(a));
    violations.push_back({{"law", v.law == heap::AxiomViolation::Law::Associativity ? "associativity"
                                  : v.law == heap::AxiomViolation::Law::LeftUnitality ? "left_unitality"
                                                                                       : "right_unitality"},
                          {"arguments", args},
                          {"triple", {table.label(v.triple[0]), table.label(v.triple[1]), table.label(v.triple[2])}},
                          {"got", table.label(v.got)},
                          {"expected", table.label(v.expected)},
                          {"description", v.describe(table)}});
    r.line("violation: " + v.describe(table));
  }
  std::optional<bool> abelian;
  if (report.pass()) abelian = heap::check_abelian(table);
  if (abelian) r.line(std::string("abelian: ") + (*abelian ? "yes" : "no"));
  r.line(report.pass() ? "PASS" : "FAIL");
  r.data = {{"command", "axioms"},
            {"elements", table.size()},
            {"empty_heap", report.empty_heap},
            {"verdict", report.pass() ? "PASS" : "FAIL"},
            {"violations", violations}};
  if (abelian) r.data["abelian"] = *abelian;
  r.print(as_json);
  return report.pass() ? kOk : kMathFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck groups and Grothendieck heaps of desk-scale categories"};
  app.require_subcommand(1);

  std::string file, file2, on, at, kind, output, mode = "heap", format = "text";
  int bound = -1;
  bool bicartesian = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* heap = app.add_subcommand("heap", "Grothendieck heap of a presentation file");
  heap->add_option("file", file, "Presentation file")->required();
  add_format(heap);

  auto* group = app.add_subcommand("group", "Classical Grothendieck group from group_relations");
  group->add_option("file", file, "Presentation file")->required();
  add_format(group);

  auto* retract = app.add_subcommand("retract", "Retract of the Grothendieck heap at a generator");
  retract->add_option("file", file, "Presentation file")->required();
  retract->add_option("--at", at, "Basepoint label")->required();
  add_format(retract);

  auto* verify = app.add_subcommand("verify", "Check that the retract at zero is the classical group");
  verify->add_option("file", file, "Presentation file with zero, heap and group relations")->required();
  add_format(verify);

  auto* gen = app.add_subcommand("gen", "Emit a presentation file for a built-in category");
  gen->add_option("kind", kind, "finset | pointed_finset | free_module_trunc")->required();
  gen->add_option("--bound", bound, "Largest class (cardinality or rank)")->required()->check(CLI::NonNegativeNumber);
  gen->add_flag("--bicartesian", bicartesian, "Annotate squares as bicartesian (stable setting)");
  gen->add_option("-o,--output", output, "Output path (default stdout)");

  auto* map = app.add_subcommand("map", "Morphism induced by a generator map");
  map->add_option("source", file, "Source presentation file")->required();
  map->add_option("target", file2, "Target presentation file")->required();
  map->add_option("--on", on, "Mapping file")->required();
  map->add_option("--mode", mode, "heap | group")->check(CLI::IsMember({"heap", "group"}));
  add_format(map);

  auto* axioms = app.add_subcommand("axioms", "Check the heap axioms of a finite bracket table");
  axioms->add_option("table", file, "Heap table file")->required();
  add_format(axioms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const bool as_json = format == "json";
  try {
    if (*heap) return cmd_heap(file, as_json);
    if (*group) return cmd_group(file, as_json);
    if (*retract) return cmd_retract(file, at, as_json);
    if (*verify) return cmd_verify(file, as_json);
    if (*gen) return cmd_gen(kind, bound, bicartesian, output);
    if (*map) return cmd_map(file, file2, on, mode, as_json);
    if (*axioms) return cmd_axioms(file, as_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
