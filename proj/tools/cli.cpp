#include "cli.hpp"

#include <filesystem>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "specsl/constructions.hpp"
#include "specsl/extension.hpp"
#include "specsl/io.hpp"
#include "specsl/morphisms.hpp"

namespace specsl::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

// "@name" is a named example, "@random:SEED:MAX" a generated structure,
// anything else a path (relative refs resolve against `base`).
json load_ref(const std::string& ref, const fs::path& base = {}) {
  if (!ref.empty() && ref[0] == '@') {
    const std::string name = ref.substr(1);
    if (name.rfind("random:", 0) == 0) {
      const auto colon = name.find(':', 7);
      if (colon == std::string::npos) throw StructuralError("expected @random:SEED:MAX");
      try {
        const auto seed = std::stoull(name.substr(7, colon - 7));
        const int max = std::stoi(name.substr(colon + 1));
        return io::to_json(random_structure(seed, max));
      } catch (const std::logic_error&) {
        throw StructuralError("bad random reference: " + ref);
      }
    }
    return io::to_json(named_example(name));
  }
  fs::path p(ref);
  if (p.is_relative() && !base.empty()) p = base / p;
  return io::read_file(p);
}

fs::path dir_of(const std::string& ref) {
  if (!ref.empty() && ref[0] == '@') return {};
  return fs::path(ref).parent_path();
}

SpecSemilattice spec_of(const json& j) {
  if (io::is_extension(j)) return io::extension_from_json(j).tilde_spec;
  return io::structure_from_json(j).spec;
}

ClosureSemilattice closure_of_doc(const json& j) {
  auto doc = io::structure_from_json(j);
  if (doc.closure) return *doc.closure;
  if (!is_principal(doc.spec)) throw PreconditionError("target is not principal");
  return to_closure_semilattice(doc.spec);
}

std::string render_map(const std::vector<int>& map) {
  std::string s = "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(map[i]);
  }
  return s + "]";
}

struct Flags {
  bool json_out = false;
  bool serial = false;
  std::uint64_t budget = 10'000'000;
  int max_size = 12;
};

int cmd_validate(const std::string& file, const Flags& f, std::ostream& out) {
  const json j = load_ref(file);
  ValidationReport report;
  if (io::is_extension(j)) {
    const auto ext = io::extension_from_json(j);
    report = validate(ext.tilde);
    for (auto& v : validate(ext.tilde_spec).violations) report.violations.push_back(v);
  } else {
    const auto doc = io::structure_from_json(j);
    if (doc.closure) report = validate(*doc.closure);
    for (auto& v : validate(doc.spec).violations) report.violations.push_back(v);
  }
  if (f.json_out) out << io::to_json(report).dump() << '\n';
  else out << report.summary() << '\n';
  return report.ok() ? kOk : kSemantic;
}

int cmd_extend(const std::string& file, const std::string& out_file, const Flags& f,
               std::ostream& out) {
  const auto s = io::structure_from_json(load_ref(file)).spec;
  ExtensionOptions opts;
  opts.max_size = f.max_size;
  opts.parallel = !f.serial;
  const auto ext = build_extension(s, opts);
  const json j = io::to_json(ext);
  if (out_file.empty()) out << j.dump(2) << '\n';
  else io::write_file(out_file, j);
  return kOk;
}

int cmd_lift(const std::string& ext_file, const std::string& target_file,
             const std::string& morphism_file, const Flags& f, std::ostream& out) {
  const auto ext = io::extension_from_json(load_ref(ext_file));
  const auto t = closure_of_doc(load_ref(target_file));
  const auto doc = io::morphism_from_json(load_ref(morphism_file));
  const auto declared = io::structure_from_json(load_ref(doc.source, dir_of(morphism_file))).spec;
  if (!(declared == ext.source))
    throw StructuralError("morphism source does not match the extension's source");

  const auto lifted = lift_homomorphism(ext, t, doc.morphism);
  const json j = io::to_json(io::MorphismDocument{ext_file, target_file, lifted});
  if (f.json_out) out << j.dump() << '\n';
  else out << j.dump(2) << '\n';
  return kOk;
}

int cmd_check_universal(const std::string& file, const std::string& target_file,
                        const Flags& f, std::ostream& out) {
  const json j = load_ref(file);
  ExtensionResult ext;
  if (io::is_extension(j)) {
    ext = io::extension_from_json(j);
  } else {
    ExtensionOptions opts;
    opts.max_size = f.max_size;
    opts.parallel = !f.serial;
    ext = build_extension(io::structure_from_json(j).spec, opts);
  }
  const auto t = closure_of_doc(load_ref(target_file));
  HomSearchOptions search;
  search.budget = f.budget;
  search.parallel = !f.serial;
  const auto report = check_universal_property(ext, t, search);

  json r = {{"status", report.holds ? "pass" : "fail"},
            {"homomorphisms", report.homomorphisms},
            {"liftable", report.liftable}};
  if (report.counterexample) {
    r["counterexample"] = {{"map", report.counterexample->map},
                           {"factorizations", report.counterexample_factorizations},
                           {"reason", report.reason}};
  }
  if (f.json_out) {
    out << r.dump() << '\n';
  } else {
    out << (report.holds ? "pass" : "fail") << ": " << report.homomorphisms
        << " homomorphisms, " << report.liftable << " liftable\n";
    if (report.counterexample)
      out << "counterexample eta = " << render_map(report.counterexample->map) << ": "
          << report.reason << '\n';
  }
  return report.holds ? kOk : kSemantic;
}

int cmd_enum(const std::string& src_file, const std::string& dst_file, bool k_only,
             bool zero_preserving, const std::string& extends_file, const Flags& f,
             std::ostream& out) {
  const json sj = load_ref(src_file);
  const auto dst = spec_of(load_ref(dst_file));

  SpecSemilattice src;
  HomSearchOptions search;
  search.budget = f.budget;
  search.parallel = !f.serial;
  search.zero_preserving = zero_preserving;

  if (!extends_file.empty()) {
    if (!io::is_extension(sj)) throw StructuralError("--extends needs an extension as source");
    const auto ext = io::extension_from_json(sj);
    const auto doc = io::morphism_from_json(load_ref(extends_file));
    std::vector<int> ups = ext.upsilon;
    if (ext.adjoined_zero) {
      auto view = zero_free_view(ext);
      src = view.tilde_spec;
      ups = view.upsilon;
    } else {
      src = ext.tilde_spec;
    }
    if (doc.morphism.size() != ext.source.size())
      throw StructuralError("--extends map has the wrong length");
    search.fixed.assign(static_cast<std::size_t>(src.size()), -1);
    for (int a = 0; a < ext.source.size(); ++a) {
      const int v = doc.morphism(a);
      if (v < 0 || v >= dst.size()) throw StructuralError("--extends map value out of range");
      int& pin = search.fixed[ups[a]];
      if (pin >= 0 && pin != v) throw StructuralError("--extends map is inconsistent");
      pin = v;
    }
  } else {
    src = spec_of(sj);
  }

  const auto maps = k_only ? enumerate_K_homomorphisms(src, dst, search)
                           : enumerate_homomorphisms(src, dst, search);
  json list = json::array();
  for (const auto& m : maps) list.push_back(m.map);
  if (f.json_out) {
    out << json{{"count", maps.size()}, {"maps", list}}.dump() << '\n';
  } else {
    out << maps.size() << (k_only ? " K-homomorphisms\n" : " homomorphisms\n");
    for (const auto& m : maps) out << render_map(m.map) << '\n';
  }
  return kOk;
}

std::vector<Mask> masks(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw StructuralError(std::string("missing mask list \"") + key + "\"");
  std::vector<Mask> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_unsigned()) throw StructuralError("masks must be non-negative integers");
    out.push_back(v.get<Mask>());
  }
  return out;
}

int ground_size(const json& j) {
  if (!j.contains("ground_size") || !j.at("ground_size").is_number_integer())
    throw StructuralError("missing integer \"ground_size\"");
  return j.at("ground_size").get<int>();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite specialization semilattices and their universal additive "
               "closure extensions"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json_out, "Machine-readable output on stdout");
  app.add_flag("--serial", flags.serial, "Use the serial reference kernels");
  app.add_option("--budget", flags.budget, "Candidate-assignment budget for searches");
  app.add_option("--max-size", flags.max_size, "Size guard for extensions");

  std::string file, file2, file3, out_file, extends_file, name;
  bool k_only = false, zero_preserving = false;
  std::uint64_t seed = 0;
  int random_max = 8;

  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of a structure");
  validate_cmd->add_option("file", file, "Structure or extension file")->required();

  auto* extend_cmd = app.add_subcommand("extend", "Build the universal extension");
  extend_cmd->add_option("file", file)->required();
  extend_cmd->add_option("--out", out_file, "Write the extension here instead of stdout");

  auto* lift_cmd = app.add_subcommand("lift", "Lift a homomorphism to the extension");
  lift_cmd->add_option("ext", file)->required();
  lift_cmd->add_option("target", file2)->required();
  lift_cmd->add_option("morphism", file3)->required();

  auto* check_cmd = app.add_subcommand("check-universal",
                                       "Exhaustively check the universal property");
  check_cmd->add_option("file", file, "Structure or extension file")->required();
  check_cmd->add_option("target", file2, "Principal additive target")->required();

  auto* enum_cmd = app.add_subcommand("enum-homs", "Enumerate homomorphisms");
  enum_cmd->add_option("src", file)->required();
  enum_cmd->add_option("dst", file2)->required();
  enum_cmd->add_flag("--k-only", k_only, "Only K-homomorphisms");
  enum_cmd->add_flag("--zero-preserving", zero_preserving, "Require f(0) = 0");
  enum_cmd->add_option("--extends", extends_file,
                       "Only maps g with g(upsilon(a)) = eta(a) for this morphism");

  auto* example_cmd = app.add_subcommand("example", "Print a named example");
  example_cmd->add_option("name", name)->required();
  auto* list_cmd = app.add_subcommand("examples", "List named examples");

  auto* random_cmd = app.add_subcommand("random", "Print a random structure");
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--max-size", random_max);

  auto* space_cmd = app.add_subcommand("closure-space",
                                       "Build from {ground_size, closed: [mask]}");
  space_cmd->add_option("file", file)->required();
  auto* ideal_cmd = app.add_subcommand("mod-ideal", "Build from {ground_size, ideal: [mask]}");
  ideal_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kStructural;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, flags, out);
    if (*extend_cmd) return cmd_extend(file, out_file, flags, out);
    if (*lift_cmd) return cmd_lift(file, file2, file3, flags, out);
    if (*check_cmd) return cmd_check_universal(file, file2, flags, out);
    if (*enum_cmd)
      return cmd_enum(file, file2, k_only, zero_preserving, extends_file, flags, out);
    if (*example_cmd) {
      out << io::to_json(named_example(name)).dump(2) << '\n';
      return kOk;
    }
    if (*list_cmd) {
      if (flags.json_out) out << json(named_example_ids()).dump() << '\n';
      else
        for (const auto& id : named_example_ids()) out << id << '\n';
      return kOk;
    }
    if (*random_cmd) {
      out << io::to_json(random_structure(seed, random_max)).dump(2) << '\n';
      return kOk;
    }
    if (*space_cmd) {
      const json j = load_ref(file);
      out << io::to_json(from_closure_space(ground_size(j), masks(j, "closed"))).dump(2) << '\n';
      return kOk;
    }
    if (*ideal_cmd) {
      const json j = load_ref(file);
      out << io::to_json(mod_ideal(ground_size(j), masks(j, "ideal"))).dump(2) << '\n';
      return kOk;
    }
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kStructural;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvalidStructure& e) {
    err << e.what() << '\n';
    return kSemantic;
  } catch (const NotAHomomorphism& e) {
    err << e.what() << " witness " << render_map(e.witness()) << '\n';
    return kSemantic;
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return kSemantic;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kSemantic;
  }
  return kStructural;
}

}  // namespace specsl::cli
