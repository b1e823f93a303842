#pragma once

// JSON file formats.
//
// Structure:  { "n", "join": [[int]], "sq": [[0|1]], "zero": int|null,
//               "K": [int]|null, "labels": [string]|null }
// Extension:  structure fields for the extension itself, plus "upsilon",
//             "class_of", "reps", "adjoined_zero" and "source" (the
//             structure that was extended).
// Morphism:   { "source": file-ref, "target": file-ref, "map": [int] }

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specsl/core.hpp"
#include "specsl/extension.hpp"
#include "specsl/morphisms.hpp"

namespace specsl::io {

using json = nlohmann::json;

struct StructureDocument {
  SpecSemilattice spec;
  std::optional<ClosureSemilattice> closure;
  std::optional<std::vector<std::string>> labels;
};

struct MorphismDocument {
  std::string source;
  std::string target;
  Morphism morphism;
};

json to_json(const SpecSemilattice& s,
             const std::optional<std::vector<std::string>>& labels = std::nullopt);
json to_json(const ClosureSemilattice& c,
             const std::optional<std::vector<std::string>>& labels = std::nullopt);
json to_json(const ExtensionResult& ext);
json to_json(const ValidationReport& r);
json to_json(const MorphismDocument& m);

/// Structural checks only; axioms are the caller's business. When "K" is
/// present the specialization relation is derived from it, and a "sq" given
/// alongside must agree.
StructureDocument structure_from_json(const json& j);
ExtensionResult extension_from_json(const json& j);
MorphismDocument morphism_from_json(const json& j);

bool is_extension(const json& j);

/// Parse errors and unreadable files become StructuralError.
json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace specsl::io
