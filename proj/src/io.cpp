#include "specsl/io.hpp"

#include <fstream>

#include "specsl/constructions.hpp"

namespace specsl::io {

namespace {

template <typename T>
std::vector<std::vector<T>> rows(const std::vector<T>& flat, int n) {
  std::vector<std::vector<T>> out(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    out[a].assign(flat.begin() + static_cast<std::ptrdiff_t>(a) * n,
                  flat.begin() + static_cast<std::ptrdiff_t>(a + 1) * n);
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw StructuralError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool present(const json& j, const char* key) {
  return j.is_object() && j.contains(key) && !j.at(key).is_null();
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer())
    throw StructuralError(std::string(what) + " must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* what) {
  if (!v.is_array()) throw StructuralError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(as_int(x, what));
  return out;
}

std::vector<int> square_table(const json& v, int n, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw StructuralError(std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : v) {
    auto r = int_list(row, what);
    if (static_cast<int>(r.size()) != n)
      throw StructuralError(std::string(what) + " rows must have " + std::to_string(n) +
                            " entries");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

std::optional<int> optional_zero(const json& j) {
  if (!present(j, "zero")) return std::nullopt;
  return as_int(j.at("zero"), "zero");
}

}  // namespace

json to_json(const SpecSemilattice& s,
             const std::optional<std::vector<std::string>>& labels) {
  std::vector<int> sq(s.sq_table().begin(), s.sq_table().end());
  json j;
  j["n"] = s.size();
  j["join"] = rows(s.join_table(), s.size());
  j["sq"] = rows(sq, s.size());
  j["zero"] = s.zero() ? json(*s.zero()) : json(nullptr);
  j["K"] = nullptr;
  j["labels"] = labels ? json(*labels) : json(nullptr);
  return j;
}

json to_json(const ClosureSemilattice& c,
             const std::optional<std::vector<std::string>>& labels) {
  json j = to_json(specialization_of(c), labels);
  j["K"] = c.closure_table();
  return j;
}

json to_json(const ExtensionResult& ext) {
  std::vector<std::string> labels;
  for (const auto& r : ext.reps)
    labels.push_back("[" + std::to_string(r.first) + "," + std::to_string(r.second) + "]");
  json j = to_json(ext.tilde, labels);
  j["upsilon"] = ext.upsilon;
  j["class_of"] = rows(ext.class_of, ext.base.size());
  json reps = json::array();
  for (const auto& r : ext.reps) reps.push_back({r.first, r.second});
  j["reps"] = reps;
  j["adjoined_zero"] = ext.adjoined_zero;
  j["source"] = to_json(ext.source);
  return j;
}

json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return {{"status", r.ok() ? "pass" : "fail"}, {"violations", v}};
}

json to_json(const MorphismDocument& m) {
  return {{"source", m.source}, {"target", m.target}, {"map", m.morphism.map}};
}

StructureDocument structure_from_json(const json& j) {
  if (!j.is_object()) throw StructuralError("structure must be a JSON object");
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) throw StructuralError("n must be non-negative");
  auto join = square_table(field(j, "join"), n, "join");
  const auto zero = optional_zero(j);

  std::optional<std::vector<std::uint8_t>> sq;
  if (present(j, "sq")) {
    auto raw = square_table(j.at("sq"), n, "sq");
    std::vector<std::uint8_t> bits;
    bits.reserve(raw.size());
    for (int x : raw) {
      if (x != 0 && x != 1) throw StructuralError("sq entries must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(x));
    }
    sq = std::move(bits);
  }

  StructureDocument doc;
  if (present(j, "labels")) {
    const auto& l = j.at("labels");
    if (!l.is_array() || static_cast<int>(l.size()) != n)
      throw StructuralError("labels must be an array of n strings");
    std::vector<std::string> labels;
    for (const auto& x : l) {
      if (!x.is_string()) throw StructuralError("labels must be strings");
      labels.push_back(x.get<std::string>());
    }
    doc.labels = std::move(labels);
  }

  if (present(j, "K")) {
    auto k = int_list(j.at("K"), "K");
    if (static_cast<int>(k.size()) != n) throw StructuralError("K must have n entries");
    doc.closure = ClosureSemilattice::unchecked(n, std::move(join), std::move(k), zero);
    doc.spec = specialization_of(*doc.closure);
    if (sq && *sq != doc.spec.sq_table())
      throw StructuralError("sq disagrees with the relation a <= K b derived from K");
  } else {
    if (!sq) throw StructuralError("structure needs \"sq\" or \"K\"");
    doc.spec = SpecSemilattice::unchecked(n, std::move(join), std::move(*sq), zero);
  }
  return doc;
}

bool is_extension(const json& j) { return j.is_object() && j.contains("upsilon"); }

ExtensionResult extension_from_json(const json& j) {
  auto doc = structure_from_json(j);
  if (!doc.closure) throw StructuralError("extension needs a \"K\" table");

  ExtensionResult ext;
  ext.source = structure_from_json(field(j, "source")).spec;
  const auto& adj = field(j, "adjoined_zero");
  if (!adj.is_boolean()) throw StructuralError("adjoined_zero must be a boolean");
  ext.adjoined_zero = adj.get<bool>();
  if (ext.adjoined_zero == ext.source.zero().has_value())
    throw StructuralError("adjoined_zero must be true exactly when the source has no zero");
  try {
    ext.base = ext.adjoined_zero ? adjoin_zero(ext.source) : ext.source;
  } catch (const InvalidStructure& e) {
    throw StructuralError(std::string("extension source is invalid: ") + e.what());
  }
  if (!ext.base.zero()) throw StructuralError("extension base has no zero");

  ext.tilde = std::move(*doc.closure);
  ext.tilde_spec = std::move(doc.spec);
  const int n = ext.base.size();
  const int m = ext.tilde.size();
  ext.upsilon = int_list(field(j, "upsilon"), "upsilon");
  if (static_cast<int>(ext.upsilon.size()) != n)
    throw StructuralError("upsilon must have one entry per base element");
  ext.class_of = square_table(field(j, "class_of"), n, "class_of");
  for (int v : ext.upsilon)
    if (v < 0 || v >= m) throw StructuralError("upsilon entry out of range");
  for (int v : ext.class_of)
    if (v < 0 || v >= m) throw StructuralError("class_of entry out of range");

  const auto& reps = field(j, "reps");
  if (!reps.is_array() || static_cast<int>(reps.size()) != m)
    throw StructuralError("reps must have one pair per class");
  for (const auto& r : reps) {
    auto p = int_list(r, "reps");
    if (p.size() != 2 || p[0] < 0 || p[0] >= n || p[1] < 0 || p[1] >= n)
      throw StructuralError("reps entries must be in-range pairs");
    ext.reps.push_back({p[0], p[1]});
  }
  return ext;
}

MorphismDocument morphism_from_json(const json& j) {
  MorphismDocument m;
  const auto& src = field(j, "source");
  const auto& dst = field(j, "target");
  if (!src.is_string() || !dst.is_string())
    throw StructuralError("morphism source and target must be file references");
  m.source = src.get<std::string>();
  m.target = dst.get<std::string>();
  m.morphism.map = int_list(field(j, "map"), "map");
  return m;
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw StructuralError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace specsl::io
