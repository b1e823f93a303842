#include <doctest.h>

#include <filesystem>

#include "corpus.hpp"
#include "specsl/constructions.hpp"
#include "specsl/extension.hpp"
#include "specsl/io.hpp"

using namespace specsl;
using io::json;

namespace {
const std::filesystem::path kFixtures = SPECSL_FIXTURE_DIR;
}

TEST_CASE("structures round-trip through JSON") {
  for (const auto& e : corpus::all(30)) {
    const auto doc = io::structure_from_json(json::parse(io::to_json(e.s).dump()));
    CHECK(doc.spec == e.s);
    CHECK_FALSE(doc.closure);
  }
  const auto c = to_closure_semilattice(truncated_naturals(3));
  const auto doc = io::structure_from_json(io::to_json(c));
  REQUIRE(doc.closure);
  CHECK(*doc.closure == c);
  CHECK(doc.spec == truncated_naturals(3));
}

TEST_CASE("labels survive") {
  const std::vector<std::string> labels = {"0", "x", "y", "1"};
  const auto doc = io::structure_from_json(io::to_json(diamond(), labels));
  REQUIRE(doc.labels);
  CHECK(*doc.labels == labels);
}

TEST_CASE("K alone determines sq") {
  json j = io::to_json(to_closure_semilattice(counterexample_target()));
  j.erase("sq");
  CHECK(io::structure_from_json(j).spec == counterexample_target());
}

TEST_CASE("structural errors") {
  const json good = io::to_json(chain(2));
  auto broken = [&](auto&& mutate) {
    json j = good;
    mutate(j);
    return j;
  };
  CHECK_THROWS_AS(io::structure_from_json(json::array()), StructuralError);
  CHECK_THROWS_AS(io::structure_from_json(broken([](json& j) { j.erase("join"); })),
                  StructuralError);
  CHECK_THROWS_AS(io::structure_from_json(broken([](json& j) { j["n"] = 3; })), StructuralError);
  CHECK_THROWS_AS(io::structure_from_json(broken([](json& j) { j["sq"][0][0] = 2; })),
                  StructuralError);
  CHECK_THROWS_AS(io::structure_from_json(broken([](json& j) { j["join"][0][0] = 0.5; })),
                  StructuralError);
  CHECK_THROWS_AS(io::structure_from_json(broken([](json& j) { j["zero"] = 9; })),
                  StructuralError);
  CHECK_THROWS_AS(io::structure_from_json(broken([](json& j) { j["labels"] = {"a"}; })),
                  StructuralError);
  CHECK_THROWS_AS(io::structure_from_json(broken([](json& j) { j["K"] = {1, 1}; })),
                  StructuralError);
}

TEST_CASE("axiom failures load and are left to the validator") {
  const auto doc = io::structure_from_json(io::read_file(kFixtures / "broken_s3.json"));
  const auto r = validate(doc.spec);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].axiom == axiom::kS3);
  CHECK(r.violations[0].witness == std::vector<int>{1, 2, 0});
}

TEST_CASE("extensions round-trip through JSON") {
  for (const auto& e : corpus::all(20)) {
    const auto ext = build_extension(e.s);
    const json j = json::parse(io::to_json(ext).dump());
    CHECK(io::is_extension(j));
    const auto back = io::extension_from_json(j);
    CHECK(back.source == ext.source);
    CHECK(back.base == ext.base);
    CHECK(back.adjoined_zero == ext.adjoined_zero);
    CHECK(back.tilde == ext.tilde);
    CHECK(back.tilde_spec == ext.tilde_spec);
    CHECK(back.upsilon == ext.upsilon);
    CHECK(back.class_of == ext.class_of);
    CHECK(back.reps == ext.reps);
  }
  CHECK_FALSE(io::is_extension(io::to_json(chain(2))));
}

TEST_CASE("the shipped extension fixtures") {
  const auto n3 = io::extension_from_json(io::read_file(kFixtures / "n3_ext.json"));
  CHECK(n3.tilde == build_extension(truncated_naturals(3)).tilde);
  CHECK_THROWS_AS(io::extension_from_json(io::read_file(kFixtures / "corrupted_ext.json")),
                  StructuralError);
  const auto tampered = io::extension_from_json(io::read_file(kFixtures / "tampered_ext.json"));
  CHECK(tampered.tilde.closure_table() == std::vector<int>{0, 1, 2});
}

TEST_CASE("morphism documents") {
  const auto doc = io::morphism_from_json(io::read_file(kFixtures / "eta_n3_t.json"));
  CHECK(doc.source == "n3.json");
  CHECK(doc.target == "t.json");
  CHECK(doc.morphism.map == std::vector<int>{0, 1, 1, 1});
  const auto again = io::morphism_from_json(io::to_json(doc));
  CHECK(again.morphism == doc.morphism);
  CHECK_THROWS_AS(io::morphism_from_json(json{{"source", 1}, {"target", "t"}, {"map", {0}}}),
                  StructuralError);
}

TEST_CASE("files") {
  CHECK_THROWS_AS(io::read_file(kFixtures / "malformed.json"), StructuralError);
  CHECK_THROWS_AS(io::read_file(kFixtures / "no_such_file.json"), StructuralError);
  const auto tmp = std::filesystem::temp_directory_path() / "specsl_io_test.json";
  io::write_file(tmp, io::to_json(diamond()));
  CHECK(io::structure_from_json(io::read_file(tmp)).spec == diamond());
  std::filesystem::remove(tmp);
}

TEST_CASE("validation reports") {
  const auto ok = io::to_json(validate(chain(2)));
  CHECK(ok["status"] == "pass");
  CHECK(ok["violations"].empty());
  const auto bad = SpecSemilattice::unchecked(2, chain(2).join_table(), {1, 1, 1, 1}, 0);
  const auto j = io::to_json(validate(bad));
  CHECK(j["status"] == "fail");
  CHECK(j["violations"][0]["axiom"] == "S0");
  CHECK(j["violations"][0]["witness"] == json{1});
}
