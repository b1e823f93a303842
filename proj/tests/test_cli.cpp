#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "specsl/io.hpp"

using specsl::io::json;

namespace {

const std::string kFixtures = SPECSL_FIXTURE_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "specsl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = specsl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", fx("chain2.json")}).code == 0);
  const auto bad = run({"--json", "validate", fx("broken_s3.json")});
  CHECK(bad.code == 2);
  const auto j = json::parse(bad.out);
  CHECK(j["status"] == "fail");
  CHECK(j["violations"][0]["axiom"] == "S3");
  CHECK(j["violations"][0]["witness"] == json{1, 2, 0});
  CHECK(run({"validate", fx("malformed.json")}).code == 1);
  CHECK(run({"validate", "@nonadditive-space"}).code == 0);
  CHECK(run({"validate", fx("n3_ext.json")}).code == 0);
}

TEST_CASE("extend") {
  auto size_of = [](const std::string& ref) {
    const auto r = run({"--json", "extend", ref});
    REQUIRE(r.code == 0);
    return json::parse(r.out)["n"].get<int>();
  };
  CHECK(size_of(fx("chain2.json")) == 3);
  CHECK(size_of(fx("n3.json")) == 5);
  CHECK(size_of("@chain1") == 1);
  CHECK(run({"--max-size", "3", "extend", "@chain4"}).code == 3);

  const auto tmp = std::filesystem::temp_directory_path() / "specsl_cli_ext.json";
  CHECK(run({"extend", "@diamond", "--out", tmp.string()}).code == 0);
  CHECK(specsl::io::is_extension(specsl::io::read_file(tmp)));
  std::filesystem::remove(tmp);
}

TEST_CASE("lift") {
  const auto r = run({"--json", "lift", fx("n3_ext.json"), fx("t.json"), fx("eta_n3_t.json")});
  REQUIRE(r.code == 0);
  // Classes of N3: [0,0], [0,1] (the new element), then [1,0], [2,0], [3,0].
  CHECK(json::parse(r.out)["map"] == json{0, 2, 1, 1, 1});
  CHECK(run({"lift", fx("n3_ext.json"), fx("t.json"), fx("not_hom_n3_t.json")}).code == 2);
  CHECK(run({"lift", fx("chain2_ext.json"), fx("chain2.json"), fx("id_chain2.json")}).code == 0);
  // Source mismatch.
  CHECK(run({"lift", fx("chain2_ext.json"), fx("t.json"), fx("eta_n3_t.json")}).code == 1);
}

TEST_CASE("check-universal") {
  const auto ok = run({"--json", "check-universal", fx("n3.json"), fx("t.json")});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["status"] == "pass");
  CHECK(run({"check-universal", "@chain1", "@chain1"}).code == 0);
  const auto bad = run({"--json", "check-universal", fx("tampered_ext.json"), fx("t.json")});
  CHECK(bad.code == 2);
  const auto j = json::parse(bad.out);
  CHECK(j["status"] == "fail");
  CHECK(j["counterexample"]["map"].is_array());
  CHECK(run({"check-universal", fx("corrupted_ext.json"), fx("t.json")}).code == 1);
  CHECK(run({"check-universal", "@chain2", "@nonadditive-space"}).code == 2);
}

TEST_CASE("enum-homs") {
  auto count = [](std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out)["count"].get<int>();
  };
  CHECK(count({"enum-homs", "@chain1", "@T"}) == 3);
  CHECK(count({"enum-homs", "@chain1", "@T", "--zero-preserving"}) == 1);
  CHECK(count({"enum-homs", fx("n3.json"), fx("t.json")}) == 10);
  CHECK(count({"enum-homs", fx("n3_ext.json"), fx("t.json"), "--extends",
               fx("eta_n3_t.json")}) >= 2);
  CHECK(count({"enum-homs", fx("n3_ext.json"), fx("t.json"), "--k-only", "--extends",
               fx("eta_n3_t.json")}) == 1);
  CHECK(run({"--budget", "100", "enum-homs", fx("big_src.json"), fx("big_dst.json")}).code == 3);
  CHECK(run({"enum-homs", fx("chain2.json"), fx("t.json"), "--extends", fx("eta_n3_t.json")})
            .code == 1);
}

TEST_CASE("generators and misc") {
  CHECK(run({"examples"}).out.find("diamond") != std::string::npos);
  CHECK(run({"example", "pentagon"}).code == 1);
  const auto a = run({"random", "--seed", "5", "--max-size", "6"});
  const auto b = run({"random", "--seed", "5", "--max-size", "6"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"validate", "@random:5:6"}).code == 0);
  CHECK(run({"validate", "@random:x"}).code == 1);

  const auto space = run({"--json", "closure-space", fx("nonadditive_space.json")});
  CHECK(space.code == 0);
  CHECK(json::parse(space.out)["n"] == 8);
  CHECK(run({"mod-ideal", fx("ideal_p.json")}).code == 0);
  CHECK(run({"mod-ideal", fx("chain2.json")}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--serial", "check-universal", "@N2", "@T"}).code == 0);
}

TEST_CASE("--json output is always valid JSON") {
  const std::vector<std::vector<std::string>> cmds = {
      {"--json", "validate", fx("chain2.json")},
      {"--json", "validate", fx("broken_s3.json")},
      {"--json", "extend", "@N2"},
      {"--json", "lift", fx("n3_ext.json"), fx("t.json"), fx("eta_n3_t.json")},
      {"--json", "check-universal", "@N2", "@T"},
      {"--json", "enum-homs", "@chain2", "@chain2"},
      {"--json", "example", "T"},
      {"--json", "random", "--seed", "3"},
      {"--json", "examples"},
  };
  for (const auto& c : cmds) {
    const auto r = run(c);
    CHECK(json::accept(r.out));
  }
}
