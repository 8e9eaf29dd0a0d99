#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "linfty/unimodular.hpp"
#include "linfty_cli/app.hpp"
#include "linfty_cli/document.hpp"
#include "linfty_cli/model.hpp"

using namespace linfty;
using namespace linfty::cli;

namespace {

const std::filesystem::path kExamples = LINFTY_EXAMPLES_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int exit;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_app(args, out, err);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return (kExamples / (name + ".json")).string(); }

std::string error_code(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.code();
  }
  return "";
}

const char* kHeader = R"({"schema": 1, "space": {"generators": [{"name": "x", "parity": "even"}, {"name": "a", "parity": "odd"}]}})";

std::string with(const std::string& extra) {
  std::string h = kHeader;
  return h.substr(0, h.size() - 1) + ", " + extra + "}";
}

}  // namespace

TEST_CASE("shipped examples are canonical") {
  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kExamples)) {
    CAPTURE(entry.path().string());
    auto text = slurp(entry.path());
    CHECK(serialize(parse_document(text)) == text);
    ++n;
  }
  CHECK(n >= 2);
}

TEST_CASE("documents round-trip through canonical form") {
  auto doc = parse_document(with(R"("structure": {"kind": "linfty", "brackets": [{"inputs": ["x", "x"], "output": "x", "coefficient": "-4/6"}]},
                                    "pairing": {"parity": "odd", "entries": [{"left": "x", "right": "a", "coefficient": "1"}]})"));
  CHECK(doc.brackets[0].coefficient == Rational(-2, 3));
  auto text = serialize(doc);
  CHECK(text.find("\"-2/3\"") != std::string::npos);
  CHECK(serialize(parse_document(text)) == text);
  CHECK(parse_document(text) == doc);
}

TEST_CASE("schema errors have distinct codes") {
  CHECK(error_code(with(R"("structure": {"kind": "lie", "brackets": [{"inputs": ["x", "a"], "output": "a", "coefficient": "1/0"}]})")) ==
        "E_RATIONAL");
  CHECK(error_code(with(R"("structure": {"kind": "lie", "brackets": [{"inputs": ["x", "a"], "output": "a", "coefficient": 1}]})")) ==
        "E_RATIONAL");
  CHECK(error_code(with(R"("colour": "red")")) == "E_UNKNOWN_FIELD");
  CHECK(error_code(with(R"("structure": {"kind": "lie", "brackets": [{"inputs": ["x", "b"], "output": "a", "coefficient": "1"}]})")) ==
        "E_UNDECLARED");
  CHECK(error_code(with(R"("structure": {"kind": "lie", "brackets": [{"inputs": ["x", "a"], "output": "x", "coefficient": "1"}]})")) ==
        "E_PARITY");
  CHECK(error_code(with(R"("differential": [{"inputs": ["x"], "output": "x", "coefficient": "1"}])")) == "E_PARITY");
  CHECK(error_code(with(R"("structure": {"kind": "lie", "brackets": [{"inputs": ["x"], "output": "x", "coefficient": "1"}]})")) ==
        "E_SCHEMA");
  CHECK(error_code(R"({"schema": 2, "space": {"generators": []}})") == "E_SCHEMA");
  CHECK(error_code(R"({"schema": 1, "space": {"generators": [)") == "E_JSON");
  CHECK(error_code(R"({"schema": 1, "space": {"generators": [{"name": "x", "parity": "even"}, {"name": "x", "parity": "odd"}]}})") ==
        "E_SCHEMA");
  try {
    parse_document(with(R"("structure": {"kind": "lie", "brackets": [{"inputs": ["x", "a"], "output": "a", "coefficient": "1/0"}]})"));
  } catch (const DocumentError& e) {
    CHECK(e.path() == "/structure/brackets/0/coefficient");
  }
}

TEST_CASE("the empty space is a valid document") {
  auto doc = parse_document(R"({"schema": 1, "space": {"generators": []}})");
  CHECK(doc.generators.empty());
  auto model = build_model(doc, 6);
  CHECK(model.v.dim() == 0);
  CHECK(check_mc(model.structure).ok);
}

TEST_CASE("the affine line document") {
  auto model = build_model(read_document(example("nonunimodular")), 6);
  REQUIRE(model.lie.has_value());
  CHECK_FALSE(lie_unimodular(*model.lie));
  CHECK(check_mc(model.structure).ok);
}

TEST_CASE("odd repeated inputs vanish by symmetry") {
  // m~_2(Pi x, Pi x) with x even is forced to vanish
  auto doc = parse_document(with(R"("structure": {"kind": "linfty", "brackets": [{"inputs": ["x", "x"], "output": "x", "coefficient": "1"}]})"));
  CHECK_THROWS_AS(build_model(doc, 4), DocumentError);
}

TEST_CASE("higher brackets match the Lie form") {
  auto lie = build_model(read_document(example("heisenberg")), 5);
  auto as_linfty = structure_document(lie.structure, std::nullopt);
  auto again = build_model(parse_document(serialize(as_linfty)), 5);
  CHECK(again.structure.m().values().size() == lie.structure.m().values().size());
  for (std::size_t i = 0; i < 3; ++i) CHECK(again.structure.m().value(i).terms() == lie.structure.m().value(i).terms());
}

TEST_CASE("command exit codes") {
  CHECK(run({"check-mc", example("nonunimodular"), "--cutoff", "6"}).exit == 0);
  auto uni = run({"unimodular-lift", example("nonunimodular")});
  CHECK(uni.exit == 1);
  CHECK(uni.out.find("[x'] is nonzero") != std::string::npos);
  auto q = run({"quantum-lift", "--odd-double", example("heisenberg"), "--genus", "2", "--weight", "6"});
  CHECK(q.exit == 0);
  CHECK(q.out.find("S1 = ") != std::string::npos);
  CHECK(q.out.find("S2 = ") != std::string::npos);
  CHECK(run({"quantum-lift", "--odd-double", example("nonunimodular"), "--genus", "1"}).exit == 1);
  CHECK(run({"check-cyclic", example("sl2")}).exit == 0);
  CHECK(run({"check-cyclic", example("heisenberg")}).exit == 2);
  CHECK(run({"tensor", "--frobenius", "H_S1", example("nonunimodular")}).exit == 0);
  CHECK(run({"tensor", "--frobenius", "H_S2", example("nonunimodular")}).exit == 1);
  CHECK(run({"sdr-check", example("contraction")}).exit == 1);
  CHECK(run({"sdr-check", "--repair", example("contraction")}).exit == 0);
  CHECK(run({"gauge-apply", example("curve"), "--seed", "5"}).exit == 0);
  CHECK(run({"ce-cohomology", example("sl2")}).exit == 0);
  CHECK(run({"divergence", example("heisenberg")}).exit == 0);
  CHECK(run({"divergence", example("nonunimodular")}).exit == 1);
  CHECK(run({"double", example("sl2")}).exit == 2);
  CHECK(run({"frobnicate"}).exit == 2);
  CHECK(run({"check-mc", "/nonexistent.json"}).exit == 2);
}

TEST_CASE("doubles written to disk are cyclic and Maurer-Cartan") {
  auto path = (std::filesystem::temp_directory_path() / "linfty_cli_double.json").string();
  for (const char* kind : {"--odd", "--even"}) {
    CHECK(run({"double", kind, example("nonunimodular"), "--output", path}).exit == 0);
    CHECK(run({"check-mc", path}).exit == 0);
    CHECK(run({"check-cyclic", path}).exit == 0);
  }
  CHECK(run({"quantum-lift", path}).exit == 2);  // the even double has an even form
  std::filesystem::remove(path);
}

TEST_CASE("JSON reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "unimodular-lift", example("nonunimodular")},
           {"--format", "json", "gauge-apply", example("heisenberg"), "--seed", "9"},
           {"--format", "json", "quantum-lift", "--odd-double", example("heisenberg"), "--genus", "2"},
           {"--format", "json", "ce-cohomology", example("curve")}}) {
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["exit"] == a.exit);
  }
  auto err = run({"--format", "json", "check-mc", "/nonexistent.json"});
  CHECK(nlohmann::json::parse(err.out)["error"]["code"] == "E_IO");
}
