#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "corpus.hpp"
#include "picring/json_io.hpp"

using namespace picring;
using namespace picring::testing;

namespace {
  std::string data(char const* name) {
    return std::string(PICRING_DATA_DIR) + "/" + name;
  }

  struct Run {
    int         status;
    std::string out;
  };

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream     in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Run cli(std::string const& args) {
    auto tmp = std::filesystem::temp_directory_path() / "picring_cli_out.txt";
    std::string cmd = std::string("\"") + PICRING_CLI + "\" " + args + " > "
                      + tmp.string() + " 2>&1";
    int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(tmp)};
  }

  void same_report(Report const& a, Report const& b) {
    CHECK(a.checked == b.checked);
    CHECK(a.bound == b.bound);
    CHECK(a.notes == b.notes);
    CHECK(a.failures == b.failures);
  }
}  // namespace

TEST_CASE("reports round-trip through JSON", "[json]") {
  auto bad = unit_two_ring(2);
  bump(bad.mult.under, {Elem{2}, Elem{1}, Elem{1}});
  std::vector<Report> rs = {validate_two_ring(unit_two_ring(2), 2),
                            validate_two_ring(bad, 2),
                            validate_picard(PicardModel::make(
                                Zn(4), Zn(4), {{Elem{1}}}))};
  rs.back().notes.push_back("a note with \"quotes\"");
  for (auto const& r : rs) {
    auto j = report_json(r);
    same_report(report_from_json(parse_json(j.dump(), "test")), r);
    CHECK(report_json(report_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("models round-trip through JSON", "[json]") {
  for (auto const& [name, m] : skeletal_corpus()) {
    INFO(name);
    auto back = read_picard(picard_json(m), "$");
    CHECK(back.G == m.G);
    CHECK(back.H == m.H);
    CHECK(back.c.values == m.c.values);
  }
}

TEST_CASE("descriptor readers", "[json]") {
  FiniteRing ring;
  auto       R = read_two_ring(load_json(data("discrete_z4.json")), "$", &ring);
  CHECK(ring.additive == Zn(4));
  CHECK(validate_two_ring(R).ok());
  auto U = read_two_ring(load_json(data("unit.json")), "$");
  CHECK(validate_two_ring(U, 2).ok());
  CHECK_FALSE(
      validate_two_ring(read_two_ring(load_json(data("unit_bad_under.json")),
                                      "$"),
                        2)
          .ok());
  auto M = read_module(load_json(data("twisted_module_z2_z2_xy.json")), "$");
  CHECK(validate_module(M, 2).ok());
  auto E = read_enriched(load_json(data("unit_one_object.json")), "$");
  CHECK(validate_enriched_category(E, 2).ok());
  TwoRingModel A, B;
  auto h = read_two_ring_morphism(load_json(data("z4_to_z2.json")), A, B, "$");
  CHECK(validate_two_ring_morphism(h, A, B).ok());
  auto T = read_ring(json::parse(R"({"kind": "matrix", "p": 2, "size": 2,
                                     "upper": true})"),
                     "$");
  CHECK(T.additive.order() == 8);
}

TEST_CASE("descriptor errors carry their path", "[json]") {
  try {
    read_picard(json::parse(R"({"G": {"cyclic_orders": [2]},
                                "H": {"cyclic_orders": [2]},
                                "c": [[[1]]], "colour": 1})"),
                "$");
    FAIL("unknown key accepted");
  } catch (input_error const& e) {
    CHECK(e.path.find("colour") != std::string::npos);
  }
  try {
    read_picard(json::parse(R"({"G": {"cyclic_orders": [2]},
                                "H": {"cyclic_orders": ["x"]},
                                "c": [[[1]]]})"),
                "$");
    FAIL("bad order accepted");
  } catch (input_error const& e) {
    CHECK(e.path.find("$.H") == 0);
  }
  try {
    parse_json("{\n  \"a\": ,\n}", "inline");
    FAIL("syntax error accepted");
  } catch (input_error const& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_json(data("no_such_file.json")), input_error);
}

TEST_CASE("CLI exit codes", "[cli]") {
  CHECK(cli("validate-2ring " + data("discrete_z2.json")).status == 0);
  CHECK(cli("validate-2ring " + data("unit_bad_under.json")).status == 1);
  CHECK(cli("validate-picard " + data("z2_z2_xy.json")).status == 0);
  CHECK(cli("validate-module " + data("twisted_module_z2_z2_xy.json"))
            .status
        == 0);
  CHECK(cli("word-problem --depth 2 \"comp(s(g:*,g:*),s(g:*,g:*))\" "
            "\"id(ten(g:*,g:*))\"")
            .status
        == 0);
  CHECK(cli("word-problem --depth 2 \"s(g:*,g:*)\" \"id(ten(g:*,g:*))\"")
            .status
        == 1);
  CHECK(cli("word-problem \"s(g:*,g:*\" \"id(I)\"").status == 2);
  CHECK(cli("validate-picard " + data("no_such_file.json")).status == 2);
  CHECK(cli("no-such-command").status == 2);
  CHECK(cli("validate-picard --format yaml " + data("z2_z2_xy.json")).status
        == 2);
}

TEST_CASE("CLI JSON output is deterministic", "[cli]") {
  for (std::string args :
       {"--format json validate-2ring " + data("unit.json"),
        "--format json validate-2ring " + data("unit_bad_under.json"),
        "--format json check-unit-equivalence "
            + data("twisted_module_z2_z2_xy.json"),
        std::string("--format json word-problem --depth 2 "
                    "\"comp(s(g:*,g:*),s(g:*,g:*))\" \"id(ten(g:*,g:*))\"")}) {
    INFO(args);
    auto a = cli(args);
    auto b = cli(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j.contains("verdict"));
    CHECK(j.contains("bounds"));
  }
}
