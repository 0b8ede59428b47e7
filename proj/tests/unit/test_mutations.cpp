#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"

using namespace picring;
using namespace picring::testing;

namespace {
  void check_stream(std::vector<Mutant> const& ms,
                    std::set<std::string> const& alternatives = {}) {
    REQUIRE(ms.size() >= 20);
    auto s = run_mutants(ms);
    for (auto const& a : s.accepted) {
      INFO("accepted mutant " << a);
      CHECK(alternatives.count(a) == 1);
    }
    CHECK(s.rate() >= 0.95);
  }
}  // namespace

TEST_CASE("picard mutations", "[mutation]") {
  check_stream(picard_mutants());
}

// j only witnesses invertibility; any automorphism of I is a valid choice.
TEST_CASE("explicit picard mutations", "[mutation]") {
  check_stream(explicit_picard_mutants(), {"j[0]", "j[1]"});
}

TEST_CASE("2-ring mutations", "[mutation]") {
  check_stream(two_ring_mutants());
}

TEST_CASE("2-ring morphism mutations", "[mutation]") {
  check_stream(two_ring_morphism_mutants());
}

TEST_CASE("enriched category mutations", "[mutation]") {
  check_stream(enriched_mutants());
}

TEST_CASE("module mutations", "[mutation]") {
  check_stream(module_mutants());
}

TEST_CASE("module morphism mutations", "[mutation]") {
  check_stream(module_morphism_mutants());
}

TEST_CASE("valid bases of the mutation streams", "[mutation]") {
  CHECK(validate_explicit_picard(from_skeletal(
            PicardModel::make(Zn(2), Zn(2), {{Elem{1}}})))
            .ok());
  CHECK(validate_two_ring(unit_two_ring(2), 2).ok());
  auto M = twisted_xy_module();
  CHECK(validate_module(M, 2).ok());
  CHECK(validate_module_morphism(ModuleMorphism::identity(M), M, M, 2).ok());
}
