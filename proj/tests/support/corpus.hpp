// Shared fixtures for the unit tests and the acceptance binary: small
// models, ring corpora and single-entry mutation streams.

#ifndef PICRING_TESTS_CORPUS_HPP_
#define PICRING_TESTS_CORPUS_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "picring/amodules.hpp"
#include "picring/enriched.hpp"
#include "picring/models.hpp"
#include "picring/tworing.hpp"

namespace picring::testing {

  struct Named {
    std::string name;
    PicardModel model;
  };

  inline FinAbGroup Zn(Int n) {
    return FinAbGroup::cyclic(n);
  }

  // Skeletal models used throughout: every one is finite.
  inline std::vector<Named> skeletal_corpus() {
    auto Z2 = Zn(2);
    return {
        {"(Z/2,Z/2,xy)", PicardModel::make(Z2, Z2, {{Elem{1}}})},
        {"(Z/4,Z/2,mn)", PicardModel::make(Zn(4), Z2, {{Elem{1}}})},
        {"(Z/2,Z/2,0)", PicardModel::make(Z2, Z2, {{Elem{0}}})},
        {"(Z/3,Z/3,0)", PicardModel::make(Zn(3), Zn(3), {{Elem{0}}})},
        {"discrete Z/3", PicardModel::discrete(Zn(3))},
        {"one-object Z/2", PicardModel::one_object(Z2)},
        {"discrete Z/2xZ/2", PicardModel::discrete(FinAbGroup({2, 2}))},
        {"(Z/2xZ/2,Z/2,mixed)",
         PicardModel::make(FinAbGroup({2, 2}), Z2,
                           {{Elem{1}, Elem{1}}, {Elem{1}, Elem{0}}})},
    };
  }

  // Unital rings of order at most 8, one of them noncommutative.
  inline std::vector<FiniteRing> small_rings() {
    return {cyclic_ring(2),
            cyclic_ring(3),
            cyclic_ring(4),
            cyclic_ring(5),
            cyclic_ring(6),
            cyclic_ring(7),
            cyclic_ring(8),
            product_ring(cyclic_ring(2), cyclic_ring(2)),
            product_ring(cyclic_ring(2), cyclic_ring(4)),
            quotient_poly_ring(2, {1, 1}),
            quotient_poly_ring(2, {0, 0}),
            quotient_poly_ring(2, {1, 1, 0}),
            matrix_ring(2, 2, true)};
  }

  // Tables on rings that break one of the unital ring axioms.
  inline std::vector<FiniteRing> broken_rings() {
    std::vector<FiniteRing> out;
    {
      auto R = cyclic_ring(2);
      R.name = "Z/2 with zero product";
      R.mul.set({Elem{1}, Elem{1}}, Elem{0});
      out.push_back(R);
    }
    {
      auto R = cyclic_ring(3);
      R.name = "Z/3 with xy = x";
      for (auto const& a : R.elements()) {
        for (auto const& b : R.elements()) {
          R.mul.set({a, b}, a);
        }
      }
      out.push_back(R);
    }
    {
      auto R = cyclic_ring(4);
      R.name = "Z/4 with 3.3 = 3";
      R.mul.set({Elem{3}, Elem{3}}, Elem{3});
      out.push_back(R);
    }
    {
      auto R = quotient_poly_ring(2, {1, 1});
      R.name = "F4 with a wrong unit";
      R.one  = R.additive.gen(0);
      R.one  = R.additive.add(R.one, R.additive.gen(1));
      out.push_back(R);
    }
    return out;
  }

  // Adds the first generator of the target to one entry.
  inline void bump(Table& t, Table::Key const& k) {
    auto const& g = t.target();
    t.set(k, g.add(t.at(k), g.gen(0)));
  }

  inline bool cites_instance(Report const& r) {
    if (r.ok()) {
      return false;
    }
    auto const& f = r.failures.front();
    return !f.axiom.empty() && (!f.instance.empty() || !f.detail.empty());
  }

  struct Mutant {
    std::string            name;
    std::function<Report()> run;
  };

  inline std::vector<Elem> ints(std::initializer_list<Int> xs) {
    std::vector<Elem> out;
    for (Int x : xs) {
      out.push_back(Elem{x});
    }
    return out;
  }

  // -------------------------------------------------------------------
  // Mutation streams, one per validator

  inline std::vector<Mutant> picard_mutants() {
    std::vector<Mutant> out;
    std::vector<Named>  bases = {
        {"(Z/3^2,Z/3,0)",
         PicardModel::make(FinAbGroup({3, 3}), Zn(3),
                           {{Elem{0}, Elem{0}}, {Elem{0}, Elem{0}}})},
        {"(Z/5^2,Z/5,e1e2)",
         PicardModel::make(FinAbGroup({5, 5}), Zn(5),
                           {{Elem{0}, Elem{1}}, {Elem{4}, Elem{0}}})}};
    for (auto const& [name, m] : bases) {
      Int n = m.H.orders()[0];
      for (std::size_t i = 0; i < m.G.rank(); ++i) {
        for (std::size_t j = 0; j < m.G.rank(); ++j) {
          for (Int d = 1; d < n; ++d) {
            PicardModel x = m;
            x.c.values[i][j] = m.H.make({x.c.values[i][j][0] + d});
            out.push_back({name + " c[" + std::to_string(i) + "]["
                               + std::to_string(j) + "]+"
                               + std::to_string(d),
                           [x] { return validate_picard(x); }});
          }
        }
      }
    }
    return out;
  }

  inline std::vector<Mutant> explicit_picard_mutants() {
    std::vector<Mutant> out;
    auto base = from_skeletal(PicardModel::make(Zn(2), Zn(2), {{Elem{1}}}));
    int  n    = base.n_obj();
    int  m    = base.n_arr();
    using Field = std::vector<int> ExplicitPicard::*;
    struct Spec {
      char const* name;
      Field       field;
      int         range;
    };
    std::vector<Spec> specs = {
        {"identity", &ExplicitPicard::identity, m},
        {"comp", &ExplicitPicard::comp, m},
        {"tensor_obj", &ExplicitPicard::tensor_obj, n},
        {"tensor_arr", &ExplicitPicard::tensor_arr, m},
        {"dual", &ExplicitPicard::dual, n},
        {"assoc", &ExplicitPicard::assoc, m},
        {"runit", &ExplicitPicard::runit, m},
        {"lunit", &ExplicitPicard::lunit, m},
        {"sym", &ExplicitPicard::sym, m},
        {"j", &ExplicitPicard::j, m}};
    for (auto const& s : specs) {
      auto const& v = base.*(s.field);
      for (std::size_t i = 0; i < v.size(); ++i) {
        ExplicitPicard e = base;
        (e.*(s.field))[i] = (v[i] + 1) % s.range;
        out.push_back({std::string(s.name) + "[" + std::to_string(i) + "]",
                       [e] { return validate_explicit_picard(e); }});
      }
    }
    return out;
  }

  // Mutations of the unit 2-ring and of a discrete one.
  inline std::vector<std::pair<std::string, TwoRingModel>>
  two_ring_mutations() {
    std::vector<std::pair<std::string, TwoRingModel>> out;
    auto U    = unit_two_ring(2);
    auto keys3 = tuples(ints({0, 1, -1}), 3);
    auto keys1 = tuples(ints({0, 1, 2}), 1);
    for (std::size_t i = 0; i < keys3.size(); i += 4) {
      auto M = U;
      bump(M.alpha, keys3[i]);
      out.push_back({"unit alpha " + std::to_string(i), M});
    }
    for (std::size_t i = 0; i < keys1.size(); ++i) {
      auto M = U;
      bump(M.rho, keys1[i]);
      out.push_back({"unit rho " + std::to_string(i), M});
      M = U;
      bump(M.lambda, keys1[i]);
      out.push_back({"unit lambda " + std::to_string(i), M});
    }
    for (std::size_t i = 1; i < keys3.size(); i += 6) {
      auto M = U;
      bump(M.mult.under, keys3[i]);
      out.push_back({"unit under " + std::to_string(i), M});
      M = U;
      bump(M.mult.over, keys3[i]);
      out.push_back({"unit over " + std::to_string(i), M});
    }
    auto D = discrete_two_ring(cyclic_ring(4));
    for (Int a = 1; a < 4; ++a) {
      auto M = D;
      bump(M.mult.obj, {Elem{a}, Elem{a}});
      out.push_back({"Z/4 product " + std::to_string(a), M});
    }
    {
      auto M = D;
      M.one  = Elem{3};
      out.push_back({"Z/4 unit 3", M});
    }
    return out;
  }

  inline std::vector<Mutant> two_ring_mutants() {
    std::vector<Mutant> out;
    for (auto const& [name, M] : two_ring_mutations()) {
      out.push_back({name, [M] { return validate_two_ring(M, 2); }});
    }
    return out;
  }

  inline std::vector<Mutant> two_ring_morphism_mutants() {
    std::vector<Mutant> out;
    auto U   = unit_two_ring(2);
    auto id  = TwoRingMorphism::identity(U);
    auto ks  = tuples(ints({0, 1, -1}), 2);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      auto h = id;
      bump(h.T, ks[i]);
      out.push_back({"T " + std::to_string(i),
                     [h, U] { return validate_two_ring_morphism(h, U, U, 2); }});
      h = id;
      bump(h.H_plus.F2, ks[i]);
      out.push_back({"F2 " + std::to_string(i),
                     [h, U] { return validate_two_ring_morphism(h, U, U, 2); }});
    }
    {
      auto h = id;
      h.T0   = Elem{1};
      out.push_back({"T0",
                     [h, U] { return validate_two_ring_morphism(h, U, U, 2); }});
    }
    {
      auto h = id;
      h.H_plus.psi1.images[0] = Elem{0};
      out.push_back({"psi1 zero",
                     [h, U] { return validate_two_ring_morphism(h, U, U, 2); }});
    }
    for (Int k : {0, 2, -1}) {
      auto h = id;
      h.H_plus.psi0.images[0] = Elem{k};
      out.push_back({"psi0 " + std::to_string(k),
                     [h, U] { return validate_two_ring_morphism(h, U, U, 2); }});
    }
    {
      auto A = discrete_two_ring(cyclic_ring(4));
      auto B = discrete_two_ring(cyclic_ring(2));
      auto f = GroupHom{Zn(4), Zn(2), {Elem{0}}};
      auto h = discrete_morphism(f, A, B);
      out.push_back({"Z/4 -> Z/2 zero map",
                     [h, A, B] { return validate_two_ring_morphism(h, A, B); }});
    }
    return out;
  }

  inline std::vector<Mutant> enriched_mutants() {
    std::vector<Mutant> out;
    for (auto const& [name, M] : two_ring_mutations()) {
      auto E = one_object_category(M);
      out.push_back({"one-object " + name,
                     [E] { return validate_enriched_category(E, 2); }});
    }
    // mutations made directly on the enriched tables
    auto E  = one_object_category(unit_two_ring(2));
    auto ks = tuples(ints({1, -1}), 3);
    for (std::size_t i = 0; i < ks.size(); i += 3) {
      auto X = E;
      bump(X.alpha[0], ks[i]);
      out.push_back({"alpha " + std::to_string(i),
                     [X] { return validate_enriched_category(X, 2); }});
    }
    {
      auto X     = E;
      X.units[0] = Elem{-1};
      out.push_back({"unit -1",
                     [X] { return validate_enriched_category(X, 2); }});
    }
    return out;
  }

  inline ModuleModel twisted_xy_module() {
    auto C = PicardModel::make(Zn(2), Zn(2), {{Elem{1}}});
    auto s = search_strict_unit_module(C, 3);
    return twisted_unit_module(s.found.at(0), GroupHom::identity(Zn(2)));
  }

  inline std::vector<Mutant> module_mutants() {
    std::vector<Mutant> out;
    auto M  = twisted_xy_module();
    auto as = ints({0, 1, -1});
    auto ms = ints({0, 1});
    for (auto const& a1 : as) {
      for (auto const& a2 : as) {
        for (auto const& m : ms) {
          auto X = M;
          bump(X.beta, {a1, a2, m});
          out.push_back({"beta " + elem_str(a1) + elem_str(a2) + elem_str(m),
                         [X] { return validate_module(X, 2); }});
        }
      }
    }
    for (auto const& m : ms) {
      auto X = M;
      bump(X.gamma, {m});
      out.push_back({"gamma " + elem_str(m),
                     [X] { return validate_module(X, 2); }});
    }
    for (auto const& a : ints({2, -1})) {
      auto X = M;
      bump(X.action.under, {a, Elem{1}, Elem{1}});
      out.push_back({"under " + elem_str(a),
                     [X] { return validate_module(X, 2); }});
      X = M;
      bump(X.action.over, {a, Elem{1}, Elem{1}});
      out.push_back({"over " + elem_str(a),
                     [X] { return validate_module(X, 2); }});
      X = M;
      bump(X.action.left, {a, Elem{1}, Elem{1}});
      out.push_back({"left " + elem_str(a),
                     [X] { return validate_module(X, 2); }});
    }
    return out;
  }

  inline std::vector<Mutant> module_morphism_mutants() {
    std::vector<Mutant> out;
    auto M = twisted_xy_module();
    auto N = search_strict_unit_module(M.carrier, 3).found.at(0);
    auto H = MonFunctor::identity(M.carrier);
    auto induced = induced_unit_morphism(M, N, H);
    auto id      = ModuleMorphism::identity(M);
    auto as      = ints({0, 1, -1, 2});
    auto ms      = ints({0, 1});
    for (auto const& a : as) {
      for (auto const& m : ms) {
        auto h = induced;
        bump(h.delta, {a, m});
        out.push_back(
            {"induced delta " + elem_str(a) + elem_str(m),
             [h, M, N] { return validate_module_morphism(h, M, N, 2); }});
        h = id;
        bump(h.delta, {a, m});
        out.push_back({"identity delta " + elem_str(a) + elem_str(m),
                       [h, M] { return validate_module_morphism(h, M, M, 2); }});
      }
    }
    for (auto const& k : tuples(ms, 2)) {
      auto h = induced;
      bump(h.H.F2, k);
      out.push_back({"induced F2 " + elem_str(k[0]) + elem_str(k[1]),
                     [h, M, N] { return validate_module_morphism(h, M, N, 2); }});
    }
    return out;
  }

  struct MutationSummary {
    std::size_t              total   = 0;
    std::size_t              invalid = 0;  // with a cited instance
    std::vector<std::string> accepted;

    double rate() const {
      return total ? double(invalid) / double(total) : 0.0;
    }
  };

  inline MutationSummary run_mutants(std::vector<Mutant> const& ms) {
    MutationSummary s;
    for (auto const& m : ms) {
      ++s.total;
      Report r = m.run();
      if (cites_instance(r)) {
        ++s.invalid;
      } else {
        s.accepted.push_back(m.name);
      }
    }
    return s;
  }

  inline std::vector<std::pair<std::string, std::vector<Mutant>>>
  all_mutation_streams() {
    return {{"picard", picard_mutants()},
            {"explicit-picard", explicit_picard_mutants()},
            {"2-ring", two_ring_mutants()},
            {"2-ring morphism", two_ring_morphism_mutants()},
            {"enriched", enriched_mutants()},
            {"module", module_mutants()},
            {"module morphism", module_morphism_mutants()}};
  }

}  // namespace picring::testing

#endif  // PICRING_TESTS_CORPUS_HPP_
