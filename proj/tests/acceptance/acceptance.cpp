// Acceptance suite: one line per criterion, plus a JSON report per run.
// Every criterion is computed twice and the two reports must match byte for
// byte.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include <json.hpp>

#include "corpus.hpp"
#include "picring/amodules.hpp"
#include "picring/presentations.hpp"
#include "picring/tworing.hpp"

using namespace picring;
using namespace picring::testing;
using nlohmann::json;

namespace {

  struct Outcome {
    bool pass = false;
    json report;
  };

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                         - t0)
        .count();
  }

  Presentation const& unit_pres() {
    static Presentation p = build_unit_presentation();
    return p;
  }

  // -------------------------------------------------------------------

  Outcome relation_soundness() {
    std::size_t n = 0, bad = 0;
    std::map<std::string, std::size_t> per_schema;
    instantiate_relations(unit_pres(), default_budget(unit_pres()),
                          [&](RelationInstance const& r) {
                            ++n;
                            ++per_schema[r.schema_id];
                            bad += !(sign_eval(r.lhs) == sign_eval(r.rhs));
                          });
    return {bad == 0 && n >= 1000,
            {{"instances", n}, {"disagreements", bad}, {"per_schema", per_schema}}};
  }

  // Paths run through interior vertices (depth <= 2) of the depth-3
  // complex; pairs are grouped by endpoint, sign and normal form.
  Outcome oracle_agreement() {
    Budget b    = default_budget(unit_pres());
    b.max_steps = 100000;
    Session s(unit_pres(), b);
    auto const& c    = s.complex();
    auto        keep = [&](int v) {
      auto const& x = c.vertex(v);
      return x.depth() <= 2 && std::abs(degree(x)) <= 3;
    };
    auto esign = [&](int e) {
      auto const& E = c.edges()[e];
      if (E.kind != Complex::EdgeKind::Sym) {
        return 0;
      }
      auto x = subterm(c.vertex(E.src), E.pos);
      return int(mod(degree(x.left()) * degree(x.right()), 2));
    };
    long long paths = 0, pairs = 0, confirmed = 0, violations = 0;
    for (int v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
      if (!keep(v)) {
        continue;
      }
      std::map<int, std::map<int, std::map<Word, long long>>> by;
      enumerate_paths(c, v, 4, keep, [&](int u, Word const& w) {
        int sg = 0;
        for (auto x : w) {
          sg ^= esign(std::abs(x) - 1);
        }
        ++by[u][sg][s.normal_form(w)];
        ++paths;
      });
      for (auto const& [u, signs] : by) {
        std::map<Word, std::set<int>> nf_signs;
        for (auto const& [sg, nfs] : signs) {
          long long k = 0;
          for (auto const& [nf, m] : nfs) {
            k += m;
            confirmed += m * (m - 1) / 2;
            nf_signs[nf].insert(sg);
          }
          pairs += k * (k - 1) / 2;
        }
        for (auto const& [nf, ss] : nf_signs) {
          violations += ss.size() > 1;
        }
      }
    }
    double rate = pairs ? double(confirmed) / double(pairs) : 0.0;
    char   buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", rate);
    return {violations == 0 && rate >= 0.95,
            {{"paths", paths},
             {"equal_sign_pairs", pairs},
             {"confirmed", confirmed},
             {"rate", buf},
             {"violations", violations}}};
  }

  Outcome mutation_rejection() {
    bool ok = true;
    json out = json::object();
    for (auto const& [name, ms] : all_mutation_streams()) {
      auto s = run_mutants(ms);
      bool pass = s.total >= 20 && s.rate() >= 0.95;
      ok        = ok && pass;
      out[name] = {{"mutants", s.total},
                   {"rejected", s.invalid},
                   {"accepted", s.accepted}};
    }
    // accepted explicit mutants only move j, which is a free witness
    for (auto const& a : out["explicit-picard"]["accepted"]) {
      ok = ok && a.get<std::string>().rfind("j[", 0) == 0;
    }
    return {ok, out};
  }

  Outcome inverse_lemmas() {
    bool        ok = true;
    json        models = json::array();
    std::size_t instances = 0, failures = 0;
    auto        corpus = skeletal_corpus();
    for (auto const& [name, m] : corpus) {
      auto s = build_inv(m);
      ok     = ok && s.lemmas.ok();
      models.push_back({{"model", name}, {"checked", s.lemmas.checked},
                        {"failures", s.lemmas.failures.size()}});
    }
    for (std::size_t i : {0u, 1u, 2u, 5u}) {
      for (std::size_t j : {0u, 2u, 5u}) {
        auto const& A  = corpus[i].model;
        auto const& B  = corpus[j].model;
        auto        Fs = enumerate_functors(A, B);
        for (auto const& F : Fs) {
          for (auto const& G : Fs) {
            for (auto const& sg : enumerate_nats(F, G, A, B)) {
              auto r = check_bullet_lemmas(A, B, F, G, MonNat{sg});
              ++instances;
              failures += r.failures.size();
            }
          }
        }
      }
    }
    ok = ok && corpus.size() >= 5 && instances >= 5 && failures == 0;
    return {ok, {{"models", models},
                 {"functor_instances", instances},
                 {"bullet_failures", failures}}};
  }

  Outcome unit_two_ring_check() {
    auto U    = unit_two_ring(3);
    auto r    = validate_two_ring(U, 3);
    auto sign = sign_eval(parse_arrow("s(g:*,g:*)"));
    bool agree = U.base.sym(Elem{1}, Elem{1}) == Elem{sign.sign};
    return {r.ok() && r.checked >= 1000 && agree,
            {{"checked", r.checked},
             {"failures", r.failures.size()},
             {"c11", U.base.sym(Elem{1}, Elem{1})[0]},
             {"sign_of_symmetry", sign.sign}}};
  }

  Outcome discrete_rings() {
    bool        ok = true, noncommutative = false;
    json        rows = json::array();
    auto        rings = small_rings();
    std::size_t valid_rings = rings.size();
    auto        bad = broken_rings();
    rings.insert(rings.end(), bad.begin(), bad.end());
    for (std::size_t i = 0; i < rings.size(); ++i) {
      auto const& R      = rings[i];
      bool        oracle = ring_axiom_failures(R).empty();
      auto        r      = validate_two_ring(discrete_two_ring(R));
      ok = ok && r.ok() == oracle && (i >= valid_rings || oracle)
           && R.additive.order() <= 8;
      bool comm = true;
      for (auto const& a : R.elements()) {
        for (auto const& b : R.elements()) {
          comm = comm && R.mul(a, b) == R.mul(b, a);
        }
      }
      noncommutative = noncommutative || (oracle && !comm);
      rows.push_back({{"ring", R.name},
                      {"order", R.additive.order()},
                      {"oracle", oracle},
                      {"validator", r.ok()},
                      {"checked", r.checked}});
    }
    return {ok && noncommutative,
            {{"rings", rows}, {"noncommutative_present", noncommutative}}};
  }

  Outcome unit_modules() {
    bool ok   = true;
    json rows = json::array();
    for (auto const& [name, C] : skeletal_corpus()) {
      auto s   = search_strict_unit_module(C, 3);
      json row = {{"carrier", name},
                  {"candidates", s.candidates},
                  {"found", s.found.size()}};
      ok = ok && s.found.size() == 1;
      if (s.found.size() == 1) {
        json twists = json::array();
        for (auto const& e : enumerate_homs(C.G, C.H)) {
          auto M  = twisted_unit_module(s.found[0], e);
          auto H  = MonFunctor::identity(C);
          auto h  = induced_unit_morphism(M, s.found[0], H);
          bool hv = validate_module_morphism(h, M, s.found[0], 3).ok();
          auto n  = count_unit_morphisms(M, s.found[0], H, 3);
          auto eq = check_unit_equivalence(M, 3);
          ok      = ok && hv && n == 1 && eq.ok();
          twists.push_back({{"induced_valid", hv},
                            {"morphisms", n},
                            {"equivalence_checked", eq.checked},
                            {"equivalence_failures", eq.failures.size()}});
        }
        row["twists"] = twists;
      }
      rows.push_back(row);
    }
    return {ok && rows.size() >= 6, {{"carriers", rows}}};
  }

  Outcome one_object_reduction() {
    std::vector<std::pair<std::string, TwoRingModel>> inputs = {
        {"unit", unit_two_ring(2)},
        {"discrete Z/4", discrete_two_ring(cyclic_ring(4))},
        {"discrete T2(Z/2)", discrete_two_ring(matrix_ring(2, 2, true))}};
    for (auto const& m : two_ring_mutations()) {
      inputs.push_back(m);
    }
    for (auto const& R : broken_rings()) {
      inputs.push_back({R.name, discrete_two_ring(R)});
    }
    bool        ok = true;
    std::size_t valid = 0, invalid = 0;
    json        rows = json::array();
    for (auto const& [name, M] : inputs) {
      auto r1 = validate_two_ring(M, 2);
      auto r2 = validate_enriched_category(one_object_category(M), 2);
      auto l1 = element_labels(r1);
      auto l2 = element_labels(r2);
      std::set<std::string> s1(l1.begin(), l1.end()), s2(l2.begin(), l2.end());
      bool same = s1 == s2;
      ok        = ok && same;
      (r1.ok() ? valid : invalid) += 1;
      rows.push_back({{"input", name}, {"labels", s1.size()}, {"same", same}});
    }
    return {ok && inputs.size() >= 10 && valid > 0 && invalid > 0,
            {{"pairs", rows}, {"valid", valid}, {"invalid", invalid}}};
  }

  Outcome endomorphism_rings() {
    bool ok   = true;
    json rows = json::array();
    std::vector<Named> models = {
        {"one-object Z/2", PicardModel::one_object(Zn(2))},
        {"discrete Z/2", PicardModel::discrete(Zn(2))}};
    for (auto const& [name, A] : models) {
      auto e  = endo_two_ring(A);
      auto pc = validate_explicit_picard(e.ring.base);
      auto tr = validate_explicit_two_ring(e.ring);
      ok      = ok && e.report.ok() && pc.ok() && tr.ok();
      rows.push_back({{"model", name},
                      {"functors", e.hom.functors.size()},
                      {"arrows", e.ring.base.arrows.size()},
                      {"picard_checked", pc.checked},
                      {"ring_checked", tr.checked},
                      {"report_failures", e.report.failures.size()}});
    }
    return {ok, {{"models", rows}}};
  }

  struct Criterion {
    char const* name;
    double      limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const cs = {
      {"relation soundness", 60, relation_soundness},
      {"word-problem oracle agreement", 300, oracle_agreement},
      {"mutation rejection", 0, mutation_rejection},
      {"inverse and bullet lemmas", 60, inverse_lemmas},
      {"unit 2-ring", 60, unit_two_ring_check},
      {"discrete 2-rings", 0, discrete_rings},
      {"unit-ring modules", 300, unit_modules},
      {"one-object reduction", 0, one_object_reduction},
      {"endomorphism 2-rings", 60, endomorphism_rings},
  };

  bool   all = true;
  json   first = json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto    t0 = std::chrono::steady_clock::now();
    Outcome o  = cs[i].run();
    double  dt = seconds_since(t0);
    bool pass  = o.pass && (cs[i].limit == 0 || dt < cs[i].limit);
    all        = all && pass;
    first.push_back({{"criterion", i + 1}, {"name", cs[i].name},
                     {"pass", o.pass}, {"report", o.report}});
    std::printf("criterion %zu (%s): %s [%.1fs]\n", i + 1, cs[i].name,
                pass ? "PASS" : "FAIL", dt);
    std::fflush(stdout);
  }

  // determinism: a second run must reproduce every report exactly
  json second = json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Outcome o = cs[i].run();
    second.push_back({{"criterion", i + 1}, {"name", cs[i].name},
                      {"pass", o.pass}, {"report", o.report}});
  }
  std::string a    = first.dump(2);
  std::string b    = second.dump(2);
  bool        same = a == b;
  all              = all && same;
  std::printf("criterion 10 (determinism): %s [%zu bytes]\n",
              same ? "PASS" : "FAIL", a.size());

  std::ofstream("acceptance_report.json") << a << "\n";
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
