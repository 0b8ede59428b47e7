// picring: validators and word-problem queries from the command line.
//
// Exit status: 0 valid/equal, 1 invalid/not-identified, 2 input error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "picring/amodules.hpp"
#include "picring/json_io.hpp"
#include "picring/presentations.hpp"
#include "picring/tworing.hpp"

using namespace picring;

namespace {

  struct Options {
    std::string command;
    std::vector<std::string> inputs;
    int         depth     = 3;
    std::size_t max_edges = 4;
    std::size_t max_steps = 100000;
    Int         bound     = -1;
    std::string format    = "text";
    int         jobs      = 1;
    std::string presentation = "unit";
    std::string model_a, model_b;
    bool        depth_set = false, edges_set = false, steps_set = false;
  };

  struct Outcome {
    std::string verdict;
    json        body = json::object();
  };

  json bounds_json(Options const& o) {
    return {{"depth", o.depth},
            {"max_edges", o.max_edges},
            {"max_steps", o.max_steps},
            {"element_bound", o.bound}};
  }

  Outcome from_report(Report const& r) {
    Outcome out{r.ok() ? "valid" : "invalid"};
    out.body["report"] = report_json(r);
    return out;
  }

  std::string const& input(Options const& o, std::size_t i,
                           char const* what) {
    if (o.inputs.size() <= i) {
      throw input_error("$", std::string("missing argument: ") + what);
    }
    return o.inputs[i];
  }

  Outcome validate_picard_cmd(Options const& o) {
    auto m = read_picard(load_json(input(o, 0, "model file")), "$");
    return from_report(validate_picard(m));
  }

  Outcome validate_two_ring_cmd(Options const& o) {
    FiniteRing ring;
    auto       j = load_json(input(o, 0, "2-ring file"));
    auto       R = read_two_ring(j, "$", &ring);
    Report     r = validate_two_ring(R, o.bound);
    if (j["kind"] == "discrete") {
      auto errs = ring_axiom_failures(ring);
      r.notes.push_back("ring " + ring.name + ": "
                        + (errs.empty() ? std::string("unital ring")
                                        : errs.front()));
    }
    return from_report(r);
  }

  Outcome validate_morphism_cmd(Options const& o) {
    TwoRingModel A, B;
    auto h = read_two_ring_morphism(load_json(input(o, 0, "morphism file")),
                                    A, B, "$");
    return from_report(validate_two_ring_morphism(h, A, B, o.bound));
  }

  Outcome validate_enriched_cmd(Options const& o) {
    auto E = read_enriched(load_json(input(o, 0, "category file")), "$");
    return from_report(validate_enriched_category(E, o.bound));
  }

  Outcome validate_module_cmd(Options const& o) {
    auto M = read_module(load_json(input(o, 0, "module file")), "$");
    return from_report(validate_module(M, o.bound));
  }

  Presentation presentation(Options const& o) {
    if (o.presentation == "unit") {
      return build_unit_presentation();
    }
    if (o.presentation == "tensor") {
      if (o.model_a.empty() || o.model_b.empty()) {
        throw input_error("--model-a/--model-b",
                          "tensor presentations need two model files");
      }
      return build_tensor_presentation(
          read_picard(load_json(o.model_a), "$"),
          read_picard(load_json(o.model_b), "$"));
    }
    throw input_error("--presentation", "expected unit or tensor");
  }

  Budget budget(Options const& o, Presentation const& p) {
    Budget b = default_budget(p);
    if (o.depth_set) {
      b.depth = o.depth;
    }
    if (o.edges_set) {
      b.max_edges = o.max_edges;
    }
    if (o.steps_set) {
      b.max_steps = o.max_steps;
    }
    return b;
  }

  json budget_json(Budget const& b) {
    return {{"depth", b.depth},
            {"max_edges", b.max_edges},
            {"max_steps", b.max_steps},
            {"max_leaves", b.max_leaves}};
  }

  std::optional<LabelGroups> groups(Presentation const& p) {
    if (p.kind == Presentation::Kind::Tensor) {
      return LabelGroups{p.A->G, p.B->G};
    }
    return std::nullopt;
  }

  Outcome word_problem_cmd(Options const& o) {
    Presentation p  = presentation(o);
    Budget       b  = budget(o, p);
    auto         lg = groups(p);
    ArrowTerm    f  = parse_arrow(input(o, 0, "first arrow"), lg ? &*lg : nullptr);
    ArrowTerm    g  = parse_arrow(input(o, 1, "second arrow"), lg ? &*lg : nullptr);
    Verdict      v  = decide_equal(p, f, g, b);
    Outcome      out{v.equal() ? "equal" : "not-identified"};
    json         wit = json::array();
    for (auto const& inst : v.witness) {
      json bind = json::array();
      for (auto const& [k, val] : inst.bindings) {
        bind.push_back({k, val});
      }
      wit.push_back({{"relation", inst.schema_id},
                     {"bindings", bind},
                     {"lhs", print(inst.lhs)},
                     {"rhs", print(inst.rhs)}});
    }
    out.body["lhs"]      = print(f);
    out.body["rhs"]      = print(g);
    out.body["reason"]   = v.reason;
    out.body["witness"]  = wit;
    out.body["relators"] = v.relator_ids;
    out.body["budget"]   = budget_json(b);
    if (v.equal()) {
      out.body["replayed"] = replay(p, b, f, g, v);
    }
    return out;
  }

  Outcome hom_classes_cmd(Options const& o) {
    Presentation p = presentation(o);
    Budget       b = budget(o, p);
    Session      s(p, b);
    ObjTerm      X = parse_obj(input(o, 0, "source object"));
    ObjTerm      Y = parse_obj(input(o, 1, "target object"));
    auto         classes = hom_classes(s, X, Y, b.max_edges);
    json         cs      = json::array();
    for (auto const& c : classes) {
      json terms = json::array();
      for (auto const& t : c) {
        terms.push_back(print(t));
      }
      cs.push_back(terms);
    }
    Outcome out{"valid"};
    out.body["source"]  = print(X);
    out.body["target"]  = print(Y);
    out.body["classes"] = cs;
    out.body["budget"]  = budget_json(b);
    return out;
  }

  Outcome search_modules_cmd(Options const& o) {
    auto M = read_picard(load_json(input(o, 0, "carrier file")), "$");
    auto s = search_strict_unit_module(M, o.bound < 0 ? M.bound : o.bound);
    json found = json::array();
    for (std::size_t i = 0; i < s.found.size(); ++i) {
      json ell = json::array();
      for (auto const& x : s.ell[i].images) {
        ell.push_back(elem_json(x));
      }
      json pairing = json::array();
      for (auto const& row : s.pairing[i].values) {
        json r = json::array();
        for (auto const& v : row) {
          r.push_back(elem_json(v));
        }
        pairing.push_back(r);
      }
      found.push_back({{"left_action", ell}, {"under_pairing", pairing}});
    }
    Outcome out{s.found.size() == 1 ? "valid" : "invalid"};
    out.body["carrier"]    = picard_json(M);
    out.body["candidates"] = s.candidates;
    out.body["found"]      = found;
    return out;
  }

  Outcome unit_equivalence_cmd(Options const& o) {
    auto M = read_module(load_json(input(o, 0, "module file")), "$");
    return from_report(check_unit_equivalence(M, o.bound));
  }

  Outcome endo_cmd(Options const& o) {
    auto A = read_picard(load_json(input(o, 0, "model file")), "$");
    auto e = endo_two_ring(A);
    auto out = from_report(e.report);
    out.body["functors"] = e.hom.functors.size();
    out.body["arrows"]   = e.hom.nats.size();
    json objs = json::array();
    for (auto const& name : e.hom.cat.objects) {
      objs.push_back(name);
    }
    out.body["objects"] = objs;
    return out;
  }

  void print_text(Outcome const& out) {
    std::cout << "verdict: " << out.verdict << "\n";
    for (auto const& [k, v] : out.body.items()) {
      if (k == "report") {
        std::cout << "checked: " << v["checked"] << "\n";
        for (auto const& n : v["notes"]) {
          std::cout << "note: " << n.get<std::string>() << "\n";
        }
        for (auto const& f : v["failures"]) {
          std::cout << "fail: " << f["axiom"].get<std::string>() << " [";
          bool first = true;
          for (auto const& b : f["instance"]) {
            std::cout << (first ? "" : " ") << b[0].get<std::string>() << "="
                      << b[1].get<std::string>();
            first = false;
          }
          std::cout << "] " << f["detail"].get<std::string>() << "\n";
        }
      } else if (k == "classes") {
        for (std::size_t i = 0; i < v.size(); ++i) {
          std::cout << "class " << i << ":";
          for (auto const& t : v[i]) {
            std::cout << " " << t.get<std::string>();
          }
          std::cout << "\n";
        }
      } else if (v.is_string()) {
        std::cout << k << ": " << v.get<std::string>() << "\n";
      } else {
        std::cout << k << ": " << v.dump() << "\n";
      }
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric Picard categories, 2-rings and their modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--depth", o.depth, "vertex depth of the term universe")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-edges", o.max_edges, "generator edges per path")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", o.max_steps, "rewriting step budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", o.bound, "element bound for infinite factors")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", o.jobs, "worker count")->check(CLI::PositiveNumber);

  struct Cmd {
    char const* name;
    char const* help;
    Outcome (*run)(Options const&);
  };
  Cmd const cmds[] = {
      {"validate-picard", "validate a skeletal model", validate_picard_cmd},
      {"validate-2ring", "validate a 2-ring", validate_two_ring_cmd},
      {"validate-2ring-morphism", "validate a 2-ring morphism",
       validate_morphism_cmd},
      {"validate-enriched", "validate an SPC-category", validate_enriched_cmd},
      {"validate-module", "validate a module", validate_module_cmd},
      {"word-problem", "decide equality of two arrow terms", word_problem_cmd},
      {"hom-classes", "classes of parallel arrow terms", hom_classes_cmd},
      {"search-unit-modules", "strict unit-ring module structures",
       search_modules_cmd},
      {"check-unit-equivalence", "invertibility of the induced morphism",
       unit_equivalence_cmd},
      {"endo-2ring", "endomorphism 2-ring of a tiny model", endo_cmd},
  };
  Outcome (*run)(Options const&) = nullptr;
  for (auto const& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("inputs", o.inputs, "input files or terms");
    if (std::string(c.name) == "word-problem"
        || std::string(c.name) == "hom-classes") {
      sub->add_option("--presentation", o.presentation, "unit or tensor")
          ->check(CLI::IsMember({"unit", "tensor"}));
      sub->add_option("--model-a", o.model_a, "first tensor factor");
      sub->add_option("--model-b", o.model_b, "second tensor factor");
    }
    auto f = c.run;
    auto n = c.name;
    sub->callback([&run, &o, f, n] {
      run       = f;
      o.command = n;
    });
  }
  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }
  o.depth_set = app.count("--depth") > 0;
  o.edges_set = app.count("--max-edges") > 0;
  o.steps_set = app.count("--max-steps") > 0;

  Outcome out;
  try {
    out = run(o);
  } catch (input_error const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (syntax_error const& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (term_error const& e) {
    std::cerr << "term error: " << e.what() << "\n";
    return 2;
  } catch (cap_exceeded const& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (budget_exceeded const& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  }

  json doc       = out.body;
  doc["command"] = o.command;
  doc["verdict"] = out.verdict;
  doc["bounds"]  = bounds_json(o);
  if (o.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_text(out);
  }
  return out.verdict == "valid" || out.verdict == "equal" ? 0 : 1;
}
