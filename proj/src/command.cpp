#include "bzf/command.hpp"

#include <algorithm>

#include "json.hpp"

#include "bzf/classify.hpp"
#include "bzf/error.hpp"
#include "bzf/morphisms.hpp"
#include "bzf/verify.hpp"

namespace bzf {

  using json = nlohmann::json;

  std::vector<std::string> const& map_names() {
    static std::vector<std::string> const names{"sigma",
                                                "ext-bicyclic",
                                                "matrix-units",
                                                "matrix-units-omega",
                                                "brandt",
                                                "reindex"};
    return names;
  }

  namespace {
    std::vector<std::string> const& hom_names() {
      static std::vector<std::string> const names{"sigma",
                                                  "ext-bicyclic",
                                                  "matrix-units",
                                                  "brandt",
                                                  "reindex",
                                                  "partial-shift"};
      return names;
    }

    bool listed(std::vector<std::string> const& names, std::string const& w) {
      return std::find(names.begin(), names.end(), w) != names.end();
    }

    std::string joined(std::vector<std::string> const& names) {
      std::string out;
      for (std::size_t k = 0; k < names.size(); ++k) {
        out += (k == 0 ? "" : ", ") + names[k];
      }
      return out;
    }

    // Sets separated by ';', optionally wrapped in braces-free form.
    std::vector<EpSet> set_list(Parser& p) {
      std::vector<EpSet> sets{p.set()};
      while (p.accept(';')) {
        sets.push_back(p.set());
      }
      return sets;
    }

    std::string name_token(Parser& p, std::vector<std::string> const& names) {
      std::string const w = p.peek_word();
      if (!listed(names, w)) {
        p.fail("one of " + joined(names));
      }
      return p.word();
    }
  }  // namespace

  Command parse_command(std::string_view text) {
    Parser            p(text);
    std::string const verb = p.peek_word();
    Command           cmd;
    if (verb == "eval") {
      p.word();
      cmd = EvalCmd{p.product()};
    } else if (verb == "closure") {
      // Either `closure <set>; <set>` or the literal `closure{...}`.
      p.word();
      bool literal = false;
      if (p.peek() == '{') {
        Parser probe(text.substr(p.position()));
        try {
          probe.expect('{');
          set_list(probe);
          probe.expect('}');
          literal = probe.at_end();
        } catch (SyntaxError const&) {
          literal = false;
        }
      }
      if (literal) {
        p.expect('{');
      }
      ClosureCmd c{set_list(p)};
      if (literal) {
        p.expect('}');
      }
      cmd = std::move(c);
    } else if (verb == "classify") {
      p.word();
      cmd = ClassifyCmd{p.family()};
    } else if (verb == "is-closed") {
      p.word();
      cmd = IsClosedCmd{p.family()};
    } else if (verb == "green") {
      p.word();
      ElementExpr a = p.element();
      ElementExpr b = p.element();
      auto rel = parse_green_rel(p.peek_word());
      if (!rel) {
        p.fail("one of R, L, H, D, J");
      }
      p.word();
      cmd = GreenCmd{std::move(a), std::move(b), *rel};
    } else if (verb == "order") {
      p.word();
      ElementExpr a = p.element();
      ElementExpr b = p.element();
      cmd           = OrderCmd{std::move(a), std::move(b)};
    } else if (verb == "map") {
      p.word();
      std::string name = name_token(p, map_names());
      cmd              = MapCmd{std::move(name), p.element()};
    } else if (verb == "check-hom") {
      p.word();
      cmd = CheckHomCmd{name_token(p, hom_names())};
    } else if (verb == "oracle-check") {
      p.word();
      cmd = OracleCheckCmd{};
    } else if (verb == "selftest") {
      p.word();
      SelfTestCmd st;
      if (!p.at_end()) {
        std::vector<std::string> names = verify::suite_names();
        names.push_back("all");
        st.suite = name_token(p, names);
      }
      cmd = st;
    } else {
      p.fail("a command (eval, closure, classify, is-closed, green, order, "
             "map, check-hom, oracle-check, selftest)");
    }
    p.expect_end();
    return cmd;
  }

  namespace {
    json set_list_json(std::vector<EpSet> const& sets) {
      json out = json::array();
      for (EpSet const& s : sets) {
        out.push_back(s.to_string());
      }
      return out;
    }

    void collect(ElementExpr const& e, std::vector<EpSet>& sets) {
      sets.push_back(e.zero ? EpSet() : e.set);
    }

    // The family for element commands: --family if given, otherwise the
    // closure of the sets that occur in the command.
    SemigroupCtx context_for(std::vector<EpSet> const& sets,
                             Options const&            options) {
      if (options.family) {
        return SemigroupCtx(parse_family(*options.family).build(options.max_family));
      }
      return SemigroupCtx(Family::close(sets, options.max_family));
    }

    json suite_json(verify::SuiteResult const& r) {
      json out{{"name", r.name},
               {"samples", r.samples},
               {"failures", r.failures},
               {"passed", r.passed()}};
      if (r.failing_seed) {
        out["failing_seed"]  = *r.failing_seed;
        out["first_failure"] = r.first_failure;
      }
      return out;
    }

    verify::Config config_of(Options const& options) {
      verify::Config c;
      c.seed    = options.seed;
      c.samples = options.samples;
      c.window  = options.window;
      return c;
    }

    Response suites_response(std::vector<verify::SuiteResult> const& results,
                             Options const&                          options) {
      json suites = json::array();
      bool passed = true;
      for (auto const& r : results) {
        suites.push_back(suite_json(r));
        passed = passed && r.passed();
      }
      json out{{"suites", suites}, {"passed", passed}, {"seed", options.seed}};
      return {out.dump(), passed ? 0 : 3};
    }

    json element_pair(std::pair<Element, Element> const& p) {
      return json::array({p.first.to_string(), p.second.to_string()});
    }

    json report_json(Family const& family, StructureReport const& r) {
      json out{{"family", set_list_json(family.members())},
               {"has_zero", r.has_zero},
               {"has_identity", r.has_identity},
               {"simple", r.simple},
               {"zero_simple", r.zero_simple},
               {"bisimple", r.bisimple},
               {"zero_bisimple", r.zero_bisimple},
               {"e_unitary", r.e_unitary},
               {"contains_extended_bicyclic", r.contains_extended_bicyclic},
               {"iso_type", std::string(to_string(r.iso_type.kind))},
               {"zero_bisimple_branch", r.zero_bisimple_branch},
               {"nonzero_d_classes", r.nonzero_d_classes}};
      if (r.iso_type.kind == IsoKind::ZeroBisimpleProgression) {
        out["i0"] = r.iso_type.i0;
        out["j0"] = r.iso_type.j0;
      }
      json witnesses = json::object();
      for (auto const& [field, w] : r.witnesses) {
        json entry{{"note", w.note}};
        if (w.pair) {
          entry["pair"] = element_pair(*w.pair);
        }
        witnesses[field] = entry;
      }
      out["witnesses"] = witnesses;
      return out;
    }

    json map_result(MapCmd const& m, Options const& options) {
      if (m.name == "brandt") {
        SemigroupCtx const ctx = SemigroupCtx::singletons();
        return to_brandt(m.element.resolve(ctx)).to_string();
      }
      if (m.name == "reindex") {
        if (!options.target) {
          throw Error("WrongProgression",
                      "map reindex needs a target progression (--target)");
        }
        EpSet const target = parse_set(*options.target);
        auto const  to     = as_arith_progression(target);
        if (!to) {
          throw Error("WrongProgression",
                      target.to_string() + " is not an arithmetic progression");
        }
        SemigroupCtx const ctx = context_for({EpSet(), m.element.set}, options);
        Element const      a   = m.element.resolve(ctx);
        if (a.is_zero()) {
          return a.to_string();
        }
        auto const from = as_arith_progression(a.set());
        if (!from || from->second != to->second) {
          throw Error("WrongProgression",
                      a.set().to_string() + " and " + target.to_string()
                          + " are not progressions with a common step");
        }
        return progression_reindex(a, from->first, to->first, to->second)
            .to_string();
      }
      std::vector<EpSet> sets;
      collect(m.element, sets);
      if ((m.name == "matrix-units" || m.name == "matrix-units-omega")
          && !options.family) {
        sets.push_back(EpSet());
      }
      SemigroupCtx const ctx = context_for(sets, options);
      Element const      a   = m.element.resolve(ctx);
      if (m.name == "sigma") {
        return sigma_hom(ctx, a);
      }
      if (m.name == "ext-bicyclic") {
        return to_ext_bicyclic(ctx, a).to_string();
      }
      if (m.name == "matrix-units") {
        return to_matrix_units(ctx, a).to_string();
      }
      return to_matrix_units_omega(ctx, a).to_string();
    }

    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    Response dispatch(Command const& cmd, Options const& options) {
      auto ok = [](json const& j) { return Response{j.dump(), 0}; };
      return std::visit(
          overloaded{
              [&](EvalCmd const& c) {
                std::vector<EpSet> sets;
                for (auto const& f : c.factors) {
                  collect(f, sets);
                }
                SemigroupCtx const ctx    = context_for(sets, options);
                Element            result = c.factors.front().resolve(ctx);
                for (std::size_t k = 1; k < c.factors.size(); ++k) {
                  result = ctx.multiply(result, c.factors[k].resolve(ctx));
                }
                return ok({{"result", result.to_string()}});
              },
              [&](ClosureCmd const& c) {
                Family const f = Family::close(c.sets, options.max_family);
                return ok({{"members", set_list_json(f.members())},
                           {"has_empty", f.has_empty()},
                           {"size", f.size()}});
              },
              [&](ClassifyCmd const& c) {
                Family const f = c.family.build(options.max_family);
                return ok(report_json(f, classify(SemigroupCtx(f))));
              },
              [&](IsClosedCmd const& c) {
                std::vector<EpSet> sets = c.family.sets;
                std::sort(sets.begin(), sets.end());
                sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
                ClosedCheck const check = is_omega_closed(sets);
                json              out{{"closed", check.closed},
                                      {"witness", nullptr}};
                if (check.witness) {
                  EpSet const& l = check.witness->left;
                  EpSet const& r = check.witness->right;
                  out["witness"] = {
                      {"left", l.to_string()},
                      {"right", r.to_string()},
                      {"shift", check.witness->shift},
                      {"missing",
                       intersect(l, shift(r, -check.witness->shift))
                           .to_string()}};
                }
                return ok(out);
              },
              [&](GreenCmd const& c) {
                std::vector<EpSet> sets;
                collect(c.a, sets);
                collect(c.b, sets);
                SemigroupCtx const ctx     = context_for(sets, options);
                Element const      a       = c.a.resolve(ctx);
                Element const      b       = c.b.resolve(ctx);
                bool const         related = green(a, b, c.rel);
                json               out{{"related", related},
                                       {"relation", std::string(to_string(c.rel))},
                                       {"witness", nullptr}};
                if (related
                    && (c.rel == GreenRel::R || c.rel == GreenRel::L
                        || c.rel == GreenRel::D)) {
                  out["witness"] = element_pair(green_witness(a, b, c.rel));
                }
                return ok(out);
              },
              [&](OrderCmd const& c) {
                std::vector<EpSet> sets;
                collect(c.a, sets);
                collect(c.b, sets);
                SemigroupCtx const ctx = context_for(sets, options);
                Element const      a   = c.a.resolve(ctx);
                Element const      b   = c.b.resolve(ctx);
                bool const         leq = natural_leq(a, b);
                json               out{{"leq", leq}, {"k", nullptr}};
                if (leq && !a.is_zero()) {
                  out["k"] = a.i() - b.i();
                }
                return ok(out);
              },
              [&](MapCmd const& c) {
                return ok({{"result", map_result(c, options)}});
              },
              [&](CheckHomCmd const& c) {
                return suites_response(
                    {verify::check_hom(c.name, config_of(options))}, options);
              },
              [&](OracleCheckCmd const&) {
                verify::Config const cfg = config_of(options);
                return suites_response({verify::check_oracle(cfg),
                                        verify::check_partial_shift_square(cfg)},
                                       options);
              },
              [&](SelfTestCmd const& c) {
                return suites_response(
                    verify::run_selftest(c.suite, config_of(options)), options);
              }},
          cmd);
    }

    Response error_response(std::string const& code,
                            std::string const& message,
                            int                exit_code,
                            SyntaxError const* syntax = nullptr) {
      json err{{"code", code}, {"message", message}};
      if (syntax != nullptr) {
        err["line"]     = syntax->line();
        err["col"]      = syntax->col();
        err["expected"] = syntax->expected();
      }
      return {json{{"error", err}}.dump(), exit_code};
    }

    Response pretty(Response r, Options const& options) {
      if (options.pretty) {
        r.json = json::parse(r.json).dump(2);
      }
      return r;
    }
  }  // namespace

  Response run(Command const& cmd, Options const& options) {
    Response r;
    try {
      r = dispatch(cmd, options);
    } catch (SyntaxError const& e) {
      r = error_response(e.code(), e.what(), 2, &e);
    } catch (Error const& e) {
      r = error_response(e.code(), e.what(), 1);
    } catch (std::invalid_argument const& e) {
      r = error_response("InvalidArgument", e.what(), 1);
    }
    return pretty(std::move(r), options);
  }

  Response execute(std::string_view text, Options const& options) {
    Command cmd;
    try {
      cmd = parse_command(text);
    } catch (SyntaxError const& e) {
      return pretty(error_response(e.code(), e.what(), 2, &e), options);
    } catch (std::invalid_argument const& e) {
      // e.g. a negative member inside a finite set literal
      return pretty(error_response("InvalidArgument", e.what(), 2), options);
    }
    return run(cmd, options);
  }

}  // namespace bzf
