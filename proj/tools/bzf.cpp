#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bzf/command.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the semigroup B_Z^F.", "bzf"};
  bzf::Options             options;
  std::vector<std::string> words;
  std::string              family, target;

  app.add_option("--seed", options.seed, "Seed for sampled suites");
  app.add_option("--samples", options.samples, "Samples per suite");
  app.add_option("--window", options.window, "Oracle window half-width");
  app.add_flag("--pretty", options.pretty, "Indent the JSON output");
  app.add_option("--max-family", options.max_family, "Closure size cap");
  app.add_option("--family",
                 family,
                 "Family for element commands, e.g. 'family{ {}; {3} }'");
  app.add_option("--target", target, "Target progression for map reindex");
  app.add_option("command", words, "Command and its arguments")->required();
  app.allow_extras(false);
  app.footer(
      "Commands:\n"
      "  eval <elt> * <elt> ...        product\n"
      "  closure <set>; <set> ...      omega-closure of the sets\n"
      "  classify <family>             structure report\n"
      "  is-closed <family>            omega-closedness with a witness\n"
      "  green <elt> <elt> R|L|H|D|J   Green relation query\n"
      "  order <elt> <elt>             natural partial order\n"
      "  map <name> <elt>              sigma, ext-bicyclic, matrix-units,\n"
      "                                matrix-units-omega, brandt, reindex\n"
      "  check-hom <name>              morphism property suite\n"
      "  oracle-check                  partial-map oracle suite\n"
      "  selftest [suite]              all property suites");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    // Usage errors count as syntax errors.
    std::cout << nlohmann::json{{"error",
                                 {{"code", "UsageError"}, {"message", e.what()}}}}
                     .dump()
              << '\n';
    return 2;
  }
  if (!family.empty()) {
    options.family = family;
  }
  if (!target.empty()) {
    options.target = target;
  }

  std::string text;
  for (std::string const& w : words) {
    text += (text.empty() ? "" : " ") + w;
  }
  bzf::Response const r = bzf::execute(text, options);
  std::cout << r.json << '\n';
  return r.exit_code;
}
