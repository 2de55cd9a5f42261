#ifndef BZF_COMMAND_HPP_
#define BZF_COMMAND_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bzf/family.hpp"
#include "bzf/semigroup.hpp"
#include "bzf/syntax.hpp"

namespace bzf {

  struct EvalCmd {
    std::vector<ElementExpr> factors;
  };

  struct ClosureCmd {
    std::vector<EpSet> sets;
  };

  struct ClassifyCmd {
    FamilyExpr family;
  };

  struct IsClosedCmd {
    FamilyExpr family;
  };

  struct GreenCmd {
    ElementExpr a;
    ElementExpr b;
    GreenRel    rel;
  };

  struct OrderCmd {
    ElementExpr a;
    ElementExpr b;
  };

  struct MapCmd {
    std::string name;
    ElementExpr element;
  };

  struct CheckHomCmd {
    std::string name;
  };

  struct OracleCheckCmd {};

  struct SelfTestCmd {
    std::string suite = "all";
  };

  using Command = std::variant<EvalCmd,
                               ClosureCmd,
                               ClassifyCmd,
                               IsClosedCmd,
                               GreenCmd,
                               OrderCmd,
                               MapCmd,
                               CheckHomCmd,
                               OracleCheckCmd,
                               SelfTestCmd>;

  //! Throws SyntaxError with the position of the first offending token.
  Command parse_command(std::string_view text);

  struct Options {
    std::uint64_t seed       = 20240601;
    std::size_t   samples    = 10000;
    std::int64_t  window     = 128;
    bool          pretty     = false;
    std::size_t   max_family = Family::default_cap;
    // Family expression for eval/green/order/map; when absent the closure of
    // the sets in the command is used.
    std::optional<std::string> family;
    // Target progression for `map reindex`.
    std::optional<std::string> target;
  };

  struct Response {
    std::string json;
    // 0 ok, 1 domain error, 2 syntax error, 3 self-test failure.
    int exit_code = 0;
  };

  Response run(Command const& cmd, Options const& options);

  //! parse_command followed by run; syntax errors become exit code 2.
  Response execute(std::string_view text, Options const& options);

  std::vector<std::string> const& map_names();

}  // namespace bzf

#endif  // BZF_COMMAND_HPP_
