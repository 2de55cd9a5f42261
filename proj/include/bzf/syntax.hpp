#ifndef BZF_SYNTAX_HPP_
#define BZF_SYNTAX_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bzf/family.hpp"
#include "bzf/omega_set.hpp"
#include "bzf/semigroup.hpp"

// Text grammar shared by the CLI and the test fixtures.
//
//   set      := term ('|' term)*
//   term     := '{' [nat (',' nat)*] '}' | '[' int ')' | nat '+' nat '*' 'w'
//             | nat '*' 'w' | 'w'
//   family   := ('family' | 'closure') '{' set (';' set)* '}'
//   element  := '0' | '(' int ',' int ';' set ')'
//   product  := element ('*' element)*
//
// All parse_* functions consume the whole input and throw SyntaxError.

namespace bzf {

  struct FamilyExpr {
    bool               closure = false;  // closure{...} rather than family{...}
    std::vector<EpSet> sets;

    //! closure{...} -> Family::close; family{...} -> Family::from_members.
    Family build(std::size_t cap = Family::default_cap) const;
  };

  //! Element literal before validation against a family. A triple whose
  //! set is empty is reported as written, so the caller can reject it.
  struct ElementExpr {
    bool         zero = false;
    std::int64_t i    = 0;
    std::int64_t j    = 0;
    EpSet        set;

    Element resolve(SemigroupCtx const& ctx) const;
  };

  EpSet                    parse_set(std::string_view text);
  FamilyExpr               parse_family(std::string_view text);
  ElementExpr              parse_element(std::string_view text);
  std::vector<ElementExpr> parse_product(std::string_view text);

  //! Cursor-based parser over one input; the building block of the parse_*
  //! helpers and of the command parser.
  class Parser {
   public:
    explicit Parser(std::string_view text) : _text(text), _pos(0) {}

    EpSet                    set();
    FamilyExpr               family();
    ElementExpr              element();
    std::vector<ElementExpr> product();
    std::int64_t             integer();
    std::int64_t             natural();
    std::string              word();

    //! Skips whitespace, then reports whether c is next (and consumes it).
    bool accept(char c);
    void expect(char c);
    bool at_end();
    void expect_end();

    //! Next character after whitespace, or '\0' at the end.
    char peek();

    //! Next identifier without consuming it, or empty.
    std::string peek_word();

    std::size_t position() const noexcept {
      return _pos;
    }

    [[noreturn]] void fail(std::string expected) const;

   private:
    void        skip_space();
    EpSet       term();

    std::string_view _text;
    std::size_t      _pos;
  };

}  // namespace bzf

#endif  // BZF_SYNTAX_HPP_
