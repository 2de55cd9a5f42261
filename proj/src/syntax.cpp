#include "bzf/syntax.hpp"

#include <cctype>
#include <limits>

#include "bzf/error.hpp"

namespace bzf {

  Family FamilyExpr::build(std::size_t cap) const {
    return closure ? Family::close(sets, cap) : Family::from_members(sets);
  }

  Element ElementExpr::resolve(SemigroupCtx const& ctx) const {
    if (zero) {
      return ctx.zero();
    }
    return ctx.make(i, j, set);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  void Parser::fail(std::string expected) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < _pos && k < _text.size(); ++k) {
      if (_text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, std::move(expected));
  }

  void Parser::skip_space() {
    while (_pos < _text.size()
           && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
      ++_pos;
    }
  }

  char Parser::peek() {
    skip_space();
    return _pos < _text.size() ? _text[_pos] : '\0';
  }

  bool Parser::accept(char c) {
    if (peek() == c && c != '\0') {
      ++_pos;
      return true;
    }
    return false;
  }

  void Parser::expect(char c) {
    if (!accept(c)) {
      fail(std::string("'") + c + "'");
    }
  }

  bool Parser::at_end() {
    return peek() == '\0';
  }

  void Parser::expect_end() {
    if (!at_end()) {
      fail("end of input");
    }
  }

  std::int64_t Parser::integer() {
    skip_space();
    std::size_t const start    = _pos;
    bool const        negative = _pos < _text.size() && _text[_pos] == '-';
    if (negative) {
      ++_pos;
    }
    if (_pos >= _text.size()
        || !std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      _pos = start;
      fail("integer");
    }
    std::int64_t value = 0;
    while (_pos < _text.size()
           && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      int const digit = _text[_pos] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        _pos = start;
        fail("integer in 64-bit range");
      }
      value = value * 10 + digit;
      ++_pos;
    }
    return negative ? -value : value;
  }

  std::int64_t Parser::natural() {
    skip_space();
    std::size_t const start = _pos;
    std::int64_t      n     = integer();
    if (n < 0) {
      _pos = start;
      fail("natural number");
    }
    return n;
  }

  std::string Parser::peek_word() {
    skip_space();
    std::size_t end = _pos;
    while (end < _text.size()
           && (std::isalnum(static_cast<unsigned char>(_text[end]))
               || _text[end] == '-' || _text[end] == '_')) {
      if (end == _pos && !std::isalpha(static_cast<unsigned char>(_text[end]))) {
        break;
      }
      ++end;
    }
    return std::string(_text.substr(_pos, end - _pos));
  }

  std::string Parser::word() {
    std::string w = peek_word();
    if (w.empty()) {
      fail("identifier");
    }
    _pos += w.size();
    return w;
  }

  EpSet Parser::term() {
    if (accept('{')) {
      std::vector<std::int64_t> members;
      if (!accept('}')) {
        do {
          members.push_back(natural());
        } while (accept(','));
        expect('}');
      }
      return EpSet::finite(std::move(members));
    }
    if (accept('[')) {
      std::int64_t k = integer();
      expect(')');
      return EpSet::ray(k);
    }
    if (peek_word() == "w") {
      ++_pos;
      return EpSet::ray(0);
    }
    std::int64_t const first = natural();
    if (accept('+')) {
      std::size_t const at   = position();
      std::int64_t      step = natural();
      expect('*');
      if (peek_word() != "w") {
        fail("'w'");
      }
      ++_pos;
      if (step < 1) {
        _pos = at;
        fail("positive step");
      }
      return EpSet::progression(first, step);
    }
    if (accept('*')) {
      if (peek_word() != "w") {
        fail("'w'");
      }
      ++_pos;
      if (first < 1) {
        fail("positive step");
      }
      return EpSet::progression(0, first);
    }
    fail("'+' or '*' after a number in a set term");
  }

  EpSet Parser::set() {
    EpSet result = term();
    while (accept('|')) {
      result = unite(result, term());
    }
    return result;
  }

  FamilyExpr Parser::family() {
    FamilyExpr  expr;
    std::string kw = peek_word();
    if (kw == "family") {
      expr.closure = false;
    } else if (kw == "closure") {
      expr.closure = true;
    } else {
      fail("'family' or 'closure'");
    }
    _pos += kw.size();
    expect('{');
    do {
      expr.sets.push_back(set());
    } while (accept(';'));
    expect('}');
    return expr;
  }

  ElementExpr Parser::element() {
    ElementExpr e;
    if (peek() == '0') {
      ++_pos;
      e.zero = true;
      return e;
    }
    if (peek() != '(') {
      fail("element '(i,j;set)' or '0'");
    }
    ++_pos;
    e.i = integer();
    expect(',');
    e.j = integer();
    expect(';');
    e.set = set();
    expect(')');
    return e;
  }

  std::vector<ElementExpr> Parser::product() {
    std::vector<ElementExpr> factors{element()};
    while (accept('*')) {
      factors.push_back(element());
    }
    return factors;
  }

  EpSet parse_set(std::string_view text) {
    Parser p(text);
    EpSet  s = p.set();
    p.expect_end();
    return s;
  }

  FamilyExpr parse_family(std::string_view text) {
    Parser     p(text);
    FamilyExpr f = p.family();
    p.expect_end();
    return f;
  }

  ElementExpr parse_element(std::string_view text) {
    Parser      p(text);
    ElementExpr e = p.element();
    p.expect_end();
    return e;
  }

  std::vector<ElementExpr> parse_product(std::string_view text) {
    Parser p(text);
    auto   factors = p.product();
    p.expect_end();
    return factors;
  }

}  // namespace bzf
