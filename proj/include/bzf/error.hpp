#ifndef BZF_ERROR_HPP_
#define BZF_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace bzf {

  // Domain error carrying a machine-readable code (e.g. "ClosureDiverged").
  class Error : public std::runtime_error {
   public:
    Error(std::string code, std::string const& what)
        : std::runtime_error(what), _code(std::move(code)) {}

    std::string const& code() const noexcept {
      return _code;
    }

   private:
    std::string _code;
  };

  // Raised by the text grammar parser. Line and column are 1-based.
  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t col, std::string expected)
        : Error("SyntaxError",
                "syntax error at " + std::to_string(line) + ":"
                    + std::to_string(col) + ": expected " + expected),
          _line(line),
          _col(col),
          _expected(std::move(expected)) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t col() const noexcept {
      return _col;
    }
    std::string const& expected() const noexcept {
      return _expected;
    }

   private:
    std::size_t _line;
    std::size_t _col;
    std::string _expected;
  };

}  // namespace bzf

#endif  // BZF_ERROR_HPP_
