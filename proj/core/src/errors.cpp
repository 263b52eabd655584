#include "birat/errors.hpp"

#include <utility>

namespace birat {

Error::Error(std::string module, std::string name, const std::string& what)
    : std::runtime_error(what), module_(std::move(module)), name_(std::move(name)) {}

namespace {

std::string located(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return "column " + std::to_string(column) + ": " + what;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error("cli", "ParseError", located(what, line, column)), line_(line), column_(column) {}

}  // namespace birat
