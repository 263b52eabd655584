#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace birat {

/// Base class of every error raised by the library. `qualified_name()` is
/// "<module>::<ErrorName>", which is what the command-line tool reports.
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string name, const std::string& what);

  const std::string& module() const noexcept { return module_; }
  const std::string& name() const noexcept { return name_; }
  std::string qualified_name() const { return module_ + "::" + name_; }

 private:
  std::string module_;
  std::string name_;
};

#define BIRAT_DEFINE_ERROR(Type, Module)                       \
  class Type : public Error {                                  \
   public:                                                     \
    explicit Type(const std::string& what)                     \
        : Error(Module, #Type, what) {}                        \
  }

// exactpoly
BIRAT_DEFINE_ERROR(RingError, "exactpoly");
BIRAT_DEFINE_ERROR(DivisionError, "exactpoly");
BIRAT_DEFINE_ERROR(DomainError, "exactpoly");
BIRAT_DEFINE_ERROR(DegreeError, "exactpoly");

// polymat
BIRAT_DEFINE_ERROR(ShapeError, "polymat");

// curveinv
BIRAT_DEFINE_ERROR(LineCaseError, "curveinv");

// surfinv
BIRAT_DEFINE_ERROR(NoBetaTripleError, "surfinv");
BIRAT_DEFINE_ERROR(DegenerateMinorsError, "surfinv");
BIRAT_DEFINE_ERROR(SingularMatrixError, "surfinv");
BIRAT_DEFINE_ERROR(NotFollowingError, "surfinv");
BIRAT_DEFINE_ERROR(InvariantError, "surfinv");

// dixon
BIRAT_DEFINE_ERROR(DixonInapplicableError, "dixon");

#undef BIRAT_DEFINE_ERROR

/// Syntax error in the polynomial grammar or the input file format.
/// Line and column are 1-based; line is 0 when the text did not come from a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace birat
