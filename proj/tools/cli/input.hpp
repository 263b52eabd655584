#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "birat/curve.hpp"
#include "birat/errors.hpp"
#include "birat/surface.hpp"

namespace birat::cli {

/// Missing or inconsistent keys in an input file.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error("cli", "InputError", what) {}
};

/// One `key: value` pair with the position of its value in the file.
struct Field {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Splits the line-oriented format into fields. A line may hold several
/// `key: value` pairs; `#` starts a comment. Repeated keys are kept in order
/// (used by `row:`).
std::multimap<std::string, Field> parse_fields(const std::string& text);

struct CurveInput {
  PlaneCurveParam param;
  std::optional<Polynomial> numerator;
  std::optional<Polynomial> denominator;
  std::optional<Polynomial> implicit;
};

struct SurfaceInput {
  SurfaceParam param;
  bool affine = false;
  /// Affine input whose three denominators coincide (the Dixon route applies).
  bool shared_denominator = false;
  std::optional<std::array<Polynomial, 3>> psi;
  std::optional<Polynomial> implicit;
};

struct MatrixInput {
  ElimMatrix matrix;
  SurfaceInput surface;
  bool certified = false;
};

using Input = std::variant<CurveInput, SurfaceInput, MatrixInput>;

/// Parses and validates a whole input file. Throws ParseError for syntax
/// errors and InputError for missing keys.
Input parse_input(const std::string& text);
Input parse_input_file(const std::string& path);

}  // namespace birat::cli
