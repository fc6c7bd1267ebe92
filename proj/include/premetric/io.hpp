#pragma once

// Medium specification files: JSON with every rational written as "p/q".
//
//   {
//     "format_version": 1,
//     "basis_convention": { ... },   must equal basis_convention_json()
//     "recipe": { "kind": "<recipe_kind>", <parameters> }
//   }
//
// Parameters by kind (matrices are arrays of rows, graded values are arrays
// in lexicographic basis order):
//   axion         alpha
//   skewon-axion  B (4x4), alpha
//   p-axion       P (4x4), M, alpha
//   case2         B (4x4), a, b, c
//   case1         Pi (6), Lambda (6), C (6), D (6), alpha
//   q-medium      Q (4x4), M
//   q-antisym     A (6), M
//   raw           M (6x6)

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "premetric/media.hpp"

namespace premetric::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Syntax or schema error in a spec file. Syntax errors carry a 1-based
/// line and column; schema errors carry the JSON pointer of the offending
/// value and line = column = 0.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& message, std::size_t line, std::size_t column, std::string pointer);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& pointer() const { return pointer_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string pointer_;
};

/// The block every file carries: bivector and trivector ordering,
/// orientation, pairing normalization and the contraction sign.
Json basis_convention_json();

Json scalar_json(const Scalar& s);
Json matrix_json(const RationalMatrix& m);
template <Kind K>
Json graded_json(const Graded<K>& g) {
  Json a = Json::array();
  for (const auto& c : g.coords()) a.push_back(scalar_json(c));
  return a;
}

Json recipe_json(const MediumRecipe& r);
MediumRecipe recipe_from_json(const Json& j, const std::string& pointer = "/recipe");

/// Canonical text: two-space indentation and a trailing newline.
std::string serialize_spec(const MediumRecipe& r);
MediumRecipe parse_spec(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace premetric::io
