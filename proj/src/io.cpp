#include "premetric/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace premetric::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void schema_error(const std::string& pointer, const std::string& message) {
  throw SpecError(pointer + ": " + message, 0, 0, pointer);
}

void expect_keys(const Json& obj, const std::string& pointer, const std::set<std::string>& keys) {
  if (!obj.is_object()) schema_error(pointer, "expected an object");
  for (const auto& [k, v] : obj.items())
    if (!keys.count(k)) schema_error(pointer + "/" + k, "unknown field");
  for (const auto& k : keys)
    if (!obj.contains(k)) schema_error(pointer + "/" + k, "missing field");
}

Scalar scalar_from(const Json& j, const std::string& pointer) {
  if (!j.is_string()) schema_error(pointer, "expected a rational string \"p/q\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ScalarParseError& e) {
    schema_error(pointer, e.what());
  }
}

RationalMatrix matrix_from(const Json& j, const std::string& pointer, std::size_t n) {
  if (!j.is_array() || j.size() != n) schema_error(pointer, "expected " + std::to_string(n) + " rows");
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rp = pointer + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != n) schema_error(rp, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from(j[r][c], rp + "/" + std::to_string(c));
  }
  return m;
}

template <Kind K>
Graded<K> graded_from(const Json& j, const std::string& pointer, int grade) {
  const std::size_t n = grade_dim(grade);
  if (!j.is_array() || j.size() != n) schema_error(pointer, "expected " + std::to_string(n) + " coordinates");
  Graded<K> g(grade);
  for (std::size_t i = 0; i < n; ++i) g[i] = scalar_from(j[i], pointer + "/" + std::to_string(i));
  return g;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

SpecError::SpecError(const std::string& message, std::size_t line, std::size_t column, std::string pointer)
    : std::runtime_error(message), line_(line), column_(column), pointer_(std::move(pointer)) {}

Json basis_convention_json() {
  Json bivectors = Json::array(), trivectors = Json::array();
  for (int i = 0; i < 6; ++i) bivectors.push_back(basis::label(2, i));
  for (int i = 0; i < 4; ++i) trivectors.push_back(basis::label(3, i));
  Json j;
  j["bivector_order"] = bivectors;
  j["trivector_order"] = trivectors;
  j["orientation"] = "e_N = e1^e2^e3^e4";
  j["pairing"] = "eps_N|e_N = 1/1";
  j["contraction_sign"] = solve_contraction_sign();
  return j;
}

Json scalar_json(const Scalar& s) { return format_scalar(s); }

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& v : m.row(r)) row.push_back(scalar_json(v));
    rows.push_back(row);
  }
  return rows;
}

Json recipe_json(const MediumRecipe& r) {
  Json j;
  j["kind"] = recipe_kind(r);
  std::visit(overloaded{
                 [&](const recipe::Axion& x) { j["alpha"] = scalar_json(x.alpha); },
                 [&](const recipe::SkewonAxion& x) {
                   j["B"] = matrix_json(x.B.matrix());
                   j["alpha"] = scalar_json(x.alpha);
                 },
                 [&](const recipe::PAxion& x) {
                   j["P"] = matrix_json(x.P.matrix());
                   j["M"] = scalar_json(x.M);
                   j["alpha"] = scalar_json(x.alpha);
                 },
                 [&](const recipe::Case2General& x) {
                   j["B"] = matrix_json(x.B.matrix());
                   j["a"] = scalar_json(x.a);
                   j["b"] = scalar_json(x.b);
                   j["c"] = scalar_json(x.c);
                 },
                 [&](const recipe::Case1& x) {
                   j["Pi"] = graded_json(x.Pi);
                   j["Lambda"] = graded_json(x.Lambda);
                   j["C"] = graded_json(x.C);
                   j["D"] = graded_json(x.D);
                   j["alpha"] = scalar_json(x.alpha);
                 },
                 [&](const recipe::QMedium& x) {
                   j["Q"] = matrix_json(x.Q.matrix());
                   j["M"] = scalar_json(x.M);
                 },
                 [&](const recipe::QAntisym& x) {
                   j["A"] = graded_json(x.A);
                   j["M"] = scalar_json(x.M);
                 },
                 [&](const recipe::Raw& x) { j["M"] = matrix_json(x.M.matrix()); },
             },
             r);
  return j;
}

MediumRecipe recipe_from_json(const Json& j, const std::string& p) {
  if (!j.is_object()) schema_error(p, "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string()) schema_error(p + "/kind", "missing recipe kind");
  const std::string kind = j["kind"].get<std::string>();
  auto s = [&](const char* k) { return scalar_from(j[k], p + "/" + k); };
  auto m4 = [&](const char* k, Space out, Space in) { return Dyadic(out, in, matrix_from(j[k], p + "/" + k, 4)); };
  auto form = [&](const char* k) { return graded_from<Kind::Form>(j[k], p + "/" + k, 2); };
  auto vec = [&](const char* k) { return graded_from<Kind::Vector>(j[k], p + "/" + k, 2); };

  if (kind == "axion") {
    expect_keys(j, p, {"kind", "alpha"});
    return recipe::Axion{s("alpha")};
  }
  if (kind == "skewon-axion") {
    expect_keys(j, p, {"kind", "B", "alpha"});
    return recipe::SkewonAxion{m4("B", E1, F1), s("alpha")};
  }
  if (kind == "p-axion") {
    expect_keys(j, p, {"kind", "P", "M", "alpha"});
    return recipe::PAxion{m4("P", E1, F1), s("M"), s("alpha")};
  }
  if (kind == "case2") {
    expect_keys(j, p, {"kind", "B", "a", "b", "c"});
    return recipe::Case2General{m4("B", E1, F1), s("a"), s("b"), s("c")};
  }
  if (kind == "case1") {
    expect_keys(j, p, {"kind", "Pi", "Lambda", "C", "D", "alpha"});
    return recipe::Case1{form("Pi"), form("Lambda"), vec("C"), vec("D"), s("alpha")};
  }
  if (kind == "q-medium") {
    expect_keys(j, p, {"kind", "Q", "M"});
    return recipe::QMedium{m4("Q", E1, E1), s("M")};
  }
  if (kind == "q-antisym") {
    expect_keys(j, p, {"kind", "A", "M"});
    return recipe::QAntisym{vec("A"), s("M")};
  }
  if (kind == "raw") {
    expect_keys(j, p, {"kind", "M"});
    return recipe::Raw{Dyadic(F2, E2, matrix_from(j["M"], p + "/M", 6))};
  }
  schema_error(p + "/kind", "unknown recipe kind '" + kind + "'");
}

std::string serialize_spec(const MediumRecipe& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["basis_convention"] = basis_convention_json();
  j["recipe"] = recipe_json(r);
  return j.dump(2) + "\n";
}

MediumRecipe parse_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw SpecError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what(), line,
                    column, "");
  }
  expect_keys(j, "", {"format_version", "basis_convention", "recipe"});
  if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != kFormatVersion)
    schema_error("/format_version", "unsupported format version (expected " + std::to_string(kFormatVersion) + ")");
  if (j["basis_convention"] != basis_convention_json())
    schema_error("/basis_convention", "basis convention differs from this build's");
  return recipe_from_json(j["recipe"]);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace premetric::io
