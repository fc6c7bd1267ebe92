#include "premetric/scalar.hpp"

#include <cctype>

namespace premetric {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ScalarParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ScalarParseError("zero denominator in '" + std::string(text) + "'");
  Scalar out(p, q);
  out.canonicalize();
  return out;
}

std::string format_scalar(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool rational_sqrt(const Scalar& value, Scalar& root) {
  if (sgn(value) < 0) return false;
  mpz_class n = value.get_num();
  mpz_class d = value.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Scalar(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace premetric
