#include "premetric/dispersion.hpp"

#include <algorithm>

namespace premetric {

namespace {

struct QuarticTables {
  std::array<Exponents, QuarticForm::kTerms> exps{};
  std::array<std::string, QuarticForm::kTerms> keys;
  std::array<int, QuarticForm::kTerms> multinomials{};
  std::vector<MultiForm> points;
  RationalMatrix solve_matrix;  // inverse of the evaluation matrix

  QuarticTables() {
    int t = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b)
        for (int c = b; c < 4; ++c)
          for (int d = c; d < 4; ++d) {
            Exponents e{0, 0, 0, 0};
            for (int i : {a, b, c, d}) ++e[i];
            exps[t] = e;
            keys[t] = {static_cast<char>('1' + a), static_cast<char>('1' + b), static_cast<char>('1' + c),
                       static_cast<char>('1' + d)};
            int denom = 1;
            for (int m : e)
              for (int k = 2; k <= m; ++k) denom *= k;
            multinomials[t] = 24 / denom;
            ++t;
          }
    for (const auto& e : exps) points.push_back(form4(e[0], e[1], e[2], e[3]));

    RationalMatrix v(QuarticForm::kTerms, QuarticForm::kTerms);
    for (int r = 0; r < QuarticForm::kTerms; ++r)
      for (int c = 0; c < QuarticForm::kTerms; ++c) v(r, c) = monomial_value(c, points[r]) * multinomials[c];
    auto inv = try_inverse(v);
    if (!inv) throw ConventionError("quartic evaluation points are not unisolvent");
    solve_matrix = std::move(*inv);
  }

  Scalar monomial_value(int term, const MultiForm& nu) const {
    Scalar p = 1;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < exps[term][i]; ++k) p *= nu[i];
    return p;
  }
};

const QuarticTables& quartic_tables() {
  static const QuarticTables t;
  return t;
}

void require_one_form(const MultiForm& nu) {
  if (nu.grade() != 1) throw DegreeError("wave one-form must have grade 1");
}

void require_modified(const Dyadic& mm) {
  if (mm.out_space() != E2 || mm.in_space() != E2)
    throw SpaceMismatch("expected a modified bidyadic in E2E2, got " + to_string(mm.out_space()) +
                        to_string(mm.in_space()));
}

void require_medium(const Dyadic& m) {
  if (m.out_space() != F2 || m.in_space() != E2)
    throw SpaceMismatch("expected a medium bidyadic in F2E2, got " + to_string(m.out_space()) +
                        to_string(m.in_space()));
}

}  // namespace

QuarticForm QuarticForm::from_monomials(std::span<const Scalar> coefficients) {
  if (coefficients.size() != kTerms) throw std::invalid_argument("quartic needs 35 monomial coefficients");
  std::array<Scalar, kTerms> e;
  for (int t = 0; t < kTerms; ++t) e[t] = coefficients[t] / multinomial(t);
  return QuarticForm(std::move(e));
}

Scalar QuarticForm::monomial_coefficient(int term) const { return entries_[term] * multinomial(term); }

Scalar QuarticForm::evaluate(const MultiForm& nu) const {
  require_one_form(nu);
  const auto& tab = quartic_tables();
  Scalar s;
  for (int t = 0; t < kTerms; ++t) {
    if (sgn(entries_[t]) == 0) continue;
    s += entries_[t] * tab.multinomials[t] * tab.monomial_value(t, nu);
  }
  return s;
}

bool QuarticForm::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

std::string QuarticForm::key(int term) { return quartic_tables().keys.at(term); }
const Exponents& QuarticForm::exponents(int term) { return quartic_tables().exps.at(term); }
int QuarticForm::multinomial(int term) { return quartic_tables().multinomials.at(term); }
const std::vector<MultiForm>& QuarticForm::polarization_points() { return quartic_tables().points; }

Dyadic dispersion_dyadic(const Dyadic& m, const MultiForm& nu) {
  require_medium(m);
  require_one_form(nu);
  RationalMatrix d(4, 4);
  for (int j = 0; j < 4; ++j) {
    const MultiForm phi = wedge(nu, MultiForm::basis(1, j));
    const MultiForm psi = apply<Kind::Form>(m, phi);
    const MultiVector col = complement(wedge(nu, psi));
    for (int i = 0; i < 4; ++i) d(i, j) = col[i];
  }
  return Dyadic(E1, E1, std::move(d));
}

Dyadic dispersion_dyadic_modified(const Dyadic& mm, const MultiForm& nu) {
  require_modified(mm);
  require_one_form(nu);
  return double_contract(mm, nu);
}

Scalar fresnel_scalar(const Dyadic& mm, const MultiForm& nu) {
  require_modified(mm);
  require_one_form(nu);
  const Dyadic d = double_contract(mm, nu);
  const Scalar first = double_pair(double_wedge(mm, compound(d, 2))) / 3;

  const Dyadic inner = double_contract_left(nu, double_wedge(mm, double_contract_left(nu, mm)));
  const Scalar second = double_pair(double_wedge(mm, inner)) / 6;
  if (first != second)
    throw ConventionError("closed forms of the Fresnel scalar disagree: " + format_scalar(first) + " vs " +
                          format_scalar(second));
  return first;
}

Scalar fresnel_scalar_n(const Dyadic& nm, const MultiForm& nu) { return fresnel_scalar(nm, nu); }

QuarticForm extract_quartic(const Dyadic& mm) {
  require_modified(mm);
  const auto& tab = quartic_tables();
  std::vector<Scalar> values(QuarticForm::kTerms);
  for (int r = 0; r < QuarticForm::kTerms; ++r) values[r] = fresnel_scalar(mm, tab.points[r]);
  const std::vector<Scalar> c = tab.solve_matrix * std::span<const Scalar>(values);
  std::array<Scalar, QuarticForm::kTerms> e;
  std::copy(c.begin(), c.end(), e.begin());
  return QuarticForm(std::move(e));
}

bool is_dispersion_free(const Dyadic& m) {
  require_medium(m);
  return extract_quartic(to_modified(m)).is_zero();
}

RankProfile rank_profile(const Dyadic& m, std::span<const MultiForm> samples) {
  if (samples.empty()) throw PreconditionError("rank profile needs at least one sample");
  RankProfile p;
  p.min_rank = 4;
  for (const auto& nu : samples) {
    const std::size_t r = rank(dispersion_dyadic(m, nu));
    p.ranks.push_back(r);
    p.min_rank = std::min(p.min_rank, r);
    p.max_rank = std::max(p.max_rank, r);
  }
  p.rank_at_most_two = p.max_rank <= 2;
  return p;
}

namespace {

bool proportional(std::span<const Scalar> a, const MultiForm& b) {
  // a ∥ b iff every 2×2 minor vanishes.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

WaveSolution plane_wave_solve(const Dyadic& m, const MultiForm& nu) {
  require_medium(m);
  require_one_form(nu);
  if (nu.is_zero()) throw PreconditionError("wave one-form must be nonzero");
  const Dyadic d = dispersion_dyadic(m, nu);
  const auto kernel = null_space(d.matrix());
  for (const auto& g : kernel) {
    if (proportional(g, nu)) continue;
    PlaneWave w{nu, MultiForm(1, g), MultiForm(2), MultiForm(2), kernel.size()};
    w.Phi = wedge(nu, w.phi);
    w.Psi = apply<Kind::Form>(m, w.Phi);
    if (!wedge(nu, w.Psi).is_zero()) throw ConventionError("null-space potential violates ν∧Ψ = 0");
    return w;
  }
  return NoWave{kernel.size()};
}

}  // namespace premetric
