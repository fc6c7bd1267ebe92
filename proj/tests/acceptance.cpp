// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "premetric/corpus.hpp"
#include "premetric/media.hpp"
#include "premetric/surface.hpp"

using namespace premetric;
using corpus::Family;
using corpus::Rng;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome verdict(int failures, int total, const std::string& what) {
  return {failures == 0, std::to_string(total - failures) + "/" + std::to_string(total) + " " + what};
}

MultiForm random_nu(Rng& rng) {
  MultiForm nu = corpus::random_form(rng, 1);
  while (nu.is_zero()) nu = corpus::random_form(rng, 1);
  return nu;
}

QuarticForm quartic(const Dyadic& m) { return extract_quartic(to_modified(m)); }

Dyadic full_rank_medium(Family f, Rng& rng) {
  for (;;) {
    Dyadic m = build(corpus::random_recipe(f, rng));
    if (rank(m) == 6) return m;
  }
}

Outcome criterion1() {
  const Family families[] = {Family::Axion, Family::SkewonAxion, Family::GeneralPAxion,
                             Family::Case2General, Family::Case1, Family::QAntisym};
  const Family p_axions[] = {Family::GeneralPAxion, Family::SpecialPAxion, Family::PMedium};
  Rng rng(1001);
  int failures = 0, total = 0;
  for (const Family f : families)
    for (int n = 0; n < 100; ++n) {
      const Family g = f == Family::GeneralPAxion ? p_axions[n % 3] : f;
      ++total;
      if (!quartic(build(corpus::random_recipe(g, rng))).is_zero()) {
        ++failures;
        std::printf("  nonzero quartic: %s instance %d\n", corpus::to_string(g).c_str(), n);
      }
    }
  return verdict(failures, total, "dispersion-free instances with all 35 coefficients zero");
}

Outcome criterion2() {
  Rng rng(1002);
  int zero = 0;
  for (int n = 0; n < 100; ++n)
    if (quartic(build(corpus::random_recipe(Family::RawDense, rng))).is_zero()) {
      ++zero;
      std::printf("  dense instance %d has an identically zero quartic\n", n);
    }
  return {zero <= 1, std::to_string(100 - zero) + "/100 dense instances with a nonzero coefficient"};
}

Outcome criterion3() {
  Rng rng(1003);
  int failures = 0;
  for (int n = 0; n < 500; ++n) {
    const Dyadic m = n % 2 ? corpus::random_dyadic(rng, F2, E2)
                           : build(corpus::random_recipe(corpus::all_families()[n / 2 % 12], rng));
    const MultiForm nu = random_nu(rng);
    const Dyadic mm = to_modified(m);
    const Dyadic d = dispersion_dyadic(m, nu);
    bool ok = d == dispersion_dyadic_modified(mm, nu);
    try {
      const Scalar f = fresnel_scalar(mm, nu);
      const MultiVector en = complement(nu);
      ok = ok && compound(d, 3) == f * Dyadic::dyad(en, en);
    } catch (const ConventionError&) {
      ok = false;
    }
    failures += !ok;
  }
  return verdict(failures, 500, "(medium, nu) pairs consistent");
}

Outcome criterion4() {
  Rng rng(1004);
  int failures = 0;
  for (int n = 0; n < 100;) {
    const auto r = std::get<recipe::PAxion>(corpus::random_recipe(Family::PMedium, rng));
    const Dyadic m = build(r);
    if (rank(m) < 6) continue;
    ++n;
    const PQuadratic q = check_p_quadratic(to_modified(m));
    failures += !(q.holds && q.P == r.M * r.M * determinant(r.P.matrix()));
  }
  return verdict(failures, 100, "full-rank P-media satisfy the quadratic law");
}

Outcome criterion5() {
  const std::pair<Family, std::pair<MediumClass, MediumClass>> rows[] = {
      {Family::Axion, {MediumClass::Axion, MediumClass::Axion}},
      {Family::Skewon, {MediumClass::Skewon, MediumClass::Skewon}},
      {Family::PMedium, {MediumClass::PMedium, MediumClass::PMedium}},
      {Family::SkewonAxion, {MediumClass::SkewonAxion, MediumClass::SpecialPAxion}},
      {Family::SpecialPAxion, {MediumClass::SpecialPAxion, MediumClass::SkewonAxion}},
      {Family::GeneralPAxion, {MediumClass::GeneralPAxion, MediumClass::GeneralPAxion}},
  };
  Rng rng(1005);
  int failures = 0, total = 0;
  for (const auto& [family, expected] : rows)
    for (int n = 0; n < 25; ++n) {
      ++total;
      const Dyadic m = full_rank_medium(family, rng);
      const InverseClassRow row = inverse_class_map(m);
      if (row.m_class != expected.first || row.n_class != expected.second || compose(m, row.N) != units::I2T()) {
        ++failures;
        std::printf("  %s instance %d: %s -> %s\n", corpus::to_string(family).c_str(), n,
                    to_string(row.m_class).c_str(), to_string(row.n_class).c_str());
      }
    }
  // Pure skewon (α = 0) stays a skewon instead of becoming a special P-axion.
  for (int n = 0; n < 25; ++n) {
    ++total;
    const auto r = std::get<recipe::SkewonAxion>(corpus::random_recipe(Family::Skewon, rng));
    const Dyadic m = build(r);
    if (rank(m) < 6) {
      --total;
      continue;
    }
    failures += inverse_class_map(m).n_class != MediumClass::Skewon;
  }
  // P = 0: singular P dyadic with no axion part has no inverse.
  for (int n = 0; n < 25; ++n) {
    ++total;
    Dyadic p = corpus::random_dyadic(rng, E1, F1);
    RationalMatrix pm = p.matrix();
    for (int i = 0; i < 4; ++i) pm(i, 3) = pm(i, 0) + pm(i, 1);
    const Dyadic m = build(recipe::PAxion{Dyadic(E1, F1, pm), rng.nonzero_rational(), 0});
    bool ok = check_p_quadratic(to_modified(m)).P == 0;
    try {
      inverse_class_map(m);
      ok = false;
    } catch (const NoInverse&) {
    }
    failures += !ok;
  }
  return verdict(failures, total, "table rows and exceptions reproduced");
}

Outcome criterion6() {
  Rng rng(1006);
  int failures = 0;
  for (int n = 0; n < 100; ++n) {
    const auto c = std::get<recipe::Case1>(corpus::random_recipe(Family::Case1, rng));
    const Case1Inverse inv = invert_case1(c);
    failures += compose(build(c), build(recipe::Case1{c.Pi, c.Lambda, inv.C, inv.D, inv.alpha})) != units::I2T();
  }
  for (int n = 0; n < 25; ++n) {
    const auto c = std::get<recipe::Case1>(corpus::random_recipe(Family::Case1Singular, rng));
    try {
      invert_case1(c);
      ++failures;
    } catch (const NoInverse&) {
    }
  }
  return verdict(failures, 125, "case-1 inverses exact, singular instances refused");
}

Outcome criterion7() {
  Rng rng(1007);
  int failures = 0;
  const std::pair<Family, PQBranch> groups[] = {{Family::QSymmetric, PQBranch::QSolution},
                                                {Family::PMedium, PQBranch::PSolution},
                                                {Family::QAntisym, PQBranch::QAntisymmetric}};
  for (const auto& [family, expected] : groups)
    for (int n = 0; n < 100; ++n) {
      const PQBranch b = pq_discriminate(to_modified(full_rank_medium(family, rng)));
      if (b != expected) {
        ++failures;
        std::printf("  %s instance %d: %s\n", corpus::to_string(family).c_str(), n, to_string(b).c_str());
      }
    }
  return verdict(failures, 300, "discriminator verdicts correct");
}

Outcome criterion8() {
  Rng rng(1008);
  int failures = 0;
  const Family families[] = {Family::Case1, Family::SkewonAxion, Family::GeneralPAxion, Family::PMedium};
  for (int n = 0; n < 50; ++n) {
    const Dyadic a = corpus::random_full_rank(rng);
    for (const Family f : families) {
      const Dyadic m = full_rank_medium(f, rng);
      const Dyadic ma = affine_transform(m, a);
      const bool same = classify_raw(m).structural == classify_raw(ma).structural;
      if (!same || !quartic(ma).is_zero()) {
        ++failures;
        std::printf("  %s under map %d changed class\n", corpus::to_string(f).c_str(), n);
      }
    }
  }
  return verdict(failures, 200, "transformed instances keep class and zero quartic");
}

Outcome criterion9() {
  Rng rng(1009);
  int failures = 0;
  try {
    for (int n = 0; n < 100; ++n) {
      const Dyadic f = rng.rational() * units::eN_I2T();
      failures += !vanishing_certificate(f);
    }
    for (int n = 0; n < 100; ++n) {
      RationalMatrix f = (rng.rational() * units::eN_I2T()).matrix();
      f(rng.integer(0, 5), rng.integer(0, 5)) += rng.nonzero_rational();
      failures += vanishing_certificate(Dyadic(E2, E2, f));
    }
  } catch (const ConventionError& e) {
    return {false, std::string("routes disagree: ") + e.what()};
  }
  return verdict(failures, 200, "certificates correct, both routes agree");
}

Outcome criterion10() {
  const Dyadic q(E1, E1, RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
  const QuarticForm form = quartic(build(recipe::QMedium{q, 1}));
  const int s[4] = {1, 1, 1, -1};
  Scalar factor;
  bool proportional = true;
  for (int t = 0; t < QuarticForm::kTerms; ++t) {
    const Exponents& e = QuarticForm::exponents(t);
    Scalar expected = 0;
    std::vector<int> squared;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 4) expected = 1;
      if (e[i] == 2) squared.push_back(i);
    }
    if (squared.size() == 2) expected = 2 * s[squared[0]] * s[squared[1]];
    const Scalar actual = form.monomial_coefficient(t);
    if (factor == 0 && expected != 0) factor = actual / expected;
    proportional = proportional && actual == factor * expected;
  }
  proportional = proportional && factor != 0;

  int bad_rays = 0, rays = 0;
  for (const Scalar omega : {Scalar(1), Scalar(7, 3)}) {
    const double w = omega.get_d();
    for (const auto& ray : surface::sample_surface(form, omega, 16)) {
      ++rays;
      bool ok = ray.roots.size() == 2 && ray.max_residual <= surface::kTolerance;
      for (const double k : ray.roots) ok = ok && std::abs(std::abs(k) - w) <= 1e-9 * w;
      bad_rays += !ok;
    }
  }
  return {proportional && bad_rays == 0, std::string(proportional ? "quartic is the squared light cone, "
                                                                  : "quartic NOT proportional, ") +
                                             std::to_string(rays - bad_rays) + "/" + std::to_string(rays) +
                                             " rays with |k| = omega"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"dispersion-free families", criterion1}, {"negative control", criterion2},
      {"dispersion forms consistent", criterion3}, {"P-medium quadratic law", criterion4},
      {"inverse class table", criterion5},      {"case-1 inverse", criterion6},
      {"P/Q discriminator", criterion7},        {"affine closure", criterion8},
      {"uniqueness certificate", criterion9},   {"light cone sanity", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s: %s (%s, %.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
