#include "premetric/report.hpp"

#include <cstdio>
#include <sstream>

namespace premetric::report {

namespace {

Json quartic_json(const QuarticForm& q, int& nonzero) {
  Json j;
  nonzero = 0;
  for (int t = 0; t < QuarticForm::kTerms; ++t) {
    j[QuarticForm::key(t)] = io::scalar_json(q.entry(t));
    if (sgn(q.entry(t)) != 0) ++nonzero;
  }
  return j;
}

Json optional_string(bool has, const std::string& s) { return has ? Json(s) : Json(nullptr); }

Json header(const char* command, const MediumRecipe& r) {
  Json j;
  j["format_version"] = io::kFormatVersion;
  j["command"] = command;
  j["input"] = io::recipe_json(r);
  return j;
}

Json no_inverse_json(const NoInverse& e) {
  Json j;
  j["rank"] = e.rank();
  j["dim"] = e.dim();
  j["reason"] = e.what();
  return j;
}

}  // namespace

Json classify(const MediumRecipe& r) {
  const Dyadic m = build(r);
  Json j = header("classify", r);
  j["medium"] = io::matrix_json(m.matrix());

  const ClassificationVerdict v = classify_raw(m);
  Json verdict;
  verdict["dispersion_free"] = v.dispersion_free;
  verdict["class"] = to_string(v.structural);
  verdict["discriminator"] = optional_string(v.discriminator.has_value(), v.discriminator ? to_string(*v.discriminator) : "");
  verdict["inverse_class"] =
      optional_string(v.inverse_class.has_value(), v.inverse_class ? to_string(*v.inverse_class) : "");
  if (v.case2) {
    Json c;
    c["alpha"] = io::scalar_json(v.case2->axion);
    const bool skewon = v.case2->cls == MediumClass::Skewon || v.case2->cls == MediumClass::SkewonAxion;
    c["P"] = skewon ? Json(nullptr) : io::scalar_json(v.case2->P);
    verdict["case2"] = c;
  } else {
    verdict["case2"] = nullptr;
  }
  if (v.case1) {
    Json c;
    c["Pi"] = io::graded_json(v.case1->Pi);
    c["Lambda"] = io::graded_json(v.case1->Lambda);
    c["C"] = io::graded_json(v.case1->C);
    c["D"] = io::graded_json(v.case1->D);
    c["alpha"] = io::scalar_json(v.case1->alpha);
    verdict["case1"] = c;
  } else {
    verdict["case1"] = nullptr;
  }
  j["verdict"] = verdict;

  int nonzero = 0;
  j["quartic"] = quartic_json(extract_quartic(to_modified(m)), nonzero);
  j["nonzero_coefficients"] = nonzero;

  const HODecomposition ho = decompose_hehl_obukhov(m);
  Json dec;
  dec["principal"] = io::matrix_json(ho.principal.matrix());
  dec["skewon"] = io::matrix_json(ho.skewon.matrix());
  dec["axion"] = io::scalar_json(ho.axion);
  j["decomposition"] = dec;

  try {
    j["inverse"] = {{"matrix", io::matrix_json(inverse(m).matrix())}};
  } catch (const NoInverse& e) {
    j["inverse"] = {{"no_inverse", no_inverse_json(e)}};
  }
  return j;
}

Json invert(const MediumRecipe& r, bool& no_inverse) {
  Json j = header("invert", r);
  no_inverse = false;
  if (const auto* c = std::get_if<recipe::Case1>(&r)) {
    j["path"] = "case1-closed-form";
    try {
      const Case1Inverse inv = invert_case1(*c);
      Json p;
      p["C"] = io::graded_json(inv.C);
      p["D"] = io::graded_json(inv.D);
      p["alpha"] = io::scalar_json(inv.alpha);
      p["determinant"] = io::scalar_json(inv.determinant);
      p["reduced"] = inv.reduced;
      j["inverse_recipe"] = p;
      const recipe::Case1 back{c->Pi, c->Lambda, inv.C, inv.D, inv.alpha};
      const Dyadic n = build(back);
      j["inverse"] = io::matrix_json(n.matrix());
      j["verified"] = compose(build(r), n) == units::I2T();
    } catch (const NoInverse& e) {
      no_inverse = true;
      Json n = no_inverse_json(e);
      n["determinant"] = io::scalar_json(case1_determinant(*c));
      j["no_inverse"] = n;
    }
    return j;
  }
  j["path"] = "exact-solve";
  try {
    const Dyadic m = build(r);
    const Dyadic n = inverse(m);
    j["inverse"] = io::matrix_json(n.matrix());
    j["verified"] = compose(m, n) == units::I2T();
  } catch (const NoInverse& e) {
    no_inverse = true;
    j["no_inverse"] = no_inverse_json(e);
  }
  return j;
}

Json wave(const MediumRecipe& r, const MultiForm& nu, bool& no_wave) {
  if (nu.is_zero()) throw PreconditionError("wave one-form ν must be nonzero");
  const Dyadic m = build(r);
  Json j = header("wave", r);
  j["nu"] = io::graded_json(nu);
  const Dyadic d = dispersion_dyadic(m, nu);
  j["dispersion_dyadic"] = io::matrix_json(d.matrix());
  j["dispersion_rank"] = rank(d);
  j["fresnel"] = io::scalar_json(fresnel_scalar(to_modified(m), nu));
  const WaveSolution s = plane_wave_solve(m, nu);
  no_wave = std::holds_alternative<NoWave>(s);
  if (const auto* w = std::get_if<PlaneWave>(&s)) {
    Json pw;
    pw["phi"] = io::graded_json(w->phi);
    pw["Phi"] = io::graded_json(w->Phi);
    pw["Psi"] = io::graded_json(w->Psi);
    pw["null_dimension"] = w->null_dimension;
    pw["nu_wedge_Phi_zero"] = wedge(nu, w->Phi).is_zero();
    pw["nu_wedge_Psi_zero"] = wedge(nu, w->Psi).is_zero();
    j["wave"] = pw;
  } else {
    j["no_wave"] = {{"null_dimension", std::get<NoWave>(s).null_dimension}};
  }
  return j;
}

namespace {

bool is_rational_string(const Json& v) {
  if (!v.is_string()) return false;
  const auto& s = v.get_ref<const std::string&>();
  return s.find('/') != std::string::npos && s.find_first_not_of("-0123456789/") == std::string::npos;
}

std::string leaf(const Json& v, bool float_mode) {
  if (v.is_null()) return "-";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (float_mode && is_rational_string(v)) {
      char buf[40];
      std::snprintf(buf, sizeof buf, " (%.12g)", parse_scalar(s).get_d());
      s += buf;
    }
    return s;
  }
  return v.dump();
}

bool is_flat_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_structured()) return false;
  return true;
}

void render(std::ostream& os, const Json& v, int indent, bool float_mode) {
  const std::string pad(indent, ' ');
  for (const auto& [key, val] : v.items()) {
    if (val.is_object()) {
      os << pad << key << ":\n";
      render(os, val, indent + 2, float_mode);
    } else if (is_flat_array(val)) {
      os << pad << key << ": [";
      for (std::size_t i = 0; i < val.size(); ++i) os << (i ? ", " : "") << leaf(val[i], float_mode);
      os << "]\n";
    } else if (val.is_array()) {
      os << pad << key << ":\n";
      for (const auto& row : val) {
        os << pad << "  [";
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << leaf(row[i], float_mode);
        os << "]\n";
      }
    } else {
      os << pad << key << ": " << leaf(val, float_mode) << "\n";
    }
  }
}

}  // namespace

Json surface(const MediumRecipe& r, const std::vector<surface::RaySample>& rays, const Scalar& omega,
             int resolution) {
  Json j = header("surface", r);
  j["omega"] = io::scalar_json(omega);
  j["resolution"] = resolution;
  j["tolerance"] = surface::kTolerance;
  Json out = Json::array();
  for (const auto& ray : rays) {
    Json e;
    e["direction"] = Json::array();
    for (const auto& c : ray.direction) e["direction"].push_back(io::scalar_json(c));
    e["status"] = ray.identically_zero ? "identically-zero" : ray.roots.empty() ? "no-real-roots" : "roots";
    e["roots"] = ray.roots;
    e["multiplicities"] = ray.multiplicities;
    e["max_relative_residual"] = ray.identically_zero ? Json(nullptr) : Json(ray.max_residual);
    out.push_back(std::move(e));
  }
  j["rays"] = std::move(out);
  return j;
}

std::string render_text(const Json& report, bool float_mode) {
  std::ostringstream os;
  render(os, report, 0, float_mode);
  return os.str();
}

std::string conventions_text() {
  std::ostringstream os;
  os << "format_version: " << io::kFormatVersion << "\n";
  os << "orientation: e_N = e1^e2^e3^e4, eps_N|e_N = 1\n";
  os << "pairing: det[alpha_i|a_j] on decomposables\n";
  os << "contraction: pair(a _| w, X) = pair(w, X ^ a); e1 _| eps12 = s eps2 with s = " << solve_contraction_sign()
     << "\n";
  os << "hook: pair(beta, X |_ alpha) = pair(alpha ^ beta, X); pair(w |_ A, B) = pair(w, A ^ B)\n";

  for (int g = 0; g <= 4; ++g) {
    os << "grade " << g << " basis:";
    for (int i = 0; i < grade_dim(g); ++i) os << " " << (g ? basis::label(g, i) : "1");
    os << "\n";
  }

  os << "\nwedge table (e_I ^ e_J = sign e_K):\n";
  for (int ga = 1; ga <= 3; ++ga)
    for (int gb = 1; ga + gb <= 4; ++gb)
      for (int a = 0; a < grade_dim(ga); ++a)
        for (int b = 0; b < grade_dim(gb); ++b) {
          const auto& w = basis::wedge_entry(ga, a, gb, b);
          if (w.sign == 0) continue;
          os << "  " << basis::label(ga, a) << " ^ " << basis::label(gb, b) << " = " << (w.sign > 0 ? "+" : "-")
             << basis::label(ga + gb, w.index) << "\n";
        }

  os << "\ncomplement e_N |_ eps_I:\n";
  for (int g = 0; g <= 4; ++g)
    for (int i = 0; i < grade_dim(g); ++i) {
      const MultiVector c = complement(MultiForm::basis(g, i));
      os << "  eps" << (g ? basis::label(g, i) : "") << " ->";
      for (int k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) os << " " << (sgn(c[k]) > 0 ? "+" : "-") << "e" << (c.grade() ? basis::label(c.grade(), k) : "");
      os << "\n";
    }

  os << "\ncomplement round-trip sign eps_N |_ (e_N |_ w) = lambda_k w:";
  for (int g = 0; g <= 4; ++g) os << " " << complement_roundtrip_sign(g);
  os << "\n";

  os << "\ncontraction table e_i _| eps_J:\n";
  for (int i = 0; i < 4; ++i)
    for (int g = 1; g <= 4; ++g)
      for (int j = 0; j < grade_dim(g); ++j) {
        const MultiForm c = contract(MultiVector::basis(1, i), MultiForm::basis(g, j));
        if (c.is_zero()) continue;
        os << "  e" << i + 1 << " _| eps" << basis::label(g, j) << " =";
        for (int k = 0; k < c.size(); ++k)
          if (sgn(c[k]) != 0) os << " " << (sgn(c[k]) > 0 ? "+" : "-") << "eps" << basis::label(c.grade(), k);
        os << "\n";
      }

  os << "\npolarization points (nu = exponent vector, quartic term key):\n";
  const auto& pts = QuarticForm::polarization_points();
  for (int t = 0; t < QuarticForm::kTerms; ++t) {
    os << "  " << QuarticForm::key(t) << ": (";
    for (int k = 0; k < 4; ++k) os << (k ? "," : "") << pts[t][k].get_str();
    os << ")\n";
  }
  return os.str();
}

}  // namespace premetric::report
