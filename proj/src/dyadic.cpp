#include "premetric/dyadic.hpp"

namespace premetric {

std::string to_string(Space s) {
  return std::string(s.kind == Kind::Vector ? "E" : "F") + std::to_string(s.grade);
}

namespace {

void check_shape(Space out, Space in, const RationalMatrix& m) {
  if (out.grade < 0 || out.grade > kDim || in.grade < 0 || in.grade > kDim)
    throw DegreeError("dyadic grade out of range");
  if (static_cast<int>(m.rows()) != out.dim() || static_cast<int>(m.cols()) != in.dim())
    throw SpaceMismatch("matrix shape does not match " + to_string(out) + to_string(in));
}

void same_spaces(const Dyadic& a, const Dyadic& b, const char* what) {
  if (a.out_space() != b.out_space() || a.in_space() != b.in_space())
    throw SpaceMismatch(std::string(what) + ": " + to_string(a.out_space()) + to_string(a.in_space()) + " vs " +
                        to_string(b.out_space()) + to_string(b.in_space()));
}

// Matrix of the complement map (e_N⌊ on forms, ε_N⌊ on vectors) on grade k:
// column j holds the complement of basis element j.
RationalMatrix complement_matrix(Kind source, int grade) {
  const int n = grade_dim(grade);
  RationalMatrix c(grade_dim(kDim - grade), n);
  for (int j = 0; j < n; ++j) {
    if (source == Kind::Form) {
      const MultiVector v = complement(MultiForm::basis(grade, j));
      for (int i = 0; i < v.size(); ++i) c(i, j) = v[i];
    } else {
      const MultiForm v = complement(MultiVector::basis(grade, j));
      for (int i = 0; i < v.size(); ++i) c(i, j) = v[i];
    }
  }
  return c;
}

// Matrix of X ↦ ν⌋X on grade-k multivectors.
RationalMatrix left_contract_matrix(const MultiForm& nu, int grade) {
  RationalMatrix l(grade_dim(grade - 1), grade_dim(grade));
  for (int j = 0; j < grade_dim(grade); ++j) {
    const MultiVector v = contract(nu, MultiVector::basis(grade, j));
    for (int i = 0; i < v.size(); ++i) l(i, j) = v[i];
  }
  return l;
}

int factorial(int p) { return p <= 1 ? 1 : p * factorial(p - 1); }

}  // namespace

Dyadic::Dyadic(Space out, Space in, RationalMatrix matrix) : out_(out), in_(in), m_(std::move(matrix)) {
  check_shape(out_, in_, m_);
}

Dyadic Dyadic::zero(Space out, Space in) { return Dyadic(out, in, RationalMatrix(out.dim(), in.dim())); }

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  same_spaces(*this, o, "sum");
  m_ += o.m_;
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) {
  same_spaces(*this, o, "difference");
  m_ -= o.m_;
  return *this;
}

Dyadic& Dyadic::operator*=(const Scalar& s) {
  m_ *= s;
  return *this;
}

Dyadic compose(const Dyadic& f, const Dyadic& g) {
  if (f.in_space() != g.out_space().dual())
    throw SpaceMismatch("cannot compose " + to_string(f.out_space()) + to_string(f.in_space()) + " | " +
                        to_string(g.out_space()) + to_string(g.in_space()));
  return Dyadic(f.out_space(), g.in_space(), f.matrix() * g.matrix());
}

Dyadic transpose(const Dyadic& f) { return Dyadic(f.in_space(), f.out_space(), f.matrix().transposed()); }

Dyadic double_wedge(const Dyadic& f, const Dyadic& g) {
  if (f.out_space().kind != g.out_space().kind || f.in_space().kind != g.in_space().kind)
    throw SpaceMismatch("double wedge needs matching factor kinds");
  const int ko = f.out_space().grade, lo = g.out_space().grade;
  const int ki = f.in_space().grade, li = g.in_space().grade;
  if (ko + lo > kDim || ki + li > kDim) throw DegreeError("double wedge exceeds grade 4");
  const Space out{f.out_space().kind, ko + lo};
  const Space in{f.in_space().kind, ki + li};
  RationalMatrix m(out.dim(), in.dim());
  const auto& fm = f.matrix();
  const auto& gm = g.matrix();
  Scalar term;
  for (int i = 0; i < f.out_space().dim(); ++i) {
    for (int p = 0; p < f.in_space().dim(); ++p) {
      const Scalar& fv = fm(i, p);
      if (sgn(fv) == 0) continue;
      for (int j = 0; j < g.out_space().dim(); ++j) {
        const auto& left = basis::wedge_entry(ko, i, lo, j);
        if (left.sign == 0) continue;
        for (int q = 0; q < g.in_space().dim(); ++q) {
          const Scalar& gv = gm(j, q);
          if (sgn(gv) == 0) continue;
          const auto& right = basis::wedge_entry(ki, p, li, q);
          if (right.sign == 0) continue;
          term = fv * gv;
          if (left.sign * right.sign > 0)
            m(left.index, right.index) += term;
          else
            m(left.index, right.index) -= term;
        }
      }
    }
  }
  return Dyadic(out, in, std::move(m));
}

Dyadic compound(const Dyadic& f, int p) {
  if (f.out_space().grade != 1 || f.in_space().grade != 1)
    throw SpaceMismatch("compound needs a grade-1 dyadic");
  if (p < 1 || p > kDim) throw DegreeError("compound order " + std::to_string(p) + " outside 1..4");
  Dyadic acc = f;
  for (int k = 2; k <= p; ++k) acc = double_wedge(acc, f);
  if (p > 1) acc *= Scalar(1, factorial(p));
  return acc;
}

RationalMatrix hook_matrix(const MultiForm& nu, int grade) {
  if (nu.grade() != 1) throw DegreeError("hook_matrix needs a one-form");
  RationalMatrix l(grade_dim(grade - 1), grade_dim(grade));
  for (int j = 0; j < grade_dim(grade); ++j) {
    const MultiVector v = hook(MultiVector::basis(grade, j), nu);
    for (int i = 0; i < v.size(); ++i) l(i, j) = v[i];
  }
  return l;
}

Dyadic double_contract(const Dyadic& f, const MultiForm& nu) {
  if (f.out_space().kind != Kind::Vector || f.in_space().kind != Kind::Vector)
    throw SpaceMismatch("F⌊⌊νν needs vector factors, got " + to_string(f.out_space()) + to_string(f.in_space()));
  if (f.out_space().grade < 1 || f.in_space().grade < 1) throw DegreeError("cannot contract grade-0 factors");
  const RationalMatrix lo = hook_matrix(nu, f.out_space().grade);
  const RationalMatrix li = hook_matrix(nu, f.in_space().grade);
  return Dyadic({Kind::Vector, f.out_space().grade - 1}, {Kind::Vector, f.in_space().grade - 1},
                lo * f.matrix() * li.transposed());
}

Dyadic double_contract_left(const MultiForm& nu, const Dyadic& f) {
  if (f.out_space().kind != Kind::Vector || f.in_space().kind != Kind::Vector)
    throw SpaceMismatch("νν⌋⌋F needs vector factors");
  if (f.out_space().grade < 1 || f.in_space().grade < 1) throw DegreeError("cannot contract grade-0 factors");
  const RationalMatrix lo = left_contract_matrix(nu, f.out_space().grade);
  const RationalMatrix li = left_contract_matrix(nu, f.in_space().grade);
  return Dyadic({Kind::Vector, f.out_space().grade - 1}, {Kind::Vector, f.in_space().grade - 1},
                lo * f.matrix() * li.transposed());
}

Scalar double_pair(const Dyadic& f) {
  const Space e4{Kind::Vector, 4};
  if (f.out_space() != e4 || f.in_space() != e4)
    throw SpaceMismatch("ε_Nε_N|| needs an E4E4 dyadic, got " + to_string(f.out_space()) + to_string(f.in_space()));
  // (ε_N|e_N)² = 1.
  return f.matrix()(0, 0);
}

Dyadic dot(const Dyadic& a, const Dyadic& b) {
  if (a.out_space() != E2 || a.in_space() != E2 || b.out_space() != E2 || b.in_space() != E2)
    throw SpaceMismatch("dot product needs E2E2 bidyadics");
  return compose(compose(a, units::epsN_I2()), b);
}

Scalar dot(const MultiForm& phi, const MultiForm& psi) {
  if (phi.grade() != 2 || psi.grade() != 2) throw DegreeError("dot product needs two-forms");
  const MultiVector mid = apply<Kind::Vector>(units::eN_I2T(), psi);
  return pair(phi, mid);
}

Dyadic inverse(const Dyadic& f) {
  if (f.out_space().dim() != f.in_space().dim()) throw SpaceMismatch("inverse needs a square dyadic");
  auto inv = try_inverse(f.matrix());
  if (!inv) throw NoInverse(rank(f.matrix()), f.matrix().rows());
  return Dyadic(f.in_space().dual(), f.out_space().dual(), std::move(*inv));
}

Scalar trace(const Dyadic& f) {
  if (f.out_space().dim() != f.in_space().dim()) throw SpaceMismatch("trace needs a square dyadic");
  Scalar t;
  for (std::size_t i = 0; i < f.matrix().rows(); ++i) t += f.matrix()(i, i);
  return t;
}

std::size_t rank(const Dyadic& f) { return rank(f.matrix()); }

namespace units {

Dyadic I() { return Dyadic(E1, F1, RationalMatrix::identity(4)); }
Dyadic I_T() { return Dyadic(F1, E1, RationalMatrix::identity(4)); }
Dyadic I2() { return Dyadic(E2, F2, RationalMatrix::identity(6)); }
Dyadic I2T() { return Dyadic(F2, E2, RationalMatrix::identity(6)); }

Dyadic eN_I2T() {
  static const Dyadic d(E2, E2, complement_matrix(Kind::Form, 2));
  return d;
}

Dyadic epsN_I2() {
  static const Dyadic d(F2, F2, complement_matrix(Kind::Vector, 2));
  return d;
}

}  // namespace units

Dyadic to_modified(const Dyadic& m) {
  if (m.out_space() != F2 || m.in_space() != E2) throw SpaceMismatch("expected a medium bidyadic in F2E2");
  return Dyadic(E2, E2, units::eN_I2T().matrix() * m.matrix());
}

Dyadic from_modified(const Dyadic& mm) {
  if (mm.out_space() != E2 || mm.in_space() != E2) throw SpaceMismatch("expected a modified bidyadic in E2E2");
  return Dyadic(F2, E2, units::epsN_I2().matrix() * mm.matrix());
}

Dyadic modified_inverse(const Dyadic& mm) {
  if (mm.out_space() != E2 || mm.in_space() != E2) throw SpaceMismatch("expected a modified bidyadic in E2E2");
  const Dyadic inv = inverse(mm);  // F2F2
  const RationalMatrix c = units::eN_I2T().matrix();
  return Dyadic(E2, E2, c * inv.matrix() * c.transposed());
}

}  // namespace premetric
