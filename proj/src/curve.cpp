#include "qz/curve.hpp"

#include <algorithm>

#include "qz/errors.hpp"
#include "qz/linalg.hpp"

namespace qz {

namespace {

void require_base_field(const FieldPtr& k, const char* where) {
  if (!k) fail("MalformedInput", std::string(where) + ": missing field");
  if (k->kind() == Field::Kind::rational_functions)
    fail("DescriptorMismatch", std::string(where) + ": curves live over the coefficient field");
  if (k->characteristic() == 2)
    fail("UnsupportedField", std::string(where) + ": characteristic 2 is out of scope");
}

/* the nontrivial automorphism of a quadratic step sends theta to
 * -theta - a1 for minimal polynomial theta^2 + a1*theta + a0 */
std::vector<Elem> quadratic_conjugate(const FieldPtr& L, const std::vector<Elem>& coords) {
  const Elem& a1 = L->minpoly().coeff(1);
  std::vector<Elem> out;
  out.reserve(coords.size());
  for (const Elem& c : coords) {
    std::vector<Elem> cc = c.coords();
    cc.resize(2, Elem::zero(L->base()));
    out.push_back(Elem::from_coords(L, {cc[0] - cc[1] * a1, -cc[1]}));
  }
  return out;
}

int cmp_coords(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = cmp(a[i], b[i]); c != 0) return c;
  return 0;
}

}  // namespace

Curve Curve::projective_line(const FieldPtr& k, const std::string& var) {
  require_base_field(k, "projective_line");
  Curve X(Kind::line, k);
  X.kt_ = Field::rational_functions(k, var);
  return X;
}

Curve Curve::conic(const FieldPtr& k, const Elem& a, const Elem& b, const Elem& c) {
  require_base_field(k, "conic");
  for (const Elem* e : {&a, &b, &c}) {
    require_same_field(k, e->field(), "conic");
    if (e->is_zero()) fail("MalformedInput", "conic coefficients must be nonzero");
  }
  Curve X(Kind::conic, k);
  X.form_ = DiagonalForm(k, {a, b, c});
  return X;
}

const FieldPtr& Curve::function_field() const {
  if (kind_ != Kind::line) fail("DescriptorMismatch", "function_field is for the line");
  return kt_;
}

const DiagonalForm& Curve::conic_form() const {
  if (kind_ != Kind::conic) fail("DescriptorMismatch", "conic_form is for conics");
  return *form_;
}

const Elem& Curve::a() const { return conic_form().entry(0); }
const Elem& Curve::b() const { return conic_form().entry(1); }
const Elem& Curve::c() const { return conic_form().entry(2); }

std::string Curve::str() const {
  if (kind_ == Kind::line) return "P1(" + k_->describe() + ")";
  return "Conic(" + k_->describe() + "; " + a().str() + ", " + b().str() + ", " +
         c().str() + ")";
}

bool operator==(const Curve& a, const Curve& b) {
  if (a.kind() != b.kind() || !same_field(a.field(), b.field())) return false;
  if (a.is_line()) return same_field(a.function_field(), b.function_field());
  return a.conic_form() == b.conic_form();
}

int element_degree(const Elem& x) {
  const FieldPtr& L = x.field();
  if (L->kind() != Field::Kind::extension) return 1;
  int n = L->ext_deg();
  const FieldPtr& k = L->base();
  std::vector<Elem> pow = {Elem::one(L)};
  for (int i = 1; i < n; ++i) pow.push_back(pow.back() * x);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    /* columns are 1, x, ..., x^d on the power basis of L */
    Matrix m(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j <= d; ++j) {
        const std::vector<Elem>& cs = pow[static_cast<std::size_t>(j)].coords();
        m[static_cast<std::size_t>(r)].push_back(
            r < static_cast<int>(cs.size()) ? cs[static_cast<std::size_t>(r)]
                                            : Elem::zero(k));
      }
    }
    if (!kernel_basis(k, m).empty()) return d;
  }
  return n;
}

ClosedPoint ClosedPoint::on_line(const Curve& X, const Poly& pi) {
  if (!X.is_line()) fail("DescriptorMismatch", "on_line needs the projective line");
  return ClosedPoint(X, Place::finite(X.function_field(), pi));
}

ClosedPoint ClosedPoint::at_infinity(const Curve& X) {
  if (!X.is_line()) fail("DescriptorMismatch", "at_infinity needs the projective line");
  return ClosedPoint(X, Place::infinity(X.function_field()));
}

ClosedPoint ClosedPoint::on_conic(const Curve& X, const FieldPtr& L,
                                  const Elem& x, const Elem& y, const Elem& z) {
  if (X.is_line()) fail("DescriptorMismatch", "on_conic needs a conic");
  const FieldPtr& k = X.field();
  if (!same_field(L, k)) {
    if (L->kind() != Field::Kind::extension || !same_field(L->base(), k))
      fail("DescriptorMismatch",
           "conic point fields must be the base or a one-step extension of it");
  }
  std::vector<Elem> coords = {x, y, z};
  for (const Elem& c : coords) require_same_field(L, c.field(), "on_conic");
  if (x.is_zero() && y.is_zero() && z.is_zero())
    fail("MalformedInput", "conic point coordinates are all zero");
  Elem value = embed(L, X.a()) * x * x + embed(L, X.b()) * y * y + embed(L, X.c()) * z * z;
  if (!value.is_zero()) fail("MalformedInput", "coordinates do not satisfy the conic");

  std::size_t last = 2;
  while (coords[last].is_zero()) --last;
  Elem inv = coords[last].inverse();
  for (Elem& c : coords) c = c * inv;

  if (!same_field(L, k)) {
    int n = L->ext_deg();
    int witnessed = 1;
    for (const Elem& c : coords) witnessed = std::max(witnessed, element_degree(c));
    if (witnessed != n)
      fail("DescriptorMismatch",
           "no coordinate generates the declared residue field; the degree "
           "certificate fails");
    if (n == 2) {
      std::vector<Elem> conj = quadratic_conjugate(L, coords);
      if (cmp_coords(conj, coords) < 0) coords = std::move(conj);
    }
  }
  return ClosedPoint(X, L, std::move(coords));
}

int ClosedPoint::degree() const {
  if (place_) return place_->degree();
  return same_field(L_, X_.field()) ? 1 : L_->ext_deg();
}

FieldPtr ClosedPoint::residue_field() const {
  return place_ ? place_->residue_field() : L_;
}

const Place& ClosedPoint::place() const {
  if (!place_) fail("DescriptorMismatch", "conic points have no line place");
  return *place_;
}

bool ClosedPoint::at_infinity_point() const { return place_ && place_->at_infinity(); }

const std::vector<Elem>& ClosedPoint::coords() const {
  if (place_) fail("DescriptorMismatch", "line points have no conic coordinates");
  return coords_;
}

std::string ClosedPoint::str() const {
  if (place_) return place_->str();
  return "(" + coords_[0].str() + " : " + coords_[1].str() + " : " + coords_[2].str() +
         ") over " + L_->describe();
}

bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
  return a.curve() == b.curve() && cmp(a, b) == 0;
}

int cmp(const ClosedPoint& a, const ClosedPoint& b) {
  bool aline = a.curve().is_line(), bline = b.curve().is_line();
  if (aline != bline) return aline ? -1 : 1;
  if (aline) return cmp(a.place(), b.place());
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (a.degree() > 1)
    if (int c = cmp(a.residue_field()->minpoly(), b.residue_field()->minpoly()); c != 0)
      return c;
  for (std::size_t i = 0; i < 3; ++i)
    if (int c = cmp(a.coords()[i], b.coords()[i]); c != 0) return c;
  return 0;
}

}  // namespace qz
