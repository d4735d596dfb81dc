#include "qz/field.hpp"

#include "qz/errors.hpp"
#include "qz/polyfactor.hpp"

namespace qz {

namespace {

constexpr int kMaxTowerDepth = 2;
constexpr int kMaxTotalDegree = 12;

void check_var_name(const FieldPtr& base, const std::string& var) {
  if (var.empty() || !(std::isalpha(static_cast<unsigned char>(var[0])) || var[0] == '_'))
    fail("DescriptorMismatch", "variable name must start with a letter: '" + var + "'");
  for (char ch : var)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      fail("DescriptorMismatch", "variable name must be alphanumeric: '" + var + "'");
  for (FieldPtr f = base; f;) {
    switch (f->kind()) {
      case Field::Kind::extension:
      case Field::Kind::rational_functions:
        if (f->var() == var)
          fail("DescriptorMismatch", "variable name '" + var + "' already used in the tower");
        f = f->base();
        break;
      default:
        f = nullptr;
    }
  }
}

}  // namespace

const FieldPtr& Field::rationals() {
  static const FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::rationals;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(const Int& p) {
  if (p == 2) fail("UnsupportedField", "characteristic 2 is out of scope");
  if (p < 2 || !is_prime(p)) fail("DescriptorMismatch", "modulus " + p.get_str() + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::prime;
  f->p_ = p;
  return f;
}

FieldPtr Field::extension(const FieldPtr& base, const Poly& minpoly, const std::string& var) {
  if (!base) fail("DescriptorMismatch", "extension over detached base");
  if (base->kind() == Kind::rational_functions)
    fail("UnsupportedField", "extensions of rational function fields are out of scope");
  require_same_field(minpoly.base(), base, "extension minimal polynomial");
  check_var_name(base, var);
  if (minpoly.deg() < 2)
    fail("DescriptorMismatch", "minimal polynomial must have degree >= 2");
  if (!minpoly.is_monic())
    fail("DescriptorMismatch", "minimal polynomial must be monic");
  if (base->tower_depth() + 1 > kMaxTowerDepth)
    fail("TowerBoundExceeded", "extension towers are limited to depth 2");
  if (base->absolute_degree() * minpoly.deg() > kMaxTotalDegree)
    fail("TowerBoundExceeded", "extension towers are limited to total degree 12");
  if (base->characteristic() != 0 && minpoly.derivative().is_zero())
    fail("InseparableExtension", "minimal polynomial has zero derivative");
  if (!poly_is_irreducible(minpoly))
    fail("DescriptorMismatch", "minimal polynomial is reducible: " + minpoly.str(var));
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::extension;
  f->base_ = base;
  f->minpoly_ = std::make_shared<Poly>(minpoly);
  f->var_ = var;
  return f;
}

FieldPtr Field::rational_functions(const FieldPtr& base, const std::string& var) {
  if (!base) fail("DescriptorMismatch", "function field over detached base");
  if (base->kind() == Kind::rational_functions)
    fail("UnsupportedField", "iterated rational function fields are out of scope");
  check_var_name(base, var);
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::rational_functions;
  f->base_ = base;
  f->var_ = var;
  return f;
}

const Int& Field::p() const {
  if (kind_ != Kind::prime) fail("DescriptorMismatch", "not a prime field");
  return p_;
}

const FieldPtr& Field::base() const {
  if (!base_) fail("DescriptorMismatch", "field has no base");
  return base_;
}

const Poly& Field::minpoly() const {
  if (kind_ != Kind::extension) fail("DescriptorMismatch", "field has no minimal polynomial");
  return *minpoly_;
}

const std::string& Field::var() const {
  if (kind_ != Kind::extension && kind_ != Kind::rational_functions)
    fail("DescriptorMismatch", "field has no variable");
  return var_;
}

Int Field::characteristic() const {
  switch (kind_) {
    case Kind::rationals: return 0;
    case Kind::prime: return p_;
    default: return base_->characteristic();
  }
}

bool Field::is_finite() const {
  switch (kind_) {
    case Kind::rationals: return false;
    case Kind::prime: return true;
    case Kind::extension: return base_->is_finite();
    case Kind::rational_functions: return false;
  }
  return false;
}

Int Field::order() const {
  if (!is_finite()) fail("DescriptorMismatch", "field is infinite");
  Int q = characteristic();
  return pow_int(q, static_cast<unsigned long>(absolute_degree()));
}

int Field::ext_deg() const { return minpoly().deg(); }

int Field::absolute_degree() const {
  if (kind_ == Kind::extension) return base_->absolute_degree() * minpoly_->deg();
  return 1;
}

int Field::tower_depth() const {
  if (kind_ == Kind::extension) return base_->tower_depth() + 1;
  return 0;
}

std::string Field::describe() const {
  switch (kind_) {
    case Kind::rationals: return "Q";
    case Kind::prime: return "F_" + p_.get_str();
    case Kind::extension:
      return base_->describe() + "[" + var_ + "]/(" + minpoly_->str(var_) + ")";
    case Kind::rational_functions:
      return base_->describe() + "(" + var_ + ")";
  }
  return "?";
}

}  // namespace qz
