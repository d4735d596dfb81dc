#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qz/curve.hpp>
#include <qz/errors.hpp>
#include <qz/field.hpp>
#include <qz/gersten.hpp>
#include <qz/gw.hpp>
#include <qz/mw.hpp>
#include <qz/parse.hpp>
#include <qz/places.hpp>
#include <qz/rng.hpp>
#include <qz/transfer.hpp>
#include <qz/witt.hpp>

#include <functional>
#include <string>
#include <vector>

using namespace qz;

namespace {

std::string thrown_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

GWElement mkgw(const FieldPtr& k, const std::vector<long>& a) {
  std::vector<Elem> es;
  for (long ai : a) es.push_back(Elem::integer(k, Int(ai)));
  return GWElement::from_form(DiagonalForm(k, es));
}

Poly int_poly(const FieldPtr& k, const std::vector<long>& c) {
  return Poly::from_ints(k, c);
}

/* random monic irreducible over Q or F_p of degree <= maxdeg */
Poly random_point_poly(Rng& rng, const FieldPtr& k, int maxdeg, long height) {
  while (true) {
    int d = static_cast<int>(rng.range(1, maxdeg));
    std::vector<Elem> cs;
    for (int i = 0; i < d; ++i)
      cs.push_back(Elem::integer(k, Int(rng.range(-height, height))));
    cs.push_back(Elem::one(k));
    Poly f(k, cs);
    if (poly_is_irreducible(f)) return f;
  }
}

GWElement random_gw(Rng& rng, const FieldPtr& k, int maxrank, long height) {
  std::vector<Elem> es;
  int m = static_cast<int>(rng.range(1, maxrank));
  for (int i = 0; i < m; ++i) {
    Elem e = Elem::zero(k);
    while (e.is_zero()) e = Elem::integer(k, Int(rng.range(-height, height)));
    es.push_back(e);
  }
  GWElement x = GWElement::from_form(DiagonalForm(k, es));
  if (rng.coin()) x = -x;
  if (rng.coin()) x = x + GWElement::hyperbolic(k);
  return x;
}

/* random quadratic cycle on P^1 with residue degrees <= maxdeg */
QuadraticZeroCycle random_cycle(Rng& rng, const Curve& line, int points, int maxdeg,
                                long height) {
  QuadraticZeroCycle z(line);
  const FieldPtr& k = line.field();
  for (int i = 0; i < points; ++i) {
    ClosedPoint x = rng.range(0, 5) == 0
                        ? ClosedPoint::at_infinity(line)
                        : ClosedPoint::on_line(line, random_point_poly(rng, k, maxdeg, height));
    z = z.with(x, random_gw(rng, x.residue_field(), 3, height));
  }
  return z;
}

}  // namespace

TEST_CASE("curves and closed points validate their data") {
  const FieldPtr& Q = Field::rationals();
  Curve line = Curve::projective_line(Q);
  Curve conic = Curve::conic(Q, Elem::rational(1), Elem::rational(1), Elem::rational(-2));

  CHECK(line.is_line());
  CHECK(line == Curve::projective_line(Q));
  CHECK(line != Curve::projective_line(Field::prime(5)));
  CHECK(conic == Curve::conic(Q, Elem::rational(1), Elem::rational(1), Elem::rational(-2)));

  CHECK(thrown_kind([&] {
          Curve::conic(Q, Elem::rational(1), Elem::rational(0), Elem::rational(1));
        }) == "MalformedInput");
  CHECK(thrown_kind([&] {
          Curve::conic(Field::prime(2), Elem::integer(Field::prime(2), 1),
                       Elem::integer(Field::prime(2), 1), Elem::integer(Field::prime(2), 1));
        }) == "UnsupportedField");

  ClosedPoint origin = ClosedPoint::on_line(line, int_poly(Q, {0, 1}));
  ClosedPoint sqrt2 = ClosedPoint::on_line(line, int_poly(Q, {-2, 0, 1}));
  ClosedPoint inf = ClosedPoint::at_infinity(line);
  CHECK(origin.degree() == 1);
  CHECK(sqrt2.degree() == 2);
  CHECK(inf.degree() == 1);
  CHECK(cmp(origin, sqrt2) < 0);
  CHECK(cmp(sqrt2, inf) < 0);
  CHECK(origin == ClosedPoint::on_line(line, int_poly(Q, {0, 1})));

  /* (1 : 1 : 1) solves x^2 + y^2 - 2z^2 */
  ClosedPoint p1 = ClosedPoint::on_conic(conic, Q, Elem::rational(1), Elem::rational(1),
                                         Elem::rational(1));
  CHECK(p1.degree() == 1);
  /* projective rescaling gives the same closed point */
  CHECK(p1 == ClosedPoint::on_conic(conic, Q, Elem::rational(3), Elem::rational(3),
                                    Elem::rational(3)));

  CHECK(thrown_kind([&] {
          ClosedPoint::on_conic(conic, Q, Elem::rational(1), Elem::rational(2),
                                Elem::rational(1));
        }) == "MalformedInput");

  /* a quadratic point on x^2 + y^2 + z^2 over Q(i), and its conjugate */
  Curve round = Curve::conic(Q, Elem::rational(1), Elem::rational(1), Elem::rational(1));
  FieldPtr Qi = Field::extension(Q, int_poly(Q, {1, 0, 1}), "i");
  Elem i = Elem::generator(Qi);
  ClosedPoint zi = ClosedPoint::on_conic(round, Qi, Elem::one(Qi), i, Elem::zero(Qi));
  CHECK(zi.degree() == 2);
  CHECK(zi == ClosedPoint::on_conic(round, Qi, Elem::one(Qi), -i, Elem::zero(Qi)));
  /* declared extension but rational coordinates: certification must fail */
  CHECK(thrown_kind([&] {
          ClosedPoint::on_conic(conic, Qi, Elem::one(Qi), Elem::one(Qi), Elem::one(Qi));
        }) == "DescriptorMismatch");
}

TEST_CASE("canonical trivializations and their rescaling units") {
  const FieldPtr& Q = Field::rationals();
  Curve line = Curve::projective_line(Q);
  const FieldPtr& kt = line.function_field();

  ClosedPoint origin = ClosedPoint::on_line(line, int_poly(Q, {0, 1}));
  TwistTrivialization tw = TwistTrivialization::canonical(origin);
  CHECK(tw.uniformizer == parse_elem(kt, "t"));

  /* 2t + t^2 = t(2 + t) is a uniformizer at t = 0; the unit is 2 */
  Elem other = parse_elem(kt, "2*t + t^2");
  CHECK(tw.rescale_unit(other) == Elem::rational(2));
  CHECK(thrown_kind([&] { tw.rescale_unit(parse_elem(kt, "t^2")); }) == "MalformedInput");

  TwistTrivialization at_inf =
      TwistTrivialization::canonical(ClosedPoint::at_infinity(line));
  CHECK(at_inf.uniformizer == parse_elem(kt, "1/t"));
  CHECK(at_inf.rescale_unit(parse_elem(kt, "3/(t - 5)")) == Elem::rational(3));
}

TEST_CASE("quadratic degree of basic cycles") {
  const FieldPtr& Q = Field::rationals();
  Curve line = Curve::projective_line(Q);

  ClosedPoint origin = ClosedPoint::on_line(line, int_poly(Q, {0, 1}));
  QuadraticZeroCycle unit_cycle = QuadraticZeroCycle(line).with(origin, GWElement::one(Q));
  CHECK(gw_equal(qdeg(unit_cycle), GWElement::one(Q)) == Ternary::yes);

  /* the trace form of Q(sqrt 2) is <2, 1> */
  ClosedPoint sqrt2 = ClosedPoint::on_line(line, int_poly(Q, {-2, 0, 1}));
  QuadraticZeroCycle z2 =
      QuadraticZeroCycle(line).with(sqrt2, GWElement::one(sqrt2.residue_field()));
  GWElement d2 = qdeg(z2);
  CHECK(d2.rank() == 2);
  CHECK(gw_equal(d2, mkgw(Q, {2, 1})) == Ternary::yes);

  /* scaling the cycle by <-1> scales the degree */
  GWElement minus = mkgw(Q, {-1});
  CHECK(gw_equal(qdeg(z2.scaled(minus)), minus * d2) == Ternary::yes);

  /* image of the section a |-> (t = 0, <a>) */
  for (long a : {2L, -3L, 5L}) {
    GWElement target = mkgw(Q, {a});
    QuadraticZeroCycle section = QuadraticZeroCycle(line).with(origin, target);
    CHECK(gw_equal(qdeg(section), target) == Ternary::yes);
  }

  /* coefficients must live over the residue field of their point */
  CHECK(thrown_kind([&] {
          QuadraticZeroCycle(line).with(sqrt2, GWElement::one(Q));
        }) == "DescriptorMismatch");
}

TEST_CASE("quadratic degree on conic cycles") {
  const FieldPtr& F5 = Field::prime(5);
  Curve conic = Curve::conic(F5, Elem::integer(F5, 1), Elem::integer(F5, 1),
                             Elem::integer(F5, 1));
  /* (1 : 2 : 0) lies on x^2 + y^2 + z^2 over F_5 */
  ClosedPoint p = ClosedPoint::on_conic(conic, F5, Elem::integer(F5, 1),
                                        Elem::integer(F5, 2), Elem::zero(F5));
  QuadraticZeroCycle z = QuadraticZeroCycle(conic).with(p, GWElement::one(F5));
  CHECK(gw_equal(qdeg(z), GWElement::one(F5)) == Ternary::yes);

  /* a quadratic point contributes through the trace form of F_25 */
  FieldPtr F25 = Field::extension(F5, int_poly(F5, {2, 0, 1}), "w");
  Elem w = Elem::generator(F25);
  /* x^2 + y^2 + z^2 = 0 with x = w (w^2 = -2): needs y^2 + z^2 = 2 */
  ClosedPoint q = ClosedPoint::on_conic(conic, F25, w, Elem::one(F25), Elem::one(F25));
  CHECK(q.degree() == 2);
  QuadraticZeroCycle zq = QuadraticZeroCycle(conic).with(q, GWElement::one(F25));
  GWElement dq = qdeg(zq);
  CHECK(dq.rank() == 2);
  CHECK(gw_equal(dq, gw_transfer(GWElement::one(F25))) == Ternary::yes);
}

TEST_CASE("forget, classical degree, and the integral lift") {
  const FieldPtr& Q = Field::rationals();
  Curve line = Curve::projective_line(Q);
  ClosedPoint origin = ClosedPoint::on_line(line, int_poly(Q, {0, 1}));
  ClosedPoint cubic = ClosedPoint::on_line(line, int_poly(Q, {-2, 0, 0, 1}));

  ZeroCycle z = ZeroCycle(line).with(origin, 2).with(cubic, -1);
  CHECK(cdeg(z) == Int(-1));

  QuadraticZeroCycle lifted = integral_lift(z);
  CHECK(forget(lifted).terms() == z.terms());
  CHECK(cdeg(forget(lifted)) == Int(-1));
  CHECK(qdeg(lifted).rank() == -1);

  Rng rng(2026);
  for (const FieldPtr& k : {Field::rationals(), Field::prime(5)}) {
    Curve l = Curve::projective_line(k);
    for (int i = 0; i < 30; ++i) {
      QuadraticZeroCycle zc = random_cycle(rng, l, 3, 4, 6);
      CHECK(Int(qdeg(zc).rank()) == cdeg(forget(zc)));
    }
  }
}

TEST_CASE("residue divisors of degree-1 elements") {
  const FieldPtr& Q = Field::rationals();
  const FieldPtr& kt = Field::rational_functions(Q, "t");

  /* constants have no residues anywhere */
  CHECK(residue_divisor(MWElement::unit_symbol(parse_elem(kt, "7"))).empty());

  /* [t] is supported at 0 and infinity and has quadratic degree zero */
  QuadraticZeroCycle dt = residue_divisor(MWElement::unit_symbol(parse_elem(kt, "t")));
  REQUIRE(dt.terms().size() == 2);
  CHECK(dt.terms()[0].first.place().pi() == int_poly(Q, {0, 1}));
  CHECK(dt.terms()[1].first.at_infinity_point());
  CHECK(gw_equal(dt.terms()[0].second, GWElement::one(Q)) == Ternary::yes);
  CHECK(gw_is_zero(qdeg(dt)) == Ternary::yes);

  /* [t^2 + 1] is supported at its zero and at infinity */
  QuadraticZeroCycle di =
      residue_divisor(MWElement::unit_symbol(parse_elem(kt, "t^2 + 1")));
  REQUIRE(di.terms().size() == 2);
  CHECK(di.terms()[0].first.place().pi() == int_poly(Q, {1, 0, 1}));
  CHECK(di.terms()[1].first.at_infinity_point());
  CHECK(gw_is_zero(qdeg(di)) == Ternary::yes);

  CHECK(thrown_kind([&] { residue_divisor(MWElement::eta(kt)); }) == "MalformedInput");
}

TEST_CASE("quadratic degree vanishes on residue divisors") {
  Rng rng(77);
  std::vector<FieldPtr> bases = {Field::rationals(), Field::prime(3), Field::prime(7)};
  for (const FieldPtr& k : bases) {
    FieldPtr kt = Field::rational_functions(k, "t");
    for (int i = 0; i < 12; ++i) {
      MWElement x = MWElement::unit_symbol(Elem::one(kt));
      int terms = static_cast<int>(rng.range(1, 2));
      for (int j = 0; j < terms; ++j) {
        Poly num = random_point_poly(rng, k, 2, 4);
        Poly den = random_point_poly(rng, k, 2, 4);
        x = x + MWElement::unit_symbol(Elem::from_fraction(kt, num, den));
      }
      CHECK(gw_is_zero(qdeg(residue_divisor(x))) == Ternary::yes);
    }
  }
}

TEST_CASE("class comparison separates degrees and certifies equalities") {
  const FieldPtr& Q = Field::rationals();
  Curve line = Curve::projective_line(Q);
  const FieldPtr& kt = line.function_field();
  ClosedPoint origin = ClosedPoint::on_line(line, int_poly(Q, {0, 1}));
  ClosedPoint one = ClosedPoint::on_line(line, int_poly(Q, {-1, 1}));

  QuadraticZeroCycle z0 = QuadraticZeroCycle(line).with(origin, GWElement::one(Q));
  QuadraticZeroCycle z1 = QuadraticZeroCycle(line).with(one, GWElement::one(Q));

  ChowWittOutcome same = chowwitt_equal(z0, z0);
  CHECK(same.verdict == ChowWittVerdict::equal_with_certificate);
  REQUIRE(same.certificate.has_value());
  CHECK(residue_divisor(*same.certificate).empty());

  ChowWittOutcome moved = chowwitt_equal(z0, z1);
  CHECK(moved.verdict == ChowWittVerdict::equal_with_certificate);
  REQUIRE(moved.certificate.has_value());
  CHECK(quadratic_cycle_equal(residue_divisor(*moved.certificate), z0 - z1) ==
        Ternary::yes);
  /* the minimization pass lands on a single symbol supported on {0, 1} */
  CHECK(moved.certificate->milnor().unit_value() == parse_elem(kt, "-t/(t - 1)"));

  QuadraticZeroCycle z2 = QuadraticZeroCycle(line).with(origin, mkgw(Q, {2}));
  ChowWittOutcome twisted = chowwitt_equal(z0, z2);
  CHECK(twisted.verdict == ChowWittVerdict::not_equal);

  /* elimination handles coefficients a one-symbol certificate cannot reach:
   * the transfer of <w, w> from Q(sqrt 2) is hyperbolic of rank 4 */
  ClosedPoint sqrt2 = ClosedPoint::on_line(line, int_poly(Q, {-2, 0, 1}));
  FieldPtr L = sqrt2.residue_field();
  Elem w = Elem::generator(L);
  QuadraticZeroCycle za = QuadraticZeroCycle(line).with(
      sqrt2, GWElement::from_form(DiagonalForm(L, {w, w})));
  QuadraticZeroCycle zb = QuadraticZeroCycle(line).with(
      origin, GWElement::hyperbolic(Q) + GWElement::hyperbolic(Q));
  ChowWittOutcome peeled = chowwitt_equal(za, zb);
  CHECK(peeled.verdict == ChowWittVerdict::equal_with_certificate);
  REQUIRE(peeled.certificate.has_value());
  CHECK(quadratic_cycle_equal(residue_divisor(*peeled.certificate), za - zb) ==
        Ternary::yes);
}

TEST_CASE("class comparison over a finite base") {
  const FieldPtr& F5 = Field::prime(5);
  Curve line = Curve::projective_line(F5);
  ClosedPoint a = ClosedPoint::on_line(line, int_poly(F5, {0, 1}));
  ClosedPoint b = ClosedPoint::on_line(line, int_poly(F5, {-1, 1}));

  QuadraticZeroCycle za = QuadraticZeroCycle(line).with(a, mkgw(F5, {2}));
  QuadraticZeroCycle zb = QuadraticZeroCycle(line).with(b, mkgw(F5, {2}));
  ChowWittOutcome eq = chowwitt_equal(za, zb);
  CHECK(eq.verdict == ChowWittVerdict::equal_with_certificate);
  REQUIRE(eq.certificate.has_value());
  CHECK(quadratic_cycle_equal(residue_divisor(*eq.certificate), za - zb) == Ternary::yes);

  CHECK(chowwitt_equal(za, QuadraticZeroCycle(line).with(a, mkgw(F5, {1}))).verdict ==
        ChowWittVerdict::not_equal);
}

TEST_CASE("random differences of matching degree are certified equal") {
  Rng rng(4141);
  for (const FieldPtr& k : {Field::rationals(), Field::prime(5)}) {
    Curve line = Curve::projective_line(k);
    for (int i = 0; i < 8; ++i) {
      QuadraticZeroCycle z = random_cycle(rng, line, 2, 2, 3);
      /* moving z by a residue divisor keeps its class */
      MWElement shift =
          MWElement::unit_symbol(Elem::from_fraction(line.function_field(),
                                                     random_point_poly(rng, k, 2, 3),
                                                     random_point_poly(rng, k, 2, 3)));
      QuadraticZeroCycle zshift = z + residue_divisor(shift);
      ChowWittOutcome out = chowwitt_equal(z, zshift);
      CHECK(out.verdict == ChowWittVerdict::equal_with_certificate);
      REQUIRE(out.certificate.has_value());
      CHECK(quadratic_cycle_equal(residue_divisor(*out.certificate), z - zshift) ==
            Ternary::yes);
    }
  }
}
