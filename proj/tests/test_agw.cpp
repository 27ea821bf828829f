#include "toric/agw.hpp"

#include <doctest.h>

#include <functional>

using namespace toric;

namespace {

RootPoly power_sum_squares(int roots, int degree) {
  RootPoly r(roots, degree);
  r.add_term({2}, 1);
  return r;
}

PontryaginPoly mono(std::vector<int> m, const Rational& c = 1) {
  PontryaginPoly p;
  p.add_term(std::move(m), c);
  return p;
}

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

bool all_exponents_even(const RootPoly& r) {
  for (const auto& [lambda, c] : r.terms()) {
    for (int e : lambda) {
      if (e % 2) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("genus products") {
  UniSeries constant(12);
  constant[0] = 1;
  const RootPoly unit = expand_genus_product(constant);
  REQUIRE(unit.terms().size() == 1);
  CHECK(unit.coefficient({}) == 1);
  CHECK(to_pontryagin(expand_genus_product(genus_series(Genus::L, 12)).homogeneous_part(4)) == mono({1}, Rational(1, 3)));
  CHECK(to_pontryagin(expand_genus_product(genus_series(Genus::AHat, 12)).homogeneous_part(4)) ==
        mono({1}, Rational(-1, 24)));
  CHECK(error_kind([] { expand_genus_product(genus_series(Genus::Todd, 12)); }) == "parity");
  CHECK(error_kind([] { expand_genus_product(genus_series(Genus::L, 4)); }) == "shape");
}

TEST_CASE("twisted A-hat low degrees") {
  const RootPoly t = twisted_ahat();
  CHECK(t.homogeneous_part(0).coefficient({}) == 12);
  // sum_j 2 cosh(x_j) contributes p1; twelve copies of A-hat contribute -p1/2.
  CHECK(to_pontryagin(t.homogeneous_part(4)) == mono({1}, Rational(1, 2)));
  CHECK(t.homogeneous_part(2).terms().empty());
}

TEST_CASE("parity of the genus products") {
  for (const RootPoly& r :
       {expand_genus_product(genus_series(Genus::L, 12)), expand_genus_product(genus_series(Genus::AHat, 12)),
        twisted_ahat()}) {
    CHECK(all_exponents_even(r));
    for (int k = 2; k <= 12; k += 4) CHECK(r.homogeneous_part(k).terms().empty());
  }
}

TEST_CASE("to_pontryagin examples") {
  const RootPoly s = power_sum_squares(6, 12);
  CHECK(to_pontryagin(s) == mono({1}));
  CHECK(to_pontryagin(s * s) == mono({1, 1}));
  CHECK(to_pontryagin(pontryagin_class(2, 6, 12)) == mono({2}));
  CHECK(to_pontryagin(pontryagin_class(3, 6, 12)) == mono({3}));
  CHECK(to_pontryagin(pontryagin_class(1, 6, 12)) == mono({1}));
  RootPoly odd(6, 12);
  odd.add_term({1}, 1);
  CHECK(error_kind([&] { to_pontryagin(odd); }) == "parity");
  // sum x_i^2 x_j^2 over i<j is e_2 of the squares.
  RootPoly e2(6, 12);
  e2.add_term({2, 2}, 1);
  CHECK(to_pontryagin(e2) == mono({2}));
  // p_1^2 = sum x^4 + 2 p_2, so sum x^4 = p_1^2 - 2 p_2.
  RootPoly p4(6, 12);
  p4.add_term({4}, 1);
  CHECK(to_pontryagin(p4) == mono({1, 1}) - mono({2}, 2));
}

TEST_CASE("Pontryagin basis round trip") {
  for (const RootPoly& r :
       {expand_genus_product(genus_series(Genus::L, 12)), expand_genus_product(genus_series(Genus::AHat, 12)),
        twisted_ahat()}) {
    CHECK(from_pontryagin(to_pontryagin(r), 6, 12) == r);
  }
}

TEST_CASE("degree-12 parts") {
  const AgwParts parts = agw_parts();
  const PontryaginPoly l = parts.l.homogeneous_part(3);
  CHECK(l.coefficient({3}) == Rational(62, 945));
  CHECK(l.coefficient({1, 2}) == Rational(-13, 945));
  CHECK(l.coefficient({1, 1, 1}) == Rational(2, 945));
  CHECK(to_string(mono({2, 1}, Rational(-1, 3))) == "(-1/3) p1p2");
}

TEST_CASE("single-root specialization matches univariate series") {
  // With one nonzero root x: p1 = x^2 and p2 = p3 = 0.
  const AgwParts parts = agw_parts();
  const UniSeries l = genus_series(Genus::L, 12);
  const UniSeries a = genus_series(Genus::AHat, 12);
  UniSeries cosh_sum(12);
  cosh_sum[0] = 10;  // five vanishing roots contribute e^0 + e^0 each
  const UniSeries ex = exp_series(1, 12) + exp_series(-1, 12);
  const UniSeries t = a * (cosh_sum + ex);
  for (int k = 1; k <= 3; ++k) {
    const std::vector<int> pk(k, 1);
    CHECK(parts.l.coefficient(pk) == l[2 * k]);
    CHECK(parts.a.coefficient(pk) == a[2 * k]);
    CHECK(parts.t.coefficient(pk) == t[2 * k]);
  }
}

TEST_CASE("the cancellation identity holds and the negative control fails") {
  const Report r = verify_agw();
  CHECK(r.holds);
  CHECK(r.identity == "agw");
  CHECK(r.lhs == r.rhs);
  CHECK(r.breakdown.at("spot_checks_agreeing") == 10);
  for (const char* m : {"p3", "p1p2", "p1^3"}) {
    CHECK(r.breakdown.at(std::string("L.") + m) == r.breakdown.at(std::string("rhs.") + m));
  }
  const Report bad = verify_agw(31);
  CHECK_FALSE(bad.holds);
  CHECK(bad.lhs != bad.rhs);
  CHECK(bad.breakdown.at("spot_checks_agreeing") == 0);
}
