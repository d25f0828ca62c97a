#include "doctest.h"
#include "symquot/errors.hpp"
#include "symquot/ffield.hpp"

using namespace symquot;

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u}) {
    const auto f = FiniteField::of_order(q);
    CHECK(f.order() == q);
    const auto els = f.elements();
    REQUIRE(els.size() == q);
    for (const auto& a : els) {
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK(a + (-a) == f.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
      for (const auto& b : els) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
      }
    }
  }
}

TEST_CASE("distributivity and associativity on GF(16)") {
  const auto f = FiniteField::of_order(16);
  const auto els = f.elements();
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els) {
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
      }
}

TEST_CASE("enumeration order is the base-p coefficient index") {
  const auto f = FiniteField::of_order(9);
  CHECK(f.characteristic() == 3);
  CHECK(f.degree() == 2);
  const auto x = f.element(3);  // the polynomial x
  CHECK(x.coeffs() == std::vector<std::uint32_t>{0, 1});
  CHECK(f.element(1) + f.element(1) == f.element(2));
  CHECK(f.element(2) + f.element(1) == f.zero());
}

TEST_CASE("primitive element has order q-1") {
  for (std::uint32_t q : {4u, 7u, 9u, 16u, 27u, 81u}) {
    const auto f = FiniteField::of_order(q);
    const auto g = f.primitive_element();
    CHECK(g.pow(q - 1) == f.one());
    for (std::uint32_t d : divisors(q - 1))
      if (d < q - 1) CHECK_FALSE(g.pow(d) == f.one());
  }
}

TEST_CASE("frobenius and subfield degree") {
  const auto f = FiniteField::of_order(16);
  for (const auto& a : f.elements()) {
    CHECK(frobenius(a, 4) == a);
    const auto s = subfield_degree(a);
    CHECK(4 % s == 0);
    CHECK(frobenius(a, s) == a);
  }
  CHECK(subfield_degree(f.zero()) == 1);
  CHECK(subfield_degree(f.one()) == 1);
  const auto f8 = FiniteField::of_order(8);
  CHECK(subfield_degree(f8.element(2)) == 3);
  // GF(4) inside GF(16) has 4 elements with s dividing 2.
  int in_gf4 = 0;
  for (const auto& a : f.elements()) in_gf4 += 2 % subfield_degree(a) == 0;
  CHECK(in_gf4 == 4);
}

TEST_CASE("square classes split the nonzero elements evenly in odd characteristic") {
  for (std::uint32_t q : {5u, 9u, 25u, 81u}) {
    const auto f = FiniteField::of_order(q);
    std::uint32_t sq = 0, nsq = 0;
    for (const auto& a : f.elements()) {
      const auto c = square_class(a);
      sq += c == SquareClass::Square;
      nsq += c == SquareClass::NonSquare;
    }
    CHECK(sq == (q - 1) / 2);
    CHECK(nsq == (q - 1) / 2);
  }
  const auto f4 = FiniteField::of_order(4);
  for (const auto& a : f4.elements()) CHECK(is_square(a));
}

TEST_CASE("errors and helpers") {
  CHECK_THROWS_AS(FiniteField::of_order(6), DomainError);
  CHECK_THROWS_AS(FiniteField::make(4, 2), DomainError);
  const auto f = FiniteField::of_order(7);
  CHECK_THROWS_AS(f.one() / f.zero(), DomainError);
  CHECK(prime_power(81) == std::make_pair(3u, 4u));
  CHECK_FALSE(prime_power(12).has_value());
  CHECK(divisors(12) == std::vector<std::uint32_t>{1, 2, 3, 4, 6, 12});
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("projective line labels") {
  const auto f = FiniteField::of_order(5);
  const auto line = projective_line(f);
  REQUIRE(line.size() == 6);
  CHECK(line[0].is_infinity());
  for (std::uint32_t i = 0; i < line.size(); ++i) {
    CHECK(line[i].label() == i);
    CHECK(ProjPoint::from_label(i) == line[i]);
  }
  CHECK(ProjPoint::infinity().to_string() == "inf");
}
