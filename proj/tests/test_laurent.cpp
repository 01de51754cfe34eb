#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ajb/laurent.hpp"

using ajb::BigInt;
using ajb::TiedLaurent;

namespace {

TiedLaurent random_poly(std::mt19937_64& rng) {
  TiedLaurent p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    const int coeff = static_cast<int>(rng() % 11) - 5;
    const int a_exp = static_cast<int>(rng() % 9) - 4;
    const int c_exp = static_cast<int>(rng() % 4);
    p += TiedLaurent::monomial(coeff, a_exp, c_exp);
  }
  return p;
}

}  // namespace

TEST_CASE("monomial basics") {
  CHECK(TiedLaurent::monomial(1, 0, 0) == TiedLaurent::unit());
  CHECK(TiedLaurent::monomial(-1, 2, 0).to_string() == "-A^2");
  CHECK(TiedLaurent::monomial(1, 0, 1).to_string() == "c");
  CHECK(TiedLaurent::monomial(0, 3, 2).is_zero());
  CHECK_THROWS_AS(TiedLaurent::monomial(1, 0, -1), std::invalid_argument);
}

TEST_CASE("addition") {
  CHECK((TiedLaurent::a_power(1) + TiedLaurent::monomial(-1, 1)).is_zero());
  CHECK((TiedLaurent::delta() + TiedLaurent::delta()).to_string() == "2*A^1 + 2*A^-1");

  TiedLaurent lhs = TiedLaurent::monomial(1, 2) + TiedLaurent::variable_c();
  TiedLaurent sum = lhs + TiedLaurent::monomial(1, -2);
  TiedLaurent expect =
      TiedLaurent::monomial(1, 2) + TiedLaurent::monomial(1, -2) + TiedLaurent::variable_c();
  CHECK(sum == expect);
  CHECK(sum.to_string() == "A^2 + A^-2 + c");
}

TEST_CASE("multiplication") {
  CHECK((TiedLaurent::delta() * TiedLaurent::delta()).to_string() == "A^2 + 2 + A^-2");
  CHECK((TiedLaurent::loop_value() * TiedLaurent::variable_c()).to_string() ==
        "-A^2*c - A^-2*c");
  TiedLaurent diff = TiedLaurent::a_power(1) - TiedLaurent::a_power(-1);
  CHECK((diff * TiedLaurent::delta()).to_string() == "A^2 - A^-2");
}

TEST_CASE("powers") {
  CHECK(TiedLaurent::loop_value().pow(0) == TiedLaurent::unit());
  CHECK(TiedLaurent::loop_value().pow(2).to_string() == "A^4 + 2 + A^-4");
  CHECK(TiedLaurent::variable_c().pow(3).to_string() == "c^3");
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    const TiedLaurent p = random_poly(rng);
    const TiedLaurent q = random_poly(rng);
    const TiedLaurent r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + (-p)).is_zero());
  }
}

TEST_CASE("rendering matches the fixed grammar") {
  CHECK(TiedLaurent().to_string() == "0");
  CHECK(TiedLaurent::loop_value().to_string() == "-A^2 - A^-2");
  CHECK(TiedLaurent::loop_value().pow(2).to_string() == "A^4 + 2 + A^-4");
  TiedLaurent mixed = TiedLaurent::monomial(2) + TiedLaurent::monomial(1, 2, 1);
  CHECK(mixed.to_string() == "2 + A^2*c");
  TiedLaurent negc = TiedLaurent::monomial(-3, -1, 2);
  CHECK(negc.to_string() == "-3*A^-1*c^2");
  // c-terms come after all pure A-terms; A-exponents descend within a block
  TiedLaurent ordered = TiedLaurent::monomial(1, -4) + TiedLaurent::monomial(1, 4) +
                        TiedLaurent::monomial(1, 0, 1);
  CHECK(ordered.to_string() == "A^4 + A^-4 + c");
}

TEST_CASE("serialize-parse round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const TiedLaurent p = random_poly(rng);
    CHECK(TiedLaurent::parse(p.to_string()) == p);
  }
  CHECK(TiedLaurent::parse("0").is_zero());
  CHECK(TiedLaurent::parse("-A^2 - A^-2") == TiedLaurent::loop_value());
  CHECK(TiedLaurent::parse("A") == TiedLaurent::a_power(1));
}
