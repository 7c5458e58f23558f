#include <doctest.h>

#include "jsgft/scalar.hpp"

using namespace jsgft;

TEST_CASE("rational parsing handles integers, fractions and decimals") {
  CHECK(rational_from_string("7") == mpq_class(7));
  CHECK(rational_from_string("-3/4") == mpq_class(-3, 4));
  CHECK(rational_from_string("1.5") == mpq_class(3, 2));
  CHECK(rational_from_string("-0.25") == mpq_class(-1, 4));
  CHECK(rational_from_string("2e3") == mpq_class(2000));
  CHECK(rational_from_string("1.5e-2") == mpq_class(3, 200));
  CHECK(rational_from_string("+5") == mpq_class(5));
  CHECK(rational_from_string(" 2/6 ") == mpq_class(1, 3));
}

TEST_CASE("rational parsing rejects junk") {
  CHECK_THROWS_AS(rational_from_string(""), Error);
  CHECK_THROWS_AS(rational_from_string("x"), Error);
  CHECK_THROWS_AS(rational_from_string("1.2.3"), Error);
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
}

TEST_CASE("rational_from_double is lossless") {
  CHECK(rational_from_double(0.5) == mpq_class(1, 2));
  CHECK(rational_from_double(3.0) == mpq_class(3));
  CHECK(rational_from_double(rational_from_double(0.1).get_d()) == rational_from_double(0.1));
}

TEST_CASE("rational_sqrt detects perfect squares") {
  CHECK(*rational_sqrt(mpq_class(4)) == mpq_class(2));
  CHECK(*rational_sqrt(mpq_class(9, 16)) == mpq_class(3, 4));
  CHECK(!rational_sqrt(mpq_class(2)).has_value());
  CHECK(!rational_sqrt(mpq_class(-4)).has_value());
  CHECK(*rational_sqrt(mpq_class(0)) == mpq_class(0));
}

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational i(mpq_class(0), mpq_class(1));
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.conj() == GaussianRational(mpq_class(0), mpq_class(-1)));
  GaussianRational z(mpq_class(3), mpq_class(4));
  CHECK(z.norm2() == mpq_class(25));
  CHECK(*z.exact_abs() == mpq_class(5));
  CHECK(z / z == GaussianRational(1));
  CHECK((z * z.conj()).re() == mpq_class(25));
  CHECK(z.str() == "3+4i");
  CHECK(GaussianRational(mpq_class(1, 2)).str() == "1/2");
  CHECK_THROWS_AS(z / GaussianRational(0), Error);
}

TEST_CASE("exit codes group error kinds") {
  CHECK(exit_code_for(Errc::parse_error) == 2);
  CHECK(exit_code_for(Errc::unknown_node) == 2);
  CHECK(exit_code_for(Errc::irrational_spectrum) == 4);
  CHECK(exit_code_for(Errc::bad_supplied_spectrum) == 4);
  CHECK(exit_code_for(Errc::zero_spectral_radius) == 4);
  CHECK(exit_code_for(Errc::chain_defect) == 3);
  CHECK(exit_code_for(Errc::numerical_conformance) == 3);
}
