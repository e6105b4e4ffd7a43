#include <doctest.h>

#include <random>

#include "k3ns/cyclotomic.hpp"

using namespace k3ns;

namespace {

std::vector<Rat> rats(std::initializer_list<long> vals) {
  std::vector<Rat> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("zeta powers reduce canonically") {
  CHECK(Cyclotomic::zeta_pow(5, 0) == Cyclotomic::one(5));
  CHECK(Cyclotomic::zeta_pow(5, 4).coeffs() == rats({-1, -1, -1, -1}));
  CHECK(Cyclotomic::zeta_pow(7, 9) == Cyclotomic::zeta_pow(7, 2));
  CHECK(Cyclotomic::zeta_pow(7, -1) == Cyclotomic::zeta_pow(7, 6));
  CHECK_THROWS_AS(Cyclotomic::zeta_pow(4, 1), domain_error);
  CHECK_THROWS_AS(Cyclotomic::zero(9), domain_error);
}

TEST_CASE("inverse axiom") {
  Cyclotomic x = Cyclotomic::one(5) - Cyclotomic::zeta_pow(5, 1);
  CHECK(x.inv() * x == Cyclotomic::one(5));
  CHECK_THROWS_AS(Cyclotomic::zero(5).inv(), domain_error);
}

TEST_CASE("conjugation") {
  CHECK(Cyclotomic::zeta_pow(7, 1).conj() == Cyclotomic::zeta_pow(7, 6));
  Cyclotomic x(7, {Rat(1), Rat(2), Rat(0), ratio(1, 3), Rat(0), Rat(-1)});
  CHECK(x.conj().conj() == x);
}

TEST_CASE("norm of 1 - zeta is p for p = 3") {
  Cyclotomic one = Cyclotomic::one(3);
  Cyclotomic prod = (one - Cyclotomic::zeta_pow(3, 1)) * (one - Cyclotomic::zeta_pow(3, 2));
  CHECK(prod == Cyclotomic::from_rational(3, Rat(3)));
}

TEST_CASE("rational coordinates") {
  Cyclotomic x = Cyclotomic::one(5) + Cyclotomic::zeta_pow(5, 4);
  CHECK(rational_coordinates(x) == rats({0, -1, -1, -1}));
  CHECK(rational_coordinates(Cyclotomic::zero(5)) == rats({0, 0, 0, 0}));
  // 7(z + z^6) in the power basis of Q(zeta_7).
  Cyclotomic y = (Cyclotomic::zeta_pow(7, 1) + Cyclotomic::zeta_pow(7, 6)) * Rat(7);
  CHECK(rational_coordinates(y) == rats({-7, 0, -7, -7, -7, -7}));
}

TEST_CASE("mixed fields are rejected") {
  CHECK_THROWS_AS(Cyclotomic::one(5) + Cyclotomic::one(7), domain_error);
  CHECK_THROWS_AS(Cyclotomic::one(5) * Cyclotomic::one(3), domain_error);
}

TEST_CASE("p = 2 degenerates to Q") {
  Cyclotomic minus_one = Cyclotomic::zeta_pow(2, 1);
  CHECK(minus_one.is_rational());
  CHECK(minus_one.rational_value() == -1);
  CHECK(minus_one * minus_one == Cyclotomic::one(2));
  CHECK((Cyclotomic::one(2) + minus_one).is_zero());
}

TEST_CASE("galois maps compose") {
  std::mt19937_64 rng(11);
  for (int p : {3, 5, 7, 11, 13}) {
    std::vector<Rat> c(static_cast<std::size_t>(p - 1));
    for (auto& v : c) v = ratio(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    Cyclotomic x(p, c);
    for (int j = 1; j < p; ++j) {
      int j_inv = 1;
      while ((j * j_inv) % p != 1) ++j_inv;
      CHECK(x.galois(j).galois(j_inv) == x);
    }
    CHECK_THROWS_AS(x.galois(p), domain_error);
  }
}

TEST_CASE("field laws on random elements") {
  std::mt19937_64 rng(13);
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19}) {
    for (int trial = 0; trial < 5; ++trial) {
      auto draw = [&] {
        std::vector<Rat> c(static_cast<std::size_t>(p - 1));
        for (auto& v : c)
          v = ratio(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        return Cyclotomic(p, c);
      };
      Cyclotomic x = draw(), y = draw(), z = draw();
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * y == y * x);
      CHECK((x - x).is_zero());
      if (!x.is_zero()) CHECK(x * x.inv() == Cyclotomic::one(p));
    }
  }
}

TEST_CASE("string rendering") {
  CHECK(Cyclotomic::zero(5).str() == "0");
  Cyclotomic x = Cyclotomic::from_rational(5, Rat(2)) - Cyclotomic::zeta_pow(5, 2) * Rat(3);
  CHECK(x.str() == "2 - 3*z^2");
}
