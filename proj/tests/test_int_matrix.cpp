#include <doctest.h>

#include "test_support.hpp"

using namespace qspectra;
using namespace qtest;

namespace {

void check_snf_contract(const IntMatrix& M) {
  SmithResult s = smith_normal_form(M);
  CHECK(s.U * M * s.V == s.D);
  Int du = determinant(s.U), dv = determinant(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
  for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) {
    CHECK(s.divisors[i] > 0);
    CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form: identity is a fixed point") {
  IntMatrix I3 = IntMatrix::identity(3);
  SmithResult s = smith_normal_form(I3);
  CHECK(s.D == I3);
  CHECK(s.U == I3);
  CHECK(s.V == I3);
}

TEST_CASE("smith normal form: diagonal divisor chain is a fixed point") {
  IntMatrix M{{2, 0}, {0, 6}};
  SmithResult s = smith_normal_form(M);
  CHECK(s.D == M);
  CHECK(s.divisors == std::vector<Int>{2, 6});
}

TEST_CASE("smith normal form: 2x2 worked example") {
  // det = 2*8 - 4*6 = -8, entry gcd 2, so the chain is (2, 4).
  IntMatrix M{{2, 4}, {6, 8}};
  SmithResult s = smith_normal_form(M);
  CHECK(s.divisors == std::vector<Int>{2, 4});
  check_snf_contract(M);
}

TEST_CASE("smith normal form: contract on random matrices") {
  std::mt19937 g(12345);
  for (int it = 0; it < 200; ++it) {
    std::size_t r = 1 + g() % 5, c = 1 + g() % 5;
    check_snf_contract(random_matrix(g, r, c, -9, 9));
  }
}

TEST_CASE("hermite normal form: transform and shape") {
  std::mt19937 g(777);
  for (int it = 0; it < 200; ++it) {
    std::size_t r = 1 + g() % 5, c = 1 + g() % 5;
    IntMatrix M = random_matrix(g, r, c, -9, 9);
    HermiteResult h = hermite_normal_form(M);
    CHECK(h.U * M == h.H);
    Int du = determinant(h.U);
    CHECK((du == 1 || du == -1));
    // pivots step right with positive entries, zeros below, reduced above
    std::size_t prev_pivot = 0;
    bool started = false;
    for (std::size_t i = 0; i < h.rank; ++i) {
      std::size_t p = 0;
      while (p < M.cols() && h.H.at(i, p) == 0) ++p;
      REQUIRE(p < M.cols());
      if (started) CHECK(p > prev_pivot);
      prev_pivot = p;
      started = true;
      CHECK(h.H.at(i, p) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.H.at(k, p) >= 0);
        CHECK(h.H.at(k, p) < h.H.at(i, p));
      }
    }
    for (std::size_t i = h.rank; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) CHECK(h.H.at(i, j) == 0);
  }
}

TEST_CASE("determinant: Bareiss agrees with cofactor expansion on 3x3") {
  std::mt19937 g(99);
  for (int it = 0; it < 100; ++it) {
    IntMatrix M = random_matrix(g, 3, 3, -6, 6);
    Int cof = M.at(0, 0) * (M.at(1, 1) * M.at(2, 2) - M.at(1, 2) * M.at(2, 1)) -
              M.at(0, 1) * (M.at(1, 0) * M.at(2, 2) - M.at(1, 2) * M.at(2, 0)) +
              M.at(0, 2) * (M.at(1, 0) * M.at(2, 1) - M.at(1, 1) * M.at(2, 0));
    CHECK(determinant(M) == cof);
  }
}

TEST_CASE("smith normal form: determinantal-divisor oracle on 3x3 matrices") {
  // gcd of all k x k minors equals d1 * ... * dk; an independent route to
  // the invariant factors
  std::mt19937 g(314159);
  auto minor_gcd = [](const IntMatrix& M, std::size_t k) {
    std::vector<std::size_t> all = {0, 1, 2};
    Int acc = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::vector<bool> rsel(3, false);
    // enumerate k-subsets of {0,1,2} twice
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t a = 0; a < 3; ++a) {
      if (k == 1) subsets.push_back({a});
      for (std::size_t b = a + 1; b < 3 && k >= 2; ++b) {
        if (k == 2) subsets.push_back({a, b});
        for (std::size_t c = b + 1; c < 3 && k == 3; ++c) subsets.push_back({a, b, c});
      }
    }
    for (const auto& rs : subsets)
      for (const auto& cs : subsets) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = M.at(rs[i], cs[j]);
        Int d = determinant(sub);
        mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
      }
    return acc;
  };
  for (int it = 0; it < 100; ++it) {
    IntMatrix M = random_matrix(g, 3, 3, -7, 7);
    SmithResult s = smith_normal_form(M);
    Int prod = 1;
    for (std::size_t k = 1; k <= s.divisors.size(); ++k) {
      prod *= s.divisors[k - 1];
      CHECK(prod == minor_gcd(M, k));
    }
    for (std::size_t k = s.divisors.size() + 1; k <= 3; ++k)
      CHECK(minor_gcd(M, k) == 0);
  }
}

TEST_CASE("no-overflow sanity: entries far beyond 64 bits") {
  Int big("123456789012345678901234567890");
  IntMatrix M(2, 2);
  M.at(0, 0) = big;
  M.at(0, 1) = 0;
  M.at(1, 0) = 0;
  M.at(1, 1) = big * big;
  SmithResult s = smith_normal_form(M);
  CHECK(s.divisors[0] == big);
  CHECK(s.divisors[1] == big * big);
  CHECK(s.U * M * s.V == s.D);
}
