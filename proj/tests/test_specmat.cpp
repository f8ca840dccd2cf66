#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ssd/errors.hpp"
#include "ssd/specmat.hpp"

using namespace ssd;

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("displayed 3x2 matrix") {
  const char* rows[] = {"11101000", "01110100", "00101110", "00010111"};
  const CommMatrix m = build_comm_matrix(3, 2, 1);
  const BitMatrix t = m.entries.transpose();
  REQUIRE(t.rows() == 4);
  REQUIRE(t.cols() == 8);
  for (std::size_t r = 0; r < 4; ++r) CHECK(t.row(r) == parse_sequence(rows[r]));
}

TEST_CASE("matrix entries") {
  const CommMatrix m = build_comm_matrix(3, 2, 1);
  CHECK_FALSE(m.entry(parse_sequence("010"), parse_sequence("11")));
  CHECK(m.entry(parse_sequence("010"), parse_sequence("10")));
  CHECK(m.entry(parse_sequence("111"), parse_sequence("11")));
  for (Symbol mm : {1u, 2u}) {
    const CommMatrix q = build_comm_matrix(4, 2, mm);
    CHECK(q.entry(Sequence::repeat(0, 4), Sequence::repeat(0, 2)));
    for (const Sequence& x : LexSequences(4, Alphabet(mm)))
      for (const Sequence& y : LexSequences(2, Alphabet(mm)))
        CHECK(q.entry(x, y) == oracle::contains_dp(x, y));
  }
}

TEST_CASE("build is independent of worker count") {
  CHECK(build_comm_matrix(6, 3, 1, {}, 1).entries == build_comm_matrix(6, 3, 1, {}, 4).entries);
}

TEST_CASE("rank of small matrices") {
  BitMatrix id(5, 5);
  for (std::size_t i = 0; i < 5; ++i) id.set(i, i, true);
  CHECK(exact_rank(id) == 5);
  CHECK(exact_rank(BitMatrix(3, 4)) == 0);
  BitMatrix dup(3, 3);
  for (std::size_t c = 0; c < 3; ++c) {
    dup.set(0, c, true);
    dup.set(1, c, true);
  }
  dup.set(2, 1, true);
  CHECK(exact_rank(dup) == 2);

  IntegerMatrix big(2, 2);
  big(0, 0) = mpz_class("123456789012345678901234567890");
  big(0, 1) = 2;
  big(1, 0) = mpz_class("246913578024691357802469135780");
  big(1, 1) = 4;
  CHECK(exact_rank(big) == 1);
}

TEST_CASE("rank of the communication matrix") {
  CHECK(exact_rank(build_comm_matrix(3, 2, 1)) == 4);
  CHECK(exact_rank(build_comm_matrix(5, 3, 1)) == 8);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const CommMatrix m = build_comm_matrix(n, k, 1);
      const std::size_t r = exact_rank(m);
      CHECK(r == ipow(2, k));
      CHECK(r == oracle::rank_rational(m.entries));
    }
  }
  CHECK(exact_rank(build_comm_matrix(4, 2, 2)) == 9);
}

TEST_CASE("rank is invariant under row and column shuffles") {
  const CommMatrix m = build_comm_matrix(5, 3, 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::size_t> rp(m.rows());
    std::vector<std::size_t> cp(m.cols());
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    BitMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) s.set(r, c, m.entries.at(rp[r], cp[c]));
    CHECK(exact_rank(s) == 8);
    CHECK(exact_rank(s.transpose()) == 8);
  }
}

TEST_CASE("triangular witness") {
  auto check_triangular = [](const BitMatrix& w, std::size_t size) {
    REQUIRE(w.rows() == size);
    REQUIRE(w.cols() == size);
    for (std::size_t i = 0; i < size; ++i) {
      CHECK(w.at(i, i));
      for (std::size_t j = i + 1; j < size; ++j) CHECK_FALSE(w.at(i, j));
    }
  };
  check_triangular(leading_triangular_witness(3, 2, 1), 4);
  check_triangular(leading_triangular_witness(4, 2, 2), 9);
  for (std::size_t k = 1; k <= 5; ++k) check_triangular(leading_triangular_witness(k, k, 1), ipow(2, k));
}

TEST_CASE("bounds report") {
  const BoundsReport b = bounds_report(10, 3, 1);
  CHECK(b.logrank_lb == doctest::Approx(3.0));
  CHECK(b.logrank_lb_exact == "3");
  CHECK(b.trivial_ub == 4);
  CHECK(b.iterative_ub == 27);
  CHECK(b.binomial == 120);
  CHECK(b.disj_det_lb == doctest::Approx(6.9069).epsilon(1e-4));
  CHECK(b.disj_rand_lb == 3);
  CHECK(b.disj_in_regime);
  CHECK(b.binary);

  const BoundsReport out = bounds_report(5, 3, 1);
  CHECK_FALSE(out.disj_in_regime);

  const BoundsReport ternary = bounds_report(6, 2, 2);
  CHECK(ternary.logrank_lb_exact == "2*log2(3)");
  CHECK(ternary.logrank_lb == doctest::Approx(2 * std::log2(3.0)));
  CHECK(ternary.trivial_ub == 5);
  CHECK_FALSE(ternary.binary);
}

TEST_CASE("log2 of big integers") {
  CHECK(log2_of(mpz_class(1024)) == doctest::Approx(10.0));
  mpz_class huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 2, 3000);
  CHECK(log2_of(huge) == doctest::Approx(3000.0));
}

TEST_CASE("matrix text round trip") {
  const CommMatrix m = build_comm_matrix(4, 2, 2);
  std::stringstream buf;
  write_matrix(buf, m);
  const CommMatrix back = read_matrix(buf);
  CHECK(back.n == 4);
  CHECK(back.k == 2);
  CHECK(back.m == 2);
  CHECK(back.entries == m.entries);

  std::istringstream bad("3 2 1 8 4\n1110\n");
  CHECK_THROWS_AS(read_matrix(bad), FormatError);
}

TEST_CASE("budgets") {
  MatrixBudget small;
  small.max_entries = 100;
  CHECK_THROWS_AS(build_comm_matrix(5, 3, 1, small), BudgetExceeded);
  MatrixBudget tiny_rank;
  tiny_rank.max_rank_entries = 10;
  CHECK_THROWS_AS(exact_rank(build_comm_matrix(3, 2, 1), tiny_rank), BudgetExceeded);
  CHECK_THROWS_AS(build_comm_matrix(20, 10, 1), BudgetExceeded);
}
