#pragma once

// The communication matrix of SSD_{n,k,m}, its exact rank, and the bounds
// that follow from it.
//
// Orientation: rows are indexed by x in lexicographic order, columns by y.
// Printed matrices elsewhere are often shown transposed (y down the side);
// use BitMatrix::transpose() to compare against those.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ssd/bitmatrix.hpp"
#include "ssd/seqcore.hpp"

namespace ssd {

struct MatrixBudget {
  std::uint64_t max_entries = std::uint64_t{1} << 26;  // build guard
  std::uint64_t max_rank_entries = std::uint64_t{1} << 22;  // elimination guard
};

struct CommMatrix {
  std::size_t n;
  std::size_t k;
  Symbol m;
  BitMatrix entries;  // (m+1)^n x (m+1)^k

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }
  bool entry(const Sequence& x, const Sequence& y) const;
};

CommMatrix build_comm_matrix(std::size_t n, std::size_t k, Symbol m, const MatrixBudget& budget = {},
                             unsigned workers = 1);

/// Dense integer matrix for exact elimination.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit IntegerMatrix(const BitMatrix& bits);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination. Every
/// intermediate value is an exact integer; the pivot is the first nonzero
/// entry in the column.
std::size_t exact_rank(IntegerMatrix m);
std::size_t exact_rank(const BitMatrix& m, const MatrixBudget& budget = {});
std::size_t exact_rank(const CommMatrix& m, const MatrixBudget& budget = {});

/// The square block of rows x = 0^(n-k) s, s in {0..m}^k lexicographic,
/// i.e. the first (m+1)^k rows. Checks that it is lower triangular with a
/// unit diagonal and throws VerificationFailure otherwise. Requires n >= k.
BitMatrix leading_triangular_witness(std::size_t n, std::size_t k, Symbol m,
                                     const MatrixBudget& budget = {});

struct BoundsReport {
  std::size_t n;
  std::size_t k;
  Symbol m;

  double logrank_lb;             // k log2(m+1)
  std::string logrank_lb_exact;  // "3" or "2*log2(3)"
  std::size_t trivial_ub;        // k ceil(log2(m+1)) + 1
  std::size_t iterative_ub;      // realized encoding bound

  mpz_class binomial;            // C(n, k)
  double disj_det_lb;            // log2 C(n, k)
  std::size_t disj_rand_lb;      // k, asymptotic (up to constants)
  bool disj_in_regime;           // k <= n/2
  bool binary;                   // m == 1, where the disjointness bounds are proved
};

BoundsReport bounds_report(std::size_t n, std::size_t k, Symbol m);

/// log2 of a positive big integer, to double precision.
double log2_of(const mpz_class& v);

/// Header line "n k m rows cols", then one row of 0/1 characters per line.
void write_matrix(std::ostream& out, const CommMatrix& m);
CommMatrix read_matrix(std::istream& in);

}  // namespace ssd
