#include "ssd/specmat.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "ssd/errors.hpp"
#include "ssd/parallel.hpp"
#include "ssd/protocols.hpp"

namespace ssd {

namespace {

std::uint64_t checked_power(Symbol m, std::size_t e) {
  const EnumerationBudget wide{62.0};
  return sequence_count(e, Alphabet(m), wide);
}

void check_entries(std::uint64_t rows, std::uint64_t cols, std::uint64_t limit, const char* what) {
  if (cols != 0 && rows > limit / cols) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " exceeds the budget of " + std::to_string(limit) +
                         " entries");
  }
}

}  // namespace

bool CommMatrix::entry(const Sequence& x, const Sequence& y) const {
  const Alphabet a(m);
  return entries.at(lex_index(x, a), lex_index(y, a));
}

CommMatrix build_comm_matrix(std::size_t n, std::size_t k, Symbol m, const MatrixBudget& budget,
                             unsigned workers) {
  const Alphabet alphabet(m);
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  try {
    rows = checked_power(m, n);
    cols = checked_power(m, k);
  } catch (const BudgetExceeded&) {
    throw BudgetExceeded("communication matrix for n=" + std::to_string(n) + " k=" +
                         std::to_string(k) + " m=" + std::to_string(m) + " is too large");
  }
  check_entries(rows, cols, budget.max_entries, "communication matrix");

  CommMatrix out{n, k, m, BitMatrix(rows, cols)};
  std::vector<Sequence> ys;
  ys.reserve(cols);
  for (const Sequence& y : LexSequences(k, alphabet, EnumerationBudget{62.0})) ys.push_back(y);

  parallel_chunks(rows, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      const Sequence x = sequence_at(r, n, alphabet);
      for (std::size_t c = 0; c < cols; ++c) out.entries.set(r, c, is_subsequence(x, ys[c]));
    }
  });
  return out;
}

IntegerMatrix::IntegerMatrix(const BitMatrix& bits)
    : rows_(bits.rows()), cols_(bits.cols()), data_(rows_ * cols_) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = bits.at(r, c) ? 1 : 0;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

std::size_t exact_rank(IntegerMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  mpz_class previous_pivot = 1;
  mpz_class scratch;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && a(pivot_row, c) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    a.swap_rows(rank, pivot_row);
    const mpz_class& pivot = a(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class factor = a(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a(r,j) = (pivot * a(r,j) - factor * a(rank,j)) / previous_pivot, exact.
        mpz_mul(scratch.get_mpz_t(), pivot.get_mpz_t(), a(r, j).get_mpz_t());
        mpz_submul(scratch.get_mpz_t(), factor.get_mpz_t(), a(rank, j).get_mpz_t());
        mpz_divexact(a(r, j).get_mpz_t(), scratch.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      a(r, c) = 0;
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const BitMatrix& m, const MatrixBudget& budget) {
  check_entries(m.rows(), m.cols(), budget.max_rank_entries, "rank elimination");
  return exact_rank(IntegerMatrix(m));
}

std::size_t exact_rank(const CommMatrix& m, const MatrixBudget& budget) {
  return exact_rank(m.entries, budget);
}

BitMatrix leading_triangular_witness(std::size_t n, std::size_t k, Symbol m,
                                     const MatrixBudget& budget) {
  if (k > n) throw FormatError("triangular witness needs k <= n");
  const Alphabet alphabet(m);
  const std::uint64_t size = checked_power(m, k);
  check_entries(size, size, budget.max_entries, "triangular witness");

  std::vector<Sequence> ys;
  ys.reserve(size);
  for (const Sequence& y : LexSequences(k, alphabet, EnumerationBudget{62.0})) ys.push_back(y);
  const Sequence zeros = Sequence::repeat(0, n - k);

  BitMatrix block(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    // Row i of the full matrix is x = sequence_at(i, n), which is 0^(n-k) ys[i].
    const Sequence x = zeros + ys[i];
    for (std::size_t j = 0; j < size; ++j) {
      const bool v = is_subsequence(x, ys[j]);
      block.set(i, j, v);
      if (i < j && v) {
        throw VerificationFailure("triangular witness: entry (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ") above the diagonal is 1");
      }
      if (i == j && !v) {
        throw VerificationFailure("triangular witness: diagonal entry " + std::to_string(i) + " is 0");
      }
    }
  }
  return block;
}

double log2_of(const mpz_class& v) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

BoundsReport bounds_report(std::size_t n, std::size_t k, Symbol m) {
  const Alphabet alphabet(m);
  BoundsReport r{};
  r.n = n;
  r.k = k;
  r.m = m;
  r.logrank_lb = static_cast<double>(k) * std::log2(static_cast<double>(alphabet.size()));
  const std::uint64_t size = alphabet.size();
  if ((size & (size - 1)) == 0) {
    r.logrank_lb_exact = std::to_string(k * ceil_log2(size));
  } else {
    r.logrank_lb_exact = std::to_string(k) + "*log2(" + std::to_string(size) + ")";
  }
  r.trivial_ub = cost_bound("trivial", n, k, m).bits;
  r.iterative_ub = cost_bound("iterative", n, k, m).bits;
  if (k <= n) mpz_bin_uiui(r.binomial.get_mpz_t(), n, k);
  r.disj_det_lb = r.binomial > 0 ? log2_of(r.binomial) : 0.0;
  r.disj_rand_lb = k;
  r.disj_in_regime = 2 * k <= n;
  r.binary = m == 1;
  return r;
}

void write_matrix(std::ostream& out, const CommMatrix& m) {
  out << m.n << ' ' << m.k << ' ' << m.m << ' ' << m.rows() << ' ' << m.cols() << '\n';
  std::string line;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    line.assign(m.cols(), '0');
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.entries.at(r, c)) line[c] = '1';
    out << line << '\n';
  }
}

CommMatrix read_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("matrix: missing header");
  std::istringstream hs(header);
  std::size_t n = 0, k = 0, rows = 0, cols = 0;
  Symbol m = 0;
  if (!(hs >> n >> k >> m >> rows >> cols)) throw FormatError("matrix: malformed header '" + header + "'");
  CommMatrix out{n, k, m, BitMatrix(rows, cols)};
  std::string line;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(in, line) || line.size() != cols) {
      throw FormatError("matrix: row " + std::to_string(r) + " missing or wrong width");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] != '0' && line[c] != '1') throw FormatError("matrix: non-binary entry");
      out.entries.set(r, c, line[c] == '1');
    }
  }
  return out;
}

}  // namespace ssd
