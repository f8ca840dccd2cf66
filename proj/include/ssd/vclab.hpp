#pragma once

// VC dimension of subsequence-containment classifiers: for a binary pattern
// sigma of length k, h_sigma(s) = 1 iff sigma is a subsequence of s.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ssd/bitmatrix.hpp"
#include "ssd/seqcore.hpp"

namespace ssd {

struct Hypothesis {
  Sequence pattern;

  bool accepts(const Sequence& s) const noexcept { return is_subsequence(s, pattern); }
};

/// All 2^k binary patterns of length k, lexicographic.
std::vector<Hypothesis> hypothesis_class(std::size_t k);

/// The 2^d x d matrix whose row i (0-based) is i in d-bit binary, most
/// significant bit first. Its columns are binary strings of length 2^d.
BitMatrix build_b_matrix(std::size_t d);

struct ShatterVerdict {
  bool shattered = false;
  /// Indexed by subset mask (bit j set <=> S[j] is in the subset): one
  /// realizing pattern per subset. Filled only when shattered.
  std::vector<Sequence> realizers;
  /// Smallest unrealized subset mask when not shattered.
  std::optional<std::uint64_t> first_unrealized;
};

/// Checks every subset B' of S has an h in H with S intersect h^-1(1) = B'.
/// All strings in S must share one length; |S| <= 30.
ShatterVerdict is_shattered(std::span<const Sequence> strings, std::span<const Hypothesis> hypotheses);

/// Per-string acceptance vectors over all 2^k patterns (k <= 6, so one
/// uint64 per string), plus the distinct signatures.
struct SignatureTable {
  struct Distinct {
    std::uint64_t signature;
    std::uint64_t representative;  // smallest string (as n-bit integer) with this signature
    std::uint64_t multiplicity;
  };

  std::size_t k;
  std::size_t n;
  std::vector<std::uint64_t> signatures;  // indexed by string value
  std::vector<Distinct> distinct;         // ordered by representative
};

SignatureTable build_signature_table(std::size_t k, std::size_t n, unsigned workers = 1);

struct SearchBudget {
  std::uint64_t max_nodes = std::uint64_t{1} << 32;
};

struct ShatterReport {
  std::size_t k;
  std::size_t n;
  std::size_t max_size = 0;
  std::vector<Sequence> witness;    // sorted lexicographically
  std::vector<Sequence> realizers;  // per subset mask of the witness
  bool exhaustive = false;          // true: no larger shattered set exists
  std::uint64_t nodes = 0;
  std::size_t distinct_signatures = 0;
};

/// Largest subset of {0,1}^n shattered by all length-k patterns. Among
/// maximum sets the lexicographically smallest is returned. When the node
/// budget runs out the report is marked non-exhaustive. k in [1, 6], n <= 16.
ShatterReport max_shattered(std::size_t k, std::size_t n, const SearchBudget& budget = {},
                            unsigned workers = 1);

struct ShatteredConstruction {
  std::size_t k;
  std::size_t d;                   // floor(log2(k - 1))
  std::size_t block;               // 2^d
  std::vector<Sequence> base;      // columns of B^d
  std::vector<Sequence> strings;   // doubled (and 1-padded) base strings, length k-1+2^d
  std::vector<Hypothesis> patterns;  // 0^i 1^(k-i), i = 1..2^d
  ShatterVerdict verdict;
};

/// Shattered set of size floor(log2(k-1)) for length-k patterns, built from
/// the B-matrix columns and the doubling map, then verified with
/// is_shattered. k >= 2.
ShatteredConstruction construct_shattered(std::size_t k);

struct VcBounds {
  std::size_t lower;  // floor(log2(k - 1))
  std::size_t upper;  // k
  /// floor(log2 k): the size reached when patterns of length k + 1 are
  /// allowed instead.
  std::size_t lower_with_longer_patterns;
};

VcBounds vc_bounds(std::size_t k);

/// One binary string per line; blank lines and '#' comments are skipped.
std::vector<Sequence> read_string_set(std::istream& in);
void write_string_set(std::ostream& out, std::span<const Sequence> strings);

}  // namespace ssd
