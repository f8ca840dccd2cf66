#pragma once

// Gadgets that turn Indexing and Disjointness instances into subsequence
// detection instances, plus exhaustive equivalence checks at desk scale.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ssd/commsim.hpp"
#include "ssd/seqcore.hpp"

namespace ssd {

/// IND_k: Alice holds x in {0,1}^k, Bob an index i in [1, k]; answer x_i.
struct IndInstance {
  Sequence x;
  std::size_t i;  // 1-based

  void validate() const;
  bool answer() const { return x[i - 1] != 0; }
};

/// DISJ^n_k: characteristic vectors a, b of two k-subsets of [n]; answer 1
/// iff the sets are disjoint.
struct DisjInstance {
  Sequence a;
  Sequence b;
  std::size_t k;

  void validate() const;
  bool answer() const;
};

struct ReductionOutput {
  Sequence x;
  Sequence y;
  Bipartition partition;
  std::size_t n;  // target length of x
  std::size_t k;  // target length of y
};

/// Interleaves complements: s1 s2 ... -> (1-s1) s1 (1-s2) s2 ...
/// Shared by the indexing reduction and the shattered-set construction.
Sequence doubling_map(const Sequence& s);

/// x' = doubling_map(x), y' = 0^i 1^(k-i+1), natural partition.
/// IND_k(x, i) = SSD_{2k,k+1}(x', y').
ReductionOutput ind_to_ssd(const IndInstance& inst);

/// x = (a_i b_i 0) for i = 1..n, y = (10)^(2k). Alice owns the a slots,
/// the 0 spacers and all of y; Bob owns the b slots.
/// DISJ^n_k(a, b) = SSD_{3n,4k}(x, y).
ReductionOutput disj_to_ssd(const DisjInstance& inst);

struct ReductionWitness {
  std::string instance;  // human-readable source instance
  Sequence x;
  Sequence y;
  bool expected;
  bool got;
};

struct ReductionReport {
  std::string kind;  // "ind" or "disj"
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::vector<ReductionWitness> witnesses;  // first 10 mismatches

  bool passed() const noexcept { return mismatches == 0; }
};

/// Every x in {0,1}^k and i in [1, k]. k <= 14.
ReductionReport verify_ind_reduction(std::size_t k);

/// Every pair of weight-k vectors in {0,1}^n. n <= 12, k <= n/2.
ReductionReport verify_disj_reduction(std::size_t n, std::size_t k);

/// All weight-k binary vectors of length n in lexicographic order.
std::vector<Sequence> weight_k_vectors(std::size_t n, std::size_t k);

}  // namespace ssd
