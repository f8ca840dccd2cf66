#include "ssd/reductions.hpp"

#include <algorithm>

#include "ssd/errors.hpp"

namespace ssd {

namespace {

constexpr std::size_t kMaxWitnesses = 10;

bool is_binary(const Sequence& s) { return s.fits(Alphabet::binary()); }

}  // namespace

void IndInstance::validate() const {
  if (!is_binary(x)) throw FormatError("indexing input must be binary");
  if (x.empty()) throw FormatError("indexing input must be nonempty");
  if (i < 1 || i > x.size()) {
    throw FormatError("index " + std::to_string(i) + " outside [1, " + std::to_string(x.size()) + "]");
  }
}

void DisjInstance::validate() const {
  if (!is_binary(a) || !is_binary(b)) throw FormatError("disjointness inputs must be binary");
  if (a.size() != b.size()) throw FormatError("disjointness inputs differ in length");
  if (a.weight() != k || b.weight() != k) {
    throw FormatError("disjointness inputs must both have weight " + std::to_string(k) + " (got " +
                      std::to_string(a.weight()) + " and " + std::to_string(b.weight()) + ")");
  }
}

bool DisjInstance::answer() const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

Sequence doubling_map(const Sequence& s) {
  if (!is_binary(s)) throw FormatError("doubling map needs a binary sequence");
  std::vector<Symbol> out;
  out.reserve(2 * s.size());
  for (Symbol bit : s) {
    out.push_back(1 - bit);
    out.push_back(bit);
  }
  return Sequence(std::move(out));
}

ReductionOutput ind_to_ssd(const IndInstance& inst) {
  inst.validate();
  const std::size_t k = inst.x.size();
  Sequence y = Sequence::repeat(0, inst.i) + Sequence::repeat(1, k - inst.i + 1);
  return {doubling_map(inst.x), std::move(y), Bipartition::natural(2 * k, k + 1), 2 * k, k + 1};
}

ReductionOutput disj_to_ssd(const DisjInstance& inst) {
  inst.validate();
  const std::size_t n = inst.a.size();
  const std::size_t k = inst.k;
  std::vector<Symbol> x;
  std::vector<Party> owners;
  x.reserve(3 * n);
  owners.reserve(3 * n + 4 * k);
  for (std::size_t i = 0; i < n; ++i) {
    x.insert(x.end(), {inst.a[i], inst.b[i], 0});
    owners.insert(owners.end(), {Party::Alice, Party::Bob, Party::Alice});
  }
  std::vector<Symbol> y;
  y.reserve(4 * k);
  for (std::size_t j = 0; j < 2 * k; ++j) y.insert(y.end(), {1, 0});
  owners.insert(owners.end(), 4 * k, Party::Alice);
  return {Sequence(std::move(x)), Sequence(std::move(y)),
          Bipartition(3 * n, 4 * k, std::move(owners)), 3 * n, 4 * k};
}

std::vector<Sequence> weight_k_vectors(std::size_t n, std::size_t k) {
  if (k > n) return {};
  // Lexicographic order of 0/1 vectors is next_permutation order from 0^(n-k)1^k.
  std::vector<Symbol> v(n - k, 0);
  v.insert(v.end(), k, 1);
  std::vector<Sequence> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

ReductionReport verify_ind_reduction(std::size_t k) {
  if (k < 1 || k > 14) throw BudgetExceeded("verify_ind_reduction needs 1 <= k <= 14");
  ReductionReport report;
  report.kind = "ind";
  report.n = 2 * k;
  report.k = k + 1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    const Sequence x = sequence_from_bits(bits, k);
    for (std::size_t i = 1; i <= k; ++i) {
      const IndInstance inst{x, i};
      const ReductionOutput out = ind_to_ssd(inst);
      const bool expected = inst.answer();
      const bool got = is_subsequence(out.x, out.y);
      ++report.cases;
      if (expected != got) {
        ++report.mismatches;
        if (report.witnesses.size() < kMaxWitnesses) {
          report.witnesses.push_back({"x=" + format_sequence(x) + " i=" + std::to_string(i), out.x,
                                      out.y, expected, got});
        }
      }
    }
  }
  return report;
}

ReductionReport verify_disj_reduction(std::size_t n, std::size_t k) {
  if (n > 12) throw BudgetExceeded("verify_disj_reduction needs n <= 12");
  if (2 * k > n) throw FormatError("verify_disj_reduction needs k <= n/2");
  ReductionReport report;
  report.kind = "disj";
  report.n = 3 * n;
  report.k = 4 * k;
  const std::vector<Sequence> vectors = weight_k_vectors(n, k);
  for (const Sequence& a : vectors) {
    for (const Sequence& b : vectors) {
      const DisjInstance inst{a, b, k};
      const ReductionOutput out = disj_to_ssd(inst);
      const bool expected = inst.answer();
      const bool got = is_subsequence(out.x, out.y);
      ++report.cases;
      if (expected != got) {
        ++report.mismatches;
        if (report.witnesses.size() < kMaxWitnesses) {
          report.witnesses.push_back({"a=" + format_sequence(a) + " b=" + format_sequence(b), out.x,
                                      out.y, expected, got});
        }
      }
    }
  }
  return report;
}

}  // namespace ssd
