#include "ssd/vclab.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "ssd/errors.hpp"
#include "ssd/parallel.hpp"
#include "ssd/reductions.hpp"

namespace ssd {

std::vector<Hypothesis> hypothesis_class(std::size_t k) {
  if (k > 24) throw BudgetExceeded("hypothesis class of 2^" + std::to_string(k) + " patterns");
  std::vector<Hypothesis> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) out.push_back({sequence_from_bits(v, k)});
  return out;
}

BitMatrix build_b_matrix(std::size_t d) {
  if (d > 20) throw BudgetExceeded("B matrix with 2^" + std::to_string(d) + " rows");
  const std::size_t rows = std::size_t{1} << d;
  BitMatrix b(rows, d);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < d; ++j) b.set(i, j, (i >> (d - 1 - j)) & 1U);
  return b;
}

ShatterVerdict is_shattered(std::span<const Sequence> strings, std::span<const Hypothesis> hypotheses) {
  if (strings.size() > 30) throw BudgetExceeded("is_shattered supports at most 30 strings");
  for (const Sequence& s : strings) {
    if (s.size() != strings.front().size()) throw FormatError("strings in a shattering query differ in length");
  }
  const std::uint64_t subsets = std::uint64_t{1} << strings.size();

  auto label = [&](const Hypothesis& h) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < strings.size(); ++j)
      if (h.accepts(strings[j])) mask |= std::uint64_t{1} << j;
    return mask;
  };

  ShatterVerdict verdict;
  if (hypotheses.size() < subsets) {
    // Too few hypotheses to realize every subset; report the first gap.
    std::vector<std::uint64_t> seen;
    seen.reserve(hypotheses.size());
    for (const Hypothesis& h : hypotheses) seen.push_back(label(h));
    std::sort(seen.begin(), seen.end());
    std::uint64_t gap = 0;
    for (std::uint64_t v : seen) {
      if (v == gap) ++gap;
      else if (v > gap) break;
    }
    verdict.first_unrealized = gap;
    return verdict;
  }

  std::vector<const Hypothesis*> first(subsets, nullptr);
  std::uint64_t realized = 0;
  for (const Hypothesis& h : hypotheses) {
    const std::uint64_t mask = label(h);
    if (!first[mask]) {
      first[mask] = &h;
      if (++realized == subsets) break;
    }
  }
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (!first[mask]) {
      verdict.first_unrealized = mask;
      return verdict;
    }
  }
  verdict.shattered = true;
  verdict.realizers.reserve(subsets);
  for (const Hypothesis* h : first) verdict.realizers.push_back(h->pattern);
  return verdict;
}

SignatureTable build_signature_table(std::size_t k, std::size_t n, unsigned workers) {
  if (k < 1 || k > 6) throw FormatError("signature table needs 1 <= k <= 6");
  if (n > 20) throw BudgetExceeded("signature table needs n <= 20");
  const std::vector<Hypothesis> patterns = hypothesis_class(k);
  const std::size_t count = std::size_t{1} << n;

  SignatureTable table{k, n, std::vector<std::uint64_t>(count, 0), {}};
  parallel_chunks(count, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      const Sequence s = sequence_from_bits(v, n);
      std::uint64_t sig = 0;
      for (std::size_t p = 0; p < patterns.size(); ++p)
        if (patterns[p].accepts(s)) sig |= std::uint64_t{1} << p;
      table.signatures[v] = sig;
    }
  });

  std::unordered_map<std::uint64_t, std::size_t> slot;
  for (std::uint64_t v = 0; v < count; ++v) {
    const std::uint64_t sig = table.signatures[v];
    auto [it, inserted] = slot.try_emplace(sig, table.distinct.size());
    if (inserted) table.distinct.push_back({sig, v, 0});
    ++table.distinct[it->second].multiplicity;
  }
  return table;
}

namespace {

// Patterns are kept partitioned into classes by their labelling of the
// strings chosen so far. A new string keeps the set shattered iff it splits
// every class into two nonempty halves. Each class of size c can be split at
// most floor(log2 c) more times, which bounds how far a branch can grow.
class ShatterSearch {
 public:
  ShatterSearch(std::vector<std::uint64_t> signatures, std::uint64_t all_patterns,
                std::uint64_t max_nodes)
      : sigs_(std::move(signatures)), all_(all_patterns), max_nodes_(max_nodes) {}

  void run() {
    std::vector<std::size_t> cands;
    const std::vector<std::uint64_t> root{all_};
    for (std::size_t i = 0; i < sigs_.size(); ++i)
      if (splits_all(root, sigs_[i])) cands.push_back(i);
    dfs(root, cands);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }

 private:
  static bool splits_all(const std::vector<std::uint64_t>& classes, std::uint64_t sig) {
    for (std::uint64_t c : classes)
      if (!(c & sig) || !(c & ~sig)) return false;
    return true;
  }

  void dfs(const std::vector<std::uint64_t>& classes, const std::vector<std::size_t>& cands) {
    if (++nodes_ > max_nodes_) {
      truncated_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (cands.empty()) return;

    std::uint64_t smallest = UINT64_MAX;
    for (std::uint64_t c : classes) smallest = std::min<std::uint64_t>(smallest, std::popcount(c));
    const std::size_t levels = static_cast<std::size_t>(std::bit_width(smallest)) - 1;
    if (chosen_.size() + std::min(cands.size(), levels) <= best_.size()) return;

    std::vector<std::uint64_t> next_classes;
    std::vector<std::size_t> next_cands;
    for (std::size_t t = 0; t < cands.size(); ++t) {
      if (chosen_.size() + 1 + std::min(cands.size() - t - 1, levels - 1) <= best_.size()) break;
      const std::uint64_t sig = sigs_[cands[t]];
      next_classes.clear();
      for (std::uint64_t c : classes) {
        next_classes.push_back(c & sig);
        next_classes.push_back(c & ~sig);
      }
      next_cands.clear();
      for (std::size_t u = t + 1; u < cands.size(); ++u)
        if (splits_all(next_classes, sigs_[cands[u]])) next_cands.push_back(cands[u]);

      chosen_.push_back(cands[t]);
      dfs(next_classes, next_cands);
      chosen_.pop_back();
      if (truncated_) return;
    }
  }

  std::vector<std::uint64_t> sigs_;
  std::uint64_t all_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

ShatterReport max_shattered(std::size_t k, std::size_t n, const SearchBudget& budget, unsigned workers) {
  if (k < 1 || k > 6) throw FormatError("max_shattered needs 1 <= k <= 6");
  if (n > 16) throw BudgetExceeded("max_shattered needs n <= 16");
  const SignatureTable table = build_signature_table(k, n, workers);

  std::vector<std::uint64_t> sigs;
  sigs.reserve(table.distinct.size());
  for (const auto& d : table.distinct) sigs.push_back(d.signature);
  const std::size_t pattern_count = std::size_t{1} << k;
  const std::uint64_t all = pattern_count == 64 ? UINT64_MAX : (std::uint64_t{1} << pattern_count) - 1;

  ShatterSearch search(std::move(sigs), all, budget.max_nodes);
  search.run();

  ShatterReport report;
  report.k = k;
  report.n = n;
  report.distinct_signatures = table.distinct.size();
  report.nodes = search.nodes();
  report.exhaustive = !search.truncated();
  report.max_size = search.best().size();
  for (std::size_t idx : search.best())
    report.witness.push_back(sequence_from_bits(table.distinct[idx].representative, n));
  std::sort(report.witness.begin(), report.witness.end());

  const std::vector<Hypothesis> patterns = hypothesis_class(k);
  ShatterVerdict check = is_shattered(report.witness, patterns);
  if (!check.shattered) throw VerificationFailure("search returned a set that is not shattered");
  if (report.max_size > k) {
    throw VerificationFailure("shattered set of size " + std::to_string(report.max_size) +
                              " exceeds the 2^k counting bound");
  }
  report.realizers = std::move(check.realizers);
  return report;
}

ShatteredConstruction construct_shattered(std::size_t k) {
  if (k < 2) throw FormatError("construct_shattered needs k >= 2");
  ShatteredConstruction c;
  c.k = k;
  c.d = static_cast<std::size_t>(std::bit_width(k - 1)) - 1;
  c.block = std::size_t{1} << c.d;
  const std::size_t padding = k - c.block - 1;

  const BitMatrix b = build_b_matrix(c.d);
  const Sequence tail = Sequence::repeat(1, padding);
  for (std::size_t j = 0; j < c.d; ++j) {
    c.base.push_back(b.column(j));
    c.strings.push_back(doubling_map(c.base.back()) + tail);
  }
  for (std::size_t i = 1; i <= c.block; ++i) {
    c.patterns.push_back({Sequence::repeat(0, i) + Sequence::repeat(1, k - i)});
  }
  c.verdict = is_shattered(c.strings, c.patterns);
  return c;
}

VcBounds vc_bounds(std::size_t k) {
  if (k < 2) throw FormatError("vc_bounds needs k >= 2");
  return {static_cast<std::size_t>(std::bit_width(k - 1)) - 1, k,
          static_cast<std::size_t>(std::bit_width(k)) - 1};
}

std::vector<Sequence> read_string_set(std::istream& in) {
  std::vector<Sequence> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    Sequence s = parse_sequence(line.substr(first, last - first + 1), Alphabet::binary());
    out.push_back(std::move(s));
  }
  return out;
}

void write_string_set(std::ostream& out, std::span<const Sequence> strings) {
  for (const Sequence& s : strings) out << format_sequence(s, Alphabet::binary()) << '\n';
}

}  // namespace ssd
