#include "ssd/commsim.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <mutex>
#include <cctype>
#include <random>
#include <stdexcept>
#include <tuple>

#include "ssd/errors.hpp"
#include "ssd/parallel.hpp"

namespace ssd {

Bipartition::Bipartition(std::size_t n, std::size_t k, std::vector<Party> owners)
    : n_(n), k_(k), owners_(std::move(owners)) {
  if (owners_.size() != n_ + k_) {
    throw FormatError("partition has " + std::to_string(owners_.size()) +
                      " owners, expected n+k=" + std::to_string(n_ + k_));
  }
}

Bipartition Bipartition::natural(std::size_t n, std::size_t k) {
  std::vector<Party> owners(n, Party::Alice);
  owners.insert(owners.end(), k, Party::Bob);
  return Bipartition(n, k, std::move(owners));
}

bool Bipartition::is_natural() const noexcept { return *this == natural(n_, k_); }

std::string Bipartition::to_string() const {
  std::string out;
  out.reserve(owners_.size());
  for (Party p : owners_) out.push_back(party_letter(p));
  return out;
}

Bipartition make_partition(std::string_view spec, std::size_t n, std::size_t k) {
  std::string compact;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact == "natural") return Bipartition::natural(n, k);
  if (compact.size() != n + k) {
    throw FormatError("partition spec '" + compact + "' has length " +
                      std::to_string(compact.size()) + ", expected n+k=" + std::to_string(n + k));
  }
  std::vector<Party> owners;
  owners.reserve(compact.size());
  for (char c : compact) {
    switch (c) {
      case 'A': owners.push_back(Party::Alice); break;
      case 'B': owners.push_back(Party::Bob); break;
      default:
        throw FormatError(std::string("partition spec may only contain A or B, got '") + c + "'");
    }
  }
  return Bipartition(n, k, std::move(owners));
}

namespace {

Bipartition partition_from_mask(std::size_t n, std::size_t k, std::uint64_t mask) {
  const std::size_t total = n + k;
  std::vector<Party> owners(total);
  for (std::size_t i = 0; i < total; ++i) {
    owners[i] = ((mask >> (total - 1 - i)) & 1U) ? Party::Bob : Party::Alice;
  }
  return Bipartition(n, k, std::move(owners));
}

}  // namespace

std::vector<Bipartition> all_partitions(std::size_t n, std::size_t k) {
  if (n + k > 24) throw BudgetExceeded("refusing to list 2^" + std::to_string(n + k) + " partitions");
  const std::uint64_t count = std::uint64_t{1} << (n + k);
  std::vector<Bipartition> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(partition_from_mask(n, k, mask));
  return out;
}

std::vector<Bipartition> random_partitions(std::size_t n, std::size_t k, std::size_t count,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Bipartition> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Party> owners(n + k);
    for (auto& p : owners) p = coin(rng) ? Party::Bob : Party::Alice;
    out.emplace_back(n, k, std::move(owners));
  }
  return out;
}

PartyView::PartyView(Party party, const ProblemShape& shape, const Bipartition& partition,
                     const Sequence& x, const Sequence& y)
    : party_(party), shape_(shape), partition_(&partition), symbols_(shape.n + shape.k) {
  for (std::size_t i = 0; i < shape.n; ++i) {
    if (partition.x_owner(i) == party) symbols_[i] = x[i];
  }
  for (std::size_t j = 0; j < shape.k; ++j) {
    if (partition.y_owner(j) == party) symbols_[shape.n + j] = y[j];
  }
}

Symbol PartyView::x(std::size_t i) const {
  const auto& s = symbols_.at(i);
  if (!s) throw std::logic_error("party read x position it does not own");
  return *s;
}

Symbol PartyView::y(std::size_t j) const {
  const auto& s = symbols_.at(shape_.n + j);
  if (!s) throw std::logic_error("party read y position it does not own");
  return *s;
}

std::uint64_t Transcript::read_field(std::size_t offset, unsigned width) const {
  if (offset + width > messages_.size()) throw std::out_of_range("transcript field past end");
  std::uint64_t value = 0;
  for (unsigned b = 0; b < width; ++b) value = (value << 1) | (messages_[offset + b].bit ? 1U : 0U);
  return value;
}

std::size_t default_message_budget(const ProblemShape& shape) {
  const std::uint64_t span = shape.n + std::uint64_t{shape.m()} + 2;
  const auto log_bits = static_cast<std::size_t>(std::bit_width(span - 1));
  return 4 * (shape.n + shape.k) * log_bits;
}

ProtocolResult run_deterministic(const Protocol& protocol, const Sequence& x, const Sequence& y,
                                 const Bipartition& partition, const RunOptions& options) {
  const ProblemShape& shape = protocol.shape();
  if (x.size() != shape.n || y.size() != shape.k) {
    throw FormatError("input lengths (" + std::to_string(x.size()) + ", " +
                      std::to_string(y.size()) + ") do not match protocol shape (" +
                      std::to_string(shape.n) + ", " + std::to_string(shape.k) + ")");
  }
  if (!x.fits(shape.alphabet) || !y.fits(shape.alphabet)) {
    throw FormatError("input symbol outside alphabet m=" + std::to_string(shape.m()));
  }
  if (partition.n() != shape.n || partition.k() != shape.k) {
    throw FormatError("partition shape does not match protocol shape");
  }
  if (!protocol.supports(partition)) {
    throw UnsupportedPartition("protocol '" + std::string(protocol.name()) +
                               "' does not support partition " + partition.to_string());
  }

  const PartyView alice(Party::Alice, shape, partition, x, y);
  const PartyView bob(Party::Bob, shape, partition, x, y);
  const std::size_t budget = options.message_budget.value_or(default_message_budget(shape));

  ProtocolResult result{false, {}, 0};
  Transcript& transcript = result.transcript;
  while (true) {
    const Turn turn = protocol.turn(partition, transcript);
    if (turn == Turn::Halt) break;
    if (transcript.size() >= budget) {
      throw RunawayProtocol("protocol '" + std::string(protocol.name()) + "' exceeded " +
                            std::to_string(budget) + " messages");
    }
    const Party sender = turn == Turn::Alice ? Party::Alice : Party::Bob;
    const bool bit = protocol.next_bit(sender == Party::Alice ? alice : bob, transcript);
    transcript.push(sender, bit);
  }

  const bool alice_out = protocol.output(alice, transcript);
  const bool bob_out = protocol.output(bob, transcript);
  if (alice_out != bob_out) {
    throw SoundnessError("protocol '" + std::string(protocol.name()) + "' outputs disagree on x=" +
                         format_sequence(x, shape.alphabet) + " y=" +
                         format_sequence(y, shape.alphabet) + " partition " +
                         partition.to_string());
  }
  result.output = alice_out;
  result.cost = transcript.size();
  return result;
}

namespace {

struct PartialSweep {
  std::uint64_t runs = 0;
  std::size_t max_cost = 0;
  std::size_t min_cost = SIZE_MAX;
  std::vector<SweepMismatch> mismatches;
};

}  // namespace

SweepReport verify_protocol_exhaustive(const Protocol& protocol,
                                       std::span<const Bipartition> partitions,
                                       const SweepOptions& options) {
  const ProblemShape& shape = protocol.shape();
  const EnumerationBudget enum_budget{62.0};
  const std::uint64_t x_count = sequence_count(shape.n, shape.alphabet, enum_budget);
  const std::uint64_t y_count = sequence_count(shape.k, shape.alphabet, enum_budget);
  const std::uint64_t pairs = x_count * y_count;
  if (partitions.size() != 0 && pairs > options.max_runs / partitions.size()) {
    throw BudgetExceeded("sweep of " + std::to_string(pairs) + " input pairs x " +
                         std::to_string(partitions.size()) + " partitions exceeds run budget " +
                         std::to_string(options.max_runs));
  }
  const Oracle oracle = options.oracle ? options.oracle
                                       : Oracle([](const Sequence& x, const Sequence& y) {
                                           return is_subsequence(x, y);
                                         });

  const unsigned workers = std::max(1U, options.workers);
  std::vector<PartialSweep> partials(workers);
  std::mutex slot_mutex;
  std::size_t next_slot = 0;

  parallel_chunks(pairs, workers, [&](std::size_t begin, std::size_t end) {
    std::size_t slot;
    {
      std::lock_guard lock(slot_mutex);
      slot = next_slot++;
    }
    PartialSweep& part = partials[slot];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Sequence x = sequence_at(idx / y_count, shape.n, shape.alphabet);
      const Sequence y = sequence_at(idx % y_count, shape.k, shape.alphabet);
      const bool expected = oracle(x, y);
      for (const Bipartition& partition : partitions) {
        ++part.runs;
        try {
          const ProtocolResult r = run_deterministic(protocol, x, y, partition, options.run);
          part.max_cost = std::max(part.max_cost, r.cost);
          part.min_cost = std::min(part.min_cost, r.cost);
          if (r.output != expected) part.mismatches.push_back({x, y, partition, expected, r.output, {}});
        } catch (const ProtocolError& e) {
          part.mismatches.push_back({x, y, partition, expected, std::nullopt, e.what()});
        }
      }
    }
  });

  SweepReport report;
  report.min_cost = SIZE_MAX;
  for (auto& part : partials) {
    report.runs += part.runs;
    report.max_cost = std::max(report.max_cost, part.max_cost);
    report.min_cost = std::min(report.min_cost, part.min_cost);
    std::move(part.mismatches.begin(), part.mismatches.end(), std::back_inserter(report.mismatches));
  }
  if (report.runs == 0) report.min_cost = 0;
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const SweepMismatch& a, const SweepMismatch& b) {
              return std::tie(a.x, a.y, a.partition) < std::tie(b.x, b.y, b.partition);
            });
  return report;
}

}  // namespace ssd
