#pragma once

// Two-party deterministic protocol simulation with bit-exact cost
// accounting. The n + k input characters (x first, then y) are split
// between Alice and Bob by a Bipartition; each party only ever sees its own
// characters plus the public transcript.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssd/seqcore.hpp"

namespace ssd {

enum class Party : std::uint8_t { Alice, Bob };

constexpr Party other(Party p) noexcept { return p == Party::Alice ? Party::Bob : Party::Alice; }
constexpr char party_letter(Party p) noexcept { return p == Party::Alice ? 'A' : 'B'; }

/// Ownership of every input position. Positions [0, n) are x's characters,
/// [n, n + k) are y's.
class Bipartition {
 public:
  Bipartition(std::size_t n, std::size_t k, std::vector<Party> owners);

  /// Alice holds all of x, Bob all of y.
  static Bipartition natural(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return owners_.size(); }
  Party owner(std::size_t position) const { return owners_.at(position); }
  Party x_owner(std::size_t i) const { return owners_.at(i); }
  Party y_owner(std::size_t j) const { return owners_.at(n_ + j); }
  bool is_natural() const noexcept;

  /// The "A"/"B" spec string, one letter per position.
  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition& a, const Bipartition& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Party> owners_;
};

/// Parses "AAABB"-style specs or the keyword "natural". Whitespace is
/// ignored, so a spec may be split over several shell words.
Bipartition make_partition(std::string_view spec, std::size_t n, std::size_t k);

/// All 2^(n+k) partitions, in binary order with A = 0 (n + k <= 24).
std::vector<Bipartition> all_partitions(std::size_t n, std::size_t k);

/// `count` uniformly random partitions from a seeded generator.
std::vector<Bipartition> random_partitions(std::size_t n, std::size_t k, std::size_t count,
                                           std::uint64_t seed);

/// Public parameters of an SSD_{n,k,m} instance.
struct ProblemShape {
  std::size_t n;
  std::size_t k;
  Alphabet alphabet;

  Symbol m() const noexcept { return alphabet.max_symbol(); }
};

/// What one party knows: its own characters and the public parameters.
class PartyView {
 public:
  PartyView(Party party, const ProblemShape& shape, const Bipartition& partition,
            const Sequence& x, const Sequence& y);

  Party party() const noexcept { return party_; }
  const ProblemShape& shape() const noexcept { return shape_; }
  const Bipartition& partition() const noexcept { return *partition_; }

  bool owns_x(std::size_t i) const { return partition_->x_owner(i) == party_; }
  bool owns_y(std::size_t j) const { return partition_->y_owner(j) == party_; }

  /// Throws std::logic_error when the position belongs to the other party.
  Symbol x(std::size_t i) const;
  Symbol y(std::size_t j) const;

 private:
  Party party_;
  ProblemShape shape_;
  const Bipartition* partition_;
  std::vector<std::optional<Symbol>> symbols_;
};

struct Message {
  Party sender;
  bool bit;

  friend bool operator==(const Message&, const Message&) = default;
};

class Transcript {
 public:
  std::size_t size() const noexcept { return messages_.size(); }
  bool empty() const noexcept { return messages_.empty(); }
  const Message& operator[](std::size_t i) const { return messages_[i]; }
  auto begin() const noexcept { return messages_.begin(); }
  auto end() const noexcept { return messages_.end(); }
  void push(Party sender, bool bit) { messages_.push_back({sender, bit}); }

  /// Unsigned value of the `width` bits starting at `offset`, MSB first.
  std::uint64_t read_field(std::size_t offset, unsigned width) const;

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<Message> messages_;
};

enum class Turn : std::uint8_t { Alice, Bob, Halt };

/// A deterministic protocol. turn() sees only public data (the partition and
/// the transcript); the private-input hooks see one party's view.
class Protocol {
 public:
  explicit Protocol(ProblemShape shape) : shape_(shape) {}
  virtual ~Protocol() = default;

  const ProblemShape& shape() const noexcept { return shape_; }

  virtual std::string_view name() const noexcept = 0;
  virtual bool supports(const Bipartition& partition) const = 0;
  virtual Turn turn(const Bipartition& partition, const Transcript& transcript) const = 0;
  virtual bool next_bit(const PartyView& view, const Transcript& transcript) const = 0;
  virtual bool output(const PartyView& view, const Transcript& transcript) const = 0;

 private:
  ProblemShape shape_;
};

struct ProtocolResult {
  bool output;
  Transcript transcript;
  std::size_t cost;
};

/// Default runaway guard: 4 (n + k) ceil(log2(n + m + 2)) messages.
std::size_t default_message_budget(const ProblemShape& shape);

struct RunOptions {
  std::optional<std::size_t> message_budget;
};

/// Simulates the protocol until turn() says Halt. Both parties evaluate
/// output(); disagreement throws SoundnessError.
ProtocolResult run_deterministic(const Protocol& protocol, const Sequence& x, const Sequence& y,
                                 const Bipartition& partition, const RunOptions& options = {});

using Oracle = std::function<bool(const Sequence&, const Sequence&)>;

struct SweepMismatch {
  Sequence x;
  Sequence y;
  Bipartition partition;
  bool expected;
  std::optional<bool> got;  // empty when the run threw
  std::string error;
};

struct SweepReport {
  std::uint64_t runs = 0;
  std::size_t max_cost = 0;
  std::size_t min_cost = 0;
  std::vector<SweepMismatch> mismatches;  // sorted by (x, y, partition)

  bool passed() const noexcept { return mismatches.empty(); }
};

struct SweepOptions {
  unsigned workers = 1;
  std::uint64_t max_runs = std::uint64_t{1} << 28;
  Oracle oracle;  // defaults to is_subsequence
  RunOptions run;
};

/// Runs the protocol on every (x, y) in {0..m}^n x {0..m}^k under every
/// listed partition and compares with the oracle.
SweepReport verify_protocol_exhaustive(const Protocol& protocol,
                                       std::span<const Bipartition> partitions,
                                       const SweepOptions& options = {});

}  // namespace ssd
