#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ssd/commsim.hpp"

namespace ssd {

/// Bob streams y to Alice, one ceil(log2(m+1))-bit field per character;
/// Alice answers with one bit. Natural partition only. Costs exactly
/// k * ceil(log2(m+1)) + 1 on every input.
///
/// With `contiguous` set, Alice decides substring containment instead, which
/// gives the same cost for contiguous string matching.
class TrivialProtocol final : public Protocol {
 public:
  TrivialProtocol(ProblemShape shape, bool contiguous = false);

  std::string_view name() const noexcept override { return "trivial"; }
  bool supports(const Bipartition& partition) const override;
  Turn turn(const Bipartition& partition, const Transcript& transcript) const override;
  bool next_bit(const PartyView& view, const Transcript& transcript) const override;
  bool output(const PartyView& view, const Transcript& transcript) const override;

  bool contiguous() const noexcept { return contiguous_; }

 private:
  Sequence decode_y(const Transcript& transcript) const;

  unsigned symbol_bits_;
  std::size_t y_bits_;
  bool contiguous_;
};

/// Works under any partition.
///
/// Phase 1: for j = 1..k the owner of y_j sends it in ceil(log2(m+1)) bits.
/// Phase 2: with a public frontier p (initially 0), for each j Alice and
/// then Bob announce the smallest position > p they own whose symbol is
/// y_j, in ceil(log2(n+2)) bits, n+1 meaning none. The frontier moves to the
/// smaller announcement. Two "none"s halt with output 0; k successful rounds
/// halt with output 1. No answer bit is sent.
class IterativeProtocol final : public Protocol {
 public:
  explicit IterativeProtocol(ProblemShape shape);

  std::string_view name() const noexcept override { return "iterative"; }
  bool supports(const Bipartition&) const override { return true; }
  Turn turn(const Bipartition& partition, const Transcript& transcript) const override;
  bool next_bit(const PartyView& view, const Transcript& transcript) const override;
  bool output(const PartyView& view, const Transcript& transcript) const override;

  /// Public state recovered from a transcript prefix.
  struct State {
    std::size_t y_known = 0;            // y characters fully transmitted
    Sequence y;                         // those characters
    std::vector<std::size_t> frontier;  // p after each completed round, 1-based
    std::size_t round = 0;              // current phase-2 round (0-based)
    std::size_t bits_into_round = 0;
    bool halted = false;
    bool result = false;
  };
  State decode(const Transcript& transcript) const;

  unsigned symbol_bits() const noexcept { return symbol_bits_; }
  unsigned index_bits() const noexcept { return index_bits_; }

 private:
  std::size_t sentinel() const noexcept { return shape().n + 1; }

  unsigned symbol_bits_;
  unsigned index_bits_;
};

struct CostBound {
  std::string protocol;
  std::size_t n;
  std::size_t k;
  Symbol m;
  std::size_t bits;
};

/// Exact worst-case message count of the encodings above:
///   trivial:   k ceil(log2(m+1)) + 1
///   iterative: k ceil(log2(m+1)) + 2k ceil(log2(n+2))
/// Throws FormatError for any other name.
CostBound cost_bound(std::string_view protocol, std::size_t n, std::size_t k, Symbol m);

/// Builds a protocol by its CLI identifier ("trivial" or "iterative").
std::unique_ptr<Protocol> make_protocol(std::string_view name, const ProblemShape& shape,
                                        bool contiguous = false);

/// ceil(log2(v)) for v >= 1.
unsigned ceil_log2(std::uint64_t v) noexcept;

}  // namespace ssd
