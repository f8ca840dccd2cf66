#include "ssd/protocols.hpp"

#include <bit>
#include <cassert>

#include "ssd/errors.hpp"

namespace ssd {

unsigned ceil_log2(std::uint64_t v) noexcept {
  return v <= 1 ? 0U : static_cast<unsigned>(std::bit_width(v - 1));
}

// --- trivial ---------------------------------------------------------------

TrivialProtocol::TrivialProtocol(ProblemShape shape, bool contiguous)
    : Protocol(shape),
      symbol_bits_(shape.alphabet.symbol_bits()),
      y_bits_(shape.k * shape.alphabet.symbol_bits()),
      contiguous_(contiguous) {}

bool TrivialProtocol::supports(const Bipartition& partition) const {
  return partition.is_natural();
}

Turn TrivialProtocol::turn(const Bipartition&, const Transcript& transcript) const {
  if (transcript.size() < y_bits_) return Turn::Bob;
  if (transcript.size() == y_bits_) return Turn::Alice;
  return Turn::Halt;
}

Sequence TrivialProtocol::decode_y(const Transcript& transcript) const {
  std::vector<Symbol> y(shape().k);
  for (std::size_t j = 0; j < y.size(); ++j) {
    y[j] = static_cast<Symbol>(transcript.read_field(j * symbol_bits_, symbol_bits_));
  }
  return Sequence(std::move(y));
}

bool TrivialProtocol::next_bit(const PartyView& view, const Transcript& transcript) const {
  const std::size_t t = transcript.size();
  if (t < y_bits_) {
    const std::size_t j = t / symbol_bits_;
    const unsigned bit = symbol_bits_ - 1 - static_cast<unsigned>(t % symbol_bits_);
    return (view.y(j) >> bit) & 1U;
  }
  // Alice holds all of x and has just learned y.
  std::vector<Symbol> x(shape().n);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = view.x(i);
  const Sequence xs(std::move(x));
  const Sequence ys = decode_y(transcript);
  return contiguous_ ? is_substring(xs, ys) : is_subsequence(xs, ys);
}

bool TrivialProtocol::output(const PartyView&, const Transcript& transcript) const {
  return transcript[y_bits_].bit;
}

// --- iterative -------------------------------------------------------------

IterativeProtocol::IterativeProtocol(ProblemShape shape)
    : Protocol(shape),
      symbol_bits_(shape.alphabet.symbol_bits()),
      index_bits_(ceil_log2(shape.n + 2)) {}

IterativeProtocol::State IterativeProtocol::decode(const Transcript& transcript) const {
  const std::size_t k = shape().k;
  const std::size_t phase1 = k * symbol_bits_;
  State s;
  s.y_known = std::min(k, transcript.size() / symbol_bits_);
  for (std::size_t j = 0; j < s.y_known; ++j) {
    s.y.push_back(static_cast<Symbol>(transcript.read_field(j * symbol_bits_, symbol_bits_)));
  }
  if (transcript.size() < phase1) return s;

  const std::size_t round_bits = 2 * std::size_t{index_bits_};
  const std::size_t played = transcript.size() - phase1;
  const std::size_t complete = played / round_bits;
  std::size_t p = 0;
  for (std::size_t r = 0; r < complete; ++r) {
    const std::size_t base = phase1 + r * round_bits;
    const std::size_t a = transcript.read_field(base, index_bits_);
    const std::size_t b = transcript.read_field(base + index_bits_, index_bits_);
    assert(a == sentinel() || b == sentinel() || a != b);
    const std::size_t next = std::min(a, b);
    if (next >= sentinel()) {
      s.halted = true;
      s.result = false;
      s.round = r;
      return s;
    }
    p = next;
    s.frontier.push_back(p);
  }
  s.round = complete;
  s.bits_into_round = played % round_bits;
  if (complete == k) {
    s.halted = true;
    s.result = true;
  }
  return s;
}

Turn IterativeProtocol::turn(const Bipartition& partition, const Transcript& transcript) const {
  const std::size_t t = transcript.size();
  if (t < shape().k * symbol_bits_) {
    return partition.y_owner(t / symbol_bits_) == Party::Alice ? Turn::Alice : Turn::Bob;
  }
  const State s = decode(transcript);
  if (s.halted) return Turn::Halt;
  return s.bits_into_round < index_bits_ ? Turn::Alice : Turn::Bob;
}

bool IterativeProtocol::next_bit(const PartyView& view, const Transcript& transcript) const {
  const std::size_t t = transcript.size();
  const std::size_t phase1 = shape().k * symbol_bits_;
  if (t < phase1) {
    const std::size_t j = t / symbol_bits_;
    const unsigned bit = symbol_bits_ - 1 - static_cast<unsigned>(t % symbol_bits_);
    return (view.y(j) >> bit) & 1U;
  }
  const State s = decode(transcript);
  const Symbol target = s.y[s.round];
  const std::size_t p = s.frontier.empty() ? 0 : s.frontier.back();
  std::size_t candidate = sentinel();
  for (std::size_t pos = p + 1; pos <= shape().n; ++pos) {
    if (view.owns_x(pos - 1) && view.x(pos - 1) == target) {
      candidate = pos;
      break;
    }
  }
  const std::size_t offset = s.bits_into_round % index_bits_;
  return (candidate >> (index_bits_ - 1 - offset)) & 1U;
}

bool IterativeProtocol::output(const PartyView&, const Transcript& transcript) const {
  return decode(transcript).result;
}

// ---------------------------------------------------------------------------

CostBound cost_bound(std::string_view protocol, std::size_t n, std::size_t k, Symbol m) {
  const unsigned w = Alphabet(m).symbol_bits();
  if (protocol == "trivial") return {"trivial", n, k, m, k * w + 1};
  if (protocol == "iterative") return {"iterative", n, k, m, k * w + 2 * k * ceil_log2(n + 2)};
  throw FormatError("unknown protocol '" + std::string(protocol) + "' (expected trivial or iterative)");
}

std::unique_ptr<Protocol> make_protocol(std::string_view name, const ProblemShape& shape,
                                        bool contiguous) {
  if (name == "trivial") return std::make_unique<TrivialProtocol>(shape, contiguous);
  if (contiguous) throw FormatError("--contiguous is only available for the trivial protocol");
  if (name == "iterative") return std::make_unique<IterativeProtocol>(shape);
  throw FormatError("unknown protocol '" + std::string(name) + "' (expected trivial or iterative)");
}

}  // namespace ssd
