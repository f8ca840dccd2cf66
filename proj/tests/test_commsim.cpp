#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ssd/commsim.hpp"
#include "ssd/errors.hpp"
#include "ssd/protocols.hpp"

using namespace ssd;

namespace {

// Alice talks forever.
class Chatty final : public Protocol {
 public:
  using Protocol::Protocol;
  std::string_view name() const noexcept override { return "chatty"; }
  bool supports(const Bipartition&) const override { return true; }
  Turn turn(const Bipartition&, const Transcript&) const override { return Turn::Alice; }
  bool next_bit(const PartyView&, const Transcript&) const override { return true; }
  bool output(const PartyView&, const Transcript&) const override { return false; }
};

// Halts at once; each party answers with its own name.
class Disagree final : public Protocol {
 public:
  using Protocol::Protocol;
  std::string_view name() const noexcept override { return "disagree"; }
  bool supports(const Bipartition&) const override { return true; }
  Turn turn(const Bipartition&, const Transcript&) const override { return Turn::Halt; }
  bool next_bit(const PartyView&, const Transcript&) const override { return false; }
  bool output(const PartyView& view, const Transcript&) const override { return view.party() == Party::Bob; }
};

// Alice sends x_1 and both answer with it; wrong as an SSD protocol.
class FirstBit final : public Protocol {
 public:
  using Protocol::Protocol;
  std::string_view name() const noexcept override { return "first-bit"; }
  bool supports(const Bipartition& p) const override { return p.x_owner(0) == Party::Alice; }
  Turn turn(const Bipartition&, const Transcript& t) const override { return t.empty() ? Turn::Alice : Turn::Halt; }
  bool next_bit(const PartyView& view, const Transcript&) const override { return view.x(0) != 0; }
  bool output(const PartyView&, const Transcript& t) const override { return t[0].bit; }
};

ProblemShape binary_shape(std::size_t n, std::size_t k) { return {n, k, Alphabet::binary()}; }

}  // namespace

TEST_CASE("partition specs") {
  const Bipartition p = make_partition("ABAB AB", 4, 2);
  CHECK(p.to_string() == "ABABAB");
  CHECK(p.x_owner(1) == Party::Bob);
  CHECK(p.y_owner(0) == Party::Alice);
  CHECK_FALSE(p.is_natural());
  CHECK(make_partition("natural", 3, 2) == Bipartition::natural(3, 2));
  CHECK(make_partition("AAABB", 3, 2).is_natural());
  CHECK_THROWS_AS(make_partition("AAB", 3, 2), FormatError);
  CHECK_THROWS_AS(make_partition("AAACB", 3, 2), FormatError);
}

TEST_CASE("partition enumeration") {
  const auto all = all_partitions(3, 2);
  CHECK(all.size() == 32);
  CHECK(std::set<Bipartition>(all.begin(), all.end()).size() == 32);
  CHECK(all.front().to_string() == "AAAAA");
  CHECK(all.back().to_string() == "BBBBB");

  const auto r1 = random_partitions(12, 4, 20, 7);
  const auto r2 = random_partitions(12, 4, 20, 7);
  CHECK(r1 == r2);
  CHECK(r1.size() == 20);
  CHECK(r1 != random_partitions(12, 4, 20, 8));
}

TEST_CASE("party views hide the other party's symbols") {
  const ProblemShape shape = binary_shape(3, 2);
  const Bipartition p = make_partition("ABA BA", 3, 2);
  const Sequence x{1, 0, 1};
  const Sequence y{0, 1};
  PartyView alice(Party::Alice, shape, p, x, y);
  PartyView bob(Party::Bob, shape, p, x, y);
  CHECK(alice.x(0) == 1);
  CHECK(alice.y(1) == 1);
  CHECK_THROWS_AS(alice.x(1), std::logic_error);
  CHECK_THROWS_AS(alice.y(0), std::logic_error);
  CHECK(bob.x(1) == 0);
  CHECK(bob.y(0) == 0);
  CHECK_THROWS_AS(bob.x(2), std::logic_error);
}

TEST_CASE("transcript fields read most significant bit first") {
  Transcript t;
  for (bool b : {true, false, true, true}) t.push(Party::Alice, b);
  CHECK(t.read_field(0, 4) == 0b1011);
  CHECK(t.read_field(1, 2) == 0b01);
}

TEST_CASE("runs are deterministic") {
  const ProblemShape shape = binary_shape(6, 3);
  IterativeProtocol proto(shape);
  const Bipartition p = make_partition("ABBABA BAB", 6, 3);
  const Sequence x{1, 0, 1, 0, 1, 0};
  const Sequence y{1, 1, 1};
  const ProtocolResult a = run_deterministic(proto, x, y, p);
  const ProtocolResult b = run_deterministic(proto, x, y, p);
  CHECK(a.transcript == b.transcript);
  CHECK(a.output == b.output);
  CHECK(a.cost == a.transcript.size());
}

TEST_CASE("changing one party's input first shows up in that party's message") {
  const ProblemShape shape = binary_shape(5, 2);
  IterativeProtocol proto(shape);
  std::mt19937_64 rng(99);
  const auto partitions = random_partitions(5, 2, 30, 5);
  for (const Bipartition& p : partitions) {
    for (int trial = 0; trial < 20; ++trial) {
      Sequence x;
      Sequence y;
      for (int i = 0; i < 5; ++i) x.push_back(rng() & 1U);
      for (int j = 0; j < 2; ++j) y.push_back(rng() & 1U);
      const std::size_t pos = rng() % 7;
      Sequence x2 = x;
      Sequence y2 = y;
      if (pos < 5) x2[pos] ^= 1U;
      else y2[pos - 5] ^= 1U;
      const Party changed = p.owner(pos);

      const Transcript t1 = run_deterministic(proto, x, y, p).transcript;
      const Transcript t2 = run_deterministic(proto, x2, y2, p).transcript;
      const std::size_t common = std::min(t1.size(), t2.size());
      for (std::size_t i = 0; i < common; ++i) {
        if (t1[i] == t2[i]) continue;
        CHECK(t1[i].sender == changed);
        break;
      }
    }
  }
}

TEST_CASE("runner errors") {
  const ProblemShape shape = binary_shape(3, 2);
  const Bipartition nat = Bipartition::natural(3, 2);
  const Sequence x{0, 1, 0};
  const Sequence y{0, 0};
  CHECK_THROWS_AS(run_deterministic(Chatty(shape), x, y, nat), RunawayProtocol);
  CHECK_THROWS_AS(run_deterministic(Chatty(shape), x, y, nat, RunOptions{5}), RunawayProtocol);
  CHECK_THROWS_AS(run_deterministic(Disagree(shape), x, y, nat), SoundnessError);
  CHECK_THROWS_AS(run_deterministic(TrivialProtocol(shape), x, y, make_partition("ABAAB", 3, 2)),
                  UnsupportedPartition);
  CHECK_THROWS_AS(run_deterministic(TrivialProtocol(shape), Sequence{0, 1}, y, nat), FormatError);
  CHECK_THROWS_AS(run_deterministic(TrivialProtocol(shape), Sequence{0, 2, 0}, y, nat), FormatError);
  CHECK(default_message_budget(shape) > 0);
}

TEST_CASE("sweep reports mismatches of a wrong protocol") {
  const ProblemShape shape = binary_shape(3, 1);
  FirstBit proto(shape);
  const std::vector<Bipartition> parts{Bipartition::natural(3, 1)};
  const SweepReport report = verify_protocol_exhaustive(proto, parts);
  CHECK(report.runs == 16);
  CHECK_FALSE(report.passed());
  for (const SweepMismatch& mm : report.mismatches) {
    CHECK(mm.expected == is_subsequence(mm.x, mm.y));
    REQUIRE(mm.got.has_value());
    CHECK(*mm.got != mm.expected);
  }
  CHECK(std::is_sorted(report.mismatches.begin(), report.mismatches.end(),
                       [](const SweepMismatch& a, const SweepMismatch& b) {
                         return std::tie(a.x, a.y) < std::tie(b.x, b.y);
                       }));
}

TEST_CASE("sweep records thrown errors as mismatches") {
  const ProblemShape shape = binary_shape(2, 1);
  Chatty proto(shape);
  const std::vector<Bipartition> parts{Bipartition::natural(2, 1)};
  const SweepReport report = verify_protocol_exhaustive(proto, parts);
  CHECK(report.mismatches.size() == 8);
  CHECK_FALSE(report.mismatches.front().got.has_value());
  CHECK_FALSE(report.mismatches.front().error.empty());
}

TEST_CASE("sweep cost extremes cover every individual run and ignore worker count") {
  const ProblemShape shape = binary_shape(4, 2);
  IterativeProtocol proto(shape);
  const auto parts = all_partitions(4, 2);
  SweepOptions one;
  SweepOptions three;
  three.workers = 3;
  const SweepReport a = verify_protocol_exhaustive(proto, parts, one);
  const SweepReport b = verify_protocol_exhaustive(proto, parts, three);
  CHECK(a.passed());
  CHECK(a.runs == 64 * 64);
  CHECK(a.max_cost == b.max_cost);
  CHECK(a.min_cost == b.min_cost);
  for (const Bipartition& p : std::vector<Bipartition>(parts.begin(), parts.begin() + 8)) {
    for (const Sequence& x : LexSequences(4, Alphabet::binary())) {
      for (const Sequence& y : LexSequences(2, Alphabet::binary())) {
        const std::size_t cost = run_deterministic(proto, x, y, p).cost;
        CHECK(cost <= a.max_cost);
        CHECK(cost >= a.min_cost);
      }
    }
  }
}

TEST_CASE("sweep run cap") {
  const ProblemShape shape = binary_shape(4, 2);
  IterativeProtocol proto(shape);
  const auto parts = all_partitions(4, 2);
  SweepOptions opts;
  opts.max_runs = 100;
  CHECK_THROWS_AS(verify_protocol_exhaustive(proto, parts, opts), BudgetExceeded);
}
