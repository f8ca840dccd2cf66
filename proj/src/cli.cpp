#include "ssd/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssd/commsim.hpp"
#include "ssd/errors.hpp"
#include "ssd/protocols.hpp"
#include "ssd/reductions.hpp"
#include "ssd/report.hpp"
#include "ssd/specmat.hpp"
#include "ssd/vclab.hpp"

namespace ssd {

namespace {

constexpr std::size_t kMaxPrintedMismatches = 10;

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw FormatError(std::string(name) + " must be a positive integer");
  return v;
}

struct RunConfig {
  std::string format = "text";
  unsigned workers = 1;
  bool allow_large_alphabet = false;

  bool structured() const { return format == "structured"; }
};

/// Writes a record in structured mode and a human line in text mode.
class Output {
 public:
  Output(std::ostream& out, const RunConfig& config) : out_(out), structured_(config.structured()) {}

  void emit(const Record& record, const std::string& text) {
    if (structured_) {
      out_ << record.to_line() << '\n';
    } else if (!text.empty()) {
      out_ << text << '\n';
    }
  }
  std::ostream& raw() { return out_; }
  bool structured() const { return structured_; }

 private:
  std::ostream& out_;
  bool structured_;
};

std::string join_sequences(const std::vector<Sequence>& seqs, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (i) out.push_back(',');
    out += format_sequence(seqs[i], alphabet);
  }
  return out;
}

// Inputs must use an alphabet smaller than the text length unless overridden.
void check_alphabet_bound(std::size_t n, Symbol m, const RunConfig& config) {
  if (!config.allow_large_alphabet && m >= n) {
    throw FormatError("alphabet max m=" + std::to_string(m) + " must be < n=" + std::to_string(n) +
                      " (pass --allow-large-alphabet to override)");
  }
}

Symbol infer_m(std::optional<Symbol> given, std::initializer_list<const Sequence*> seqs) {
  if (given) return *given;
  Symbol m = 1;
  for (const Sequence* s : seqs) m = std::max(m, s->max_symbol());
  return m;
}

Sequence parse_with(const std::string& text, std::optional<Symbol> m) {
  return m ? parse_sequence(text, Alphabet(*m)) : parse_sequence(text);
}

// --- check ----------------------------------------------------------------

struct CheckArgs {
  std::string x;
  std::string y;
  std::optional<Symbol> m;
  bool contiguous = false;
};

int cmd_check(const CheckArgs& a, const RunConfig& config, Output& out) {
  const Sequence x = parse_with(a.x, a.m);
  const Sequence y = parse_with(a.y, a.m);
  const Symbol m = infer_m(a.m, {&x, &y});
  const Alphabet alphabet(m);
  if (!x.fits(alphabet) || !y.fits(alphabet)) throw FormatError("symbol above m");
  check_alphabet_bound(x.size(), m, config);
  const bool verdict = a.contiguous ? is_substring(x, y) : is_subsequence(x, y);
  Record r("check");
  r.add("x", format_sequence(x, alphabet))
      .add("y", format_sequence(y, alphabet))
      .add("m", m)
      .add("mode", a.contiguous ? "substring" : "subsequence")
      .add("result", verdict);
  out.emit(r, verdict ? "1" : "0");
  return kExitOk;
}

// --- protocol -------------------------------------------------------------

struct ProtocolArgs {
  std::string name;
  std::vector<std::string> args;  // x y [partition words...]
  std::optional<Symbol> m;
  bool contiguous = false;
  bool sweep = false;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string partitions = "natural";  // sweep: natural | all | random | explicit spec
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::optional<std::size_t> message_budget;
};

int cmd_protocol_sweep(const ProtocolArgs& a, const RunConfig& config, Output& out) {
  const Symbol m = a.m.value_or(1);
  const ProblemShape shape{a.n, a.k, Alphabet(m)};
  check_alphabet_bound(a.n, m, config);
  const auto protocol = make_protocol(a.name, shape, a.contiguous);

  std::vector<Bipartition> partitions;
  if (a.partitions == "all") {
    partitions = all_partitions(a.n, a.k);
  } else if (a.partitions == "random") {
    partitions = random_partitions(a.n, a.k, a.count, a.seed);
  } else {
    partitions.push_back(make_partition(a.partitions, a.n, a.k));
  }

  SweepOptions options;
  options.workers = config.workers;
  options.max_runs = env_or("SSD_SWEEP_RUNS", options.max_runs);
  options.run.message_budget = a.message_budget;
  if (a.contiguous) {
    options.oracle = [](const Sequence& x, const Sequence& y) { return is_substring(x, y); };
  }
  const SweepReport report = verify_protocol_exhaustive(*protocol, partitions, options);
  const CostBound bound = cost_bound(a.name, a.n, a.k, m);
  const bool within = report.max_cost <= bound.bits;

  Record r("sweep");
  r.add("protocol", std::string(protocol->name()))
      .add("n", a.n)
      .add("k", a.k)
      .add("m", m)
      .add("partitions", partitions.size())
      .add("runs", report.runs)
      .add("max_cost", report.max_cost)
      .add("min_cost", report.min_cost)
      .add("bound", bound.bits)
      .add("within_bound", within)
      .add("mismatches", report.mismatches.size());
  std::ostringstream text;
  text << protocol->name() << " n=" << a.n << " k=" << a.k << " m=" << m << ": " << report.runs
       << " runs over " << partitions.size() << " partition(s), " << report.mismatches.size()
       << " mismatches, max cost " << report.max_cost << " (bound " << bound.bits << ")";
  out.emit(r, text.str());

  const Alphabet alphabet(m);
  for (std::size_t i = 0; i < report.mismatches.size() && i < kMaxPrintedMismatches; ++i) {
    const SweepMismatch& mm = report.mismatches[i];
    Record w("mismatch");
    w.add("x", format_sequence(mm.x, alphabet))
        .add("y", format_sequence(mm.y, alphabet))
        .add("partition", mm.partition.to_string())
        .add("expected", mm.expected)
        .add("got", mm.got ? std::string(*mm.got ? "1" : "0") : std::string("error"));
    out.emit(w, "  mismatch x=" + format_sequence(mm.x, alphabet) + " y=" +
                    format_sequence(mm.y, alphabet) + " partition=" + mm.partition.to_string() +
                    (mm.error.empty() ? "" : " (" + mm.error + ")"));
  }
  return report.passed() && within ? kExitOk : kExitFailed;
}

int cmd_protocol(const ProtocolArgs& a, const RunConfig& config, Output& out) {
  if (a.sweep) return cmd_protocol_sweep(a, config, out);
  if (a.args.size() < 2) throw FormatError("protocol needs X and Y (or --sweep)");
  const Sequence x = parse_with(a.args[0], a.m);
  const Sequence y = parse_with(a.args[1], a.m);
  const Symbol m = infer_m(a.m, {&x, &y});
  check_alphabet_bound(x.size(), m, config);
  std::string spec;
  for (std::size_t i = 2; i < a.args.size(); ++i) spec += a.args[i];
  if (spec.empty()) spec = "natural";

  const ProblemShape shape{x.size(), y.size(), Alphabet(m)};
  const Bipartition partition = make_partition(spec, shape.n, shape.k);
  const auto protocol = make_protocol(a.name, shape, a.contiguous);
  RunOptions options;
  options.message_budget = a.message_budget;
  if (!options.message_budget) {
    if (const char* env = std::getenv("SSD_MESSAGE_BUDGET"); env && *env) {
      options.message_budget = env_or("SSD_MESSAGE_BUDGET", 1);
    }
  }
  const ProtocolResult result = run_deterministic(*protocol, x, y, partition, options);

  std::size_t index = 0;
  for (const Message& msg : result.transcript) {
    Record r("msg");
    r.add("index", index++).add("sender", std::string(1, party_letter(msg.sender))).add("bit", msg.bit);
    out.emit(r, std::string(1, party_letter(msg.sender)) + " " + (msg.bit ? "1" : "0"));
  }
  const CostBound bound = cost_bound(a.name, shape.n, shape.k, m);
  Record summary("result");
  summary.add("protocol", std::string(protocol->name()))
      .add("partition", partition.to_string())
      .add("output", result.output)
      .add("cost", result.cost)
      .add("bound", bound.bits);
  out.emit(summary, "output " + std::string(result.output ? "1" : "0") + " cost " +
                        std::to_string(result.cost) + " (bound " + std::to_string(bound.bits) + ")");
  return kExitOk;
}

// --- reductions -----------------------------------------------------------

struct ReduceArgs {
  std::string kind;
  std::vector<std::string> args;
  std::string run;  // optional protocol to run on the output
};

void emit_reduction(const ReductionOutput& r, const std::string& kind, bool answer,
                    const std::string& run, Output& out) {
  const bool ssd = is_subsequence(r.x, r.y);
  Record rec("reduction");
  rec.add("kind", kind)
      .add("x", format_sequence(r.x, Alphabet::binary()))
      .add("y", format_sequence(r.y, Alphabet::binary()))
      .add("n", r.n)
      .add("k", r.k)
      .add("partition", r.partition.to_string())
      .add("answer", answer)
      .add("ssd", ssd);
  out.emit(rec, "x'=" + format_sequence(r.x, Alphabet::binary()) + " y'=" +
                    format_sequence(r.y, Alphabet::binary()) + "\npartition " + r.partition.to_string() +
                    "\n" + kind + " answer " + (answer ? "1" : "0") + ", SSD " + (ssd ? "1" : "0"));
  if (!run.empty()) {
    const auto protocol = make_protocol(run, ProblemShape{r.n, r.k, Alphabet::binary()});
    const ProtocolResult result = run_deterministic(*protocol, r.x, r.y, r.partition);
    Record pr("result");
    pr.add("protocol", run).add("output", result.output).add("cost", result.cost);
    out.emit(pr, run + " protocol: output " + (result.output ? "1" : "0") + " cost " +
                     std::to_string(result.cost));
  }
}

int cmd_reduce(const ReduceArgs& a, const RunConfig&, Output& out) {
  if (a.kind == "ind") {
    if (a.args.size() != 2) throw FormatError("reduce ind needs X I");
    const Sequence x = parse_sequence(a.args[0], Alphabet::binary());
    std::size_t i = 0;
    try {
      i = std::stoul(a.args[1]);
    } catch (const std::exception&) {
      throw FormatError("index '" + a.args[1] + "' is not a number");
    }
    const IndInstance inst{x, i};
    emit_reduction(ind_to_ssd(inst), "ind", inst.answer(), a.run, out);
    return kExitOk;
  }
  if (a.kind == "disj") {
    if (a.args.size() != 2) throw FormatError("reduce disj needs A B");
    const Sequence sa = parse_sequence(a.args[0], Alphabet::binary());
    const Sequence sb = parse_sequence(a.args[1], Alphabet::binary());
    const DisjInstance inst{sa, sb, sa.weight()};
    emit_reduction(disj_to_ssd(inst), "disj", inst.answer(), a.run, out);
    return kExitOk;
  }
  throw FormatError("unknown reduction '" + a.kind + "' (expected ind or disj)");
}

struct VerifyReductionArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t k = 0;
};

int cmd_verify_reduction(const VerifyReductionArgs& a, const RunConfig&, Output& out) {
  ReductionReport report;
  if (a.kind == "ind") {
    report = verify_ind_reduction(a.k);
  } else if (a.kind == "disj") {
    report = verify_disj_reduction(a.n, a.k);
  } else {
    throw FormatError("unknown reduction '" + a.kind + "' (expected ind or disj)");
  }
  Record r("report");
  r.add("kind", report.kind);
  if (a.kind == "disj") r.add("source_n", a.n);
  r.add("source_k", a.k)
      .add("target_n", report.n)
      .add("target_k", report.k)
      .add("cases", report.cases)
      .add("passed", report.cases - report.mismatches)
      .add("mismatches", report.mismatches);
  out.emit(r, a.kind + ": " + std::to_string(report.cases - report.mismatches) + "/" +
                  std::to_string(report.cases) + " pass");
  for (const ReductionWitness& w : report.witnesses) {
    Record wr("witness");
    std::string instance = w.instance;
    for (char& c : instance)
      if (c == ' ') c = ',';
    wr.add("instance", instance)
        .add("x", format_sequence(w.x, Alphabet::binary()))
        .add("y", format_sequence(w.y, Alphabet::binary()))
        .add("expected", w.expected)
        .add("got", w.got);
    out.emit(wr, "  mismatch " + w.instance);
  }
  return report.passed() ? kExitOk : kExitFailed;
}

// --- matrix ---------------------------------------------------------------

struct MatrixArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  Symbol m = 1;
  bool rank = false;
  bool bounds = false;
  bool dump = false;
  bool witness = false;
};

std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

int cmd_matrix(MatrixArgs a, const RunConfig& config, Output& out) {
  if (a.k > a.n) throw FormatError("matrix needs k <= n");
  check_alphabet_bound(a.n, a.m, config);
  if (!a.rank && !a.bounds && !a.witness) a.dump = true;
  MatrixBudget budget;
  budget.max_entries = env_or("SSD_MATRIX_BUDGET", budget.max_entries);
  budget.max_rank_entries = env_or("SSD_RANK_BUDGET", budget.max_rank_entries);

  int status = kExitOk;
  if (a.dump || a.rank) {
    const CommMatrix matrix = build_comm_matrix(a.n, a.k, a.m, budget, config.workers);
    if (a.dump) {
      if (out.structured()) {
        Record h("matrix");
        h.add("n", a.n).add("k", a.k).add("m", a.m).add("rows", matrix.rows()).add("cols", matrix.cols());
        out.emit(h, "");
        for (std::size_t r = 0; r < matrix.rows(); ++r) {
          Record row("row");
          row.add("index", r).add("bits", format_sequence(matrix.entries.row(r), Alphabet::binary()));
          out.emit(row, "");
        }
      } else {
        write_matrix(out.raw(), matrix);
      }
    }
    if (a.rank) {
      const std::size_t rank = exact_rank(matrix, budget);
      const std::uint64_t expected = sequence_count(a.k, Alphabet(a.m), EnumerationBudget{62.0});
      Record r("rank");
      r.add("n", a.n).add("k", a.k).add("m", a.m).add("rank", rank).add("expected", expected)
          .add("match", rank == expected);
      out.emit(r, "rank " + std::to_string(rank));
      if (rank != expected) status = kExitFailed;
    }
  }
  if (a.witness) {
    const BitMatrix block = leading_triangular_witness(a.n, a.k, a.m, budget);
    Record r("witness");
    r.add("n", a.n).add("k", a.k).add("m", a.m).add("size", block.rows()).add("lower_triangular", true);
    out.emit(r, "triangular witness " + std::to_string(block.rows()) + "x" + std::to_string(block.cols()) +
                    ": lower triangular, unit diagonal");
  }
  if (a.bounds) {
    const BoundsReport b = bounds_report(a.n, a.k, a.m);
    Record r("bounds");
    r.add("n", b.n)
        .add("k", b.k)
        .add("m", b.m)
        .add("logrank_lb", b.logrank_lb_exact)
        .add_fixed("logrank_lb_value", b.logrank_lb, 4)
        .add("trivial_ub", b.trivial_ub)
        .add("iterative_ub", b.iterative_ub)
        .add("disj_binomial", b.binomial.get_str())
        .add("disj_det_lb", "log2(" + b.binomial.get_str() + ")")
        .add_fixed("disj_det_lb_value", b.disj_det_lb, 4)
        .add("disj_rand_lb", "Omega(" + std::to_string(b.disj_rand_lb) + ")")
        .add("disj_regime", b.disj_in_regime ? "valid" : "out-of-regime")
        .add("binary", b.binary);
    std::ostringstream text;
    text << "logrank_lb " << b.logrank_lb_exact << " (" << fixed(b.logrank_lb, 4) << ")\n"
         << "trivial_ub " << b.trivial_ub << "\n"
         << "iterative_ub " << b.iterative_ub << "\n"
         << "disj_det_lb log2(" << b.binomial.get_str() << ") = " << fixed(b.disj_det_lb, 4)
         << (b.disj_in_regime ? "" : " [out-of-regime: needs k <= n/2]")
         << (b.binary ? "" : " [proved for binary]") << "\n"
         << "disj_rand_lb Omega(" << b.disj_rand_lb << ")"
         << (b.disj_in_regime ? "" : " [out-of-regime: needs k <= n/2]")
         << (b.binary ? "" : " [proved for binary]");
    out.emit(r, text.str());
  }
  return status;
}

// --- vcdim ----------------------------------------------------------------

struct VcArgs {
  std::string mode;
  std::size_t k = 0;
  std::size_t n = 0;
  std::string set_file;
  std::optional<std::uint64_t> max_nodes;
};

// Character j is 1 iff the j-th string of the set is in the subset.
std::string subset_string(std::uint64_t mask, std::size_t size) {
  std::string s(size, '0');
  for (std::size_t j = 0; j < size; ++j)
    if ((mask >> j) & 1U) s[j] = '1';
  return s;
}

void emit_realizers(const std::vector<Sequence>& realizers, std::size_t size, Output& out) {
  for (std::size_t mask = 0; mask < realizers.size(); ++mask) {
    Record r("realizer");
    r.add("subset", subset_string(mask, size))
        .add("pattern", format_sequence(realizers[mask], Alphabet::binary()));
    out.emit(r, "");
  }
}

int cmd_vcdim(const VcArgs& a, const RunConfig& config, Output& out) {
  const Alphabet bin = Alphabet::binary();
  if (a.mode == "search") {
    SearchBudget budget;
    budget.max_nodes = a.max_nodes.value_or(env_or("SSD_SEARCH_NODES", budget.max_nodes));
    const ShatterReport report = max_shattered(a.k, a.n, budget, config.workers);
    Record r("shatter");
    r.add("k", report.k)
        .add("n", report.n)
        .add("max", report.max_size)
        .add("exhaustive", report.exhaustive)
        .add("nodes", report.nodes)
        .add("distinct_signatures", report.distinct_signatures)
        .add("witness", join_sequences(report.witness, bin));
    out.emit(r, "k=" + std::to_string(report.k) + " n=" + std::to_string(report.n) + ": max " +
                    std::to_string(report.max_size) +
                    (report.exhaustive ? " (exhaustive)" : " (budget-truncated, lower bound only)") +
                    "\nwitness " + join_sequences(report.witness, bin));
    emit_realizers(report.realizers, report.witness.size(), out);
    return kExitOk;
  }
  if (a.mode == "construct") {
    const ShatteredConstruction c = construct_shattered(a.k);
    const VcBounds bounds = vc_bounds(a.k);
    Record r("construction");
    r.add("k", c.k)
        .add("d", c.d)
        .add("size", c.strings.size())
        .add("shattered", c.verdict.shattered)
        .add("strings", join_sequences(c.strings, bin));
    std::vector<Sequence> patterns;
    for (const auto& h : c.patterns) patterns.push_back(h.pattern);
    r.add("patterns", join_sequences(patterns, bin))
        .add("lower", bounds.lower)
        .add("upper", bounds.upper)
        .add("lower_with_longer_patterns", bounds.lower_with_longer_patterns);
    out.emit(r, std::to_string(c.strings.size()) + " strings, shattering " +
                    (c.verdict.shattered ? "verified" : "FAILED") + "\nstrings " +
                    join_sequences(c.strings, bin) + "\npatterns " + join_sequences(patterns, bin));
    if (c.verdict.shattered) emit_realizers(c.verdict.realizers, c.strings.size(), out);
    return c.verdict.shattered ? kExitOk : kExitFailed;
  }
  if (a.mode == "verify") {
    if (a.set_file.empty()) throw FormatError("vcdim verify needs --set FILE");
    std::ifstream in(a.set_file);
    if (!in) throw FormatError("cannot open '" + a.set_file + "'");
    const std::vector<Sequence> strings = read_string_set(in);
    const ShatterVerdict v = is_shattered(strings, hypothesis_class(a.k));
    Record r("verify");
    r.add("k", a.k)
        .add("n", strings.empty() ? std::size_t{0} : strings.front().size())
        .add("size", strings.size())
        .add("shattered", v.shattered);
    if (v.first_unrealized) {
      r.add("unrealized", subset_string(*v.first_unrealized, strings.size()));
    }
    out.emit(r, v.shattered ? "shattered" : "not shattered");
    if (v.shattered) emit_realizers(v.realizers, strings.size(), out);
    return v.shattered ? kExitOk : kExitFailed;
  }
  if (a.mode == "bounds") {
    const VcBounds b = vc_bounds(a.k);
    Record r("vcbounds");
    r.add("k", a.k).add("lower", b.lower).add("upper", b.upper)
        .add("lower_with_longer_patterns", b.lower_with_longer_patterns);
    out.emit(r, std::to_string(b.lower) + " <= VCdim <= " + std::to_string(b.upper));
    return kExitOk;
  }
  throw FormatError("unknown vcdim mode '" + a.mode + "' (expected search, construct, verify or bounds)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subsequence detection: protocols, reductions, rank and VC-dimension checks", "ssdcc"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--workers", config.workers, "Threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large-alphabet", config.allow_large_alphabet, "Permit m >= n");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Is Y a subsequence of X?");
  check->add_option("x", check_args.x)->required();
  check->add_option("y", check_args.y)->required();
  check->add_option("--m", check_args.m, "Alphabet max symbol (default: inferred)");
  check->add_flag("--contiguous", check_args.contiguous, "Test substring containment instead");

  ProtocolArgs proto_args;
  auto* proto = app.add_subcommand("protocol", "Run a protocol on one input, or sweep all inputs");
  proto->add_option("name", proto_args.name)->required()->check(CLI::IsMember({"trivial", "iterative"}));
  proto->add_option("args", proto_args.args, "X Y [PARTITION]");
  proto->add_option("--m", proto_args.m, "Alphabet max symbol");
  proto->add_flag("--contiguous", proto_args.contiguous, "Trivial protocol decides substring containment");
  proto->add_flag("--sweep", proto_args.sweep, "Run every input pair and compare with the oracle");
  proto->add_option("--n", proto_args.n, "Sweep: length of x");
  proto->add_option("--k", proto_args.k, "Sweep: length of y");
  proto->add_option("--partitions", proto_args.partitions, "Sweep: natural | all | random | A/B spec")
      ->capture_default_str();
  proto->add_option("--count", proto_args.count, "Sweep: number of random partitions")->capture_default_str();
  proto->add_option("--seed", proto_args.seed, "Sweep: seed for random partitions")->capture_default_str();
  proto->add_option("--message-budget", proto_args.message_budget, "Runaway guard (messages)");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Build the SSD instance for an IND or DISJ instance");
  reduce->add_option("kind", reduce_args.kind)->required()->check(CLI::IsMember({"ind", "disj"}));
  reduce->add_option("args", reduce_args.args, "ind: X I | disj: A B")->required();
  reduce->add_option("--run", reduce_args.run, "Also run a protocol on the output")
      ->check(CLI::IsMember({"trivial", "iterative"}));

  VerifyReductionArgs vr_args;
  auto* vr = app.add_subcommand("verify-reduction", "Exhaustively check a reduction");
  vr->add_option("kind", vr_args.kind)->required()->check(CLI::IsMember({"ind", "disj"}));
  vr->add_option("--n", vr_args.n, "disj: universe size");
  vr->add_option("--k", vr_args.k, "ind: string length; disj: set size")->required();

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "Communication matrix, rank and bounds");
  matrix->add_option("--n", matrix_args.n)->required();
  matrix->add_option("--k", matrix_args.k)->required();
  matrix->add_option("--m", matrix_args.m)->capture_default_str();
  matrix->add_flag("--rank", matrix_args.rank, "Exact rank");
  matrix->add_flag("--bounds", matrix_args.bounds, "Bounds report");
  matrix->add_flag("--dump", matrix_args.dump, "Print the matrix (default when nothing else is asked)");
  matrix->add_flag("--witness", matrix_args.witness, "Check the leading triangular block");

  VcArgs vc_args;
  auto* vc = app.add_subcommand("vcdim", "VC dimension of subsequence classifiers");
  vc->add_option("mode", vc_args.mode)->required()->check(CLI::IsMember({"search", "construct", "verify", "bounds"}));
  vc->add_option("--k", vc_args.k)->required();
  vc->add_option("--n", vc_args.n);
  vc->add_option("--set", vc_args.set_file, "File with one binary string per line");
  vc->add_option("--max-nodes", vc_args.max_nodes, "Search node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output output(out, config);
  try {
    if (*check) return cmd_check(check_args, config, output);
    if (*proto) return cmd_protocol(proto_args, config, output);
    if (*reduce) return cmd_reduce(reduce_args, config, output);
    if (*vr) return cmd_verify_reduction(vr_args, config, output);
    if (*matrix) return cmd_matrix(matrix_args, config, output);
    if (*vc) return cmd_vcdim(vc_args, config, output);
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedPartition& e) {
    err << "error: unsupported partition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ProtocolError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const VerificationFailure& e) {
    err << "error: verification failed: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace ssd
