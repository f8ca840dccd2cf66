#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ssd/cli.hpp"
#include "ssd/report.hpp"

using namespace ssd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run ssdcc(std::vector<std::string> args) {
  args.insert(args.begin(), "ssdcc");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Run structured(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "structured"});
  return ssdcc(std::move(args));
}

std::vector<Record> of_type(const std::vector<Record>& recs, const std::string& type) {
  std::vector<Record> out;
  for (const Record& r : recs)
    if (r.type() == type) out.push_back(r);
  return out;
}

// Parses the output, re-serializes it and checks it is unchanged.
std::vector<Record> round_trip(const Run& run) {
  const std::vector<Record> recs = parse_records(run.out);
  std::string again;
  for (const Record& r : recs) again += r.to_line() + "\n";
  CHECK(again == run.out);
  return recs;
}

}  // namespace

TEST_CASE("check") {
  CHECK(ssdcc({"check", "010", "00"}).out == "1\n");
  CHECK(ssdcc({"check", "101010", "111"}).out == "1\n");
  CHECK(ssdcc({"check", "120021", "211", "--m", "2"}).out == "0\n");
  CHECK(ssdcc({"check", "0110", ""}).out == "1\n");
  CHECK(ssdcc({"check", "10010", "11", "--contiguous"}).out == "0\n");
  const Run bad = ssdcc({"check", "01x", "0"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(ssdcc({"check", "012", "0", "--m", "1"}).code == kExitUsage);
  CHECK(ssdcc({"check", "12", "0"}).code == kExitUsage);
  CHECK(ssdcc({"--allow-large-alphabet", "check", "12", "0"}).out == "0\n");
  CHECK(ssdcc({}).code == kExitUsage);
}

TEST_CASE("check structured") {
  const auto recs = round_trip(structured({"check", "120021", "211", "--m", "2"}));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].type() == "check");
  CHECK(recs[0].get("result") == "0");
  CHECK(recs[0].get("m") == "2");
}

TEST_CASE("protocol runs") {
  const Run trivial = ssdcc({"protocol", "trivial", "010", "00", "natural"});
  CHECK(trivial.code == kExitOk);
  CHECK(trivial.out.find("output 1 cost 3") != std::string::npos);

  const Run iter = structured({"protocol", "iterative", "101010", "111", "ABABABAB", "A"});
  CHECK(iter.code == kExitOk);
  const auto recs = round_trip(iter);
  const auto result = of_type(recs, "result");
  REQUIRE(result.size() == 1);
  CHECK(result[0].get("output") == "1");
  CHECK(result[0].get("partition") == "ABABABABA");
  CHECK(of_type(recs, "msg").size() == std::stoul(*result[0].get("cost")));

  const Run bad = ssdcc({"protocol", "trivial", "010", "00", "ABABA"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("unsupported partition") != std::string::npos);

  CHECK(ssdcc({"protocol", "iterative", "010", "00", "ABAB"}).code == kExitUsage);
  CHECK(ssdcc({"protocol", "iterative", "0101", "00", "--message-budget", "2"}).code == kExitFailed);
}

TEST_CASE("protocol sweeps") {
  const Run nat = structured({"protocol", "trivial", "--sweep", "--n", "4", "--k", "2"});
  CHECK(nat.code == kExitOk);
  auto recs = round_trip(nat);
  REQUIRE(of_type(recs, "sweep").size() == 1);
  CHECK(recs[0].get("mismatches") == "0");
  CHECK(recs[0].get("max_cost") == "3");

  const Run all = structured({"protocol", "iterative", "--sweep", "--n", "4", "--k", "2", "--partitions", "all"});
  CHECK(all.code == kExitOk);
  recs = round_trip(all);
  CHECK(recs[0].get("partitions") == "64");
  CHECK(std::stoul(*recs[0].get("max_cost")) <= 14);

  const Run rnd = ssdcc({"protocol", "iterative", "--sweep", "--n", "5", "--k", "3", "--m", "2",
                         "--partitions", "random", "--count", "100", "--workers", "2"});
  CHECK(rnd.code == kExitOk);
  CHECK(rnd.out.find("0 mismatches") != std::string::npos);
}

TEST_CASE("reduce") {
  const Run ind = ssdcc({"reduce", "ind", "101", "2"});
  CHECK(ind.code == kExitOk);
  CHECK(ind.out.find("x'=011001 y'=0011") != std::string::npos);

  const auto recs = round_trip(structured({"reduce", "disj", "110", "011", "--run", "iterative"}));
  const auto red = of_type(recs, "reduction");
  REQUIRE(red.size() == 1);
  CHECK(red[0].get("x") == "100110010");
  CHECK(red[0].get("y") == "10101010");
  CHECK(red[0].get("answer") == "0");
  CHECK(red[0].get("ssd") == "0");
  const auto run = of_type(recs, "result");
  REQUIRE(run.size() == 1);
  CHECK(run[0].get("output") == "0");

  CHECK(ssdcc({"reduce", "disj", "110", "010"}).code == kExitUsage);
}

TEST_CASE("verify-reduction") {
  CHECK(ssdcc({"verify-reduction", "ind", "--k", "8"}).out == "ind: 2048/2048 pass\n");
  CHECK(ssdcc({"verify-reduction", "disj", "--n", "6", "--k", "2"}).out == "disj: 225/225 pass\n");
  const auto recs = round_trip(structured({"verify-reduction", "disj", "--n", "6", "--k", "2"}));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].get("cases") == "225");
  CHECK(recs[0].get("mismatches") == "0");
}

TEST_CASE("matrix") {
  CHECK(ssdcc({"matrix", "--n", "3", "--k", "2", "--rank"}).out == "rank 4\n");

  const auto bounds = round_trip(structured({"matrix", "--n", "10", "--k", "3", "--bounds"}));
  REQUIRE(bounds.size() == 1);
  CHECK(bounds[0].get("logrank_lb") == "3");
  CHECK(bounds[0].get("trivial_ub") == "4");
  CHECK(bounds[0].get("disj_det_lb") == "log2(120)");

  const Run big = ssdcc({"matrix", "--n", "20", "--k", "10"});
  CHECK(big.code == kExitBudget);

  const auto dump = round_trip(structured({"matrix", "--n", "3", "--k", "2"}));
  const auto rows = of_type(dump, "row");
  REQUIRE(rows.size() == 8);
  CHECK(rows[2].get("bits") == "1110");

  const auto rank = round_trip(structured({"matrix", "--n", "4", "--k", "2", "--m", "2", "--rank", "--witness"}));
  CHECK(of_type(rank, "rank")[0].get("rank") == "9");
  CHECK(of_type(rank, "rank")[0].get("match") == "1");
  CHECK(of_type(rank, "witness")[0].get("size") == "9");
}

TEST_CASE("vcdim") {
  const Run search = structured({"vcdim", "search", "--k", "2", "--n", "3"});
  CHECK(search.code == kExitOk);
  const auto recs = round_trip(search);
  const auto shatter = of_type(recs, "shatter");
  REQUIRE(shatter.size() == 1);
  CHECK(shatter[0].get("max") == "2");
  CHECK(shatter[0].get("exhaustive") == "1");
  CHECK(of_type(recs, "realizer").size() == 4);

  const Run construct = ssdcc({"vcdim", "construct", "--k", "5"});
  CHECK(construct.code == kExitOk);
  CHECK(construct.out.find("2 strings") != std::string::npos);
  const auto crecs = round_trip(structured({"vcdim", "construct", "--k", "5"}));
  CHECK(of_type(crecs, "construction")[0].get("strings") == "10100101,10011001");

  const std::string path = "ssdcc_test_set_k5.txt";
  {
    std::ofstream f(path);
    f << "# k=5 table row\n11000101\n01110010\n10011010\n10110011\n";
  }
  const Run verify = structured({"vcdim", "verify", "--k", "5", "--set", path});
  CHECK(verify.code == kExitOk);
  const auto vrecs = round_trip(verify);
  CHECK(of_type(vrecs, "verify")[0].get("shattered") == "1");
  CHECK(of_type(vrecs, "realizer").size() == 16);
  {
    std::ofstream f(path);
    f << "011\n011\n";
  }
  const Run fail = structured({"vcdim", "verify", "--k", "2", "--set", path});
  CHECK(fail.code == kExitFailed);
  CHECK(of_type(parse_records(fail.out), "verify")[0].get("unrealized") == "10");
  std::remove(path.c_str());

  const auto brecs = round_trip(structured({"vcdim", "bounds", "--k", "5"}));
  CHECK(brecs[0].get("lower") == "2");
  CHECK(brecs[0].get("upper") == "5");

  CHECK(ssdcc({"vcdim", "verify", "--k", "2", "--set", "does-not-exist.txt"}).code == kExitUsage);
  const Run cut = structured({"vcdim", "search", "--k", "5", "--n", "8", "--max-nodes", "2"});
  CHECK(cut.code == kExitOk);
  CHECK(of_type(round_trip(cut), "shatter")[0].get("exhaustive") == "0");
}
