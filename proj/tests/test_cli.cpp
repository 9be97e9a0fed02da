#include <gtest/gtest.h>

#include <sstream>

#include "cli_app.hpp"
#include "comod/comod.hpp"

using namespace comod;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "comod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(COMOD_DATA_DIR) + "/" + rel; }

}  // namespace

TEST(Io, PosetRoundTrip) {
  Poset p = pentagon_poset();
  auto j = io::poset_to_json(p);
  Poset q = io::poset_from_json(j);
  EXPECT_EQ(p, q);
  EXPECT_EQ(q.labels(), p.labels());
  EXPECT_EQ(io::poset_to_json(q), j);
}

TEST(Io, PosetErrors) {
  EXPECT_THROW(io::poset_from_json(io::json::parse(R"({"covers": []})")), BadParams);
  EXPECT_THROW(io::poset_from_json(io::json::parse(R"({"n": 0})")), BadParams);
  EXPECT_THROW(io::poset_from_json(io::json::parse(R"({"n": 2, "covers": [[0]]})")), BadParams);
  EXPECT_THROW(io::poset_from_json(io::json::parse(R"({"n": 2, "labels": ["x"]})")), BadParams);
  EXPECT_THROW(io::read_poset(data("posets/absent.json")), BadParams);
}

TEST(Io, ReadFiles) {
  EXPECT_TRUE(is_isomorphic(io::read_poset(data("posets/n5.json")), pentagon_poset()));
  EXPECT_EQ(io::read_poset(data("posets/chain4.json")).size(), 4u);
  EXPECT_EQ(io::group_from_json(io::read_json_file(data("groups/s3.json"))).order(), 6u);
  EXPECT_EQ(io::group_from_json(io::read_json_file(data("groups/z4_table.json"))).order(), 4u);
  EXPECT_THROW(io::group_from_json(io::json::parse(R"({"gens": 1})")), BadParams);
}

TEST(Io, Dot) {
  auto dot = io::to_dot(chain_poset(2));
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1;"), std::string::npos);
}

TEST(Io, FVector) {
  auto k = order_complex(boolean_lattice(3).poset());
  EXPECT_EQ(io::f_vector(k), (std::vector<std::size_t>{6, 6}));
  auto j = io::complex_to_json(k, true);
  EXPECT_EQ(j["facets"].size(), 6u);
}

TEST(Cli, BuildJson) {
  auto r = run_cli({"build", "partition:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = io::json::parse(r.out);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["decode"].size(), 5u);
  EXPECT_EQ(j["labels"][j["bottom"].get<std::size_t>()], "1|2|3");
  EXPECT_EQ(j["labels"][j["top"].get<std::size_t>()], "123");
}

TEST(Cli, BuildIsDeterministic) {
  for (const std::string fam : {"signedkh:4,3,1", "subgroups:S4", "ordcong:n5", "aff-exists:2,3,1,3"}) {
    auto a = run_cli({"build", fam});
    auto b = run_cli({"build", fam});
    ASSERT_EQ(a.code, 0) << fam << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << fam;
  }
}

TEST(Cli, FamilySizes) {
  auto size_of = [](const std::string& fam) {
    auto r = run_cli({"build", fam});
    EXPECT_EQ(r.code, 0) << fam << ": " << r.err;
    return io::json::parse(r.out)["n"].get<std::size_t>();
  };
  EXPECT_EQ(size_of("boolean:3"), 8u);
  EXPECT_EQ(size_of("chain:4"), 4u);
  EXPECT_EQ(size_of("partition:4"), 15u);
  EXPECT_EQ(size_of("ordcong:n5"), 27u);
  EXPECT_EQ(size_of("ordconv:n5"), 27u);
  EXPECT_EQ(size_of("kequal:4,3"), 6u);
  EXPECT_EQ(size_of("signed:2"), 6u);
  EXPECT_EQ(size_of("signedkh:4,3,1"), 56u);
  EXPECT_EQ(size_of("ngon:5"), 12u);
  EXPECT_EQ(size_of("diamond:3"), 5u);
  EXPECT_EQ(size_of("pentagon"), 5u);
  EXPECT_EQ(size_of("fig1"), 8u);
  EXPECT_EQ(size_of("subgroups:D3"), 6u);
  EXPECT_EQ(size_of("poset:" + data("posets/n5.json")), 5u);
  EXPECT_EQ(size_of("ordcong:" + data("posets/bowtie.json")),
            order_congruence_lattice(io::read_poset(data("posets/bowtie.json"))).lattice.size());
}

TEST(Cli, SeedFamilyFlag) {
  auto a = run_cli({"mobius", "--seed-family", "partition:4"});
  auto b = run_cli({"mobius", "partition:4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_cli({"mobius", "partition:4", "--seed-family", "partition:3"}).code, 2);
}

TEST(Cli, Check) {
  auto r = run_cli({"check", "pentagon"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"({"element":"b","witness":["a","c"]})"), std::string::npos);
  EXPECT_NE(r.out.find("comodernistic: true"), std::string::npos);
  auto g = run_cli({"check", "ngon:4"});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("comodernistic: false"), std::string::npos);
  EXPECT_NE(g.out.find("comodernistic_failure"), std::string::npos);
}

TEST(Cli, Mobius) {
  auto r = run_cli({"mobius", "partition:5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mobius_labeling: 24"), std::string::npos);
  EXPECT_NE(r.out.find("agreement: OK"), std::string::npos);
  auto c = run_cli({"mobius", "ordcong:" + data("posets/chain4.json")});
  EXPECT_NE(c.out.find("mobius_brute: -1"), std::string::npos);
  auto j = run_cli({"mobius", "signedkh:4,3,1", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(io::json::parse(j.out)["mobius_labeling"], -39);
}

TEST(Cli, LabelAndChains) {
  auto r = run_cli({"label", "boolean:2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{} < {1} < {1,2}  [1,2]\n{} < {2} < {1,2}  [2,1] decreasing\n");
  auto c = run_cli({"chains", "partition:4", "--format", "json"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(io::json::parse(c.out).size(), 6u);
  EXPECT_EQ(run_cli({"chains", "partition:4", "--max-chains", "3"}).code, 2);
}

TEST(Cli, ShellVerify) {
  auto r = run_cli({"shell-verify", "fig1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cl_labeling: true"), std::string::npos);
}

TEST(Cli, Group) {
  auto r = run_cli({"group", "D3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mobius: 3"), std::string::npos);
  EXPECT_NE(r.out.find("complement_chains: 3"), std::string::npos);
  auto a5 = run_cli({"group", "A5"});
  EXPECT_EQ(a5.code, 0);
  EXPECT_NE(a5.out.find("solvable: false"), std::string::npos);
  EXPECT_NE(a5.out.find("comodernistic: false"), std::string::npos);
  EXPECT_EQ(run_cli({"group", data("groups/s3.json")}).out, r.out);
  EXPECT_EQ(run_cli({"group", data("groups/a5.json")}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"label", "ngon:4"}).code, 1);
  EXPECT_EQ(run_cli({"build", "bogus"}).code, 2);
  EXPECT_EQ(run_cli({"build"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"build", "partition:9"}).code, 2);
  EXPECT_EQ(run_cli({"build", "partition:6", "--max-elements", "100"}).code, 2);
  EXPECT_EQ(run_cli({"build", "partition:6", "--max-elements", "203"}).code, 0);
  EXPECT_EQ(run_cli({"build", "kequal:4,5"}).code, 2);
  EXPECT_EQ(run_cli({"build", "signedkh:4,2,2"}).code, 2);
  EXPECT_EQ(run_cli({"check", "chain:3", "--format", "dot"}).code, 2);
  EXPECT_EQ(run_cli({"build", "chain:3", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run_cli({"group", "nosuchgroup"}).code, 2);
  EXPECT_EQ(run_cli({"build", "poset:" + data("posets/absent.json")}).code, 2);
  EXPECT_EQ(run_cli({"mobius", "ordcong:" + data("posets/v3.json"), "--jobs", "2"}).code, 0);
}

TEST(Cli, Help) {
  auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mobius"), std::string::npos);
}
