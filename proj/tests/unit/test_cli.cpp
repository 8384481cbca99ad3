#include "support.hpp"

#include "lielimits/report.hpp"

#include <doctest.h>

using namespace lielimits;
using testsupport::fixture;
using testsupport::run_cli;

namespace {

const std::string kOut = "cli_capture.txt";

std::string fx(const char* name) { return fixture(name); }

io::Json json_of(const testsupport::CliRun& r) { return io::parse_json_text(r.out, "cli output"); }

}  // namespace

TEST_CASE("index subcommand") {
    const auto a = run_cli("--format json index A1 2", kOut);
    REQUIRE(a.exit_code == 0);
    CHECK(json_of(a).at("index") == 4);
    CHECK(json_of(run_cli("--format json index A2 1,1", kOut)).at("index") == 6);
    const auto e = run_cli("index --embedding " + fx("std_a5_a9.json"), kOut);
    CHECK(e.exit_code == 0);
    CHECK(e.out.find("Standard") != std::string::npos);
    CHECK(run_cli("index A2 1,x", kOut).exit_code == 2);
    CHECK(run_cli("index D3 1,0,0", kOut).exit_code == 1);
    CHECK(run_cli("frobnicate", kOut).exit_code == 2);
}

TEST_CASE("embed subcommand") {
    const auto c = run_cli("--format json embed " + fx("chain_a1.json"), kOut);
    REQUIRE(c.exit_code == 0);
    const io::Json j = json_of(c);
    CHECK(j.at("sum_side") == j.at("direct_side"));
    CHECK(j.at("sum_side") == 5);
    const auto d = run_cli("embed " + fx("diagonal_2w.json"), kOut);
    CHECK(d.out.find("Diagonal(2,0,0)") != std::string::npos);
}

TEST_CASE("limit subcommand and exit codes") {
    const auto s1 = run_cli("--format json limit " + fx("S1.json"), kOut);
    REQUIRE(s1.exit_code == 0);
    const auto r = std::get<report::LimitReport>(report::from_json(json_of(s1)));
    REQUIRE(r.constituents.size() == 1);
    CHECK(r.constituents[0].kind == ConstituentKind::SlInf);

    const auto s3 = run_cli("limit " + fx("S3.json"), kOut);
    CHECK(s3.exit_code == 0);
    CHECK(s3.out.find("A1") != std::string::npos);

    const auto short_prefix = run_cli("limit " + fx("tensor_merge.json"), kOut);
    CHECK(short_prefix.exit_code == 3);
    CHECK_FALSE(short_prefix.out.empty());
    CHECK(run_cli("limit " + fx("bad_alpha.json"), kOut).exit_code == 1);
    CHECK(run_cli("limit " + fx("nowhere.json"), kOut).exit_code == 2);
    CHECK(run_cli("limit --levels 2 " + fx("S1.json"), kOut).exit_code == 0);
}

TEST_CASE("socle, invariants and refine subcommands") {
    const auto s = run_cli("--format json socle " + fx("example4.json"), kOut);
    REQUIRE(s.exit_code == 0);
    const auto doc = std::get<report::SocleDocument>(report::from_json(json_of(s)));
    REQUIRE(doc.socle.infinite.size() == 1);
    CHECK(doc.socle.infinite[0].mult == Multiplicities{1, 0});
    CHECK(doc.socle.infinite[0].trivial.natural.value == 1);
    CHECK(doc.socle.infinite[0].trivial.conatural.value == 0);

    CHECK(run_cli("invariants --subset 1 " + fx("example4.json"), kOut).exit_code == 0);
    CHECK(run_cli("invariants --subset 0 " + fx("example4.json"), kOut).exit_code == 2);
    CHECK(run_cli("refine " + fx("general_edge.json"), kOut).exit_code == 0);
    CHECK(run_cli("refine " + fx("S2.json"), kOut).exit_code == 1);
    CHECK(run_cli("refine --constituent 2 " + fx("S2.json"), kOut).exit_code == 0);
}

TEST_CASE("maximal subcommand") {
    const auto ib = run_cli("--format json maximal gl " + fx("codim1_kernel.json"), kOut);
    REQUIRE(ib.exit_code == 0);
    CHECK(json_of(ib).at("verdict").at("tag") == "ib");
    const auto nm = run_cli("--format json maximal so " + fx("dim2_nondeg.json"), kOut);
    CHECK(json_of(nm).at("verdict").at("outcome") == "NotMaximal");
    CHECK(json_of(run_cli("--format json maximal gl --derived", kOut)).at("verdict").at("tag") == "ia");
    CHECK(json_of(run_cli("--format json maximal sl --form symplectic", kOut)).at("verdict").at("tag") == "iia");
    CHECK(run_cli("maximal gl", kOut).exit_code == 2);
    CHECK(run_cli("maximal so --derived", kOut).exit_code == 1);
    const auto cmp = run_cli("--format json maximal gl " + fx("codim1_kernel.json") + " --compare " + fx("codim1_kernel_shifted.json"), kOut);
    CHECK(json_of(cmp).at("uniqueness").at("same_invariant") == false);
}

TEST_CASE("oracle subcommand and seeded sampling") {
    const auto t = run_cli("--format json oracle A2 1,0 --tensor 0,1", kOut);
    REQUIRE(t.exit_code == 0);
    const auto r = std::get<report::OracleReport>(report::from_json(json_of(t)));
    REQUIRE(r.tensor);
    CHECK(r.tensor->total_dimension() == 9);
    const std::string cmd = "--format json --seed 42 oracle A2,B2,C3 --sample 10 --max-dim 300";
    const auto a = run_cli(cmd, kOut);
    const auto b = run_cli(cmd, kOut);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(run_cli("oracle A2 --sample 3 --seed 42", kOut).exit_code == 0);
}
