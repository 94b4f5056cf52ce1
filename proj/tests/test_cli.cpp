#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclocodes/cli.hpp"

using namespace cyclo;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST(Cli, ElementsOnlyRoundTrips) {
    const auto r = run({"construct", "sqrt", "--m", "5", "--elements-only"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1\n2\n3\n4\n5\n6\n8\n9\n10\n12\n16\n17\n18\n20\n24\n");
    std::istringstream in(r.out);
    const auto parsed = make_defining_set(5, parse_residue_list(in));
    EXPECT_EQ(parsed.elements, build_sqrt_complement(5).set.elements);
}

TEST(Cli, ParseResidueList) {
    std::istringstream in("1, 2 4\n# comment\n8 # trailing\n");
    EXPECT_EQ(parse_residue_list(in), (std::vector<Residue>{1, 2, 4, 8}));
    std::istringstream bad("1 x\n");
    EXPECT_THROW(parse_residue_list(bad), Error);
    std::istringstream neg("-1\n");
    EXPECT_THROW(parse_residue_list(neg), Error);
}

TEST(Cli, AnalyzeEmptyInput) {
    const auto p = temp_file("cyclocodes_empty.txt", "# nothing\n");
    const auto r = run({"analyze", "--input", p.string(), "--m", "4", "--json", "--engine", "search", "--iters", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["code"]["dimension"], 15);
    EXPECT_EQ(j["distance"]["best_weight_found"], 1);
    const auto ex = run({"analyze", "--input", p.string(), "--m", "4", "--json"});
    EXPECT_EQ(nlohmann::json::parse(ex.out)["distance"]["exact_distance"], 1);
}

TEST(Cli, AnalyzeRejectsBadInput) {
    const auto p = temp_file("cyclocodes_open.txt", "1 2\n");
    EXPECT_EQ(run({"analyze", "--input", p.string(), "--m", "4"}).code, 1);
    EXPECT_EQ(run({"analyze", "--input", "/nonexistent/file", "--m", "4"}).code, 1);
    EXPECT_EQ(run({"analyze"}).code, 1);
}

TEST(Cli, VerifyPaperExampleOne) {
    const auto r = run({"verify-paper", "--fixture", "example1"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS example1-z1  [15,9,3] dual [15,6,6]"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("PASS example1-z2  [15,7,5] dual [15,8,4]"), std::string::npos) << r.out;
}

TEST(Cli, VerifyPaperTableThreeP3) {
    const auto r = run({"verify-paper", "--fixture", "table3-p3"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("bch 12/7"), std::string::npos) << r.out;
}

TEST(Cli, VerifyPaperUnknownFixtureWarns) {
    const auto r = run({"verify-paper", "--fixture", "no-such-fixture"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("no fixtures selected"), std::string::npos);
}

TEST(Cli, VerifyPaperReportsMismatch) {
    const auto r = run({"verify-paper", "--fixture", "weight-class-m9-i0", "--json"});
    EXPECT_EQ(r.code, 2);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j[0]["passed"].get<bool>());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"construct", "sqrt", "--m", "5", "--bogus"}).code, 64);
    EXPECT_EQ(run({}).code, 64);
    EXPECT_EQ(run({"construct", "sqrt", "--m", "6"}).code, 1);
    EXPECT_EQ(run({"construct", "weight-class", "--m", "9", "--i", "0"}).code, 2);
    EXPECT_EQ(run({"construct", "weight-class", "--m", "11", "--i", "0"}).code, 0);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, AnalyzeJsonRoundTrip) {
    for (bool hex : {false, true}) {
        std::vector<std::string> args{"analyze", "even-m", "--m", "4", "--which", "C2", "--json", "--audit",
                                      "--dual-distance"};
        if (hex) args.push_back("--hex");
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << r.err;
        const auto j = nlohmann::json::parse(r.out);
        EXPECT_EQ(j["schema"], 1);
        const auto report = report_from_json(j);
        EXPECT_EQ(to_json(report, hex), j);
        EXPECT_EQ(*report.distance->exact_distance, 5U);
        EXPECT_EQ(*report.dual_distance->exact_distance, 4U);
        ASSERT_TRUE(report.audit.has_value());
    }
}

TEST(Cli, ReportRoundTripOnFixtures) {
    for (const auto& f : paper_fixtures()) {
        if (f.n > 1023) continue;
        const auto built = build(f.request);
        const auto code = assemble(built.set);
        Report rep;
        rep.code = make_code_report(code, dual(code));
        rep.audit = built.audit;
        if (code.dimension <= 16) rep.distance = exact_min_distance(code);
        for (bool hex : {false, true}) {
            const auto back = report_from_json(nlohmann::json::parse(to_json(rep, hex).dump()));
            EXPECT_EQ(back, rep) << f.id;
        }
    }
}

TEST(Cli, CosetsCsv) {
    const auto r = run({"cosets", "--m", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "leader,size,members\n0,1,0\n1,4,1;2;4;8\n3,4,3;6;9;12\n5,2,5;10\n7,4,7;11;13;14\n");
}

TEST(Cli, ExportAndList) {
    const auto list = run({"export", "--list"});
    EXPECT_NE(list.out.find("example2-z1  (slow)"), std::string::npos);
    const auto r = run({"export", "--fixture", "sqrt-m5"});
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1U);
    EXPECT_EQ(j[0]["id"], "sqrt-m5");
}

TEST(Cli, FixtureMatching) {
    EXPECT_TRUE(fixture_matches("example1-z1", "example1"));
    EXPECT_TRUE(fixture_matches("example1-z1", "example*"));
    EXPECT_FALSE(fixture_matches("example10-z1", "example1"));
    EXPECT_TRUE(fixture_matches("weight-class-m9-i0", "weight-class-m9"));
}
