#include "cli_app.hpp"

#include <gtest/gtest.h>
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace fs = std::filesystem;
using namespace mixedcolor;

namespace {

const std::string data_dir = MIXEDCOLOR_DATA_DIR;

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "mixedcolor");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string field(const std::string& report, const std::string& key)
{
    std::smatch m;
    std::regex re("(^|\n)" + key + "=([^\n]*)");
    return std::regex_search(report, m, re) ? m[2].str() : std::string();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("mixedcolor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, SolveDecisionExitCodes)
{
    const auto g = data_dir + "/path4.graph";
    auto yes = invoke({"solve", g, "--k", "5"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(field(yes.out, "decision"), "yes");
    auto no = invoke({"solve", g, "--k", "4", "--method", "ndm"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(field(no.out, "decision"), "no");
    EXPECT_EQ(field(no.out, "method"), "ndm");
}

TEST_F(CliTest, ChiWithCertificateVerifies)
{
    const auto g = data_dir + "/path4.graph";
    const auto cert = path("c.cert");
    auto r = invoke({"solve", g, "--method", "twdp", "--td", data_dir + "/path4.td", "--cert", cert});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(field(r.out, "chi"), "5");
    auto v = invoke({"verify", g, cert});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(field(v.out, "proper"), "true");
    EXPECT_EQ(field(v.out, "colors"), "5");
}

TEST_F(CliTest, VerifyRejectsBadCertificate)
{
    auto v = invoke({"verify", data_dir + "/path4.graph", data_dir + "/path4_bad.cert"});
    EXPECT_EQ(v.code, 1);
    EXPECT_EQ(field(v.out, "proper"), "false");
    EXPECT_FALSE(field(v.out, "violation").empty());

    auto partial = write("partial.cert", "1 1\n");
    EXPECT_EQ(invoke({"verify", data_dir + "/path4.graph", partial}).code, 1);
}

TEST_F(CliTest, ErrorsExitTwo)
{
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"solve"}).code, 2);
    EXPECT_EQ(invoke({"solve", data_dir + "/path4.graph", "--method", "simplex"}).code, 2);
    EXPECT_EQ(invoke({"solve", path("missing.graph")}).code, 2);
    EXPECT_EQ(invoke({"solve", data_dir + "/path4.graph", "--td", data_dir + "/path4.td"}).code, 2);
    EXPECT_EQ(invoke({"solve", data_dir + "/path4.graph", "--dump-ilp", path("x.ilp")}).code, 2);
    auto cyclic = write("cyc.graph", "p mixed 2 0 2\na 1 2\na 2 1\n");
    auto r = invoke({"params", cyclic});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(CliTest, BudgetExceededExitsTwo)
{
    auto g = path("lc.graph");
    ASSERT_EQ(invoke({"--out", g, "gen", "layered", "3", "3"}).code, 0);
    EXPECT_EQ(invoke({"--budget", "2", "solve", g, "--k", "11"}).code, 2);
}

TEST_F(CliTest, ParamsOfTripartite)
{
    auto g = path("t.graph");
    ASSERT_EQ(invoke({"--out", g, "gen", "tripartite", "2"}).code, 0);
    auto r = invoke({"params", g});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(field(r.out, "vertices"), "9");
    EXPECT_EQ(field(r.out, "ndm"), "8");
    EXPECT_EQ(field(r.out, "ndu"), "8");
    EXPECT_EQ(field(r.out, "maxrank"), "2");
}

TEST_F(CliTest, BoundsWithCertificate)
{
    const auto cert = path("b.cert");
    auto r = invoke({"bounds", data_dir + "/path4.graph", "--cert", cert});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(field(r.out, "lower"), "5");
    EXPECT_EQ(field(r.out, "upper"), "5");
    EXPECT_EQ(field(r.out, "lower_witness"), "maxrank");
    EXPECT_EQ(invoke({"verify", data_dir + "/path4.graph", cert}).code, 0);
}

TEST_F(CliTest, JsonReport)
{
    auto r = invoke({"--json", "solve", data_dir + "/path4.graph", "--k", "5"});
    ASSERT_EQ(r.code, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["decision"], "yes");
    EXPECT_EQ(doc["k"], 5);
    EXPECT_EQ(doc["vertices"], 5);
    EXPECT_TRUE(doc.contains("input_digest"));
}

TEST_F(CliTest, ReportsDeterministicExceptTiming)
{
    auto strip = [](std::string s) { return std::regex_replace(s, std::regex("seconds=[^\n]*"), ""); };
    auto a = invoke({"solve", data_dir + "/path4.graph"});
    auto b = invoke({"solve", data_dir + "/path4.graph"});
    EXPECT_EQ(strip(a.out), strip(b.out));
    auto g1 = invoke({"--seed", "9", "gen", "random", "--n", "7"});
    auto g2 = invoke({"--seed", "9", "gen", "random", "--n", "7"});
    EXPECT_EQ(g1.out, g2.out);
    EXPECT_FALSE(g1.out.empty());
}

TEST_F(CliTest, GenReductionsFromJson)
{
    auto g = path("superstring.graph");
    auto r = invoke({"--out", g, "gen", "superstring", data_dir + "/superstring.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(field(r.out, "colors"), "4");
    auto chi = invoke({"solve", g, "--method", "twdp"});
    EXPECT_EQ(field(chi.out, "chi"), "4");

    auto split = path("split.graph"), expr = path("split.expr");
    r = invoke({"--out", split, "gen", "superstring", data_dir + "/superstring_split.json", "--expr", expr});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(field(r.out, "expression_width"), "6");
    auto ev = invoke({"expr", "eval", expr});
    ASSERT_EQ(ev.code, 0);
    std::ifstream in(split);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(ev.out, text);

    auto sched = path("s.graph");
    ASSERT_EQ(invoke({"--out", sched, "gen", "scheduling", data_dir + "/scheduling.json"}).code, 0);
    EXPECT_EQ(invoke({"solve", sched, "--k", "8"}).code, 0);

    auto list = path("l.graph");
    ASSERT_EQ(invoke({"--out", list, "gen", "list", data_dir + "/list_single_vertex.json"}).code, 0);
    EXPECT_EQ(invoke({"solve", list, "--k", "5", "--method", "twdp"}).code, 0);

    auto mcc = path("m.graph");
    r = invoke({"--out", mcc, "gen", "multicolored-clique", data_dir + "/multicolored_clique.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(invoke({"solve", mcc, "--k", field(r.out, "colors"), "--method", "twdp"}).code, 0);

    auto bad = write("bad.json", "{\"strings\": [\"0a\"], \"k\": 2}");
    EXPECT_EQ(invoke({"gen", "superstring", bad}).code, 2);
}

TEST_F(CliTest, ArtifactToStdoutMovesReportToStderr)
{
    auto r = invoke({"gen", "star", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("p mixed 5 0 4", 0), 0U);
    EXPECT_EQ(field(r.err, "family"), "star");
}

TEST_F(CliTest, ExpressionCommands)
{
    auto ev = invoke({"expr", "eval", data_dir + "/path3.expr"});
    ASSERT_EQ(ev.code, 0);
    EXPECT_EQ(ev.out, "p mixed 4 0 3\na 1 2\na 2 3\na 3 4\n");

    auto e = path("t.expr");
    auto tc = invoke({"--out", e, "expr", "tc", data_dir + "/path3.expr"});
    ASSERT_EQ(tc.code, 0) << tc.err;
    auto closed = invoke({"expr", "eval", e});
    EXPECT_EQ(closed.out.rfind("p mixed 4 0 6", 0), 0U);
    EXPECT_EQ(invoke({"expr", "tc", data_dir + "/path3.expr", "--width-cap", "2"}).code, 2);

    auto from = invoke({"expr", "from-ndm", data_dir + "/path4.graph"});
    ASSERT_EQ(from.code, 0);
    EXPECT_LE(std::stoi(field(from.err, "width")), 6);
}

TEST_F(CliTest, DumpIlp)
{
    auto dump = path("p.ilp");
    auto r = invoke({"solve", data_dir + "/path4.graph", "--method", "ndm", "--k", "5", "--dump-ilp", dump});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(dump));
    EXPECT_GT(fs::file_size(dump), 0U);
}
