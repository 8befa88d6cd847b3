#include "gerst/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace gerst;

namespace {

int invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "gerst_cli");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    testing::internal::CaptureStdout();
    testing::internal::CaptureStderr();
    int rc = cli_main(static_cast<int>(argv.size()), argv.data());
    testing::internal::GetCapturedStdout();
    testing::internal::GetCapturedStderr();
    return rc;
}

const nlohmann::json* find_bracket(const nlohmann::json& doc, const std::string& f, const std::string& g)
{
    for (const auto& e : doc.at("results"))
        if (e.at("kind") == "bracket" && e.at("f") == f && e.at("g") == g)
            return &e;
    return nullptr;
}

}  // namespace

TEST(Cli, TopLevelSchema)
{
    auto r = run(RunConfig{3, Task::BracketA});
    std::vector<std::string> keys;
    for (auto it = r.doc.begin(); it != r.doc.end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"p", "paper_convention_notes", "phi_p_coefficients", "results"}));
    // Phi_3 = 1 + t + t^2
    EXPECT_EQ(r.doc.at("phi_p_coefficients").dump(), "[[1,1],[1,1],[1,1]]");
    EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, SmallABracketEntry)
{
    auto r = run(RunConfig{3, Task::BracketA});
    auto* e = find_bracket(r.doc, "x^1 ξ1*", "x^2 ξ1*");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->at("class"), "(1)·x^2 ξ1*");
    EXPECT_TRUE(e->at("matches_closed_form").get<bool>());
    EXPECT_EQ(e->at("class_coordinates").at("x^2").dump(), "[[1,1],[0,1]]");
}

TEST(Cli, TaftBracketEntryReportsEngineClass)
{
    auto r = run(RunConfig{3, Task::BracketTaft});
    auto* e = find_bracket(r.doc, "f̃_{x^1 g^0} ξ1*", "f̃_{g^0} ξ2*");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->at("class"), "(-3)·g^0 ξ2*");
    EXPECT_EQ(e->at("closed_form_class"), "(-1)·g^0 ξ2*");
    EXPECT_FALSE(e->at("matches_closed_form").get<bool>());
    EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, HopfBracketsVanish)
{
    RunConfig cfg{3, Task::Hopf, 3};
    auto r = run(cfg);
    int brackets = 0;
    for (const auto& e : r.doc.at("results"))
        if (e.at("kind") == "hopf_bracket") {
            ++brackets;
            EXPECT_TRUE(e.at("class_zero").get<bool>());
        }
    EXPECT_EQ(brackets, 2);
    EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, VerifyPasses)
{
    RunConfig cfg{5, Task::Verify, 3};
    auto r = run(cfg);
    EXPECT_EQ(r.exit_code, 0);
    for (const auto& e : r.doc.at("results"))
        EXPECT_TRUE(e.at("passed").get<bool>()) << e.dump();
}

TEST(Cli, DeterministicJson)
{
    RunConfig cfg{3, Task::Verify, 2};
    cfg.seed = 7;
    EXPECT_EQ(render(run(cfg), Format::Json), render(run(cfg), Format::Json));
    auto a = render(run(RunConfig{5, Task::BracketTaft}), Format::Json);
    auto b = render(run(RunConfig{5, Task::BracketTaft}), Format::Json);
    EXPECT_EQ(a, b);
}

TEST(Cli, CsvIsFlaggedLossy)
{
    auto text = render(run(RunConfig{3, Task::BracketA}), Format::Csv);
    EXPECT_EQ(text.rfind("# lossy", 0), 0u);
    EXPECT_NE(text.find("kind,item,outcome"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_THROW(validate(RunConfig{2}), UsageError);
    RunConfig bad_degree{3};
    bad_degree.max_degree = 0;
    EXPECT_THROW(validate(bad_degree), UsageError);
    EXPECT_EQ(invoke({"verify", "--p", "2"}), 2);
    EXPECT_EQ(invoke({"verify", "--max-degree", "0"}), 2);
    EXPECT_EQ(invoke({"nonsense"}), 2);
    EXPECT_EQ(invoke({"verify", "--format", "xml"}), 2);
    EXPECT_EQ(invoke({}), 2);
    EXPECT_EQ(invoke({"--task", "bracket-a", "--p", "3"}), 0);
}

TEST(Cli, WritesOutputFile)
{
    std::string path = ::testing::TempDir() + "gerst_cli_out.json";
    EXPECT_EQ(invoke({"bracket-a", "--p", "3", "--out", path}), 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), render(run(RunConfig{3, Task::BracketA}), Format::Json));
    std::remove(path.c_str());
}
