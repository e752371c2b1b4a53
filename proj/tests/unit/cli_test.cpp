#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <irregwalk/generators.hpp>
#include <irregwalk/io.hpp>

#include "irregwalk/cli.hpp"

using nlohmann::json;

namespace {

const std::string data = TEST_DATA_DIR;

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = irregwalk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text)
{
    auto p = std::filesystem::temp_directory_path() / ("irregwalk_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST(Cli, VerifyCaterpillar)
{
    auto r = run({"verify", "--graph", data + "/caterpillar13.edges", "--walk", data + "/caterpillar13.walk"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "irregularising\n");
}

TEST(Cli, VerifyTriangleEmptyWalk)
{
    auto r = run({"verify", "--graph", data + "/triangle.edges", "--walk", data + "/empty.walk", "--json"});
    EXPECT_EQ(r.code, 1);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["conflicts"].size(), 3u);
}

TEST(Cli, VerifyMalformedWalk)
{
    auto r = run({"verify", "--graph", data + "/triangle.edges", "--walk", data + "/malformed.walk"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

TEST(Cli, Usage)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify", "--graph", data + "/triangle.edges"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SolveClosedFormPath)
{
    auto g = temp_file("p10.edges", irregwalk::format_edge_list(irregwalk::make_path(10)));
    auto r = run({"solve", "--graph", g, "--method", "closed-form", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["value"], 10);
    EXPECT_EQ(j["walk"].size(), 11u);
    EXPECT_EQ(j["schema"], 1);
}

TEST(Cli, SolveClosedFormRelabelledCycle)
{
    // cycle 0-3-1-4-2-0 so the canonical witness has to be mapped
    auto g = temp_file("c5.edges", "0 3\n3 1\n1 4\n4 2\n2 0\n");
    auto r = run({"solve", "--graph", g, "--method", "closed-form"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("value 4"), std::string::npos);
}

TEST(Cli, TreeAgreesWithExact)
{
    irregwalk::Rng rng(17);
    for (int i = 0; i < 8; ++i) {
        auto t = irregwalk::random_tree(5 + i, rng);
        auto g = temp_file("tree.edges", irregwalk::format_edge_list(t));
        auto a = json::parse(run({"solve", "--graph", g, "--method", "tree", "--json"}).out);
        auto b = json::parse(run({"solve", "--graph", g, "--method", "exact", "--json"}).out);
        EXPECT_EQ(a["value"], b["value"]);
    }
}

TEST(Cli, SolveAllMethods)
{
    for (std::string m : {"exact", "exact-multiset", "greedy", "chromatic", "labelling", "tree"}) {
        auto r = run({"solve", "--graph", data + "/caterpillar13.edges", "--method", m, "--json"});
        ASSERT_EQ(r.code, 0) << m << r.err;
        auto j = json::parse(r.out);
        EXPECT_LE(j["value"].get<int>(), j["bound"].get<int>());
    }
}

TEST(Cli, NotNiceIsInapplicable)
{
    auto g = temp_file("k2.edges", "0 1\n");
    auto r = run({"solve", "--graph", g});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("MethodInapplicable"), std::string::npos);
    auto c = run({"solve", "--graph", data + "/caterpillar13.edges", "--method", "closed-form"});
    EXPECT_EQ(c.code, 2);
    EXPECT_EQ(run({"solve", "--graph", data + "/triangle.edges", "--method", "tree"}).code, 2);
}

TEST(Cli, ExhaustedIsNegative)
{
    auto g = temp_file("p9.edges", irregwalk::format_edge_list(irregwalk::make_path(9)));
    auto r = run({"solve", "--graph", g, "--method", "exact", "--budget", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("Exhausted"), std::string::npos);
}

TEST(Cli, ReportsAreReproducible)
{
    std::vector<std::string> args{"bench", "--class", "random", "--min", "5", "--max", "7", "--samples", "3",
                                  "--seed", "9", "--json"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto s1 = run({"solve", "--graph", data + "/k33.edges", "--method", "greedy", "--json"});
    auto s2 = run({"solve", "--graph", data + "/k33.edges", "--method", "greedy", "--json"});
    EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, BenchPaths)
{
    auto r = run({"bench", "--class", "path", "--min", "6", "--max", "9", "--json"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    const int expect[] = {2, 4, 6, 8};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(j["rows"][i]["exact"], expect[i]);
        EXPECT_FALSE(j["rows"][i]["violation"].get<bool>());
    }
    EXPECT_EQ(j["violations"], 0);
}

TEST(Cli, ExportDot)
{
    auto r = run({"export-dot", "--graph", data + "/caterpillar13.edges", "--walk", data + "/caterpillar13.walk"});
    ASSERT_EQ(r.code, 0);
    int arcs = 0;
    for (auto p = r.out.find("->"); p != std::string::npos; p = r.out.find("->", p + 1))
        ++arcs;
    EXPECT_EQ(arcs, 20);
    auto plain = run({"export-dot", "--graph", data + "/triangle.edges"});
    EXPECT_EQ(plain.code, 0);
    EXPECT_EQ(plain.out.find("dashed"), std::string::npos);
}

TEST(Cli, Gadget)
{
    auto r = run({"gadget", "--graph", data + "/k33.edges", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["n"], 81);
    EXPECT_EQ(j["k"], 6);
    auto p = run({"gadget", "--graph", data + "/k33.edges", "--kind", "path", "--json"});
    EXPECT_EQ(json::parse(p.out)["n"], 486);
    EXPECT_EQ(run({"gadget", "--graph", data + "/triangle.edges"}).code, 2);
}

TEST(Cli, Normalize)
{
    auto w = temp_file("k3.walk", "0 1 0 1 2 0\n");
    auto r = run({"normalize", "--graph", data + "/triangle.edges", "--walk", w, "--json"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["base"], json({0, 1, 2, 0}));
    EXPECT_EQ(j["expanded"], json({0, 1, 0, 1, 2, 0}));
}
