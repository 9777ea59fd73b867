#include <arlab/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>

using namespace arlab;

namespace {

std::string fixture(const std::string & name) { return std::string(ARLAB_FIXTURES) + "/" + name; }

template <typename F>
ParseError parse_error(F && f)
{
    try {
        f();
    }
    catch (const ParseError & e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError";
    return ParseError("", 0, "");
}

}

TEST(GraphFile, LoadsK2)
{
    auto g = parse_graph(R"({"vertices": 2, "edges": [[0, 1]]})");
    EXPECT_EQ(g, complete(2));
}

TEST(GraphFile, SelfLoopReportsPosition)
{
    auto e = parse_error([] { parse_graph("{\n  \"vertices\": 3,\n  \"edges\": [\n    [0, 1],\n    [1, 1]\n  ]\n}\n"); });
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    EXPECT_EQ(e.field(), "edges[1]");
    EXPECT_EQ(e.line(), 5U);
}

TEST(GraphFile, DuplicateEdge)
{
    auto e = parse_error([] { parse_graph(R"({"vertices": 3, "edges": [[0, 1], [2, 1], [1, 0]]})"); });
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
    EXPECT_EQ(e.field(), "edges[2]");
}

TEST(GraphFile, Malformed)
{
    auto e = parse_error([] { parse_graph("{\n \"vertices\": 2,\n \"edges\": [[0, 1]\n}"); });
    EXPECT_EQ(e.line(), 4U);
    parse_error([] { parse_graph(R"({"vertices": 2, "edges": [[0, 1]], "weights": []})"); });
    parse_error([] { parse_graph(R"({"vertices": 2, "edges": [[0, 5]]})"); });
    parse_error([] { parse_graph(R"({"vertices": -1, "edges": []})"); });
    parse_error([] { parse_graph(R"({"edges": []})"); });
    parse_error([] { parse_graph(R"({"vertices": 3, "edges": [[0, 1, 2]]})"); });
    parse_error([] { parse_graph(R"([1, 2])"); });
}

TEST(GraphFile, UnknownFieldPosition)
{
    auto e = parse_error([] { parse_graph("{\n  \"vertices\": 2,\n  \"colour\": \"red\",\n  \"edges\": []\n}"); });
    EXPECT_EQ(e.field(), "colour");
    EXPECT_EQ(e.line(), 3U);
}

TEST(GraphFile, RoundTripFixtures)
{
    for (auto & entry : std::filesystem::directory_iterator(ARLAB_FIXTURES)) {
        const auto name = entry.path().filename().string();
        if (name.rfind("graph_", 0) != 0)
            continue;
        auto g = load_graph(entry.path().string());
        auto again = parse_graph(format_graph(g));
        EXPECT_EQ(again, g) << name;
        EXPECT_EQ(again.name(), g.name()) << name;
        EXPECT_EQ(format_graph(again), format_graph(g)) << name;
    }
}

TEST(GraphFile, SaveLoad)
{
    const auto path = std::filesystem::temp_directory_path() / "arlab_io_test_graph.json";
    auto g = wheel(7);
    save_graph(g, path.string());
    EXPECT_EQ(load_graph(path.string()), g);
    EXPECT_EQ(load_graph(path.string()).name(), "wheel 7");
    std::filesystem::remove(path);
}

TEST(LabelingFile, ParseAndFormat)
{
    auto l = parse_labeling(R"({"labels": [1, 2, 3]})");
    EXPECT_EQ(l.labels, (std::vector<Value>{ 1, 2, 3 }));
    EXPECT_EQ(parse_labeling(format_labeling(l)), l);
}

TEST(LabelingFile, Errors)
{
    auto e = parse_error([] { parse_labeling("{\"labels\": [\n 1,\n 0\n]}"); });
    EXPECT_EQ(e.field(), "labels[1]");
    EXPECT_EQ(e.line(), 3U);
    parse_error([] { parse_labeling(R"({"labels": [1.5]})"); });
    parse_error([] { parse_labeling(R"({"labels": 3})"); });
    parse_error([] { parse_labeling(R"({"lables": [1]})"); });
    parse_error([] { load_labeling(fixture("does_not_exist.json")); });
}
