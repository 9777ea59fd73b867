#include <arlab/ar_check.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace arlab;

namespace {

std::string fixture(const std::string & name) { return std::string(ARLAB_FIXTURES) + "/" + name; }

// Re-derives a failure certificate from scratch.
void expect_recheckable(const Graph & g, const Labeling & l, const Verdict & v)
{
    ASSERT_FALSE(v.ok());
    if (auto d = std::get_if<DuplicateLabel>(&*v.failure)) {
        EXPECT_NE(d->first_edge, d->second_edge);
        EXPECT_EQ(l[d->first_edge], l[d->second_edge]);
        EXPECT_EQ(l[d->first_edge], d->label);
        return;
    }
    const auto & c = std::get<SubsetSumClash>(*v.failure);
    Value a = 0, b = 0;
    for (auto e : c.first_edges) {
        a += l[e];
        const auto [x, y] = g.edge(e);
        EXPECT_TRUE(x == c.vertex || y == c.vertex);
    }
    for (auto e : c.second_edges) {
        b += l[e];
        EXPECT_EQ(std::count(c.first_edges.begin(), c.first_edges.end(), e), 0);
    }
    EXPECT_FALSE(c.first_edges.empty());
    EXPECT_FALSE(c.second_edges.empty());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c.sum);
}

}

TEST(IsArVertex, Examples)
{
    const Graph g = star(3);
    const Labeling bad{ { 1, 2, 3 } };
    EXPECT_FALSE(is_ar_vertex(g, bad, 0));
    for (Vertex leaf = 1 ; leaf <= 3 ; ++leaf)
        EXPECT_TRUE(is_ar_vertex(g, bad, leaf));
    const Graph p = path(3);
    EXPECT_TRUE(is_ar_vertex(p, Labeling{ { 5, 9 } }, 1));
    EXPECT_THROW(is_ar_vertex(g, Labeling{ { 1, 2 } }, 0), InvalidInput);
}

TEST(IsArVertex, MatchesDssOfIncidentLabels)
{
    std::mt19937 rng(11);
    for (auto g : { complete(5), wheel(7), complete_bipartite(3, 4), bistar(3, 2) }) {
        for (int trial = 0 ; trial < 50 ; ++trial) {
            std::vector<Value> labels(static_cast<std::size_t>(g.edge_count()));
            std::iota(labels.begin(), labels.end(), 1);
            std::shuffle(labels.begin(), labels.end(), rng);
            const Labeling l{ labels };
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
                std::vector<Value> at;
                for (auto e : g.incident_edges(v))
                    at.push_back(l[e]);
                EXPECT_EQ(is_ar_vertex(g, l, v), oracle::naive_dss(at));
            }
        }
    }
}

TEST(IsArLabeling, PathIsAr)
{
    EXPECT_TRUE(is_ar_labeling(path(4), Labeling{ { 1, 2, 3 } }).ok());
}

TEST(IsArLabeling, StarCenterFails)
{
    const Graph g = star(3);
    const Labeling l{ { 1, 2, 3 } };
    auto v = is_ar_labeling(g, l);
    ASSERT_FALSE(v.ok());
    const auto & c = std::get<SubsetSumClash>(*v.failure);
    EXPECT_EQ(c.vertex, 0);
    EXPECT_EQ(c.sum, 3);
    expect_recheckable(g, l, v);
    EXPECT_EQ(describe(v, l), "vertex 0 is not an AR-vertex: {1,2} and {3} both sum to 3");
}

TEST(IsArLabeling, NotInjective)
{
    const Graph g = path(4);
    const Labeling l{ { 4, 1, 4 } };
    auto v = is_ar_labeling(g, l);
    ASSERT_FALSE(v.ok());
    ASSERT_TRUE(std::holds_alternative<DuplicateLabel>(*v.failure));
    expect_recheckable(g, l, v);
}

TEST(IsArLabeling, LengthMismatch)
{
    EXPECT_THROW(is_ar_labeling(path(4), Labeling{ { 1, 2 } }), InvalidInput);
    EXPECT_THROW(is_ar_labeling(path(4), Labeling{ { 1, 2, 0 } }), InvalidInput);
}

TEST(IsArLabeling, CertificatesRecheck)
{
    std::mt19937 rng(5);
    for (auto g : { complete(6), wheel(8), complete_multipartite({ 2, 2, 3 }) }) {
        int failures = 0;
        for (int trial = 0 ; trial < 40 ; ++trial) {
            std::vector<Value> labels(static_cast<std::size_t>(g.edge_count()));
            for (auto & x : labels)
                x = static_cast<Value>(rng() % 40 + 1);
            const Labeling l{ labels };
            auto v = is_ar_labeling(g, l);
            if (! v.ok()) {
                ++failures;
                expect_recheckable(g, l, v);
            }
        }
        EXPECT_GT(failures, 0);
    }
}

TEST(ThirdLabel, Examples)
{
    EXPECT_FALSE(third_label_feasible(2, 5, 7));
    EXPECT_FALSE(third_label_feasible(2, 5, 3));
    EXPECT_TRUE(third_label_feasible(2, 5, 6));
    EXPECT_THROW(third_label_feasible(2, 2, 3), InvalidInput);
    EXPECT_THROW(third_label_feasible(0, 2, 3), InvalidInput);
}

TEST(VerifyFiles, Fixtures)
{
    EXPECT_TRUE(verify_files(fixture("graph_p4.json"), fixture("labels_p4.json")).ok());
    EXPECT_THROW(verify_files(fixture("graph_k13.json"), fixture("labels_k13_short.json")), InvalidInput);
    auto v = verify_files(fixture("graph_k13.json"), fixture("labels_k13_124.json"));
    EXPECT_TRUE(v.ok());
    EXPECT_EQ(load_labeling(fixture("labels_k13_124.json")).max_label(), 4);
    EXPECT_FALSE(verify_files(fixture("graph_k13.json"), fixture("labels_k13_123.json")).ok());
    EXPECT_THROW(verify_files(fixture("bad_selfloop.json"), fixture("labels_p4.json")), ParseError);
}
