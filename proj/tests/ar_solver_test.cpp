#include <arlab/ar_solver.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace arlab;
using namespace std::chrono_literals;

namespace {

void expect_verified(const Graph & g, const Labeling & l, Value k)
{
    EXPECT_TRUE(is_ar_labeling(g, l).ok()) << g.name();
    EXPECT_LE(l.max_label(), k) << g.name();
}

// Threshold test written out over every t in 1..k.
bool naive_counting(const Graph & g, Value k)
{
    for (Value t = 1 ; t <= k + 30 ; ++t) {
        Value demand = 0;
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            if (g.degree(v) > 0 && es_lower_bound(g.degree(v)) >= t)
                ++demand;
        if (demand > std::max<Value>(0, 2 * (k - t + 1)))
            return false;
    }
    return true;
}

}

TEST(CountingPrune, MultipartiteEightVertices)
{
    const auto g = complete_multipartite({ 3, 3, 3 });
    EXPECT_FALSE(counting_prune(g, 27));
    EXPECT_TRUE(counting_prune(g, 28));
    EXPECT_EQ(naive_counting(g, 27), false);
    EXPECT_EQ(naive_counting(g, 28), true);
}

TEST(CountingPrune, Star)
{
    EXPECT_TRUE(counting_prune(star(3), 4));
    EXPECT_FALSE(counting_prune(star(3), 3));
}

TEST(CountingPrune, AgreesWithNaiveThresholdScan)
{
    for (auto g : { complete(6), wheel(9), bistar(3, 4), complete_bipartite(4, 6), complete_multipartite({ 2, 3, 4 }) })
        for (Value k = 1 ; k <= 60 ; ++k)
            EXPECT_EQ(counting_prune(g, k), naive_counting(g, k)) << g.name() << " k=" << k;
}

TEST(LowerBound, Examples)
{
    EXPECT_EQ(ari_lower_bound(star(5)), 13);
    EXPECT_GE(ari_lower_bound(complete(6)), 13);
    EXPECT_EQ(ari_lower_bound(path(4)), 3);
    EXPECT_EQ(ari_lower_bound(complete_multipartite({ 3, 3, 3 })), 28);
    EXPECT_THROW(ari_lower_bound(complete(1)), InvalidInput);
}

TEST(Find, Examples)
{
    auto p4 = find_ar_labeling(path(4), 3);
    ASSERT_EQ(p4.found, Tri::yes);
    expect_verified(path(4), *p4.labeling, 3);
    EXPECT_EQ(find_ar_labeling(star(3), 3).found, Tri::no);
    EXPECT_EQ(find_ar_labeling(bistar(3, 3), 7).found, Tri::no);
    EXPECT_EQ(find_ar_labeling(complete(5), 9).found, Tri::no);
}

TEST(Find, KBelowEdgeCountIsNo)
{
    auto r = find_ar_labeling(complete(4), 5);
    EXPECT_EQ(r.found, Tri::no);
    EXPECT_EQ(r.log.nodes, 0U);
}

TEST(Find, RootCountingPruneIsLogged)
{
    auto r = find_ar_labeling(complete_multipartite({ 3, 3, 3 }), 27);
    EXPECT_EQ(r.found, Tri::no);
    EXPECT_TRUE(r.log.refuted_by_bound);
}

TEST(Find, TimeoutIsUnknown)
{
    SearchConfig cfg;
    cfg.budget = 0ms;
    EXPECT_EQ(find_ar_labeling(complete_multipartite({ 2, 2, 3 }), 16, cfg).found, Tri::unknown);
}

TEST(Find, CountingPruneIsSound)
{
    for (auto g : { star(4), bistar(3, 3), complete(5), wheel(6), complete_bipartite(3, 4), complete_multipartite({ 2, 2, 2 }) }) {
        const auto lb = ari_lower_bound(g);
        for (Value k = g.edge_count() ; k < lb ; ++k) {
            if (counting_prune(g, k))
                continue;
            // the full search without the root prune must also fail
            std::atomic<bool> never{ false };
            detail::LabelSearch s(g, k, {}, Deadline{}, never);
            EXPECT_EQ(s.run(std::nullopt), BranchResult::exhausted) << g.name() << " k=" << k;
        }
    }
}

TEST(Ari, Stars)
{
    const std::vector<Value> want{ 1, 2, 4, 7, 13, 24 };
    for (int n = 1 ; n <= 6 ; ++n) {
        auto r = ari(star(n));
        ASSERT_TRUE(r.exact());
        EXPECT_EQ(r.value(), want[static_cast<std::size_t>(n - 1)]);
        expect_verified(star(n), *r.witness, r.value());
    }
}

TEST(Ari, Bistar33)
{
    auto r = ari(bistar(3, 3));
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(r.value(), 8);
    expect_verified(bistar(3, 3), *r.witness, 8);
    ASSERT_EQ(r.attempts.size(), 2U);
    EXPECT_EQ(r.attempts[0].found, Tri::no);
    EXPECT_GT(r.attempts[0].nodes, 0U);
}

TEST(Ari, Wheel6)
{
    auto r = ari(wheel(6));
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(r.value(), 13);
}

TEST(Ari, TimeoutGivesInterval)
{
    SearchConfig cfg;
    cfg.budget = 0ms;
    auto r = ari(complete_multipartite({ 2, 2, 3 }), cfg);
    EXPECT_FALSE(r.exact());
    EXPECT_EQ(r.lower, ari_lower_bound(complete_multipartite({ 2, 2, 3 })));
    EXPECT_GE(r.upper, r.lower);
    EXPECT_FALSE(r.witness);
}

TEST(ArGraph, Decisions)
{
    auto k5 = is_ar_graph(complete(5));
    EXPECT_EQ(k5.answer, Tri::yes);
    expect_verified(complete(5), *k5.witness, 10);
    EXPECT_EQ(is_ar_graph(complete(6)).answer, Tri::no);
    EXPECT_EQ(is_almost_ar(bistar(3, 3)).answer, Tri::yes);
    EXPECT_EQ(is_almost_ar(bistar(2, 2)).answer, Tri::no);
    EXPECT_EQ(is_almost_ar(star(4)).answer, Tri::no);
}

TEST(Symmetry, AgreesWithUnbrokenSearch)
{
    SearchConfig on;
    on.symmetry_breaking = true;
    for (auto g : { complete(4), complete(5), complete(6), complete_bipartite(2, 3), complete_bipartite(3, 3),
                 complete_bipartite(3, 4), complete_bipartite(3, 5), star(4), cycle(5), cycle(6) }) {
        for (Value k = g.edge_count() ; k <= ari_lower_bound(g) + 1 ; ++k) {
            auto a = find_ar_labeling(g, k);
            auto b = find_ar_labeling(g, k, on);
            EXPECT_EQ(a.found, b.found) << g.name() << " k=" << k;
            if (b.labeling)
                expect_verified(g, *b.labeling, k);
        }
    }
}

TEST(Symmetry, IgnoredWhenNotLicensed)
{
    // k well above ARI: label k need not appear, so no restriction applies
    SearchConfig on;
    on.symmetry_breaking = true;
    auto r = find_ar_labeling(complete(4), 20, on);
    ASSERT_EQ(r.found, Tri::yes);
    EXPECT_LT(r.labeling->max_label(), 20);
}

TEST(Parallel, SameVerdictAndValue)
{
    SearchConfig par;
    par.threads = 4;
    for (auto g : { bistar(3, 3), complete(5), wheel(6), complete_bipartite(3, 4), complete_multipartite({ 2, 2, 2 }) }) {
        auto a = ari(g), b = ari(g, par);
        ASSERT_TRUE(a.exact());
        ASSERT_TRUE(b.exact());
        EXPECT_EQ(a.value(), b.value());
        expect_verified(g, *b.witness, b.value());
    }
    EXPECT_EQ(find_ar_labeling(complete_bipartite(3, 5), 15, par).found, Tri::no);
}

TEST(DisjointCover, Examples)
{
    auto c22 = disjoint_dss_cover(2, 2);
    ASSERT_TRUE(c22);
    EXPECT_EQ(c22->size(), 2U);
    EXPECT_FALSE(disjoint_dss_cover(3, 5));
    EXPECT_FALSE(disjoint_dss_cover(4, 6));
    EXPECT_FALSE(disjoint_dss_cover(5, 6));
    EXPECT_THROW(disjoint_dss_cover(3, 2), InvalidInput);
}

TEST(DisjointCover, CoversArePartitionsOfDssSets)
{
    for (auto [m, n] : std::vector<std::pair<int, int>>{ { 2, 3 }, { 2, 4 }, { 3, 3 }, { 3, 4 }, { 4, 4 }, { 4, 5 }, { 5, 5 } }) {
        auto c = disjoint_dss_cover(m, n);
        ASSERT_TRUE(c) << m << "," << n;
        std::vector<Value> all;
        for (auto & s : *c) {
            EXPECT_EQ(s.size(), static_cast<std::size_t>(n));
            EXPECT_TRUE(is_dss(s.elements()));
            all.insert(all.end(), s.elements().begin(), s.elements().end());
        }
        std::sort(all.begin(), all.end());
        std::vector<Value> want(static_cast<std::size_t>(m * n));
        std::iota(want.begin(), want.end(), 1);
        EXPECT_EQ(all, want);
    }
}

TEST(DisjointCover, NecessaryForArGraph)
{
    EXPECT_EQ(is_ar_graph(complete_bipartite(3, 5)).answer, Tri::no);
    for (auto [m, n] : std::vector<std::pair<int, int>>{ { 2, 2 }, { 2, 4 }, { 3, 4 } })
        if (is_ar_graph(complete_bipartite(m, n)).answer == Tri::yes) {
            EXPECT_TRUE(disjoint_dss_cover(m, n));
        }
}

TEST(Wheel, SmallUseBacktracking)
{
    for (int n = 6 ; n <= 7 ; ++n) {
        auto w = label_wheel(n);
        EXPECT_FALSE(w.greedy);
        expect_verified(wheel(n), w.labeling, known_es_values[static_cast<std::size_t>(n - 2)]);
        EXPECT_EQ(w.labeling.max_label(), known_es_values[static_cast<std::size_t>(n - 2)]);
    }
}

TEST(Wheel, GreedyConstruction)
{
    for (int n = 8 ; n <= 10 ; ++n) {
        auto w = label_wheel(n);
        EXPECT_TRUE(w.greedy) << n;
        expect_verified(wheel(n), w.labeling, known_es_values[static_cast<std::size_t>(n - 2)]);
        EXPECT_EQ(w.labeling.max_label(), known_es_values[static_cast<std::size_t>(n - 2)]);
    }
}

TEST(Wheel, Errors)
{
    EXPECT_THROW(label_wheel(5), InvalidInput);
    EXPECT_THROW(label_wheel(11), UnsupportedSize);
}

TEST(Embed, ArGraphUnchanged)
{
    auto r = embed_in_ar_graph(path(4));
    ASSERT_EQ(r.status, Tri::yes);
    EXPECT_EQ(r.graph, path(4));
    EXPECT_EQ(r.pendant, -1);
    expect_verified(path(4), r.labeling, 3);
}

TEST(Embed, Star3)
{
    const Graph g = star(3);
    auto r = embed_in_ar_graph(g);
    ASSERT_EQ(r.status, Tri::yes);
    // K_{1,4} has ARI 7, so three path vertices are added
    EXPECT_EQ(r.pendant, 4);
    EXPECT_EQ(r.path_length, 3);
    EXPECT_EQ(r.graph.edge_count(), 7);
    expect_verified(r.graph, r.labeling, r.graph.edge_count());
    for (auto e : g.edges())
        EXPECT_LT(r.graph.find_edge(e.first, e.second), static_cast<std::size_t>(r.graph.edge_count()));
    // induced: no new edges among the original vertices
    for (auto e : r.graph.edges())
        if (e.first < g.vertex_count() && e.second < g.vertex_count()) {
            EXPECT_LT(g.find_edge(e.first, e.second), static_cast<std::size_t>(g.edge_count()));
        }
}

TEST(Embed, CompleteSix)
{
    SearchConfig cfg;
    cfg.budget = std::chrono::minutes(10);
    auto r = embed_in_ar_graph(complete(6), cfg);
    ASSERT_EQ(r.status, Tri::yes);
    expect_verified(r.graph, r.labeling, r.graph.edge_count());
    EXPECT_EQ(r.pendant, 6);
    for (auto e : r.graph.edges())
        if (e.first < 6 && e.second < 6) {
            EXPECT_LT(complete(6).find_edge(e.first, e.second), 15U);
        }
}

TEST(Twins, InterchangeableVerticesKeepVerdicts)
{
    // twin classes: leaves of a bistar, the sides of K_{2,3}, the parts of K_{1,2,2}
    for (auto g : { bistar(2, 3), complete_bipartite(2, 3), complete_multipartite({ 1, 2, 2 }), complete_multipartite({ 1, 1, 3 }) }) {
        const Value want = oracle::naive_ari(g.vertex_count(), g.edges());
        auto r = ari(g);
        ASSERT_TRUE(r.exact()) << g.name();
        EXPECT_EQ(r.value(), want) << g.name();
        for (bool sym : { false, true }) {
            SearchConfig cfg;
            cfg.symmetry_breaking = sym;
            EXPECT_EQ(find_ar_labeling(g, want, cfg).found, Tri::yes) << g.name();
            if (want > g.edge_count()) {
                EXPECT_EQ(find_ar_labeling(g, want - 1, cfg).found, Tri::no) << g.name();
            }
        }
    }
}

TEST(Twins, FixedLabelsOnTwinsStillFound)
{
    // pin one leaf edge of K_{1,4} to its largest label; the leaf class is then left unordered
    const auto g = star(4);
    std::vector<std::optional<Value>> fixed(4);
    fixed[2] = 7;
    auto r = detail::find_labeling(g, 7, SearchConfig{}, Deadline{}, fixed, false);
    ASSERT_EQ(r.found, Tri::yes);
    EXPECT_EQ((*r.labeling)[2], 7);
    EXPECT_TRUE(is_ar_labeling(g, *r.labeling).ok());
}
