#include <arlab/es.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace arlab;
using namespace std::chrono_literals;

TEST(ErdosCountingLb, Examples)
{
    EXPECT_EQ(erdos_counting_lb(1), 1);
    EXPECT_EQ(erdos_counting_lb(5), 7);
    EXPECT_EQ(erdos_counting_lb(9), 57);
    EXPECT_THROW(erdos_counting_lb(0), InvalidInput);
    EXPECT_THROW(erdos_counting_lb(63), RangeError);
}

TEST(ErdosMoserLb, Examples)
{
    EXPECT_EQ(erdos_moser_lb(1), 1);
    EXPECT_EQ(erdos_moser_lb(5), 4);
    // ⌈1024 / (4·√10)⌉ = ⌈80.95⌉
    EXPECT_EQ(erdos_moser_lb(10), 81);
    EXPECT_THROW(erdos_moser_lb(57), RangeError);
}

TEST(ErdosMoserLb, NeverAboveRealCeiling)
{
    for (int n = 1 ; n <= 40 ; ++n) {
        const long double real = std::ldexp(1.0L, n) / (4.0L * std::sqrt(static_cast<long double>(n)));
        const auto c = erdos_moser_lb(n);
        EXPECT_GE(static_cast<long double>(c), real - 1e-9L) << n;
        EXPECT_LT(static_cast<long double>(c - 1), real) << n;
    }
}

TEST(ConwayGuy, SequenceValues)
{
    const std::vector<Value> want{ 0, 1, 2, 4, 7, 13, 24, 44, 84, 161 };
    for (int n = 0 ; n < static_cast<int>(want.size()) ; ++n)
        EXPECT_EQ(conway_guy_u(n), want[static_cast<std::size_t>(n)]) << n;
    EXPECT_THROW(conway_guy_u(-1), InvalidInput);
    EXPECT_THROW(conway_guy_u(200), RangeError);
}

TEST(ConwayGuy, Sets)
{
    EXPECT_EQ(conway_guy_set(1), DssSet({ 1 }));
    // u(4) − u(4 − i) for u = 0, 1, 2, 4, 7
    EXPECT_EQ(conway_guy_set(4), DssSet({ 3, 5, 6, 7 }));
    auto six = conway_guy_set(6);
    EXPECT_EQ(six.size(), 6U);
    EXPECT_EQ(six.max(), 24);
    EXPECT_TRUE(oracle::naive_dss(std::vector<Value>(six.elements().begin(), six.elements().end())));
    EXPECT_THROW(conway_guy_set(0), InvalidInput);
}

TEST(Es, SmallValuesAgreeWithNaiveScan)
{
    for (int n = 1 ; n <= 5 ; ++n) {
        auto r = es(n);
        ASSERT_EQ(r.status, EsStatus::computed);
        EXPECT_EQ(r.value(), oracle::naive_es(static_cast<std::size_t>(n))) << n;
    }
}

TEST(Es, Examples)
{
    auto one = es(1);
    EXPECT_EQ(one.value(), 1);
    EXPECT_EQ(*one.witness, DssSet({ 1 }));
    EXPECT_EQ(es(4).value(), 7);
    auto six = es(6);
    EXPECT_EQ(six.value(), 24);
    EXPECT_EQ(six.witness->size(), 6U);
    EXPECT_EQ(six.witness->max(), 24);
}

TEST(Es, WitnessIsFirstUnderDecreasingDfs)
{
    // frozen: first solution found, larger elements tried first
    EXPECT_EQ(*es(5).witness, DssSet({ 6, 9, 11, 12, 13 }));
    EXPECT_EQ(*es(6).witness, DssSet({ 11, 17, 20, 22, 23, 24 }));
}

TEST(Es, ParallelMatchesSerial)
{
    SearchConfig serial, parallel;
    parallel.threads = 4;
    for (int n = 1 ; n <= 7 ; ++n) {
        auto a = es(n, serial), b = es(n, parallel);
        EXPECT_EQ(a.value(), b.value());
        EXPECT_TRUE(is_dss(b.witness->elements()));
        EXPECT_EQ(b.witness->max(), b.value());
    }
}

TEST(Es, TimeoutIsBoundOnly)
{
    SearchConfig cfg;
    cfg.budget = 0ms;
    auto r = es(7, cfg);
    EXPECT_EQ(r.status, EsStatus::bound_only);
    EXPECT_GE(r.lower, erdos_counting_lb(7));
    EXPECT_EQ(r.upper, conway_guy_u(7));
    EXPECT_LE(r.lower, 44);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->max(), r.upper);
    EXPECT_THROW(r.value(), std::logic_error);
}

TEST(Es, RecordInvariants)
{
    auto seq = es_sequence(7);
    Value prev = 0;
    for (auto & r : seq) {
        ASSERT_TRUE(r.exact());
        EXPECT_GT(r.value(), prev);
        prev = r.value();
        EXPECT_GE(r.value(), erdos_counting_lb(r.n));
        EXPECT_GE(r.value(), erdos_moser_lb(r.n));
        EXPECT_LE(r.value(), conway_guy_u(r.n));
        EXPECT_EQ(r.witness->size(), static_cast<std::size_t>(r.n));
        EXPECT_EQ(r.witness->max(), r.value());
        EXPECT_EQ(r.value(), known_es_values[static_cast<std::size_t>(r.n - 1)]);
    }
}

TEST(EsTable, Known)
{
    auto t = EsTable::known();
    for (int n = 1 ; n <= 9 ; ++n) {
        EXPECT_EQ(t.at(n).value(), known_es_values[static_cast<std::size_t>(n - 1)]);
        EXPECT_EQ(t.at(n).status, EsStatus::known);
    }
    EXPECT_FALSE(t.contains(10));
}

TEST(EsTable, SmallComputed)
{
    auto t = es_table(3);
    EXPECT_EQ(t.at(1).value(), 1);
    EXPECT_EQ(t.at(2).value(), 2);
    EXPECT_EQ(t.at(3).value(), 4);
}

TEST(EsTable, FallsBackBeyondBudget)
{
    SearchConfig cfg;
    cfg.budget = 200ms;
    auto t = es_table(12, cfg);
    EXPECT_EQ(t.at(9).value(), 161);
    EXPECT_TRUE(t.at(9).status == EsStatus::known || t.at(9).status == EsStatus::computed);
    for (int n = 10 ; n <= 12 ; ++n) {
        EXPECT_EQ(t.at(n).status, EsStatus::bound_only) << n;
        EXPECT_GE(t.at(n).lower, erdos_counting_lb(n));
        EXPECT_GT(t.at(n).lower, t.at(n - 1).lower);
        EXPECT_EQ(t.at(n).upper, conway_guy_u(n));
    }
}

TEST(EsLowerBound, TableThenAnalytic)
{
    EXPECT_EQ(es_lower_bound(5), 13);
    EXPECT_EQ(es_lower_bound(9), 161);
    EXPECT_EQ(es_lower_bound(10), std::max(erdos_counting_lb(10), erdos_moser_lb(10)));
}
