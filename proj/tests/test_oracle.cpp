// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace vorder;
using namespace vorder::test;

TEST(PermOracle, SmallCases) {
    const auto c = perm_opt(cycle3(), Objective::fas);
    EXPECT_EQ(c.opt, 1);
    EXPECT_EQ(c.optimal_count, 3u);
    EXPECT_EQ(c.ordering, Ordering::identity(3));
    for (auto obj : {Objective::fas, Objective::cutwidth, Objective::ola, Objective::dpw}) {
        const auto r = perm_opt(path(5), obj);
        EXPECT_EQ(r.opt, 0);
        EXPECT_EQ(r.optimal_count, 1u);
        EXPECT_EQ(r.objective, obj);
    }
    EXPECT_EQ(perm_opt(triangle_with_tail(), Objective::fas).opt, 1);
    EXPECT_EQ(perm_opt(crossing_example(), Objective::ola).opt, 0);
}

TEST(PermOracle, LexLeastOptimum) {
    // arc 2 -> 1: every optimal order puts 2 before 1
    const auto r = perm_opt(digraph1(3, {{2, 1}}), Objective::fas);
    EXPECT_EQ(r.ordering.sequence()[0], 1u);
    EXPECT_EQ(r.optimal_count, 3u);
}

TEST(PermOracle, EmptyGraph) {
    const auto r = perm_opt(Digraph::directed(0, {}), Objective::ola);
    EXPECT_EQ(r.opt, 0);
    EXPECT_EQ(r.optimal_count, 1u);
}

TEST(PermOracle, SizeGuard) {
    EXPECT_THROW(perm_opt(Digraph::directed(limits().max_oracle_n + 1, {}), Objective::fas), size_limit_error);
}
