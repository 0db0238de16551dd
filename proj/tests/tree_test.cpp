#include <set>
#include <string>

#include <gtest/gtest.h>

#include <mtamari/tree.hpp>
#include <mtamari/verify.hpp>

using namespace mtamari;

TEST(TreeView, EncodesInternalNodesAndLeaves)
{
    const auto t = tree_view(parse_path("udud"), 1);
    EXPECT_EQ(t.arity(), 2);
    EXPECT_EQ(t.prefix_code(), "NENEE");
    EXPECT_EQ(t.internal_count(), 2U);
    EXPECT_EQ(tree_to_path(t).to_string(), "udud");

    const auto ternary = tree_view(parse_path("uuduuddd"), 2);
    EXPECT_EQ(ternary.arity(), 3);
    EXPECT_EQ(ternary.prefix_code(), "NENEEEE");
    EXPECT_EQ(tree_view(parse_path(""), 2).prefix_code(), "E");
}

TEST(TreeView, IsABijection)
{
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= 4; ++n) {
            std::set<std::string> codes;
            for (const auto& p : generate_m_dyck(m, n)) {
                const auto t = tree_view(p, m);
                EXPECT_EQ(t.internal_count(), static_cast<std::size_t>(n));
                EXPECT_EQ(tree_to_path(t), p);
                codes.insert(t.prefix_code());
            }
            EXPECT_EQ(codes.size(), generate_m_dyck(m, n).size());
        }
    }
}

TEST(Rotation, BinaryExample)
{
    const auto t = tree_view(parse_path("udud"), 1);
    const auto sites = rotation_sites(t);
    ASSERT_EQ(sites.size(), 1U);
    EXPECT_EQ(tree_to_path(tree_rotate(t, sites[0])).to_string(), "uudd");
}

TEST(Rotation, SingleInternalNodeHasNoSites)
{
    EXPECT_TRUE(rotation_sites(tree_view(parse_path("ud"), 1)).empty());
    EXPECT_TRUE(rotation_sites(tree_view(parse_path("uuuddd"), 3)).empty());
}

TEST(Rotation, RejectsInvalidLeaves)
{
    const auto t = tree_view(parse_path("udud"), 1);
    EXPECT_THROW(tree_rotate(t, 0), invalid_leaf);
    EXPECT_THROW(tree_rotate(t, 4), invalid_leaf);
    EXPECT_THROW(tree_rotate(t, 99), invalid_leaf);
}

TEST(Rotation, TernaryTreesOfSizeTwo)
{
    const auto h = build_hasse(2, 2);
    EXPECT_EQ(h.node_count(), 3U);
    std::size_t edges = 0;
    for (const auto& p : h.nodes()) {
        edges += rotation_sites(tree_view(p, 2)).size();
    }
    EXPECT_EQ(edges, h.edge_count());
}

TEST(Rotation, RotationGraphEqualsCoverGraph)
{
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= (m <= 2 ? 4 : 3); ++n) {
            std::string why;
            EXPECT_TRUE(rotation_graph_matches_covers(m, n, why)) << why;
        }
    }
}
