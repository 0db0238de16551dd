#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "paths.hpp"
#include "step_path.hpp"

namespace mtamari {

// Rooted (m+1)-ary tree: every node is a leaf or has exactly m+1 ordered
// children. Nodes live in a flat arena addressed by index.
class mary_tree {
public:
    struct node {
        std::vector<std::size_t> children; // empty for leaves
    };

    int arity() const noexcept { return arity_; }
    std::size_t root() const noexcept { return root_; }
    const node& at(std::size_t i) const { return nodes_.at(i); }
    bool is_leaf(std::size_t i) const { return nodes_.at(i).children.empty(); }

    std::size_t internal_count() const
    {
        std::size_t c = 0;
        for (const auto& nd : nodes_) {
            c += nd.children.empty() ? 0 : 1;
        }
        return c;
    }

    // Node indices in prefix (preorder) order.
    std::vector<std::size_t> preorder() const
    {
        std::vector<std::size_t> out;
        std::vector<std::size_t> stack{root_};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            out.push_back(v);
            const auto& ch = nodes_[v].children;
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
                stack.push_back(*it);
            }
        }
        return out;
    }

    // Preorder word: internal node 'N', leaf 'E'.
    std::string prefix_code() const
    {
        std::string s;
        for (std::size_t v : preorder()) {
            s.push_back(is_leaf(v) ? 'E' : 'N');
        }
        return s;
    }

    friend mary_tree tree_view(const step_path& p, int m);
    friend mary_tree tree_rotate(const mary_tree& t, std::size_t leaf_rank);

private:
    int arity_ = 2;
    std::size_t root_ = 0;
    std::vector<node> nodes_;
};

// The m-ballot word of an m-Dyck path is the prefix code of an (m+1)-ary
// tree with its final leaf omitted.
inline mary_tree tree_view(const step_path& p, int m)
{
    const std::string word = dyck_to_ballot(p, m).steps() + "E";
    mary_tree t;
    t.arity_ = m + 1;
    // Iterative preorder construction: a stack of (node, children still missing).
    struct frame {
        std::size_t node;
        int missing;
    };
    std::vector<frame> stack;
    for (char c : word) {
        const std::size_t id = t.nodes_.size();
        t.nodes_.push_back({});
        if (!stack.empty()) {
            t.nodes_[stack.back().node].children.push_back(id);
            --stack.back().missing;
        }
        if (c == 'N') {
            stack.push_back({id, m + 1});
        }
        while (!stack.empty() && stack.back().missing == 0) {
            stack.pop_back();
        }
    }
    t.root_ = 0;
    return t;
}

inline step_path tree_to_path(const mary_tree& t)
{
    std::string code = t.prefix_code();
    code.pop_back();
    return ballot_to_dyck(ballot_path::parse(t.arity() - 1, code));
}

// Leaves that are immediately followed, in prefix order, by an internal node;
// returned as preorder ranks.
inline std::vector<std::size_t> rotation_sites(const mary_tree& t)
{
    const auto order = t.preorder();
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r + 1 < order.size(); ++r) {
        if (t.is_leaf(order[r]) && !t.is_leaf(order[r + 1])) {
            out.push_back(r);
        }
    }
    return out;
}

// Rotation at the leaf of preorder rank `leaf_rank`, followed by internal v
// with subtrees T_0..T_m: v takes the leaf's place with children
// T_0..T_{m-1}, leaf; T_m takes v's former place.
inline mary_tree tree_rotate(const mary_tree& t, std::size_t leaf_rank)
{
    const auto order = t.preorder();
    if (leaf_rank + 1 >= order.size() || !t.is_leaf(order[leaf_rank]) || t.is_leaf(order[leaf_rank + 1])) {
        throw invalid_leaf("preorder rank " + std::to_string(leaf_rank)
                           + " is not a leaf followed by an internal node");
    }
    const std::size_t leaf = order[leaf_rank];
    const std::size_t v = order[leaf_rank + 1];

    std::vector<std::size_t> parent(t.nodes_.size(), t.nodes_.size());
    for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
        for (std::size_t c : t.nodes_[i].children) {
            parent[c] = i;
        }
    }

    mary_tree out = t;
    auto replace_child = [&](std::size_t x, std::size_t replacement) {
        if (parent[x] == t.nodes_.size()) {
            out.root_ = replacement;
            return;
        }
        for (auto& s : out.nodes_[parent[x]].children) {
            if (s == x) {
                s = replacement;
                return;
            }
        }
    };
    const std::size_t last = t.nodes_[v].children.back();
    // The leaf is never the root, and v is not an ancestor of the leaf.
    replace_child(v, last);
    replace_child(leaf, v);
    out.nodes_[v].children.back() = leaf;
    return out;
}

} // namespace mtamari
