#pragma once

// The branching structure grown from a seed by the doubling rule: branch
// theta carries the values theta*2^n, and every n where (theta*2^n -/+ 1)/3
// is an integer contributes a node. Odd nodes not divisible by three spawn
// branches of their own; duplicates become cross-links. Reverse walks from
// a node down its branch powers realize full trajectories of the 3q+-1 map.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jacobstree/arith.hpp"
#include "jacobstree/collatz.hpp"
#include "jacobstree/knumbers.hpp"

namespace jacobstree {

struct TreeNode {
    u64 value = 0;
    u64 theta = 0;                 // owning branch; == value for the root
    std::optional<unsigned> power; // exponent on the branch; absent for the root
    BranchRule rule = BranchRule::minus_one;
    bool active = true;            // false iff value divisible by three
    std::optional<u64> parent;     // branch owner's value; absent for the root
    std::vector<u64> children;     // values discovered on this node's branch
};

// A branch position whose value duplicates an existing node.
struct CrossLink {
    u64 theta = 0;
    unsigned power = 0;
    u64 value = 0;
    bool operator==(const CrossLink&) const = default;
};

class JacobsthalTree {
public:
    JacobsthalTree(Variant v, u64 root);

    Variant variant() const { return variant_; }
    BranchRule rule() const { return rule_; }
    u64 root() const { return root_; }
    bool overflowed() const { return overflowed_; }

    // Non-root node values in the order they were found.
    const std::vector<u64>& discovery() const { return discovery_; }
    const std::vector<CrossLink>& cross_links() const { return cross_links_; }

    const TreeNode* find(u64 value) const;
    std::size_t size() const { return index_.size(); } // root included

private:
    Variant variant_;
    BranchRule rule_;
    u64 root_;
    std::vector<u64> discovery_;
    std::vector<CrossLink> cross_links_;
    std::unordered_map<u64, TreeNode> index_;
    bool overflowed_ = false;

    friend JacobsthalTree build_tree(Variant, u64, unsigned, std::size_t);
    friend JacobsthalTree load_tree_json(const std::string&);
};

// Grows breadth-by-value: of all live branches, the one whose next node
// value is smallest is expanded first (values are unique across branch and
// power, so the order is total and deterministic). The root branch is
// scanned from power 0, spawned branches from power 1; max_nodes counts the
// root. Overflow past 64 bits stops the affected branch and sets the
// overflowed flag.
JacobsthalTree build_tree(Variant v, u64 seed, unsigned max_power,
                          std::size_t max_nodes);

// Four consecutive node values of the (theta, rule) branch, starting at the
// index-th node value divisible by three; such values recur every third
// node, so the window is bracketed by them on both ends.
struct Cell {
    u64 theta = 0;
    BranchRule rule = BranchRule::minus_one;
    std::array<u64, 4> values{};
    bool first_bracketed = true;
    bool last_bracketed = true;
};
Cell cell(u64 theta, BranchRule rule, unsigned index);

// Climbs from q_odd's node down through branch powers to the tree root,
// expanded to the full step sequence of the variant's map. Querying the
// root walks its self-cycle once when the tree recorded one.
std::vector<u64> reverse_trajectory(const JacobsthalTree& tree, u64 q_odd);

struct TreeLimits {
    unsigned max_power = 8;
    std::size_t max_nodes = 10000;
};
std::vector<JacobsthalTree> components(Variant v, const std::vector<u64>& seeds,
                                       TreeLimits limits);

std::string export_dot(const JacobsthalTree& tree);
std::string export_json(const JacobsthalTree& tree);
// Parses export_json output and revalidates every structural invariant
// (unique values, node arithmetic, inactive leaves, power spacing).
JacobsthalTree load_tree_json(const std::string& text);

const char* to_string(BranchRule r);

} // namespace jacobstree
