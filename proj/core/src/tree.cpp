#include "jacobstree/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace jacobstree {

namespace {

BranchRule rule_for(Variant v) {
    // The plus map inverts through 3q+1 = theta*2^n, i.e. (theta*2^n - 1)/3.
    return v == Variant::plus ? BranchRule::minus_one : BranchRule::plus_one;
}

void validate_seed(u64 seed) {
    if (seed == 0 || seed % 2 == 0)
        throw std::invalid_argument("tree seed must be an odd positive integer");
    if (seed % 3 == 0)
        throw std::domain_error("tree seed must not be divisible by three");
}

struct Entry {
    u64 value;
    u64 theta;
    unsigned power;
    friend bool operator>(const Entry& a, const Entry& b) {
        return std::tie(a.value, a.theta, a.power) >
               std::tie(b.value, b.theta, b.power);
    }
};

} // namespace

JacobsthalTree::JacobsthalTree(Variant v, u64 root)
    : variant_(v), rule_(rule_for(v)), root_(root) {
    TreeNode node;
    node.value = root;
    node.theta = root;
    node.rule = rule_;
    node.active = root % 3 != 0;
    index_.emplace(root, std::move(node));
}

const TreeNode* JacobsthalTree::find(u64 value) const {
    auto it = index_.find(value);
    return it == index_.end() ? nullptr : &it->second;
}

JacobsthalTree build_tree(Variant v, u64 seed, unsigned max_power,
                          std::size_t max_nodes) {
    validate_seed(seed);
    if (max_nodes == 0)
        throw std::invalid_argument("build_tree: max_nodes must be positive");

    JacobsthalTree tree(v, seed);
    const BranchRule rule = tree.rule_;

    auto first_entry = [&](u64 theta, unsigned lo) -> std::optional<Entry> {
        for (unsigned n = lo; n <= max_power; ++n) {
            try {
                if (auto val = node_value(theta, n, rule))
                    return Entry{*val, theta, n};
            } catch (const overflow_error&) {
                tree.overflowed_ = true;
                return std::nullopt;
            }
        }
        return std::nullopt;
    };

    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    if (auto e = first_entry(seed, 0))
        heap.push(*e);

    std::size_t n_nodes = 1; // the root
    while (!heap.empty() && n_nodes < max_nodes) {
        Entry cur = heap.top();
        heap.pop();
        if (auto e = first_entry(cur.theta, cur.power + 2))
            heap.push(*e);
        if (tree.index_.count(cur.value)) {
            tree.cross_links_.push_back({cur.theta, cur.power, cur.value});
            continue;
        }
        TreeNode node;
        node.value = cur.value;
        node.theta = cur.theta;
        node.power = cur.power;
        node.rule = rule;
        node.active = cur.value % 3 != 0;
        node.parent = cur.theta;
        tree.index_.emplace(cur.value, std::move(node));
        tree.index_.at(cur.theta).children.push_back(cur.value);
        tree.discovery_.push_back(cur.value);
        ++n_nodes;
        if (cur.value > 0 && cur.value % 2 == 1 && cur.value % 3 != 0)
            if (auto e = first_entry(cur.value, 1))
                heap.push(*e);
    }
    return tree;
}

Cell cell(u64 theta, BranchRule rule, unsigned index) {
    if (theta == 0 || theta % 2 == 0)
        throw std::invalid_argument("cell: theta must be an odd positive integer");
    if (theta % 3 == 0)
        throw std::domain_error("cell: theta divisible by three has no integer nodes");

    std::vector<u64> vals;
    std::optional<std::size_t> start;
    unsigned mult_seen = 0;
    for (unsigned n = 0;; ++n) {
        if (n > 6u * index + 64)
            throw std::runtime_error("cell: window not found");
        auto v = node_value(theta, n, rule);
        if (!v)
            continue;
        vals.push_back(*v);
        if (*v % 3 == 0 && !start) {
            if (mult_seen == index)
                start = vals.size() - 1;
            ++mult_seen;
        }
        if (start && vals.size() >= *start + 4)
            break;
    }
    Cell c;
    c.theta = theta;
    c.rule = rule;
    std::copy_n(vals.begin() + static_cast<std::ptrdiff_t>(*start), 4,
                c.values.begin());
    c.first_bracketed = c.values.front() % 3 == 0;
    c.last_bracketed = c.values.back() % 3 == 0;
    return c;
}

std::vector<u64> reverse_trajectory(const JacobsthalTree& tree, u64 q_odd) {
    if (q_odd % 2 == 0)
        throw std::invalid_argument("reverse_trajectory: value must be odd");
    if (!tree.find(q_odd))
        throw std::out_of_range("reverse_trajectory: value not in tree");

    auto append_branch_run = [](std::vector<u64>& path, u64 theta, unsigned p) {
        for (unsigned j = p + 1; j-- > 0;)
            path.push_back(require_u64(shl_checked(u128{theta}, j), "reverse value"));
    };

    if (q_odd == tree.root()) {
        for (const CrossLink& cl : tree.cross_links())
            if (cl.value == q_odd && cl.theta == q_odd) {
                std::vector<u64> path{q_odd};
                append_branch_run(path, q_odd, cl.power);
                return path;
            }
        return {q_odd};
    }

    std::vector<u64> path{q_odd};
    u64 cur = q_odd;
    while (cur != tree.root()) {
        const TreeNode* node = tree.find(cur);
        append_branch_run(path, node->theta, *node->power);
        cur = node->theta;
    }
    return path;
}

std::vector<JacobsthalTree> components(Variant v, const std::vector<u64>& seeds,
                                       TreeLimits limits) {
    std::set<u64> distinct(seeds.begin(), seeds.end());
    if (distinct.size() != seeds.size())
        throw std::invalid_argument("components: seeds must be pairwise distinct");
    std::vector<JacobsthalTree> trees;
    trees.reserve(seeds.size());
    for (u64 seed : seeds)
        trees.push_back(build_tree(v, seed, limits.max_power, limits.max_nodes));
    return trees;
}

std::string export_dot(const JacobsthalTree& tree) {
    std::ostringstream os;
    os << "digraph jacobsthal_tree {\n  rankdir=TB;\n";
    auto stmt = [&](u64 value) {
        const TreeNode* node = tree.find(value);
        os << "  \"" << value << '"';
        if (value == tree.root())
            os << " [shape=doublecircle]";
        else if (!node->active)
            os << " [shape=box]";
        os << ";\n";
    };
    stmt(tree.root());
    for (u64 v : tree.discovery())
        stmt(v);
    for (u64 v : tree.discovery())
        os << "  \"" << tree.find(v)->theta << "\" -> \"" << v << "\";\n";
    for (const CrossLink& cl : tree.cross_links())
        os << "  \"" << cl.theta << "\" -> \"" << cl.value
           << "\" [style=dashed];\n";
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::json node_to_json(const TreeNode& node) {
    nlohmann::json j{
        {"value", node.value},
        {"theta", node.theta},
        {"rule", to_string(node.rule)},
        {"active", node.active},
        {"children", node.children},
    };
    j["power"] = node.power ? nlohmann::json(*node.power) : nlohmann::json();
    j["parent"] = node.parent ? nlohmann::json(*node.parent) : nlohmann::json();
    return j;
}

} // namespace

std::string export_json(const JacobsthalTree& tree) {
    nlohmann::json nodes = nlohmann::json::array();
    nodes.push_back(node_to_json(*tree.find(tree.root())));
    for (u64 v : tree.discovery())
        nodes.push_back(node_to_json(*tree.find(v)));
    nlohmann::json links = nlohmann::json::array();
    for (const CrossLink& cl : tree.cross_links())
        links.push_back({{"theta", cl.theta}, {"power", cl.power}, {"value", cl.value}});
    nlohmann::json doc{
        {"variant", to_string(tree.variant())},
        {"rule", to_string(tree.rule())},
        {"seeds", {tree.root()}},
        {"overflowed", tree.overflowed()},
        {"nodes", std::move(nodes)},
        {"cross_links", std::move(links)},
    };
    return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void bad_tree(const std::string& what) {
    throw std::runtime_error("tree json: " + what);
}

} // namespace

JacobsthalTree load_tree_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);

    std::string vs = doc.at("variant").get<std::string>();
    Variant v;
    if (vs == "plus")
        v = Variant::plus;
    else if (vs == "minus")
        v = Variant::minus;
    else
        bad_tree("unknown variant " + vs);
    if (doc.at("rule").get<std::string>() != to_string(rule_for(v)))
        bad_tree("rule does not match variant");

    auto& seeds = doc.at("seeds");
    if (!seeds.is_array() || seeds.size() != 1)
        bad_tree("expected exactly one seed");
    u64 root = seeds[0].get<u64>();

    JacobsthalTree tree(v, root);
    tree.overflowed_ = doc.value("overflowed", false);
    const BranchRule rule = tree.rule_;

    auto& nodes = doc.at("nodes");
    if (!nodes.is_array() || nodes.empty())
        bad_tree("missing nodes");
    if (nodes[0].at("value").get<u64>() != root ||
        !nodes[0].at("power").is_null() || !nodes[0].at("parent").is_null())
        bad_tree("first node must be the root");

    for (std::size_t i = 1; i < nodes.size(); ++i) {
        auto& nj = nodes[i];
        TreeNode node;
        node.value = nj.at("value").get<u64>();
        node.theta = nj.at("theta").get<u64>();
        node.rule = rule;
        if (nj.at("rule").get<std::string>() != to_string(rule))
            bad_tree("node rule mismatch");
        if (nj.at("power").is_null() || nj.at("parent").is_null())
            bad_tree("non-root node lacks power or parent");
        node.power = nj.at("power").get<unsigned>();
        node.parent = nj.at("parent").get<u64>();
        node.active = nj.at("active").get<bool>();

        if (node.active != (node.value % 3 != 0))
            bad_tree("active flag contradicts value");
        if (*node.parent != node.theta)
            bad_tree("parent is not the branch owner");
        if (!tree.index_.count(node.theta))
            bad_tree("branch owner appears after its child");
        auto expect = node_value(node.theta, *node.power, rule);
        if (!expect || *expect != node.value)
            bad_tree("node value fails the branch arithmetic");
        if (tree.index_.count(node.value))
            bad_tree("duplicate node value");

        tree.index_.emplace(node.value, std::move(node));
        tree.discovery_.push_back(nj.at("value").get<u64>());
    }

    // Children must match what each branch actually discovered, in order.
    for (u64 vval : tree.discovery_)
        tree.index_.at(tree.index_.at(vval).theta).children.push_back(vval);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        u64 vv = nodes[i].at("value").get<u64>();
        auto claimed = nodes[i].at("children").get<std::vector<u64>>();
        if (claimed != tree.index_.at(vv).children)
            bad_tree("children list disagrees with discovery order");
    }
    for (auto& [vv, node] : tree.index_)
        if (!node.active && !node.children.empty())
            bad_tree("inactive node has children");

    for (auto& lj : doc.value("cross_links", nlohmann::json::array())) {
        CrossLink cl{lj.at("theta").get<u64>(), lj.at("power").get<unsigned>(),
                     lj.at("value").get<u64>()};
        if (!tree.index_.count(cl.value))
            bad_tree("cross-link targets a missing value");
        auto expect = node_value(cl.theta, cl.power, rule);
        if (!expect || *expect != cl.value)
            bad_tree("cross-link fails the branch arithmetic");
        tree.cross_links_.push_back(cl);
    }

    // Along any branch the occupied powers (nodes and cross-links merged)
    // step by exactly two.
    std::unordered_map<u64, std::vector<unsigned>> powers;
    for (auto& [vv, node] : tree.index_)
        if (node.power)
            powers[node.theta].push_back(*node.power);
    for (const CrossLink& cl : tree.cross_links_)
        powers[cl.theta].push_back(cl.power);
    for (auto& [theta, ps] : powers) {
        std::sort(ps.begin(), ps.end());
        for (std::size_t i = 1; i < ps.size(); ++i)
            if (ps[i] - ps[i - 1] != 2)
                bad_tree("branch powers are not spaced by two");
    }
    return tree;
}

const char* to_string(BranchRule r) {
    return r == BranchRule::minus_one ? "minus_one" : "plus_one";
}

} // namespace jacobstree
