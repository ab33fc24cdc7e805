#pragma once

#include <string>
#include <vector>

#include "bgl/graph.hpp"

namespace bgl {

struct TreeNode {
    enum class Kind { Leaf, Or, And, Prime };
    Kind kind = Kind::Leaf;
    NodeSet cover;              // nodes of the source graph below this node
    std::vector<int> children;  // canonical order: by least covered node
    int parent = -1;
    int vertex = -1;            // Leaf only
    // Prime only: quotient node k is the block of children[k].
    LabelledGraph quotient;
    std::vector<NodeSet> quotient_mc;
    std::vector<NodeSet> quotient_ms;
};

class DecompositionTree {
public:
    DecompositionTree(LabelledGraph g, std::vector<TreeNode> nodes) : g_(std::move(g)), nodes_(std::move(nodes)) {}

    const LabelledGraph& graph() const { return g_; }
    const TreeNode& node(int i) const { return nodes_[i]; }
    std::size_t size() const { return nodes_.size(); }
    int root() const { return 0; }

private:
    LabelledGraph g_;
    std::vector<TreeNode> nodes_;  // preorder
};

enum class GraphClass { Singleton, Disconnected, CoDisconnected, Biconnected };

struct Classification {
    GraphClass kind;
    std::vector<NodeSet> parts;  // components / co-components when (co-)disconnected
};

Classification classify(const LabelledGraph& g);
// Maximal proper modules of a connected and co-connected graph.
std::vector<NodeSet> prime_quotient(const LabelledGraph& g);

DecompositionTree decompose(const LabelledGraph& g);
LabelledGraph compose(const DecompositionTree& t);

// `(or (and a b) (prime P4 c d e (and f g)))`
std::string render_tree(const DecompositionTree& t, int node = 0);
std::string prime_shape_name(const LabelledGraph& q);

std::vector<NodeSet> max_cliques_via_tree(const LabelledGraph& g);
std::vector<NodeSet> max_stable_sets_via_tree(const LabelledGraph& g);

const char* to_string(GraphClass c);

}  // namespace bgl
