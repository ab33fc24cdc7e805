#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bgl/nodeset.hpp"

namespace bgl {

// A Boolean assignment, identified with its set of true variables.
using Assignment = std::set<std::string>;
using LabelSet = std::set<std::string>;

struct NodeSpec {
    std::string id;
    std::string label;
};

using IdEdge = std::pair<std::string, std::string>;

// Finite simple loopless undirected graph with a label per node. Nodes are
// stored in canonical order, sorted by (label, id), so node index order is the
// canonical order everywhere in the library.
class LabelledGraph {
public:
    LabelledGraph() = default;
    LabelledGraph(std::vector<NodeSpec> nodes, const std::vector<IdEdge>& edges);

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

    const std::string& id(int i) const { return nodes_[i].id; }
    const std::string& label(int i) const { return nodes_[i].label; }
    const std::vector<NodeSpec>& nodes() const { return nodes_; }

    int find(const std::string& id) const;
    int index(const std::string& id) const;  // throws InputError

    bool adjacent(int i, int j) const { return adj_[i].contains(j); }
    const NodeSet& neighbours(int i) const { return adj_[i]; }

    std::vector<std::pair<int, int>> edges() const;
    std::vector<IdEdge> id_edges() const;
    std::size_t edge_count() const;

    NodeSet none() const { return NodeSet(size()); }
    NodeSet all() const { return NodeSet::full(size()); }
    NodeSet set_of(const std::vector<std::string>& ids) const;
    std::vector<std::string> ids(const NodeSet& s) const;

    bool is_linear() const;
    bool operator==(const LabelledGraph& o) const;
    bool operator!=(const LabelledGraph& o) const { return !(*this == o); }

private:
    std::vector<NodeSpec> nodes_;
    std::vector<NodeSet> adj_;
    std::map<std::string, int> index_;
};

// Linear graph with id = label for every node.
LabelledGraph linear_graph(const std::vector<std::string>& names, const std::vector<IdEdge>& edges);

LabelledGraph complement(const LabelledGraph& g);
LabelledGraph induced_subgraph(const LabelledGraph& g, const NodeSet& x);
LabelledGraph induced_subgraph(const LabelledGraph& g, const std::vector<std::string>& ids);

bool is_clique(const LabelledGraph& g, const NodeSet& s);
bool is_stable(const LabelledGraph& g, const NodeSet& s);

// Maximal cliques / stable sets, sorted in canonical order.
std::vector<NodeSet> max_cliques(const LabelledGraph& g);
std::vector<NodeSet> max_stable_sets(const LabelledGraph& g);
// Maximal cliques of the subgraph induced by `within`, as subsets of g's nodes.
std::vector<NodeSet> max_cliques_within(const LabelledGraph& g, const NodeSet& within);

bool is_module(const LabelledGraph& g, const NodeSet& m);
// Smallest module containing seed.
NodeSet module_closure(const LabelledGraph& g, NodeSet seed);

// Quotient by a partition into modules. Block nodes take the id and label of
// the block's least node.
LabelledGraph quotient(const LabelledGraph& g, const std::vector<NodeSet>& blocks);

std::vector<NodeSet> components(const LabelledGraph& g);
std::vector<NodeSet> co_components(const LabelledGraph& g);
bool is_connected(const LabelledGraph& g);
bool is_co_connected(const LabelledGraph& g);

// Nodes a-b-c-d of an induced P4 (path order), if any.
std::optional<std::vector<int>> find_induced_p4(const LabelledGraph& g);
bool is_p4_free(const LabelledGraph& g);
bool is_prime(const LabelledGraph& g);

// Isomorphism ignoring labels.
bool is_isomorphic(const LabelledGraph& g, const LabelledGraph& h);
// Label-preserving isomorphism; returns map from g's indices to h's indices.
std::optional<std::vector<int>> label_isomorphism(const LabelledGraph& g, const LabelledGraph& h);

LabelSet label_set(const LabelledGraph& g, const NodeSet& x);
std::vector<std::string> labels_of(const LabelledGraph& g);  // sorted, distinct

// Nodes whose label is in x.
NodeSet nodes_with_labels(const LabelledGraph& g, const Assignment& x);

}  // namespace bgl
