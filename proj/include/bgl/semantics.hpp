#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bgl/graph.hpp"

namespace bgl {

// Subset of {0,1}.
struct EvalResult {
    bool zero = false;
    bool one = false;

    bool deterministic() const { return !(zero && one); }
    bool total() const { return zero || one; }
    std::string str() const;  // "{}", "{0}", "{1}", "{0,1}"
    bool operator==(const EvalResult&) const = default;
};

EvalResult evaluate(const LabelledGraph& g, const Assignment& x);
// Recursion on the decomposition tree; g must be nonempty.
EvalResult evaluate_recursive(const LabelledGraph& g, const Assignment& x);
class DecompositionTree;
// Evaluation of the module below a tree node, by the same recursion.
EvalResult evaluate_tree(const DecompositionTree& t, int node, const Assignment& x);

// Evaluates one graph under many assignments without recomputing MC/MS.
class Evaluator {
public:
    explicit Evaluator(const LabelledGraph& g);
    EvalResult operator()(const Assignment& x) const;
    EvalResult on_nodes(const NodeSet& true_nodes) const;

    const std::vector<NodeSet>& mc() const { return mc_; }
    const std::vector<NodeSet>& ms() const { return ms_; }

private:
    const LabelledGraph* g_;
    std::vector<NodeSet> mc_, ms_;
};

bool entails_and(const LabelledGraph& g, const LabelledGraph& h);
bool entails_or(const LabelledGraph& g, const LabelledGraph& h);

// Every maximal clique meets every maximal stable set.
bool is_cis(const LabelledGraph& g);
// Brute force over assignments to the labels (at most 20 labels).
bool is_deterministic(const LabelledGraph& g);
bool is_total(const LabelledGraph& g);
std::optional<Assignment> totality_witness(const LabelledGraph& g);
std::optional<Assignment> determinism_witness(const LabelledGraph& g);

// Calls f on every assignment over the labels of g, in mask order.
void for_each_assignment(const std::vector<std::string>& labels, const std::function<void(const Assignment&)>& f);

bool is_selection(const LabelledGraph& g, const NodeSet& y, const std::vector<NodeSet>& sel);
bool is_covering(const LabelledGraph& g, const NodeSet& y, const std::vector<NodeSet>& sel);

}  // namespace bgl
