#include "bgl/semantics.hpp"

#include <algorithm>

#include "bgl/decomposition.hpp"
#include "bgl/error.hpp"

namespace bgl {

std::string EvalResult::str() const {
    if (zero && one) return "{0,1}";
    if (zero) return "{0}";
    if (one) return "{1}";
    return "{}";
}

Evaluator::Evaluator(const LabelledGraph& g) : g_(&g), mc_(max_cliques(g)), ms_(max_stable_sets(g)) {}

EvalResult Evaluator::on_nodes(const NodeSet& xs) const {
    EvalResult r;
    for (const auto& s : mc_)
        if (s.subset_of(xs)) {
            r.one = true;
            break;
        }
    for (const auto& t : ms_)
        if (!t.intersects(xs)) {
            r.zero = true;
            break;
        }
    return r;
}

EvalResult Evaluator::operator()(const Assignment& x) const { return on_nodes(nodes_with_labels(*g_, x)); }

EvalResult evaluate(const LabelledGraph& g, const Assignment& x) { return Evaluator(g)(x); }

namespace {

EvalResult eval_node(const DecompositionTree& t, int n, const Assignment& x) {
    const TreeNode& node = t.node(n);
    if (node.kind == TreeNode::Kind::Leaf) {
        bool in = x.count(t.graph().label(node.vertex)) > 0;
        return {!in, in};
    }
    std::vector<EvalResult> kids;
    for (int c : node.children) kids.push_back(eval_node(t, c, x));
    EvalResult r;
    switch (node.kind) {
        case TreeNode::Kind::Or:
            r.one = std::any_of(kids.begin(), kids.end(), [](auto& k) { return k.one; });
            r.zero = std::all_of(kids.begin(), kids.end(), [](auto& k) { return k.zero; });
            break;
        case TreeNode::Kind::And:
            r.one = std::all_of(kids.begin(), kids.end(), [](auto& k) { return k.one; });
            r.zero = std::any_of(kids.begin(), kids.end(), [](auto& k) { return k.zero; });
            break;
        case TreeNode::Kind::Prime: {
            // Positive blocks evaluate to 1; negative blocks fail to evaluate to 0.
            NodeSet pos(kids.size()), neg(kids.size());
            for (std::size_t k = 0; k < kids.size(); ++k) {
                if (kids[k].one) pos.insert(static_cast<int>(k));
                if (!kids[k].zero) neg.insert(static_cast<int>(k));
            }
            for (const auto& s : node.quotient_mc)
                if (s.subset_of(pos)) r.one = true;
            for (const auto& s : node.quotient_ms)
                if (!s.intersects(neg)) r.zero = true;
            break;
        }
        default:
            break;
    }
    return r;
}

// Every set in `from` contains the labels of some set in `to`.
bool label_containment(const LabelledGraph& a, const std::vector<NodeSet>& from, const LabelledGraph& b,
                       const std::vector<NodeSet>& to) {
    std::vector<LabelSet> targets;
    for (const auto& t : to) targets.push_back(label_set(b, t));
    for (const auto& s : from) {
        LabelSet ls = label_set(a, s);
        bool found = std::any_of(targets.begin(), targets.end(), [&](const LabelSet& t) {
            return std::includes(ls.begin(), ls.end(), t.begin(), t.end());
        });
        if (!found) return false;
    }
    return true;
}

std::optional<Assignment> find_assignment(const LabelledGraph& g, bool (*bad)(const EvalResult&)) {
    auto labels = labels_of(g);
    if (labels.size() > 20) throw ResourceError("more than 20 labels; exhaustive check refused");
    Evaluator ev(g);
    std::optional<Assignment> found;
    for (std::size_t m = 0; m < (std::size_t{1} << labels.size()) && !found; ++m) {
        Assignment x;
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (m >> k & 1) x.insert(labels[k]);
        if (bad(ev(x))) found = x;
    }
    return found;
}

}  // namespace

EvalResult evaluate_tree(const DecompositionTree& t, int node, const Assignment& x) { return eval_node(t, node, x); }

EvalResult evaluate_recursive(const LabelledGraph& g, const Assignment& x) {
    if (g.empty()) throw InputError("recursive evaluation needs a nonempty graph");
    return eval_node(decompose(g), 0, x);
}

bool entails_and(const LabelledGraph& g, const LabelledGraph& h) {
    return label_containment(g, max_cliques(g), h, max_cliques(h));
}

bool entails_or(const LabelledGraph& g, const LabelledGraph& h) {
    return label_containment(h, max_stable_sets(h), g, max_stable_sets(g));
}

bool is_cis(const LabelledGraph& g) {
    auto mc = max_cliques(g);
    auto ms = max_stable_sets(g);
    for (const auto& s : mc)
        for (const auto& t : ms)
            if (!s.intersects(t)) return false;
    return true;
}

void for_each_assignment(const std::vector<std::string>& labels, const std::function<void(const Assignment&)>& f) {
    if (labels.size() > 20) throw ResourceError("more than 20 labels; exhaustive check refused");
    for (std::size_t m = 0; m < (std::size_t{1} << labels.size()); ++m) {
        Assignment x;
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (m >> k & 1) x.insert(labels[k]);
        f(x);
    }
}

std::optional<Assignment> totality_witness(const LabelledGraph& g) {
    return find_assignment(g, [](const EvalResult& r) { return !r.total(); });
}

std::optional<Assignment> determinism_witness(const LabelledGraph& g) {
    return find_assignment(g, [](const EvalResult& r) { return !r.deterministic(); });
}

bool is_total(const LabelledGraph& g) { return !totality_witness(g).has_value(); }
bool is_deterministic(const LabelledGraph& g) { return !determinism_witness(g).has_value(); }

bool is_selection(const LabelledGraph& g, const NodeSet& y, const std::vector<NodeSet>& sel) {
    auto ms = max_stable_sets(g);
    if (sel.size() != y.size()) return false;
    NodeSet hit = g.none();
    for (const auto& t : sel) {
        if (std::find(ms.begin(), ms.end(), t) == ms.end()) return false;
        NodeSet meet = t & y;
        if (meet.size() != 1) return false;
        hit |= meet;
    }
    return hit == y;
}

bool is_covering(const LabelledGraph& g, const NodeSet& y, const std::vector<NodeSet>& sel) {
    if (!is_selection(g, y, sel)) return false;
    NodeSet uni = g.none();
    for (const auto& t : sel) uni |= t;
    for (const auto& d : max_stable_sets(g))
        if (d.subset_of(uni) && !d.intersects(y)) return true;
    return false;
}

}  // namespace bgl
