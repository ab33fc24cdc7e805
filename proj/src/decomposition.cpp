#include "bgl/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "bgl/error.hpp"

namespace bgl {

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Singleton: return "singleton";
        case GraphClass::Disconnected: return "disconnected";
        case GraphClass::CoDisconnected: return "co-disconnected";
        case GraphClass::Biconnected: return "biconnected";
    }
    return "?";
}

Classification classify(const LabelledGraph& g) {
    if (g.empty()) throw InputError("cannot classify the empty graph");
    if (g.size() == 1) return {GraphClass::Singleton, {g.all()}};
    auto comps = components(g);
    if (comps.size() > 1) return {GraphClass::Disconnected, comps};
    auto cocomps = co_components(g);
    if (cocomps.size() > 1) return {GraphClass::CoDisconnected, cocomps};
    return {GraphClass::Biconnected, {}};
}

std::vector<NodeSet> prime_quotient(const LabelledGraph& g) {
    if (g.empty() || classify(g).kind != GraphClass::Biconnected)
        throw InputError("prime quotient needs a connected and co-connected graph");
    const int n = static_cast<int>(g.size());
    std::vector<NodeSet> blocks;
    NodeSet covered = g.none();
    for (int v = 0; v < n; ++v) {
        if (covered.contains(v)) continue;
        NodeSet block = g.none();
        block.insert(v);
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            NodeSet m = module_closure(g, NodeSet(g.size(), {v, w}));
            if (m != g.all()) block |= m;
        }
        covered |= block;
        blocks.push_back(block);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

namespace {

// Indices of `sub` (an induced subgraph of g on `cover`) mapped back to g.
NodeSet lift(const NodeSet& s, const std::vector<int>& members, std::size_t n) {
    NodeSet out(n);
    s.for_each([&](int i) { out.insert(members[i]); });
    return out;
}

int build(const LabelledGraph& g, const NodeSet& cover, int parent, std::vector<TreeNode>& out) {
    int me = static_cast<int>(out.size());
    out.emplace_back();
    out[me].cover = cover;
    out[me].parent = parent;
    if (cover.size() == 1) {
        out[me].kind = TreeNode::Kind::Leaf;
        out[me].vertex = cover.first();
        return me;
    }
    auto members = cover.members();
    LabelledGraph sub = induced_subgraph(g, cover);
    Classification c = classify(sub);
    std::vector<NodeSet> parts;
    TreeNode::Kind kind;
    if (c.kind == GraphClass::Disconnected) {
        kind = TreeNode::Kind::Or;
        parts = c.parts;
    } else if (c.kind == GraphClass::CoDisconnected) {
        kind = TreeNode::Kind::And;
        parts = c.parts;
    } else {
        kind = TreeNode::Kind::Prime;
        parts = prime_quotient(sub);
        LabelledGraph q = quotient(sub, parts);
        if (!is_prime(q)) throw std::logic_error("prime quotient is not prime");
        // Quotient node k is the representative of parts[k] in canonical order.
        for (std::size_t k = 0; k < parts.size(); ++k)
            if (q.id(static_cast<int>(k)) != sub.id(parts[k].first()))
                throw std::logic_error("quotient order differs from child order");
        out[me].quotient_mc = max_cliques(q);
        out[me].quotient_ms = max_stable_sets(q);
        out[me].quotient = std::move(q);
    }
    out[me].kind = kind;
    std::vector<int> kids;
    for (const auto& p : parts) kids.push_back(build(g, lift(p, members, g.size()), me, out));
    out[me].children = std::move(kids);
    return me;
}

}  // namespace

DecompositionTree decompose(const LabelledGraph& g) {
    if (g.empty()) throw InputError("cannot decompose the empty graph");
    std::vector<TreeNode> nodes;
    build(g, g.all(), -1, nodes);
    return DecompositionTree(g, std::move(nodes));
}

LabelledGraph compose(const DecompositionTree& t) {
    const LabelledGraph& g = t.graph();
    std::vector<IdEdge> edges;
    for (std::size_t n = 0; n < t.size(); ++n) {
        const TreeNode& node = t.node(static_cast<int>(n));
        if (node.kind == TreeNode::Kind::Leaf || node.kind == TreeNode::Kind::Or) continue;
        const auto& ch = node.children;
        for (std::size_t a = 0; a < ch.size(); ++a)
            for (std::size_t b = a + 1; b < ch.size(); ++b) {
                bool joined = node.kind == TreeNode::Kind::And ||
                              node.quotient.adjacent(static_cast<int>(a), static_cast<int>(b));
                if (!joined) continue;
                t.node(ch[a]).cover.for_each([&](int u) {
                    t.node(ch[b]).cover.for_each([&](int v) { edges.emplace_back(g.id(u), g.id(v)); });
                });
            }
    }
    std::vector<NodeSpec> nodes;
    for (std::size_t n = 0; n < t.size(); ++n)
        if (t.node(static_cast<int>(n)).kind == TreeNode::Kind::Leaf)
            nodes.push_back(g.nodes()[t.node(static_cast<int>(n)).vertex]);
    return LabelledGraph(std::move(nodes), edges);
}

std::string prime_shape_name(const LabelledGraph& q) {
    static const std::vector<std::pair<std::string, LabelledGraph>> shapes = [] {
        std::vector<std::pair<std::string, LabelledGraph>> s;
        s.emplace_back("P4", linear_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
        LabelledGraph p5 = linear_graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
        s.emplace_back("P5", p5);
        s.emplace_back("House", complement(p5));
        s.emplace_back("C5", linear_graph({"a", "b", "c", "d", "e"},
                                          {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}}));
        s.emplace_back("Bull", linear_graph({"a", "b", "c", "d", "e"},
                                            {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"b", "d"}, {"c", "e"}}));
        return s;
    }();
    for (const auto& [name, shape] : shapes)
        if (is_isomorphic(q, shape)) return name;
    return "Q" + std::to_string(q.size());
}

std::string render_tree(const DecompositionTree& t, int n) {
    const TreeNode& node = t.node(n);
    const LabelledGraph& g = t.graph();
    if (node.kind == TreeNode::Kind::Leaf) {
        const auto& id = g.id(node.vertex);
        const auto& label = g.label(node.vertex);
        return id == label ? id : id + ":" + label;
    }
    std::string out = "(";
    switch (node.kind) {
        case TreeNode::Kind::Or: out += "or"; break;
        case TreeNode::Kind::And: out += "and"; break;
        default: out += "prime " + prime_shape_name(node.quotient); break;
    }
    for (int c : node.children) out += " " + render_tree(t, c);
    return out + ")";
}

namespace {

std::vector<NodeSet> product(const std::vector<std::vector<NodeSet>>& factors, std::size_t n) {
    std::vector<NodeSet> acc{NodeSet(n)};
    for (const auto& f : factors) {
        std::vector<NodeSet> next;
        for (const auto& a : acc)
            for (const auto& b : f) next.push_back(a | b);
        acc = std::move(next);
    }
    return acc;
}

std::vector<NodeSet> via_tree(const DecompositionTree& t, int n, bool cliques) {
    const TreeNode& node = t.node(n);
    std::size_t size = t.graph().size();
    if (node.kind == TreeNode::Kind::Leaf) return {NodeSet(size, {node.vertex})};
    std::vector<std::vector<NodeSet>> parts;
    for (int c : node.children) parts.push_back(via_tree(t, c, cliques));
    bool unite = (node.kind == TreeNode::Kind::Or) == cliques;
    if (node.kind == TreeNode::Kind::Prime) {
        std::vector<NodeSet> out;
        for (const auto& sel : cliques ? node.quotient_mc : node.quotient_ms) {
            std::vector<std::vector<NodeSet>> chosen;
            sel.for_each([&](int k) { chosen.push_back(parts[k]); });
            for (auto& s : product(chosen, size)) out.push_back(std::move(s));
        }
        return out;
    }
    if (unite) {
        std::vector<NodeSet> out;
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    }
    return product(parts, size);
}

}  // namespace

std::vector<NodeSet> max_cliques_via_tree(const LabelledGraph& g) {
    auto out = via_tree(decompose(g), 0, true);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeSet> max_stable_sets_via_tree(const LabelledGraph& g) {
    auto out = via_tree(decompose(g), 0, false);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bgl
