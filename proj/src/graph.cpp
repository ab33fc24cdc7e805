#include "bgl/graph.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "bgl/error.hpp"

namespace bgl {

LabelledGraph::LabelledGraph(std::vector<NodeSpec> nodes, const std::vector<IdEdge>& edges) {
    std::sort(nodes.begin(), nodes.end(), [](const NodeSpec& a, const NodeSpec& b) {
        return std::tie(a.label, a.id) < std::tie(b.label, b.id);
    });
    nodes_ = std::move(nodes);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id.empty()) throw InputError("empty node id");
        if (!index_.emplace(nodes_[i].id, static_cast<int>(i)).second)
            throw InputError("duplicate node id '" + nodes_[i].id + "'");
    }
    adj_.assign(nodes_.size(), NodeSet(nodes_.size()));
    for (const auto& [a, b] : edges) {
        int i = index(a), j = index(b);
        if (i == j) throw InputError("self-loop on '" + a + "'");
        adj_[i].insert(j);
        adj_[j].insert(i);
    }
}

int LabelledGraph::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int LabelledGraph::index(const std::string& id) const {
    int i = find(id);
    if (i < 0) throw InputError("unknown node id '" + id + "'");
    return i;
}

std::vector<std::pair<int, int>> LabelledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < size(); ++i)
        adj_[i].for_each([&](int j) {
            if (static_cast<int>(i) < j) out.emplace_back(static_cast<int>(i), j);
        });
    return out;
}

std::vector<IdEdge> LabelledGraph::id_edges() const {
    std::vector<IdEdge> out;
    for (auto [i, j] : edges()) out.emplace_back(id(i), id(j));
    return out;
}

std::size_t LabelledGraph::edge_count() const {
    std::size_t c = 0;
    for (const auto& a : adj_) c += a.size();
    return c / 2;
}

NodeSet LabelledGraph::set_of(const std::vector<std::string>& ids) const {
    NodeSet s = none();
    for (const auto& x : ids) s.insert(index(x));
    return s;
}

std::vector<std::string> LabelledGraph::ids(const NodeSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(id(i)); });
    return out;
}

bool LabelledGraph::is_linear() const {
    for (std::size_t i = 1; i < size(); ++i)
        if (nodes_[i].label == nodes_[i - 1].label) return false;
    return true;
}

bool LabelledGraph::operator==(const LabelledGraph& o) const {
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (nodes_[i].id != o.nodes_[i].id || nodes_[i].label != o.nodes_[i].label) return false;
    return adj_ == o.adj_;
}

LabelledGraph linear_graph(const std::vector<std::string>& names, const std::vector<IdEdge>& edges) {
    std::vector<NodeSpec> ns;
    for (const auto& n : names) ns.push_back({n, n});
    return LabelledGraph(std::move(ns), edges);
}

LabelledGraph complement(const LabelledGraph& g) {
    std::vector<IdEdge> es;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!g.adjacent(i, j)) es.emplace_back(g.id(i), g.id(j));
    return LabelledGraph(g.nodes(), es);
}

LabelledGraph induced_subgraph(const LabelledGraph& g, const NodeSet& x) {
    std::vector<NodeSpec> ns;
    std::vector<IdEdge> es;
    x.for_each([&](int i) {
        ns.push_back(g.nodes()[i]);
        (g.neighbours(i) & x).for_each([&](int j) {
            if (i < j) es.emplace_back(g.id(i), g.id(j));
        });
    });
    return LabelledGraph(std::move(ns), es);
}

LabelledGraph induced_subgraph(const LabelledGraph& g, const std::vector<std::string>& ids) {
    return induced_subgraph(g, g.set_of(ids));
}

bool is_clique(const LabelledGraph& g, const NodeSet& s) {
    bool ok = true;
    s.for_each([&](int i) {
        NodeSet rest = s;
        rest.erase(i);
        if (!rest.subset_of(g.neighbours(i))) ok = false;
    });
    return ok;
}

bool is_stable(const LabelledGraph& g, const NodeSet& s) {
    bool ok = true;
    s.for_each([&](int i) {
        if (g.neighbours(i).intersects(s)) ok = false;
    });
    return ok;
}

namespace {

void bron_kerbosch(const LabelledGraph& g, NodeSet r, NodeSet p, NodeSet x, std::vector<NodeSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot maximising |P cap N(u)|.
    int pivot = -1;
    std::size_t best = 0;
    (p | x).for_each([&](int u) {
        std::size_t c = (p & g.neighbours(u)).size();
        if (pivot < 0 || c > best) {
            pivot = u;
            best = c;
        }
    });
    NodeSet cand = p - g.neighbours(pivot);
    cand.for_each([&](int v) {
        NodeSet r2 = r;
        r2.insert(v);
        bron_kerbosch(g, r2, p & g.neighbours(v), x & g.neighbours(v), out);
        p.erase(v);
        x.insert(v);
    });
}

}  // namespace

std::vector<NodeSet> max_cliques_within(const LabelledGraph& g, const NodeSet& within) {
    std::vector<NodeSet> out;
    if (within.empty()) return out;
    bron_kerbosch(g, g.none(), within, g.none(), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeSet> max_cliques(const LabelledGraph& g) { return max_cliques_within(g, g.all()); }

std::vector<NodeSet> max_stable_sets(const LabelledGraph& g) { return max_cliques(complement(g)); }

bool is_module(const LabelledGraph& g, const NodeSet& m) {
    if (m.empty()) return true;
    int a = m.first();
    NodeSet outside = m.complement();
    NodeSet ref = g.neighbours(a) & outside;
    bool ok = true;
    m.for_each([&](int b) {
        if ((g.neighbours(b) & outside) != ref) ok = false;
    });
    return ok;
}

NodeSet module_closure(const LabelledGraph& g, NodeSet seed) {
    if (seed.empty()) return seed;
    bool grew = true;
    while (grew) {
        grew = false;
        NodeSet outside = seed.complement();
        outside.for_each([&](int z) {
            if (seed.contains(z)) return;
            NodeSet nz = g.neighbours(z) & seed;
            if (!nz.empty() && nz != seed) {
                seed.insert(z);
                grew = true;
            }
        });
    }
    return seed;
}

LabelledGraph quotient(const LabelledGraph& g, const std::vector<NodeSet>& blocks) {
    NodeSet seen = g.none();
    for (const auto& b : blocks) {
        if (b.empty()) throw InputError("empty block in partition");
        if (b.intersects(seen)) throw InputError("blocks overlap");
        if (!is_module(g, b)) throw InputError("block is not a module");
        seen |= b;
    }
    if (seen != g.all()) throw InputError("blocks do not cover the graph");
    std::vector<NodeSpec> ns;
    std::vector<IdEdge> es;
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        int ra = blocks[a].first();
        ns.push_back(g.nodes()[ra]);
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            int rb = blocks[b].first();
            if (g.adjacent(ra, rb)) es.emplace_back(g.id(ra), g.id(rb));
        }
    }
    return LabelledGraph(std::move(ns), es);
}

namespace {

std::vector<NodeSet> components_of(const LabelledGraph& g, bool complemented) {
    std::vector<NodeSet> out;
    NodeSet left = g.all();
    while (!left.empty()) {
        NodeSet comp = g.none();
        int s = left.first();
        comp.insert(s);
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            NodeSet nb = complemented ? g.neighbours(u).complement() : g.neighbours(u);
            nb.erase(u);
            (nb - comp).for_each([&](int v) {
                comp.insert(v);
                stack.push_back(v);
            });
        }
        left -= comp;
        out.push_back(comp);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<NodeSet> components(const LabelledGraph& g) { return components_of(g, false); }
std::vector<NodeSet> co_components(const LabelledGraph& g) { return components_of(g, true); }
bool is_connected(const LabelledGraph& g) { return components(g).size() <= 1; }
bool is_co_connected(const LabelledGraph& g) { return co_components(g).size() <= 1; }

std::optional<std::vector<int>> find_induced_p4(const LabelledGraph& g) {
    // Enumerate the middle edge b-c, then a in N(b)\N[c], d in N(c)\N[b], a !~ d.
    for (auto [b, c] : g.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            int x = dir ? c : b, y = dir ? b : c;
            NodeSet as = g.neighbours(x) - g.neighbours(y);
            as.erase(y);
            NodeSet ds = g.neighbours(y) - g.neighbours(x);
            ds.erase(x);
            for (int a = as.first(); a >= 0; a = as.next(a + 1)) {
                NodeSet d_ok = ds - g.neighbours(a);
                int d = d_ok.first();
                if (d >= 0) return std::vector<int>{a, x, y, d};
            }
        }
    }
    return std::nullopt;
}

bool is_p4_free(const LabelledGraph& g) { return !find_induced_p4(g).has_value(); }

bool is_prime(const LabelledGraph& g) {
    if (g.size() < 3) return false;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (module_closure(g, NodeSet(g.size(), {static_cast<int>(i), static_cast<int>(j)})) != g.all())
                return false;
    return true;
}

namespace {

std::optional<std::vector<int>> find_iso(const LabelledGraph& g, const LabelledGraph& h, bool labelled) {
    const std::size_t n = g.size();
    if (n != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
    std::vector<std::size_t> dg(n), dh(n);
    for (std::size_t i = 0; i < n; ++i) {
        dg[i] = g.neighbours(i).size();
        dh[i] = h.neighbours(i).size();
    }
    {
        auto a = dg, b = dh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    // Map high-degree nodes first; they constrain the search most.
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dg[a] > dg[b]; });
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
        if (k == n) return true;
        int u = order[k];
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || dh[v] != dg[u]) continue;
            if (labelled && g.label(u) != h.label(v)) continue;
            bool ok = true;
            for (std::size_t t = 0; t < k && ok; ++t) {
                int w = order[t];
                if (g.adjacent(u, w) != h.adjacent(v, map[w])) ok = false;
            }
            if (!ok) continue;
            map[u] = static_cast<int>(v);
            used[v] = true;
            if (go(k + 1)) return true;
            used[v] = false;
            map[u] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return map;
}

}  // namespace

bool is_isomorphic(const LabelledGraph& g, const LabelledGraph& h) { return find_iso(g, h, false).has_value(); }

std::optional<std::vector<int>> label_isomorphism(const LabelledGraph& g, const LabelledGraph& h) {
    return find_iso(g, h, true);
}

LabelSet label_set(const LabelledGraph& g, const NodeSet& x) {
    LabelSet out;
    x.for_each([&](int i) { out.insert(g.label(i)); });
    return out;
}

std::vector<std::string> labels_of(const LabelledGraph& g) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (out.empty() || out.back() != g.label(i)) out.push_back(g.label(i));
    return out;
}

NodeSet nodes_with_labels(const LabelledGraph& g, const Assignment& x) {
    NodeSet s = g.none();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (x.count(g.label(i))) s.insert(static_cast<int>(i));
    return s;
}

}  // namespace bgl
