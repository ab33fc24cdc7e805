#include "bgl/proof.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bgl/error.hpp"
#include "bgl/graph_io.hpp"
#include "bgl/semantics.hpp"

namespace bgl {

namespace {

constexpr const char* kRuleNames[] = {"w_r",   "w_l",       "c_r",      "c_l",          "d_and",
                                      "d_or",  "d_and_inv", "d_or_inv", "prime_medial", "module_split"};

struct Draft {
    std::vector<NodeSpec> nodes;
    std::set<IdEdge> edges;

    explicit Draft(const LabelledGraph& g) : nodes(g.nodes()) {
        for (auto& e : g.id_edges()) add_edge(e.first, e.second);
    }
    void add_node(const std::string& id, const std::string& label) { nodes.push_back({id, label}); }
    void add_edge(std::string a, std::string b) {
        if (a > b) std::swap(a, b);
        edges.emplace(std::move(a), std::move(b));
    }
    void remove_edge(std::string a, std::string b) {
        if (a > b) std::swap(a, b);
        edges.erase({a, b});
    }
    void remove_node(const std::string& id) {
        nodes.erase(std::remove_if(nodes.begin(), nodes.end(), [&](const NodeSpec& n) { return n.id == id; }),
                    nodes.end());
        for (auto it = edges.begin(); it != edges.end();)
            it = (it->first == id || it->second == id) ? edges.erase(it) : std::next(it);
    }
    LabelledGraph build() const { return LabelledGraph(nodes, std::vector<IdEdge>(edges.begin(), edges.end())); }
};

NodeSet external(const LabelledGraph& g, const NodeSet& m) {
    NodeSet out = g.none();
    m.for_each([&](int i) { out |= g.neighbours(i); });
    return out - m;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

void require_fresh(const LabelledGraph& g, const std::string& id, const std::set<std::string>& allowed = {}) {
    require(!id.empty(), "empty node id");
    require(g.find(id) < 0 || allowed.count(id), "node id '" + id + "' is already in use");
}

bool clique_split_ok(const LabelledGraph& g, const NodeSet& all, const NodeSet& r0, const NodeSet& r1) {
    auto whole = max_cliques_within(g, all);
    auto a = max_cliques_within(g, r0);
    auto b = max_cliques_within(g, r1);
    std::set<NodeSet> u(a.begin(), a.end());
    u.insert(b.begin(), b.end());
    return u == std::set<NodeSet>(whole.begin(), whole.end());
}

NodeSet block_set(const LabelledGraph& g, const Block& b) { return g.set_of(b); }

const std::vector<Block>& field(const Location& loc, const std::string& key) {
    auto it = loc.find(key);
    if (it == loc.end()) throw InputError("location lacks field '" + key + "'");
    return it->second;
}

const Block& single(const Location& loc, const std::string& key) {
    const auto& f = field(loc, key);
    if (f.size() != 1) throw InputError("field '" + key + "' must be a single block");
    return f.front();
}

const std::string& one_id(const Location& loc, const std::string& key) {
    const auto& b = single(loc, key);
    if (b.size() != 1) throw InputError("field '" + key + "' must name one node");
    return b.front();
}

std::string fresh(const std::string& base, const std::set<std::string>& taken) {
    std::string id = base;
    for (int k = 2; taken.count(id); ++k) id = base + "_" + std::to_string(k);
    return id;
}

std::set<std::string> id_set(const LabelledGraph& g) {
    std::set<std::string> s;
    for (const auto& n : g.nodes()) s.insert(n.id);
    return s;
}

Location loc1(std::initializer_list<std::pair<const std::string, Block>> simple) {
    Location l;
    for (const auto& [k, v] : simple) l[k] = {v};
    return l;
}

bool pairwise_disjoint(const std::vector<NodeSet>& family, std::size_t n) {
    NodeSet seen(n);
    for (const auto& s : family) {
        if (s.intersects(seen)) return false;
        seen |= s;
    }
    return true;
}

}  // namespace

const char* to_string(Rule r) { return kRuleNames[static_cast<int>(r)]; }

std::optional<Rule> parse_rule(std::string_view name) {
    for (int i = 0; i < 10; ++i)
        if (name == kRuleNames[i]) return static_cast<Rule>(i);
    return std::nullopt;
}

void Derivation::push(RuleInstance r, LabelledGraph h) {
    steps.push_back(std::move(r));
    graphs.push_back(std::move(h));
}

LabelledGraph apply_w_r(const LabelledGraph& g, const NodeSet& m, const LabelledGraph& added) {
    require(is_module(g, m), "w_r: location is not a module");
    require(!added.empty(), "w_r: nothing to add");
    for (const auto& n : added.nodes()) require_fresh(g, n.id);
    Draft d(g);
    NodeSet ext = external(g, m);
    for (const auto& n : added.nodes()) {
        d.add_node(n.id, n.label);
        ext.for_each([&](int e) { d.add_edge(n.id, g.id(e)); });
    }
    for (const auto& e : added.id_edges()) d.add_edge(e.first, e.second);
    return d.build();
}

LabelledGraph apply_w_l(const LabelledGraph& g, const NodeSet& m, const NodeSet& deleted) {
    require(is_module(g, m), "w_l: location is not a module");
    require(deleted.subset_of(m) && !deleted.empty(), "w_l: deleted part must be a nonempty part of the module");
    NodeSet kept = m - deleted;
    require(!kept.empty(), "w_l: kept part is empty");
    deleted.for_each([&](int i) { require(kept.subset_of(g.neighbours(i)), "w_l: parts are not fully joined"); });
    Draft d(g);
    deleted.for_each([&](int i) { d.remove_node(g.id(i)); });
    return d.build();
}

LabelledGraph apply_c_r(const LabelledGraph& g, const NodeSet& m, const Block& kept, const Block& deleted) {
    require(is_module(g, m), "c_r: location is not a module");
    require(!kept.empty() && kept.size() == deleted.size(), "c_r: halves must be nonempty and equal in size");
    NodeSet k = g.set_of(kept), del = g.set_of(deleted);
    require(k.size() == kept.size() && del.size() == deleted.size(), "c_r: repeated node in a half");
    require(!k.intersects(del) && (k | del) == m, "c_r: halves must partition the module");
    for (std::size_t i = 0; i < kept.size(); ++i) {
        int a = g.index(kept[i]), b = g.index(deleted[i]);
        require(g.label(a) == g.label(b), "c_r: halves are not label-isomorphic");
        require(!g.neighbours(a).intersects(del), "c_r: halves are joined by an edge");
        for (std::size_t j = 0; j < kept.size(); ++j)
            require(g.adjacent(a, g.index(kept[j])) == g.adjacent(b, g.index(deleted[j])),
                    "c_r: halves are not label-isomorphic");
    }
    Draft d(g);
    for (const auto& id : deleted) d.remove_node(id);
    return d.build();
}

LabelledGraph apply_c_l(const LabelledGraph& g, const Block& module, const Block& copy) {
    NodeSet m = g.set_of(module);
    require(!module.empty() && m.size() == module.size(), "c_l: bad module");
    require(is_module(g, m), "c_l: location is not a module");
    require(copy.size() == module.size(), "c_l: copy ids do not match the module");
    std::set<std::string> seen;
    for (const auto& c : copy) {
        require_fresh(g, c);
        require(seen.insert(c).second, "c_l: repeated copy id");
    }
    Draft d(g);
    NodeSet ext = external(g, m);
    for (std::size_t i = 0; i < module.size(); ++i) {
        int a = g.index(module[i]);
        d.add_node(copy[i], g.label(a));
        ext.for_each([&](int e) { d.add_edge(copy[i], g.id(e)); });
        for (std::size_t j = 0; j < module.size(); ++j) {
            d.add_edge(copy[i], module[j]);
            if (j < i && g.adjacent(a, g.index(module[j]))) d.add_edge(copy[i], copy[j]);
        }
    }
    return d.build();
}

LabelledGraph apply_d_and(const LabelledGraph& g, const std::string& v, const NodeSet& r0, const NodeSet& r1,
                          const std::string& id0, const std::string& id1) {
    int vi = g.index(v);
    const NodeSet& nb = g.neighbours(vi);
    require(r0.subset_of(nb) && r1.subset_of(nb) && (r0 | r1) == nb, "d_and: parts must cover the neighbourhood");
    if (!r0.empty() && !r1.empty())
        require(clique_split_ok(g, nb, r0, r1), "d_and: parts do not split the neighbourhood's maximal cliques");
    require(id0 != id1, "d_and: new ids must differ");
    require_fresh(g, id0, {v});
    require_fresh(g, id1, {v});
    Draft d(g);
    d.remove_node(v);
    d.add_node(id0, g.label(vi));
    d.add_node(id1, g.label(vi));
    r0.for_each([&](int i) { d.add_edge(id0, g.id(i)); });
    r1.for_each([&](int i) { d.add_edge(id1, g.id(i)); });
    return d.build();
}

LabelledGraph apply_d_or(const LabelledGraph& g, const std::string& v, const NodeSet& r0, const NodeSet& r1,
                         const std::string& id0, const std::string& id1) {
    // Complementing reverses entailment, so the isolated-duplicate case is only
    // sound for d_and.
    require(r0.empty() == r1.empty(), "d_or: a one-sided empty part is not sound for the disjunctive flavour");
    return complement(apply_d_and(complement(g), v, r0, r1, id0, id1));
}

LabelledGraph apply_d_and_inv(const LabelledGraph& g, const std::string& v0, const std::string& v1,
                              const std::string& id) {
    int a = g.index(v0), b = g.index(v1);
    require(a != b, "d_and_inv: merged nodes must differ");
    require(g.label(a) == g.label(b), "d_and_inv: merged nodes carry different labels");
    require(!g.adjacent(a, b), "d_and_inv: merged nodes are adjacent");
    const NodeSet &r0 = g.neighbours(a), &r1 = g.neighbours(b);
    require(r0.empty() == r1.empty(), "d_and_inv: exactly one merged node is isolated");
    if (!r0.empty()) require(clique_split_ok(g, r0 | r1, r0, r1), "d_and_inv: not the inverse of a d_and split");
    require_fresh(g, id, {v0, v1});
    Draft d(g);
    d.remove_node(v0);
    d.remove_node(v1);
    d.add_node(id, g.label(a));
    (r0 | r1).for_each([&](int i) { d.add_edge(id, g.id(i)); });
    return d.build();
}

LabelledGraph apply_d_or_inv(const LabelledGraph& g, const std::string& v0, const std::string& v1,
                             const std::string& id) {
    return complement(apply_d_and_inv(complement(g), v0, v1, id));
}

LabelledGraph apply_prime_medial(const LabelledGraph& g, const std::vector<NodeSet>& left,
                                 const std::vector<NodeSet>& right) {
    require(left.size() >= 2 && left.size() == right.size(), "prime_medial: need matching slot lists");
    std::vector<NodeSet> all = left;
    all.insert(all.end(), right.begin(), right.end());
    for (const auto& s : all) require(!s.empty(), "prime_medial: empty slot");
    require(pairwise_disjoint(all, g.size()), "prime_medial: slots overlap");
    NodeSet a = g.none(), b = g.none();
    for (const auto& s : left) a |= s;
    for (const auto& s : right) b |= s;
    require(is_module(g, a | b), "prime_medial: the two sides do not form a module");
    a.for_each([&](int i) { require(!g.neighbours(i).intersects(b), "prime_medial: edge between the sides"); });
    LabelledGraph ga = induced_subgraph(g, a), gb = induced_subgraph(g, b);
    auto shape = [&](const LabelledGraph& side, const std::vector<NodeSet>& slots) {
        std::vector<NodeSet> local;
        for (const auto& s : slots) local.push_back(side.set_of(g.ids(s)));
        for (const auto& s : local) require(is_module(side, s), "prime_medial: slot is not a module of its side");
        return local;
    };
    auto la = shape(ga, left), lb = shape(gb, right);
    const std::size_t n = left.size();
    Draft d(g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool ea = ga.adjacent(la[i].first(), la[j].first());
            bool eb = gb.adjacent(lb[i].first(), lb[j].first());
            require(ea == eb, "prime_medial: the two sides have different shapes");
            if (ea)
                left[i].for_each([&](int x) { right[j].for_each([&](int y) { d.add_edge(g.id(x), g.id(y)); }); });
        }
    return d.build();
}

LabelledGraph apply_module_split(const LabelledGraph& g, const NodeSet& m0, const NodeSet& m1, const NodeSet& r0,
                                 const NodeSet& r1) {
    require(!m0.empty() && !m1.empty() && !m0.intersects(m1), "module_split: bad module halves");
    NodeSet m = m0 | m1;
    require(is_module(g, m), "module_split: location is not a module");
    m0.for_each([&](int i) { require(m1.subset_of(g.neighbours(i)), "module_split: halves are not fully joined"); });
    NodeSet ext = external(g, m);
    require(!r0.empty() && !r1.empty() && !r0.intersects(r1) && (r0 | r1) == ext,
            "module_split: parts must partition the module's neighbourhood");
    r0.for_each([&](int i) { require(!g.neighbours(i).intersects(r1), "module_split: edge between the parts"); });
    Draft d(g);
    m0.for_each([&](int i) {
        m1.for_each([&](int j) { d.remove_edge(g.id(i), g.id(j)); });
        r1.for_each([&](int j) { d.remove_edge(g.id(i), g.id(j)); });
    });
    m1.for_each([&](int i) { r0.for_each([&](int j) { d.remove_edge(g.id(i), g.id(j)); }); });
    return d.build();
}

LabelledGraph apply_rule(const LabelledGraph& g, const RuleInstance& r, const LabelledGraph* target) {
    const Location& l = r.loc;
    auto set = [&](const std::string& key) { return block_set(g, single(l, key)); };
    switch (r.rule) {
        case Rule::w_r: {
            if (r.argument) return apply_w_r(g, set("module"), *r.argument);
            if (!target) throw InputError("w_r: added part unknown");
            const Block& added = single(l, "added");
            for (const auto& id : added) require(target->find(id) >= 0, "w_r: added node missing from the result");
            return apply_w_r(g, set("module"), induced_subgraph(*target, added));
        }
        case Rule::w_l:
            return apply_w_l(g, set("module"), set("deleted"));
        case Rule::c_r:
            return apply_c_r(g, set("module"), single(l, "kept"), single(l, "deleted"));
        case Rule::c_l:
            return apply_c_l(g, single(l, "module"), single(l, "copy"));
        case Rule::d_and:
        case Rule::d_or: {
            const Block& ids = single(l, "new");
            require(ids.size() == 2, "d rule: `new` must name two nodes");
            auto f = r.rule == Rule::d_and ? apply_d_and : apply_d_or;
            return f(g, one_id(l, "pivot"), set("r0"), set("r1"), ids[0], ids[1]);
        }
        case Rule::d_and_inv:
        case Rule::d_or_inv: {
            const Block& m = single(l, "merge");
            require(m.size() == 2, "inverse rule: `merge` must name two nodes");
            auto f = r.rule == Rule::d_and_inv ? apply_d_and_inv : apply_d_or_inv;
            return f(g, m[0], m[1], one_id(l, "new"));
        }
        case Rule::prime_medial: {
            std::vector<NodeSet> a, b;
            for (const auto& blk : field(l, "left")) a.push_back(block_set(g, blk));
            for (const auto& blk : field(l, "right")) b.push_back(block_set(g, blk));
            return apply_prime_medial(g, a, b);
        }
        case Rule::module_split:
            return apply_module_split(g, set("m0"), set("m1"), set("r0"), set("r1"));
    }
    throw InputError("unknown rule");
}

bool is_dnf(const LabelledGraph& g) { return pairwise_disjoint(max_cliques(g), g.size()); }
bool is_cnf(const LabelledGraph& g) { return pairwise_disjoint(max_stable_sets(g), g.size()); }

std::size_t clique_overlap(const LabelledGraph& g) {
    auto mc = max_cliques(g);
    std::size_t total = 0;
    for (std::size_t i = 0; i < mc.size(); ++i)
        for (std::size_t j = i + 1; j < mc.size(); ++j) total += (mc[i] & mc[j]).size();
    return total;
}

NormalForm to_dnf(const LabelledGraph& g, std::size_t max_nodes) {
    NormalForm nf{g, Derivation{{g}, {}}};
    while (true) {
        const LabelledGraph& cur = nf.graph;
        auto mc = max_cliques(cur);
        if (pairwise_disjoint(mc, cur.size())) return nf;
        if (cur.size() > max_nodes)
            throw ResourceError("DNF construction exceeded " + std::to_string(max_nodes) + " nodes (at " +
                                std::to_string(cur.size()) + " nodes, " + std::to_string(mc.size()) + " cliques)");
        std::optional<RuleInstance> step;
        for (int v = 0; v < static_cast<int>(cur.size()) && !step; ++v) {
            std::size_t in = std::count_if(mc.begin(), mc.end(), [&](const NodeSet& s) { return s.contains(v); });
            if (in < 2) continue;
            auto nc = max_cliques_within(cur, cur.neighbours(v));
            const std::size_t k = nc.size();
            // The last clique always lands in r1, so each split is tried once.
            const std::size_t masks = k > 17 ? (std::size_t{1} << 16) : (std::size_t{1} << (k - 1));
            for (std::size_t mask = 1; mask < masks && !step; ++mask) {
                std::vector<NodeSet> a, b;
                NodeSet r0 = cur.none(), r1 = cur.none();
                for (std::size_t i = 0; i < k; ++i) {
                    bool left = i < 63 && (mask >> i & 1);
                    (left ? a : b).push_back(nc[i]);
                    (left ? r0 : r1) |= nc[i];
                }
                if (max_cliques_within(cur, r0) != a || max_cliques_within(cur, r1) != b) continue;
                auto taken = id_set(cur);
                std::string id0 = fresh(cur.id(v) + ".0", taken);
                taken.insert(id0);
                std::string id1 = fresh(cur.id(v) + ".1", taken);
                RuleInstance r;
                r.rule = Rule::d_and;
                r.loc = loc1({{"pivot", {cur.id(v)}}, {"r0", cur.ids(r0)}, {"r1", cur.ids(r1)}, {"new", {id0, id1}}});
                step = r;
            }
        }
        if (!step) throw std::logic_error("no d_and redex found on a graph that is not a DNF");
        LabelledGraph next = apply_rule(cur, *step);
        nf.derivation.push(*step, next);
        nf.graph = std::move(next);
    }
}

NormalForm to_cnf(const LabelledGraph& g, std::size_t max_nodes) {
    NormalForm dual = to_dnf(complement(g), max_nodes);
    NormalForm nf{complement(dual.graph), Derivation{{g}, {}}};
    for (std::size_t k = 0; k < dual.derivation.steps.size(); ++k) {
        RuleInstance r = dual.derivation.steps[k];
        r.rule = Rule::d_or;
        nf.derivation.push(r, complement(dual.derivation.graphs[k + 1]));
    }
    return nf;
}

Derivation derive_dnf_to_dnf(const LabelledGraph& a, const LabelledGraph& b) {
    require(is_dnf(a) && is_dnf(b), "derive_dnf_to_dnf: both graphs must be DNFs");
    require(entails_and(a, b), "derive_dnf_to_dnf: the first DNF does not entail the second");
    Derivation d{{a}, {}};
    LabelledGraph cur = a;
    auto step = [&](RuleInstance r) {
        LabelledGraph next = apply_rule(cur, r);
        d.push(r, next);
        cur = std::move(next);
    };

    const auto ta = max_cliques(a), tb = max_cliques(b);
    std::vector<LabelSet> lb;
    for (const auto& t : tb) lb.push_back(label_set(b, t));
    // Term map: least target term whose labels the source term contains.
    std::vector<int> f(ta.size(), -1);
    std::vector<int> designated(tb.size(), -1);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        LabelSet la = label_set(a, ta[i]);
        for (std::size_t j = 0; j < tb.size() && f[i] < 0; ++j)
            if (std::includes(la.begin(), la.end(), lb[j].begin(), lb[j].end())) f[i] = static_cast<int>(j);
        if (designated[f[i]] < 0) designated[f[i]] = static_cast<int>(i);
    }

    std::set<std::string> reserved = id_set(a);
    for (const auto& n : b.nodes()) reserved.insert(n.id);
    int counter = 0;
    auto temp = [&]() {
        std::string id;
        do id = "_t" + std::to_string(++counter);
        while (reserved.count(id) || cur.find(id) >= 0);
        return id;
    };

    // Rebuild every source term as a copy of its target term.
    std::vector<Block> term_ids(ta.size());
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        const int j = f[i];
        const bool keeper = designated[j] == static_cast<int>(i);
        Block orig = a.ids(ta[i]);
        Block target = b.ids(tb[j]);
        if (keeper && induced_subgraph(a, ta[i]) == induced_subgraph(b, tb[j])) {
            term_ids[i] = orig;
            continue;
        }
        if (!keeper) {
            // Already a copy of the target: the c_r below can take it as it is.
            LabelledGraph sa = induced_subgraph(a, ta[i]);
            if (auto iso = label_isomorphism(induced_subgraph(b, tb[j]), sa)) {
                for (int k : *iso) term_ids[i].push_back(sa.id(k));
                continue;
            }
        }
        Block copies;
        for (const auto& t : target) {
            const std::string& lab = b.label(b.index(t));
            auto src = std::find_if(orig.begin(), orig.end(), [&](const std::string& u) { return a.label(a.index(u)) == lab; });
            std::string want = keeper && cur.find(t) < 0 ? t : temp();
            step({Rule::c_l, loc1({{"module", {*src}}, {"copy", {want}}}), std::nullopt});
            if (want != t) rename[want] = t;
            copies.push_back(want);
        }
        Block module = orig;
        module.insert(module.end(), copies.begin(), copies.end());
        step({Rule::w_l, loc1({{"module", module}, {"deleted", orig}}), std::nullopt});
        term_ids[i] = copies;
    }
    // Contract duplicate copies of a target term onto the designated one.
    for (std::size_t i = 0; i < ta.size(); ++i) {
        const int keep = designated[f[i]];
        if (keep == static_cast<int>(i)) continue;
        Block module = term_ids[keep];
        module.insert(module.end(), term_ids[i].begin(), term_ids[i].end());
        step({Rule::c_r, loc1({{"module", module}, {"kept", term_ids[keep]}, {"deleted", term_ids[i]}}), std::nullopt});
    }
    // Give designated terms their final ids.
    for (std::size_t j = 0; j < tb.size(); ++j) {
        if (designated[j] < 0) continue;
        Block& ids = term_ids[designated[j]];
        for (auto& x : ids) {
            auto it = rename.find(x);
            if (it == rename.end()) continue;
            step({Rule::c_l, loc1({{"module", {x}}, {"copy", {it->second}}}), std::nullopt});
            Block module = ids;
            module.push_back(it->second);
            step({Rule::w_l, loc1({{"module", module}, {"deleted", {x}}}), std::nullopt});
            x = it->second;
        }
    }
    // Weaken in the target terms nothing maps to.
    for (std::size_t j = 0; j < tb.size(); ++j) {
        if (designated[j] >= 0) continue;
        RuleInstance r{Rule::w_r, loc1({{"module", cur.ids(cur.all())}, {"added", b.ids(tb[j])}}),
                       induced_subgraph(b, tb[j])};
        step(r);
    }
    if (cur != b) throw std::logic_error("DNF derivation did not reach its target");
    return d;
}

namespace {

// Complement every graph, reverse the sequence and swap each rule for its dual.
Derivation dualize(const Derivation& x) {
    const std::size_t m = x.steps.size();
    Derivation y{{complement(x.graphs[m])}, {}};
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t s = m - 1 - k;
        const RuleInstance& r = x.steps[s];
        const LabelledGraph& before = x.graphs[s];  // the graph the rule was applied to
        const LabelledGraph& after = x.graphs[s + 1];
        LabelledGraph next = complement(before);
        RuleInstance out;
        const Location& l = r.loc;
        auto join = [](Block p, const Block& q) {
            p.insert(p.end(), q.begin(), q.end());
            return p;
        };
        switch (r.rule) {
            case Rule::w_r:
                out = {Rule::w_l, loc1({{"module", join(single(l, "module"), single(l, "added"))},
                                        {"deleted", single(l, "added")}}), std::nullopt};
                break;
            case Rule::w_l: {
                Block module = single(l, "module"), del = single(l, "deleted");
                Block kept;
                for (const auto& id : module)
                    if (std::find(del.begin(), del.end(), id) == del.end()) kept.push_back(id);
                out = {Rule::w_r, loc1({{"module", kept}, {"added", del}}), induced_subgraph(next, del)};
                break;
            }
            case Rule::c_l:
                out = {Rule::c_r, loc1({{"module", join(single(l, "module"), single(l, "copy"))},
                                        {"kept", single(l, "module")}, {"deleted", single(l, "copy")}}), std::nullopt};
                break;
            case Rule::c_r:
                out = {Rule::c_l, loc1({{"module", single(l, "kept")}, {"copy", single(l, "deleted")}}), std::nullopt};
                break;
            case Rule::d_and:
            case Rule::d_or:
                out = {r.rule == Rule::d_and ? Rule::d_or_inv : Rule::d_and_inv,
                       loc1({{"merge", single(l, "new")}, {"new", single(l, "pivot")}}), std::nullopt};
                break;
            case Rule::d_and_inv:
            case Rule::d_or_inv: {
                const Block& mg = single(l, "merge");
                const LabelledGraph& src = r.rule == Rule::d_and_inv ? before : complement(before);
                NodeSet r0 = src.neighbours(src.index(mg[0])), r1 = src.neighbours(src.index(mg[1]));
                out = {r.rule == Rule::d_and_inv ? Rule::d_or : Rule::d_and,
                       loc1({{"pivot", single(l, "new")}, {"r0", src.ids(r0)}, {"r1", src.ids(r1)}, {"new", mg}}),
                       std::nullopt};
                break;
            }
            default:
                throw InputError(std::string("cannot dualize rule ") + to_string(r.rule));
        }
        (void)after;
        y.push(out, next);
    }
    return y;
}

}  // namespace

Derivation derive_entailment(const LabelledGraph& g, const LabelledGraph& h, Flavor flavor, std::size_t max_nodes) {
    if (flavor == Flavor::Or) {
        require(entails_or(g, h), "derive: the first graph does not entail the second (or)");
        return dualize(derive_entailment(complement(h), complement(g), Flavor::And, max_nodes));
    }
    require(entails_and(g, h), "derive: the first graph does not entail the second (and)");
    if (g == h) return Derivation{{g}, {}};
    NormalForm ng = to_dnf(g, max_nodes);
    NormalForm nh = to_dnf(h, max_nodes);
    Derivation d = ng.derivation;
    Derivation mid = derive_dnf_to_dnf(ng.graph, nh.graph);
    for (std::size_t k = 0; k < mid.steps.size(); ++k) d.push(mid.steps[k], mid.graphs[k + 1]);
    const auto& back = nh.derivation;
    for (std::size_t k = back.steps.size(); k-- > 0;) {
        const Location& l = back.steps[k].loc;
        RuleInstance inv{Rule::d_and_inv, loc1({{"merge", single(l, "new")}, {"new", single(l, "pivot")}}),
                         std::nullopt};
        d.push(inv, back.graphs[k]);
    }
    return d;
}

bool sound_step(const LabelledGraph& g, const LabelledGraph& h, Flavor flavor) {
    return flavor == Flavor::And ? entails_and(g, h) : entails_or(g, h);
}

CheckResult check_derivation(const Derivation& d, std::optional<Flavor> flavor) {
    if (d.graphs.size() != d.steps.size() + 1) return {false, 0, "graph and step counts disagree"};
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        const LabelledGraph& g = d.graphs[k];
        const LabelledGraph& h = d.graphs[k + 1];
        try {
            LabelledGraph got = apply_rule(g, d.steps[k], &h);
            if (got != h) return {false, k + 1, "recorded graph differs from the rule's result"};
        } catch (const InputError& e) {
            return {false, k + 1, e.what()};
        }
        if (flavor && !sound_step(g, h, *flavor))
            return {false, k + 1, std::string("step is not sound for ") + (*flavor == Flavor::And ? "and" : "or")};
    }
    return {};
}

std::string format_derivation(const Derivation& d) {
    auto check_id = [](const std::string& id) {
        if (id.find_first_of(",;=") != std::string::npos)
            throw InputError("node id '" + id + "' cannot be written in a derivation location");
    };
    std::ostringstream os;
    os << "derivation\ngraph 0\n" << format_graph(d.graphs.front()) << "end\n";
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        const RuleInstance& r = d.steps[k];
        os << "step " << (k + 1) << ' ' << to_string(r.rule);
        for (const auto& [key, blocks] : r.loc) {
            os << ' ' << key << '=';
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (b) os << ';';
                for (std::size_t i = 0; i < blocks[b].size(); ++i) {
                    check_id(blocks[b][i]);
                    os << (i ? "," : "") << blocks[b][i];
                }
            }
        }
        os << '\n' << format_graph(d.graphs[k + 1]) << "end\n";
    }
    return os.str();
}

Derivation parse_derivation(std::string_view text) {
    Derivation d;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
    auto read_block = [&]() {
        std::string body;
        std::size_t start = lineno;
        while (std::getline(in, line)) {
            ++lineno;
            auto toks = split_ws(line);
            if (toks.size() == 1 && toks[0] == "end") {
                try {
                    return parse_graph(body);
                } catch (const InputError& e) {
                    throw InputError("block starting at line " + std::to_string(start) + ": " + e.what());
                }
            }
            body += line + "\n";
        }
        fail("missing `end`");
        return LabelledGraph();
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "derivation") continue;
        if (toks[0] == "graph") {
            if (!d.graphs.empty()) fail("second start graph");
            d.graphs.push_back(read_block());
        } else if (toks[0] == "step") {
            if (d.graphs.empty()) fail("step before the start graph");
            if (toks.size() < 3) fail("expected `step <n> <rule> key=value...`");
            if (toks[1] != std::to_string(d.steps.size() + 1)) fail("steps out of order");
            auto rule = parse_rule(toks[2]);
            if (!rule) fail("unknown rule '" + toks[2] + "'");
            RuleInstance r;
            r.rule = *rule;
            for (std::size_t i = 3; i < toks.size(); ++i) {
                auto eq = toks[i].find('=');
                if (eq == std::string::npos) fail("expected key=value, got '" + toks[i] + "'");
                std::vector<Block> blocks;
                std::string val = toks[i].substr(eq + 1);
                if (val.empty())
                    blocks.push_back({});
                else
                    for (auto& part : split_on(val, ';')) blocks.push_back(split_on(part, ','));
                r.loc[toks[i].substr(0, eq)] = blocks;
            }
            d.push(r, read_block());
        } else {
            fail("unexpected '" + toks[0] + "'");
        }
    }
    if (d.graphs.empty()) throw InputError("derivation has no start graph");
    return d;
}

}  // namespace bgl
