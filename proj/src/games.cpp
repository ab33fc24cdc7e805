#include "bgl/games.hpp"

#include <algorithm>

#include "bgl/error.hpp"
#include "bgl/semantics.hpp"

namespace bgl {

const char* to_string(Player p) { return p == Player::Eloise ? "Eloise" : "Abelard"; }

const char* to_string(Winner w) {
    switch (w) {
        case Winner::Eloise: return "Eloise";
        case Winner::Abelard: return "Abelard";
        case Winner::Draw: return "Draw";
    }
    return "?";
}

Player opponent(Player p) { return p == Player::Eloise ? Player::Abelard : Player::Eloise; }

namespace {

int static_choice(const Strategy& s, int node, int options) {
    auto it = s.choice.find(node);
    if (it == s.choice.end())
        throw InputError(std::string(to_string(s.player)) + " strategy has no choice at tree node " +
                         std::to_string(node));
    if (it->second < 0 || it->second >= options)
        throw InputError("choice out of range at tree node " + std::to_string(node));
    return it->second;
}

int reactive_choice(const Strategy& s, int node, int seen, int options) {
    auto it = s.reaction.find(node);
    if (it == s.reaction.end() || seen >= static_cast<int>(it->second.size()))
        throw InputError(std::string(to_string(s.player)) + " reaction is not total at tree node " +
                         std::to_string(node));
    int c = it->second[seen];
    if (c < 0 || c >= options) throw InputError("reaction out of range at tree node " + std::to_string(node));
    return c;
}

Winner as_winner(Player p) { return p == Player::Eloise ? Winner::Eloise : Winner::Abelard; }

bool owns(const TreeNode& n, Player p) {
    if (n.kind == TreeNode::Kind::Prime) return true;
    return p == Player::Eloise ? n.kind == TreeNode::Kind::Or : n.kind == TreeNode::Kind::And;
}

int own_options(const TreeNode& n, Player p) {
    if (n.kind != TreeNode::Kind::Prime) return static_cast<int>(n.children.size());
    return static_cast<int>(p == Player::Eloise ? n.quotient_mc.size() : n.quotient_ms.size());
}

// One odometer digit of a strategy: tree node, and for reactions which
// opponent option it answers (-1 for a plain choice).
struct Slot {
    int node;
    int seen;
    int options;
};

std::vector<Slot> slots_for(const DecompositionTree& t, Player p, Mode m) {
    std::vector<Slot> out;
    for (int n = 0; n < static_cast<int>(t.size()); ++n) {
        const TreeNode& node = t.node(n);
        if (!owns(node, p)) continue;
        int k = own_options(node, p);
        if (node.kind == TreeNode::Kind::Prime && m == Mode::Reactionary) {
            int opp = own_options(node, opponent(p));
            for (int s = 0; s < opp; ++s) out.push_back({n, s, k});
        } else {
            out.push_back({n, -1, k});
        }
    }
    return out;
}

std::size_t count_of(const std::vector<Slot>& slots, std::size_t cap) {
    std::size_t c = 1;
    for (const auto& s : slots) {
        if (c > cap / static_cast<std::size_t>(s.options)) return cap + 1;
        c *= static_cast<std::size_t>(s.options);
    }
    return c;
}

Strategy build(Player p, Mode m, const std::vector<Slot>& slots, const std::vector<int>& digits) {
    Strategy s;
    s.player = p;
    s.mode = m;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].seen < 0) {
            s.choice[slots[i].node] = digits[i];
        } else {
            auto& v = s.reaction[slots[i].node];
            if (static_cast<int>(v.size()) <= slots[i].seen) v.resize(slots[i].seen + 1, 0);
            v[slots[i].seen] = digits[i];
        }
    }
    return s;
}

bool advance(std::vector<int>& digits, const std::vector<Slot>& slots) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < slots[i].options) return true;
        digits[i] = 0;
    }
    return false;
}

std::optional<Strategy> search(const LabelledGraph& g, const Assignment& x, Player p, Mode mode, Goal goal,
                               std::size_t budget) {
    if (g.empty()) throw InputError("games need a nonempty graph");
    DecompositionTree t = decompose(g);
    auto own = slots_for(t, p, mode);
    auto opp = slots_for(t, opponent(p), Mode::Static);
    std::size_t a = count_of(own, budget), b = count_of(opp, budget);
    if (a > budget || b > budget || a * b > budget)
        throw ResourceError("strategy space exceeds the search budget of " + std::to_string(budget));
    std::optional<Player> second;
    if (mode == Mode::Reactionary) second = p;
    std::vector<int> d(own.size(), 0);
    do {
        Strategy mine = build(p, mode, own, d);
        bool ok = true;
        std::vector<int> e(opp.size(), 0);
        do {
            Strategy theirs = build(opponent(p), Mode::Static, opp, e);
            const Strategy& el = p == Player::Eloise ? mine : theirs;
            const Strategy& ab = p == Player::Eloise ? theirs : mine;
            Winner w = winner(g, play(t, el, ab, second), x);
            bool good = goal == Goal::Win ? w == as_winner(p) : w != as_winner(opponent(p));
            if (!good) ok = false;
        } while (ok && advance(e, opp));
        if (ok) return mine;
    } while (advance(d, own));
    return std::nullopt;
}

std::vector<int> children_meeting(const DecompositionTree& t, const TreeNode& n, const NodeSet& s) {
    std::vector<int> out;
    for (std::size_t k = 0; k < n.children.size(); ++k)
        if (t.node(n.children[k]).cover.intersects(s)) out.push_back(static_cast<int>(k));
    return out;
}

int index_of(const std::vector<NodeSet>& family, const std::vector<int>& members, std::size_t n) {
    NodeSet s(n);
    for (int k : members) s.insert(k);
    auto it = std::find(family.begin(), family.end(), s);
    return it == family.end() ? 0 : static_cast<int>(it - family.begin());
}

// Follow a maximal clique (cliques=true, Eloise) or stable set (Abelard).
Strategy follow_set(const LabelledGraph& g, const NodeSet& s, bool cliques) {
    DecompositionTree t = decompose(g);
    Strategy st;
    st.player = cliques ? Player::Eloise : Player::Abelard;
    for (int n = 0; n < static_cast<int>(t.size()); ++n) {
        const TreeNode& node = t.node(n);
        if (node.kind == TreeNode::Kind::Leaf || !owns(node, st.player)) continue;
        auto meet = children_meeting(t, node, s);
        if (node.kind == TreeNode::Kind::Prime)
            st.choice[n] = index_of(cliques ? node.quotient_mc : node.quotient_ms, meet, node.children.size());
        else
            st.choice[n] = meet.empty() ? 0 : meet.front();
    }
    return st;
}

// Reactionary strategy keeping the opponent's bit impossible.
// Eloise keeps 0 out of the evaluation; Abelard keeps 1 out.
Strategy keep_out(const LabelledGraph& g, const Assignment& x, Player p) {
    DecompositionTree t = decompose(g);
    std::vector<EvalResult> ev(t.size());
    for (int n = 0; n < static_cast<int>(t.size()); ++n) ev[n] = evaluate_tree(t, n, x);
    auto safe = [&](int n) { return p == Player::Eloise ? !ev[n].zero : !ev[n].one; };
    if (!safe(t.root()))
        throw InputError(p == Player::Eloise ? "assignment misses a maximal stable set"
                                             : "assignment contains a maximal clique");
    Strategy st;
    st.player = p;
    st.mode = Mode::Reactionary;
    for (int n = 0; n < static_cast<int>(t.size()); ++n) {
        const TreeNode& node = t.node(n);
        if (node.kind == TreeNode::Kind::Leaf || !owns(node, p)) continue;
        if (node.kind != TreeNode::Kind::Prime) {
            int pick = 0;
            for (std::size_t k = 0; k < node.children.size(); ++k)
                if (safe(node.children[k])) {
                    pick = static_cast<int>(k);
                    break;
                }
            st.choice[n] = pick;
            continue;
        }
        const auto& theirs = p == Player::Eloise ? node.quotient_ms : node.quotient_mc;
        const auto& mine = p == Player::Eloise ? node.quotient_mc : node.quotient_ms;
        std::vector<int> react;
        for (const auto& other : theirs) {
            int pick = 0;
            int block = -1;
            other.for_each([&](int k) {
                if (block < 0 && safe(node.children[k])) block = k;
            });
            if (block >= 0)
                for (std::size_t i = 0; i < mine.size(); ++i)
                    if (mine[i].contains(block)) {
                        pick = static_cast<int>(i);
                        break;
                    }
            react.push_back(pick);
        }
        st.reaction[n] = std::move(react);
    }
    return st;
}

}  // namespace

Play play(const DecompositionTree& t, const Strategy& eloise, const Strategy& abelard, std::optional<Player> second) {
    if (eloise.player != Player::Eloise || abelard.player != Player::Abelard)
        throw InputError("strategies assigned to the wrong players");
    for (const Strategy* s : {&eloise, &abelard})
        if (s->mode == Mode::Reactionary && second != s->player)
            throw InputError(std::string(to_string(s->player)) + " is reactionary but does not move second");
    Play out;
    int n = t.root();
    while (true) {
        const TreeNode& node = t.node(n);
        Move mv;
        mv.node = n;
        switch (node.kind) {
            case TreeNode::Kind::Leaf:
                out.outcome = node.vertex;
                return out;
            case TreeNode::Kind::Or:
                mv.child = static_choice(eloise, n, static_cast<int>(node.children.size()));
                break;
            case TreeNode::Kind::And:
                mv.child = static_choice(abelard, n, static_cast<int>(node.children.size()));
                break;
            case TreeNode::Kind::Prime: {
                int ne = static_cast<int>(node.quotient_mc.size()), na = static_cast<int>(node.quotient_ms.size());
                if (second == Player::Eloise && eloise.mode == Mode::Reactionary) {
                    mv.abelard = static_choice(abelard, n, na);
                    mv.eloise = reactive_choice(eloise, n, mv.abelard, ne);
                } else if (second == Player::Abelard && abelard.mode == Mode::Reactionary) {
                    mv.eloise = static_choice(eloise, n, ne);
                    mv.abelard = reactive_choice(abelard, n, mv.eloise, na);
                } else {
                    mv.eloise = static_choice(eloise, n, ne);
                    mv.abelard = static_choice(abelard, n, na);
                }
                NodeSet meet = node.quotient_mc[mv.eloise] & node.quotient_ms[mv.abelard];
                out.trace.push_back(mv);
                if (meet.empty()) return out;  // deadlock
                n = node.children[meet.first()];
                continue;
            }
        }
        out.trace.push_back(mv);
        n = node.children[mv.child];
    }
}

Winner winner(const LabelledGraph& g, const Play& p, const Assignment& x) {
    if (p.deadlock()) return Winner::Draw;
    return x.count(g.label(p.outcome)) ? Winner::Eloise : Winner::Abelard;
}

std::vector<std::pair<int, int>> decision_points(const DecompositionTree& t, Player p) {
    std::vector<std::pair<int, int>> out;
    for (const auto& s : slots_for(t, p, Mode::Static)) out.emplace_back(s.node, s.options);
    return out;
}

std::optional<Strategy> exists_static_strategy(const LabelledGraph& g, const Assignment& x, Player p, Goal goal,
                                               std::size_t budget) {
    return search(g, x, p, Mode::Static, goal, budget);
}

std::optional<Strategy> exists_reactionary_strategy(const LabelledGraph& g, const Assignment& x, Player p,
                                                    Goal goal, std::size_t budget) {
    return search(g, x, p, Mode::Reactionary, goal, budget);
}

Strategy strategy_from_clique(const LabelledGraph& g, const NodeSet& s) {
    auto mc = max_cliques(g);
    if (std::find(mc.begin(), mc.end(), s) == mc.end()) throw InputError("not a maximal clique");
    return follow_set(g, s, true);
}

Strategy strategy_from_stable_set(const LabelledGraph& g, const NodeSet& t) {
    auto ms = max_stable_sets(g);
    if (std::find(ms.begin(), ms.end(), t) == ms.end()) throw InputError("not a maximal stable set");
    return follow_set(g, t, false);
}

Strategy strategy_from_hitting_assignment(const LabelledGraph& g, const Assignment& x) {
    return keep_out(g, x, Player::Eloise);
}

Strategy strategy_from_avoiding_assignment(const LabelledGraph& g, const Assignment& x) {
    return keep_out(g, x, Player::Abelard);
}

}  // namespace bgl
