#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgl/decomposition.hpp"
#include "bgl/graph.hpp"

namespace bgl {

enum class Player { Eloise, Abelard };
enum class Mode { Static, Reactionary };
enum class Goal { Win, DrawOrWin };
enum class Winner { Eloise, Abelard, Draw };

const char* to_string(Player p);
const char* to_string(Winner w);
Player opponent(Player p);

// Choices are positions: a child position at Or (Eloise) / And (Abelard)
// nodes, and an index into the quotient's canonical MC (Eloise) or MS
// (Abelard) list at prime nodes. A reactionary strategy maps each opponent
// option index at a prime node to an own option index.
struct Strategy {
    Player player = Player::Eloise;
    Mode mode = Mode::Static;
    std::map<int, int> choice;
    std::map<int, std::vector<int>> reaction;
};

struct Move {
    int node = -1;
    int child = -1;    // Or/And: chosen child position
    int eloise = -1;   // Prime: index into quotient_mc
    int abelard = -1;  // Prime: index into quotient_ms
};

struct Play {
    std::vector<Move> trace;
    int outcome = -1;  // graph node index, -1 for deadlock
    bool deadlock() const { return outcome < 0; }
};

// `second` names the player who moves second at prime nodes; only that player
// may use a reactionary strategy.
Play play(const DecompositionTree& t, const Strategy& eloise, const Strategy& abelard,
          std::optional<Player> second = std::nullopt);
Winner winner(const LabelledGraph& g, const Play& p, const Assignment& x);

// Nodes where `p` chooses and the number of options there.
std::vector<std::pair<int, int>> decision_points(const DecompositionTree& t, Player p);

// Exhaustive search; the product of own and opposing strategy counts must stay
// within budget, else ResourceError. Opponents range over static strategies.
std::optional<Strategy> exists_static_strategy(const LabelledGraph& g, const Assignment& x, Player p, Goal goal,
                                               std::size_t budget = 1'000'000);
std::optional<Strategy> exists_reactionary_strategy(const LabelledGraph& g, const Assignment& x, Player p,
                                                    Goal goal, std::size_t budget = 1'000'000);

// Static Eloise strategy that stays inside the maximal clique s.
Strategy strategy_from_clique(const LabelledGraph& g, const NodeSet& s);
// Static Abelard strategy that stays inside the maximal stable set t.
Strategy strategy_from_stable_set(const LabelledGraph& g, const NodeSet& t);
// Reactionary Eloise strategy winning under x; x must meet every maximal stable set.
Strategy strategy_from_hitting_assignment(const LabelledGraph& g, const Assignment& x);
// Reactionary Abelard strategy winning under x; x must contain no maximal clique.
Strategy strategy_from_avoiding_assignment(const LabelledGraph& g, const Assignment& x);

}  // namespace bgl
