#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bgl/graph.hpp"

namespace bgl {

enum class Rule { w_r, w_l, c_r, c_l, d_and, d_or, d_and_inv, d_or_inv, prime_medial, module_split };
enum class Flavor { And, Or };

const char* to_string(Rule r);
std::optional<Rule> parse_rule(std::string_view name);

// Location fields are lists of blocks of node ids. Per rule:
//   w_r          module, added          (added nodes and their edges come from `argument`)
//   w_l          module, deleted
//   c_r          module, kept, deleted  (kept[i] corresponds to deleted[i])
//   c_l          module, copy           (copy[i] copies module[i])
//   d_and, d_or  pivot, r0, r1, new
//   *_inv        merge, new
//   prime_medial left, right            (one block per slot)
//   module_split m0, m1, r0, r1
using Block = std::vector<std::string>;
using Location = std::map<std::string, std::vector<Block>>;

struct RuleInstance {
    Rule rule = Rule::w_r;
    Location loc;
    std::optional<LabelledGraph> argument;  // w_r only
};

struct Derivation {
    std::vector<LabelledGraph> graphs;  // graphs.size() == steps.size() + 1
    std::vector<RuleInstance> steps;

    const LabelledGraph& front() const { return graphs.front(); }
    const LabelledGraph& back() const { return graphs.back(); }
    void push(RuleInstance r, LabelledGraph h);
};

// Structural rules on a module m.
LabelledGraph apply_w_r(const LabelledGraph& g, const NodeSet& m, const LabelledGraph& added);
LabelledGraph apply_w_l(const LabelledGraph& g, const NodeSet& m, const NodeSet& deleted);
LabelledGraph apply_c_r(const LabelledGraph& g, const NodeSet& m, const Block& kept, const Block& deleted);
LabelledGraph apply_c_l(const LabelledGraph& g, const Block& module, const Block& copy);

// The neighbourhood of v is covered by r0 and r1. They are either the plain
// split (disjoint, no r0-r1 edges), or a split of the maximal cliques of the
// neighbourhood into two classes whose unions have exactly those cliques.
// A one-sided empty part is accepted and leaves an isolated duplicate.
LabelledGraph apply_d_and(const LabelledGraph& g, const std::string& v, const NodeSet& r0, const NodeSet& r1,
                          const std::string& id0, const std::string& id1);
LabelledGraph apply_d_or(const LabelledGraph& g, const std::string& v, const NodeSet& r0, const NodeSet& r1,
                         const std::string& id0, const std::string& id1);
LabelledGraph apply_d_and_inv(const LabelledGraph& g, const std::string& v0, const std::string& v1,
                              const std::string& id);
LabelledGraph apply_d_or_inv(const LabelledGraph& g, const std::string& v0, const std::string& v1,
                             const std::string& id);

LabelledGraph apply_prime_medial(const LabelledGraph& g, const std::vector<NodeSet>& left,
                                 const std::vector<NodeSet>& right);
LabelledGraph apply_module_split(const LabelledGraph& g, const NodeSet& m0, const NodeSet& m1, const NodeSet& r0,
                                 const NodeSet& r1);

// `target` supplies the added part of a w_r step when the instance has no argument.
LabelledGraph apply_rule(const LabelledGraph& g, const RuleInstance& r, const LabelledGraph* target = nullptr);

bool is_dnf(const LabelledGraph& g);
bool is_cnf(const LabelledGraph& g);

// Sum over unordered pairs of maximal cliques of the size of their intersection.
std::size_t clique_overlap(const LabelledGraph& g);

struct NormalForm {
    LabelledGraph graph;
    Derivation derivation;
};

NormalForm to_dnf(const LabelledGraph& g, std::size_t max_nodes = 4096);
NormalForm to_cnf(const LabelledGraph& g, std::size_t max_nodes = 4096);

// Derivation in the structural rules between DNFs a and b with a |-and b.
Derivation derive_dnf_to_dnf(const LabelledGraph& a, const LabelledGraph& b);
Derivation derive_entailment(const LabelledGraph& g, const LabelledGraph& h, Flavor flavor,
                             std::size_t max_nodes = 4096);

struct CheckResult {
    bool ok = true;
    std::size_t step = 0;  // 1-based index of the first failing step
    std::string reason;
};

CheckResult check_derivation(const Derivation& d, std::optional<Flavor> flavor = std::nullopt);
bool sound_step(const LabelledGraph& g, const LabelledGraph& h, Flavor flavor);

std::string format_derivation(const Derivation& d);
Derivation parse_derivation(std::string_view text);

}  // namespace bgl
