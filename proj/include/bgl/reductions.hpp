#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgl/graph.hpp"

namespace bgl {

struct Literal {
    std::string var;
    bool positive = true;

    auto operator<=>(const Literal&) const = default;
};

// Sorted, duplicate-free.
using Clause = std::vector<Literal>;

struct CnfInstance {
    std::vector<std::string> variables;
    std::vector<Clause> clauses;
};

// forall universal . exists existential . clauses
struct Qbf2Instance {
    std::vector<std::string> universal;
    std::vector<std::string> existential;
    std::vector<Clause> clauses;
};

struct NormalizedQbf {
    Qbf2Instance instance;
    std::optional<bool> resolved;  // set when the matrix collapsed to a constant
};

struct EvaluationInstance {
    LabelledGraph graph;
    Assignment assignment;
};

struct EntailmentInstance {
    LabelledGraph g;
    LabelledGraph h;
};

Clause make_clause(std::vector<Literal> lits);
bool is_tautology(const Clause& c);
std::string format_literal(const Literal& l);

// Variables are named x<k> after their DIMACS index.
CnfInstance parse_dimacs(std::string_view text);
Qbf2Instance parse_qdimacs(std::string_view text);

void validate(const CnfInstance& c);
void validate(const Qbf2Instance& q);

NormalizedQbf normalize_qbf(const Qbf2Instance& q);
bool is_normalized(const Qbf2Instance& q);

// 0 is in evaluate(graph, assignment) iff c is satisfiable.
EvaluationInstance sat_to_evaluation(const CnfInstance& c);
// entails_or(g, h) iff q is true. Throws InputError unless q is normalized.
EntailmentInstance qbf_to_entailment(const Qbf2Instance& q);

bool eval_clauses(const std::vector<Clause>& clauses, const Assignment& truth);
bool brute_force_sat(const CnfInstance& c);
bool dpll_sat(const CnfInstance& c);
bool brute_force_qbf2(const Qbf2Instance& q);

}  // namespace bgl
