#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bgl/graph.hpp"

namespace bgl {

struct Formula {
    enum class Kind { Var, Or, And };
    Kind kind = Kind::Var;
    std::string var;
    std::vector<Formula> kids;

    static Formula variable(std::string name);
    static Formula disj(std::vector<Formula> kids);  // >= 2 children
    static Formula conj(std::vector<Formula> kids);

    bool operator==(const Formula& o) const = default;
};

// `&` binds tighter than `|`; errors report line:column.
Formula parse_formula(std::string_view text, bool flatten = true);
Formula flatten(const Formula& f);
std::string to_string(const Formula& f);

bool eval_formula(const Formula& f, const Assignment& x);
std::vector<std::string> variables(const Formula& f);  // sorted, distinct
bool is_read_once(const Formula& f);

// Relation web: one node per occurrence, edge iff the least common connective
// is a conjunction. Repeated occurrences of x get ids x, x~2, x~3, ...
LabelledGraph web(const Formula& f);

// Truth table of a monotone function over an ordered support; bit k of the
// table index says whether support[k] is true.
class MonotoneFunctionTable {
public:
    MonotoneFunctionTable(std::vector<std::string> support, std::vector<bool> table);
    static MonotoneFunctionTable of(const Formula& f);

    const std::vector<std::string>& support() const { return support_; }
    bool value(std::size_t mask) const { return table_[mask]; }

private:
    std::vector<std::string> support_;
    std::vector<bool> table_;
};

using Term = std::set<std::string>;

// Inclusion-minimal true sets / minimal X with f(complement X) = 0, sorted.
std::vector<Term> minterms(const MonotoneFunctionTable& f);
std::vector<Term> maxterms(const MonotoneFunctionTable& f);
std::vector<Term> minterms(const Formula& f);
std::vector<Term> maxterms(const Formula& f);

bool ac_equivalent(const Formula& a, const Formula& b);

// Read-once formula whose web is label-isomorphic to a P4-free g.
Formula cotree_to_formula(const LabelledGraph& g);

}  // namespace bgl
