#include "bgl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "bgl/decomposition.hpp"
#include "bgl/error.hpp"

namespace bgl {

Formula Formula::variable(std::string name) {
    Formula f;
    f.var = std::move(name);
    return f;
}

namespace {

Formula compound(Formula::Kind k, std::vector<Formula> kids) {
    if (kids.size() < 2) throw InputError("connective needs at least two children");
    Formula f;
    f.kind = k;
    f.kids = std::move(kids);
    return f;
}

bool atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Formula parse() {
        Formula f = parse_or();
        skip();
        if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return f;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
            if (s_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    Formula parse_or() {
        Formula left = parse_and();
        skip();
        while (i_ < s_.size() && s_[i_] == '|') {
            ++i_;
            Formula right = parse_and();
            left = compound(Formula::Kind::Or, {std::move(left), std::move(right)});
            skip();
        }
        return left;
    }

    Formula parse_and() {
        Formula left = parse_atom();
        skip();
        while (i_ < s_.size() && s_[i_] == '&') {
            ++i_;
            Formula right = parse_atom();
            left = compound(Formula::Kind::And, {std::move(left), std::move(right)});
            skip();
        }
        return left;
    }

    Formula parse_atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        if (s_[i_] == '(') {
            ++i_;
            Formula f = parse_or();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
            ++i_;
            return f;
        }
        std::size_t j = i_;
        while (j < s_.size() && atom_char(s_[j])) ++j;
        if (j == i_) fail("expected a variable or '('");
        Formula f = Formula::variable(std::string(s_.substr(i_, j - i_)));
        i_ = j;
        return f;
    }
};

void collect_vars(const Formula& f, std::vector<std::string>& out) {
    if (f.kind == Formula::Kind::Var)
        out.push_back(f.var);
    else
        for (const auto& k : f.kids) collect_vars(k, out);
}

}  // namespace

Formula Formula::disj(std::vector<Formula> kids) { return compound(Kind::Or, std::move(kids)); }
Formula Formula::conj(std::vector<Formula> kids) { return compound(Kind::And, std::move(kids)); }

Formula parse_formula(std::string_view text, bool flat) {
    Formula f = Parser(text).parse();
    return flat ? flatten(f) : f;
}

Formula flatten(const Formula& f) {
    if (f.kind == Formula::Kind::Var) return f;
    std::vector<Formula> kids;
    for (const auto& k : f.kids) {
        Formula fk = flatten(k);
        if (fk.kind == f.kind)
            for (auto& g : fk.kids) kids.push_back(std::move(g));
        else
            kids.push_back(std::move(fk));
    }
    return compound(f.kind, std::move(kids));
}

std::string to_string(const Formula& f) {
    if (f.kind == Formula::Kind::Var) return f.var;
    std::string sep = f.kind == Formula::Kind::Or ? " | " : " & ";
    std::string out;
    for (std::size_t i = 0; i < f.kids.size(); ++i) {
        const Formula& k = f.kids[i];
        bool paren = k.kind != Formula::Kind::Var &&
                     (k.kind == f.kind || (f.kind == Formula::Kind::And && k.kind == Formula::Kind::Or));
        if (i) out += sep;
        out += paren ? "(" + to_string(k) + ")" : to_string(k);
    }
    return out;
}

bool eval_formula(const Formula& f, const Assignment& x) {
    switch (f.kind) {
        case Formula::Kind::Var:
            return x.count(f.var) > 0;
        case Formula::Kind::Or:
            return std::any_of(f.kids.begin(), f.kids.end(), [&](const Formula& k) { return eval_formula(k, x); });
        case Formula::Kind::And:
            return std::all_of(f.kids.begin(), f.kids.end(), [&](const Formula& k) { return eval_formula(k, x); });
    }
    return false;
}

std::vector<std::string> variables(const Formula& f) {
    std::vector<std::string> vs;
    collect_vars(f, vs);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool is_read_once(const Formula& f) {
    std::vector<std::string> vs;
    collect_vars(f, vs);
    std::size_t n = vs.size();
    std::sort(vs.begin(), vs.end());
    return std::unique(vs.begin(), vs.end()) - vs.begin() == static_cast<long>(n);
}

LabelledGraph web(const Formula& f) {
    std::vector<NodeSpec> nodes;
    std::vector<IdEdge> edges;
    std::map<std::string, int> seen;
    // Returns the ids of the occurrences below f.
    auto go = [&](auto&& self, const Formula& h) -> std::vector<std::string> {
        if (h.kind == Formula::Kind::Var) {
            int k = ++seen[h.var];
            std::string id = k == 1 ? h.var : h.var + "~" + std::to_string(k);
            nodes.push_back({id, h.var});
            return {id};
        }
        std::vector<std::vector<std::string>> parts;
        for (const auto& k : h.kids) parts.push_back(self(self, k));
        if (h.kind == Formula::Kind::And)
            for (std::size_t a = 0; a < parts.size(); ++a)
                for (std::size_t b = a + 1; b < parts.size(); ++b)
                    for (const auto& u : parts[a])
                        for (const auto& v : parts[b]) edges.emplace_back(u, v);
        std::vector<std::string> all;
        for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
        return all;
    };
    go(go, f);
    return LabelledGraph(std::move(nodes), edges);
}

MonotoneFunctionTable::MonotoneFunctionTable(std::vector<std::string> support, std::vector<bool> table)
    : support_(std::move(support)), table_(std::move(table)) {
    if (support_.size() > 20) throw ResourceError("support too large for a truth table");
    if (table_.size() != (std::size_t{1} << support_.size())) throw InputError("truth table has the wrong size");
    for (std::size_t m = 0; m < table_.size(); ++m)
        for (std::size_t k = 0; k < support_.size(); ++k)
            if (!(m >> k & 1) && table_[m] && !table_[m | (std::size_t{1} << k)])
                throw InputError("truth table is not monotone");
}

MonotoneFunctionTable MonotoneFunctionTable::of(const Formula& f) {
    auto vs = variables(f);
    if (vs.size() > 20) throw ResourceError("formula has more than 20 variables");
    std::vector<bool> table(std::size_t{1} << vs.size());
    for (std::size_t m = 0; m < table.size(); ++m) {
        Assignment x;
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (m >> k & 1) x.insert(vs[k]);
        table[m] = eval_formula(f, x);
    }
    return MonotoneFunctionTable(vs, table);
}

namespace {

Term term_of(const std::vector<std::string>& support, std::size_t mask) {
    Term t;
    for (std::size_t k = 0; k < support.size(); ++k)
        if (mask >> k & 1) t.insert(support[k]);
    return t;
}

}  // namespace

std::vector<Term> minterms(const MonotoneFunctionTable& f) {
    std::vector<Term> out;
    std::size_t n = f.support().size();
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        if (!f.value(m)) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < n && minimal; ++k)
            if ((m >> k & 1) && f.value(m & ~(std::size_t{1} << k))) minimal = false;
        if (minimal) out.push_back(term_of(f.support(), m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> maxterms(const MonotoneFunctionTable& f) {
    std::vector<Term> out;
    std::size_t n = f.support().size();
    std::size_t all = (std::size_t{1} << n) - 1;
    for (std::size_t m = 0; m <= all; ++m) {
        if (f.value(all & ~m)) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < n && minimal; ++k)
            if ((m >> k & 1) && !f.value(all & ~(m & ~(std::size_t{1} << k)))) minimal = false;
        if (minimal) out.push_back(term_of(f.support(), m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> minterms(const Formula& f) { return minterms(MonotoneFunctionTable::of(f)); }
std::vector<Term> maxterms(const Formula& f) { return maxterms(MonotoneFunctionTable::of(f)); }

bool ac_equivalent(const Formula& a, const Formula& b) {
    if (!is_read_once(a) || !is_read_once(b)) throw InputError("ac_equivalent needs read-once formulas");
    return label_isomorphism(web(a), web(b)).has_value();
}

Formula cotree_to_formula(const LabelledGraph& g) {
    if (g.empty()) throw InputError("empty graph has no formula");
    if (auto p4 = find_induced_p4(g)) {
        std::string w;
        for (int v : *p4) w += (w.empty() ? "" : "-") + g.id(v);
        throw InputError("graph is not P4-free (induced P4 " + w + ")");
    }
    DecompositionTree t = decompose(g);
    auto go = [&](auto&& self, int n) -> Formula {
        const TreeNode& node = t.node(n);
        if (node.kind == TreeNode::Kind::Leaf) return Formula::variable(g.label(node.vertex));
        std::vector<Formula> kids;
        for (int c : node.children) kids.push_back(self(self, c));
        return node.kind == TreeNode::Kind::Or ? Formula::disj(std::move(kids)) : Formula::conj(std::move(kids));
    };
    return go(go, t.root());
}

}  // namespace bgl
