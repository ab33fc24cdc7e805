#include "bgl/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bgl/error.hpp"
#include "bgl/graph_io.hpp"

namespace bgl {

namespace {

constexpr std::size_t kMaxOracleVars = 20;

std::string occurrence_id(const Literal& l, std::size_t clause, std::size_t pos) {
    return format_literal(l) + "#" + std::to_string(clause + 1) + "#" + std::to_string(pos + 1);
}

std::vector<Clause> drop_tautologies(const std::vector<Clause>& cs) {
    std::vector<Clause> out;
    for (const auto& c : cs)
        if (!is_tautology(c)) out.push_back(c);
    return out;
}

struct DimacsBody {
    long declared_vars = 0;
    long declared_clauses = 0;
    std::vector<std::pair<char, std::vector<long>>> prefix;
    std::vector<std::vector<long>> clauses;
};

DimacsBody read_dimacs(std::string_view text, bool quantified) {
    DimacsBody body;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    std::vector<long> open;
    auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
    auto number = [&](const std::string& tok) {
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::logic_error&) {
            fail("expected an integer, got '" + tok + "'");
        }
        return 0L;
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "c" || toks[0][0] == 'c') continue;
        if (toks[0] == "p") {
            if (header) fail("second problem line");
            if (toks.size() != 4 || toks[1] != "cnf") fail("expected `p cnf <vars> <clauses>`");
            body.declared_vars = number(toks[2]);
            body.declared_clauses = number(toks[3]);
            if (body.declared_vars < 0 || body.declared_clauses < 0) fail("negative count");
            header = true;
            continue;
        }
        if (!header) fail("clause before the problem line");
        if (quantified && (toks[0] == "a" || toks[0] == "e")) {
            if (!body.clauses.empty() || !open.empty()) fail("quantifier block after clauses");
            if (toks.back() != "0") fail("quantifier block must end with 0");
            std::vector<long> vars;
            for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
                long v = number(toks[i]);
                if (v <= 0 || v > body.declared_vars) fail("variable " + toks[i] + " out of range");
                vars.push_back(v);
            }
            char kind = toks[0][0];
            if (!body.prefix.empty() && body.prefix.back().first == kind)
                body.prefix.back().second.insert(body.prefix.back().second.end(), vars.begin(), vars.end());
            else
                body.prefix.emplace_back(kind, vars);
            continue;
        }
        for (const auto& tok : toks) {
            long v = number(tok);
            if (v == 0) {
                body.clauses.push_back(open);
                open.clear();
            } else {
                if (std::labs(v) > body.declared_vars) fail("literal " + tok + " out of range");
                open.push_back(v);
            }
        }
    }
    if (!header) throw InputError("missing `p cnf` line");
    if (!open.empty()) throw InputError("last clause is not terminated by 0");
    if (static_cast<long>(body.clauses.size()) != body.declared_clauses)
        throw InputError("header declares " + std::to_string(body.declared_clauses) + " clauses, found " +
                         std::to_string(body.clauses.size()));
    return body;
}

std::string var_name(long v) { return "x" + std::to_string(std::labs(v)); }

std::vector<Clause> to_clauses(const std::vector<std::vector<long>>& raw) {
    std::vector<Clause> out;
    for (const auto& c : raw) {
        std::vector<Literal> lits;
        for (long v : c) lits.push_back({var_name(v), v > 0});
        out.push_back(make_clause(std::move(lits)));
    }
    return out;
}

void check_vars(const std::vector<Clause>& clauses, const std::set<std::string>& declared) {
    for (const auto& c : clauses)
        for (const auto& l : c)
            if (!declared.count(l.var)) throw InputError("undeclared variable '" + l.var + "'");
}

bool dpll(std::vector<Clause> clauses) {
    while (true) {
        if (clauses.empty()) return true;
        const Clause* unit = nullptr;
        for (const auto& c : clauses) {
            if (c.empty()) return false;
            if (c.size() == 1 && !unit) unit = &c;
        }
        Literal pick = unit ? unit->front() : clauses.front().front();
        auto assign = [&](const Literal& l) {
            std::vector<Clause> next;
            for (const auto& c : clauses) {
                if (std::find(c.begin(), c.end(), l) != c.end()) continue;
                Clause r;
                for (const auto& m : c)
                    if (m.var != l.var) r.push_back(m);
                next.push_back(std::move(r));
            }
            return next;
        };
        if (unit) {
            clauses = assign(pick);
            continue;
        }
        if (dpll(assign(pick))) return true;
        clauses = assign({pick.var, !pick.positive});
    }
}

}  // namespace

Clause make_clause(std::vector<Literal> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    return lits;
}

bool is_tautology(const Clause& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i].var == c[i + 1].var) return true;
    return false;
}

std::string format_literal(const Literal& l) { return l.var + (l.positive ? "+" : "-"); }

CnfInstance parse_dimacs(std::string_view text) {
    DimacsBody body = read_dimacs(text, false);
    CnfInstance c;
    for (long v = 1; v <= body.declared_vars; ++v) c.variables.push_back(var_name(v));
    c.clauses = to_clauses(body.clauses);
    return c;
}

Qbf2Instance parse_qdimacs(std::string_view text) {
    DimacsBody body = read_dimacs(text, true);
    Qbf2Instance q;
    if (body.prefix.size() > 2 || (!body.prefix.empty() && body.prefix.front().first == 'e' && body.prefix.size() == 2))
        throw InputError("expected one universal block followed by one existential block");
    for (const auto& [kind, vars] : body.prefix)
        for (long v : vars) (kind == 'a' ? q.universal : q.existential).push_back(var_name(v));
    q.clauses = to_clauses(body.clauses);
    validate(q);
    return q;
}

void validate(const CnfInstance& c) {
    std::set<std::string> declared(c.variables.begin(), c.variables.end());
    if (declared.size() != c.variables.size()) throw InputError("variable declared twice");
    check_vars(c.clauses, declared);
}

void validate(const Qbf2Instance& q) {
    std::set<std::string> declared(q.universal.begin(), q.universal.end());
    for (const auto& y : q.existential)
        if (!declared.insert(y).second) throw InputError("variable '" + y + "' quantified twice");
    if (declared.size() != q.universal.size() + q.existential.size()) throw InputError("variable quantified twice");
    check_vars(q.clauses, declared);
}

NormalizedQbf normalize_qbf(const Qbf2Instance& q) {
    validate(q);
    std::set<std::string> universal(q.universal.begin(), q.universal.end());
    std::vector<Clause> clauses = drop_tautologies(q.clauses);

    // Substitute constants for single-polarity variables until none remain.
    for (bool changed = true; changed;) {
        changed = false;
        std::map<std::string, std::pair<bool, bool>> seen;  // var -> (positive, negative)
        for (const auto& c : clauses)
            for (const auto& l : c) (l.positive ? seen[l.var].first : seen[l.var].second) = true;
        for (const auto& [var, pol] : seen) {
            if (pol.first && pol.second) continue;
            // Universal: the adversarial value falsifies the literal. Existential: satisfy it.
            const bool satisfy = !universal.count(var);
            std::vector<Clause> next;
            for (const auto& c : clauses) {
                bool hit = std::any_of(c.begin(), c.end(), [&](const Literal& l) { return l.var == var; });
                if (!hit) {
                    next.push_back(c);
                } else if (!satisfy) {
                    Clause r;
                    for (const auto& l : c)
                        if (l.var != var) r.push_back(l);
                    next.push_back(std::move(r));
                }
            }
            clauses = std::move(next);
            changed = true;
            break;
        }
    }

    NormalizedQbf out;
    std::set<std::string> used;
    for (const auto& c : clauses)
        for (const auto& l : c) used.insert(l.var);
    for (const auto& x : q.universal)
        if (used.count(x)) out.instance.universal.push_back(x);
    for (const auto& y : q.existential)
        if (used.count(y)) out.instance.existential.push_back(y);
    if (std::any_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.empty(); })) {
        out.resolved = false;
        out.instance.clauses = {Clause{}};
        return out;
    }
    if (clauses.empty()) {
        out.resolved = true;
        return out;
    }

    std::set<std::string> taken(q.universal.begin(), q.universal.end());
    taken.insert(q.existential.begin(), q.existential.end());
    auto fresh = [&](std::string base) {
        std::string id = base;
        for (int k = 2; taken.count(id); ++k) id = base + std::to_string(k);
        taken.insert(id);
        return id;
    };
    auto has_kind = [&](const Clause& c, bool want_universal) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return universal.count(l.var) == want_universal; });
    };
    for (bool want_universal : {true, false}) {
        auto& vars = want_universal ? out.instance.universal : out.instance.existential;
        std::vector<Clause> next;
        for (const auto& c : clauses) {
            if (has_kind(c, want_universal)) {
                next.push_back(c);
                continue;
            }
            if (vars.empty()) {
                vars.push_back(fresh(want_universal ? "_u" : "_e"));
                if (want_universal) universal.insert(vars.back());
            }
            const std::string& z = vars.front();
            for (bool sign : {true, false}) {
                Clause r = c;
                r.push_back({z, sign});
                next.push_back(make_clause(std::move(r)));
            }
        }
        clauses = std::move(next);
    }
    out.instance.clauses = std::move(clauses);
    return out;
}

bool is_normalized(const Qbf2Instance& q) {
    std::set<std::string> universal(q.universal.begin(), q.universal.end());
    std::map<std::string, std::pair<bool, bool>> seen;
    if (q.clauses.empty()) return false;
    for (const auto& c : q.clauses) {
        if (is_tautology(c)) return false;
        bool x = false, y = false;
        for (const auto& l : c) {
            (universal.count(l.var) ? x : y) = true;
            (l.positive ? seen[l.var].first : seen[l.var].second) = true;
        }
        if (!x || !y) return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second.first && kv.second.second; });
}

EvaluationInstance sat_to_evaluation(const CnfInstance& c) {
    validate(c);
    std::vector<Clause> clauses = drop_tautologies(c.clauses);
    std::vector<NodeSpec> nodes;
    std::vector<IdEdge> edges;
    Assignment x;
    if (clauses.empty()) {
        // The empty graph has no maximal stable set, so a trivially true matrix gets a
        // single node outside the assignment instead.
        nodes.push_back({"true", "true"});
        return {LabelledGraph(nodes, edges), x};
    }
    std::vector<std::pair<std::string, Literal>> occ;
    for (std::size_t n = 0; n < clauses.size(); ++n) {
        std::string cn = "c" + std::to_string(n + 1);
        nodes.push_back({cn, cn});
        x.insert(cn);
        std::vector<std::string> here;
        for (std::size_t p = 0; p < clauses[n].size(); ++p) {
            std::string id = occurrence_id(clauses[n][p], n, p);
            nodes.push_back({id, id});
            edges.emplace_back(id, cn);
            for (const auto& o : here) edges.emplace_back(o, id);
            here.push_back(id);
            occ.emplace_back(id, clauses[n][p]);
        }
    }
    for (std::size_t i = 0; i < occ.size(); ++i)
        for (std::size_t j = i + 1; j < occ.size(); ++j)
            if (occ[i].second.var == occ[j].second.var && occ[i].second.positive != occ[j].second.positive)
                edges.emplace_back(occ[i].first, occ[j].first);
    return {LabelledGraph(nodes, edges), x};
}

EntailmentInstance qbf_to_entailment(const Qbf2Instance& q) {
    validate(q);
    if (!is_normalized(q)) throw InputError("QBF instance is not normalized");
    std::set<std::string> universal(q.universal.begin(), q.universal.end());
    std::vector<NodeSpec> nodes;
    std::vector<IdEdge> eg, eh;
    std::vector<std::pair<std::string, Literal>> occ;
    for (std::size_t n = 0; n < q.clauses.size(); ++n) {
        std::vector<std::string> here;
        for (std::size_t p = 0; p < q.clauses[n].size(); ++p) {
            std::string id = occurrence_id(q.clauses[n][p], n, p);
            nodes.push_back({id, id});
            for (const auto& o : here) eg.emplace_back(o, id);
            here.push_back(id);
            occ.emplace_back(id, q.clauses[n][p]);
        }
    }
    for (std::size_t i = 0; i < occ.size(); ++i)
        for (std::size_t j = i + 1; j < occ.size(); ++j) {
            const Literal &a = occ[i].second, &b = occ[j].second;
            if (a.var != b.var || a.positive == b.positive) continue;
            (universal.count(a.var) ? eh : eg).emplace_back(occ[i].first, occ[j].first);
        }
    // Two dual existential occurrences never share a clause, so eg has no repeats.
    return {LabelledGraph(nodes, eg), LabelledGraph(nodes, eh)};
}

bool eval_clauses(const std::vector<Clause>& clauses, const Assignment& truth) {
    return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return truth.count(l.var) == l.positive; });
    });
}

bool brute_force_sat(const CnfInstance& c) {
    validate(c);
    const std::size_t n = c.variables.size();
    if (n > kMaxOracleVars) throw ResourceError("SAT oracle limited to " + std::to_string(kMaxOracleVars) + " variables");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Assignment truth;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) truth.insert(c.variables[i]);
        if (eval_clauses(c.clauses, truth)) return true;
    }
    return false;
}

bool dpll_sat(const CnfInstance& c) {
    validate(c);
    return dpll(c.clauses);
}

bool brute_force_qbf2(const Qbf2Instance& q) {
    validate(q);
    const std::size_t nx = q.universal.size(), ny = q.existential.size();
    if (nx + ny > kMaxOracleVars) throw ResourceError("QBF oracle limited to " + std::to_string(kMaxOracleVars) + " variables");
    for (std::uint32_t xm = 0; xm < (1u << nx); ++xm) {
        bool some = false;
        for (std::uint32_t ym = 0; ym < (1u << ny) && !some; ++ym) {
            Assignment truth;
            for (std::size_t i = 0; i < nx; ++i)
                if (xm >> i & 1) truth.insert(q.universal[i]);
            for (std::size_t i = 0; i < ny; ++i)
                if (ym >> i & 1) truth.insert(q.existential[i]);
            some = eval_clauses(q.clauses, truth);
        }
        if (!some) return false;
    }
    return true;
}

}  // namespace bgl
