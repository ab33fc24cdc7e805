#include "support/cnf.hpp"

#include <algorithm>
#include <cstdlib>

namespace bgl::testing {

bool raw_holds(const Raw& cs, std::uint32_t truth) {
    return std::all_of(cs.begin(), cs.end(), [&](const std::vector<int>& c) {
        return std::any_of(c.begin(), c.end(), [&](int l) { return ((truth >> (std::abs(l) - 1)) & 1) == (l > 0); });
    });
}

bool raw_sat(const Raw& cs, int vars) {
    for (std::uint32_t t = 0; t < (1u << vars); ++t)
        if (raw_holds(cs, t)) return true;
    return false;
}

bool raw_qbf(const Raw& cs, int u, int e) {
    for (std::uint32_t x = 0; x < (1u << u); ++x) {
        bool some = false;
        for (std::uint32_t y = 0; y < (1u << e) && !some; ++y) some = raw_holds(cs, x | (y << u));
        if (!some) return false;
    }
    return true;
}

namespace {
std::string var(int v) { return "x" + std::to_string(v); }
}  // namespace

std::vector<Clause> clauses_of(const Raw& cs) {
    std::vector<Clause> out;
    for (const auto& c : cs) {
        std::vector<Literal> lits;
        for (int l : c) lits.push_back({var(std::abs(l)), l > 0});
        out.push_back(make_clause(lits));
    }
    return out;
}

CnfInstance cnf(const Raw& cs, int vars) {
    CnfInstance c;
    for (int v = 1; v <= vars; ++v) c.variables.push_back(var(v));
    c.clauses = clauses_of(cs);
    return c;
}

Qbf2Instance qbf(const Raw& cs, int u, int e) {
    Qbf2Instance q;
    for (int v = 1; v <= u; ++v) q.universal.push_back(var(v));
    for (int v = u + 1; v <= u + e; ++v) q.existential.push_back(var(v));
    q.clauses = clauses_of(cs);
    return q;
}

std::vector<std::vector<int>> all_clauses(int n) {
    std::vector<std::vector<int>> out;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 1; code < total; ++code) {
        std::vector<int> c;
        for (int v = 1, k = code; v <= n; ++v, k /= 3)
            if (k % 3) c.push_back(k % 3 == 1 ? v : -v);
        out.push_back(c);
    }
    return out;
}

void for_each_matrix(const std::vector<std::vector<int>>& pool, int max, const std::function<void(const Raw&)>& f) {
    Raw cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!cur.empty()) f(cur);
        if (static_cast<int>(cur.size()) == max) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace bgl::testing
