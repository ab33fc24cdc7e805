#include "bgl/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "bgl/error.hpp"

namespace bgl {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) {
            if (line[i] == '#') break;
            out.emplace_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

LabelledGraph parse_graph(std::string_view text) {
    std::vector<NodeSpec> nodes;
    std::vector<IdEdge> edges;
    std::set<std::string> declared;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++lineno;
        auto fail = [&](const std::string& msg) {
            throw InputError("line " + std::to_string(lineno) + ": " + msg);
        };
        auto toks = split_ws(line);
        if (!toks.empty()) {
            if (toks[0] == "node") {
                if (toks.size() < 2 || toks.size() > 3) fail("expected `node <id> [<label>]`");
                if (!declared.insert(toks[1]).second) fail("duplicate node '" + toks[1] + "'");
                nodes.push_back({toks[1], toks.size() == 3 ? toks[2] : toks[1]});
            } else if (toks[0] == "edge") {
                if (toks.size() != 3) fail("expected `edge <id> <id>`");
                if (toks[1] == toks[2]) fail("self-loop on '" + toks[1] + "'");
                edges.emplace_back(toks[1], toks[2]);
            } else {
                fail("unknown directive '" + toks[0] + "'");
            }
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    for (const auto& [a, b] : edges)
        for (const auto& x : {a, b})
            if (!declared.count(x)) throw InputError("edge endpoint '" + x + "' is not a declared node");
    return LabelledGraph(std::move(nodes), edges);
}

std::string format_graph(const LabelledGraph& g) {
    std::ostringstream os;
    for (const auto& n : g.nodes()) {
        os << "node " << n.id;
        if (n.label != n.id) os << ' ' << n.label;
        os << '\n';
    }
    for (auto [i, j] : g.edges()) os << "edge " << g.id(i) << ' ' << g.id(j) << '\n';
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

LabelledGraph read_graph_file(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Assignment parse_assignment(std::string_view text) {
    Assignment x;
    for (auto& part : split_on(text, ',')) {
        auto toks = split_ws(part);
        if (toks.size() > 1) throw InputError("bad assignment entry '" + part + "'");
        if (toks.size() == 1) x.insert(toks[0]);
    }
    return x;
}

std::string format_assignment(const Assignment& x) {
    std::string s;
    for (const auto& v : x) {
        if (!s.empty()) s += ',';
        s += v;
    }
    return s;
}

std::string format_ids(const LabelledGraph& g, const NodeSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ',';
        first = false;
        out += g.id(i);
    });
    return out + "}";
}

}  // namespace bgl
