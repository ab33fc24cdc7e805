// bgl: command-line front end for the Boolean graph logic engine.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bgl/decomposition.hpp"
#include "bgl/error.hpp"
#include "bgl/formula.hpp"
#include "bgl/games.hpp"
#include "bgl/graph_io.hpp"
#include "bgl/proof.hpp"
#include "bgl/reductions.hpp"
#include "bgl/semantics.hpp"

using namespace bgl;

namespace {

int answer(bool yes) {
    std::cout << (yes ? "true" : "false") << '\n';
    return yes ? 0 : 1;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

Player parse_player(const std::string& s) {
    if (s == "eloise") return Player::Eloise;
    if (s == "abelard") return Player::Abelard;
    throw InputError("unknown player '" + s + "'");
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// Interactive play --------------------------------------------------------

class Game {
public:
    Game(const LabelledGraph& g, Assignment x, bool sequential, std::optional<Player> human, Player second,
         std::istream* in)
        : t_(decompose(g)), x_(std::move(x)), sequential_(sequential), human_(human), second_(second), in_(in) {
        for (Player p : {Player::Eloise, Player::Abelard}) engine_[idx(p)] = engine_strategy(g, p);
    }

    int run() {
        const LabelledGraph& g = t_.graph();
        std::cout << "tree " << render_tree(t_) << '\n';
        int n = t_.root();
        int outcome = -1;
        while (true) {
            const TreeNode& node = t_.node(n);
            if (node.kind == TreeNode::Kind::Leaf) {
                outcome = node.vertex;
                break;
            }
            if (node.kind != TreeNode::Kind::Prime) {
                Player p = node.kind == TreeNode::Kind::Or ? Player::Eloise : Player::Abelard;
                std::cout << "at " << render_tree(t_, n) << '\n';
                std::vector<std::string> opts;
                for (int c : node.children) opts.push_back(render_tree(t_, c));
                int k = choose(p, n, opts, -1);
                n = node.children[k];
                continue;
            }
            std::cout << "at " << render_tree(t_, n) << " (" << prime_shape_name(node.quotient) << ")\n";
            auto mc = block_options(node, node.quotient_mc), ms = block_options(node, node.quotient_ms);
            int e = -1, a = -1;
            if (!sequential_) {
                // Both choices are fixed before either is shown.
                e = choose(Player::Eloise, n, mc, -1, false);
                a = choose(Player::Abelard, n, ms, -1, false);
                std::cout << "eloise chooses " << e + 1 << ' ' << mc[e] << '\n';
                std::cout << "abelard chooses " << a + 1 << ' ' << ms[a] << '\n';
            } else if (second_ == Player::Abelard) {
                e = choose(Player::Eloise, n, mc, -1);
                a = choose(Player::Abelard, n, ms, e);
            } else {
                a = choose(Player::Abelard, n, ms, -1);
                e = choose(Player::Eloise, n, mc, a);
            }
            NodeSet meet = node.quotient_mc[e] & node.quotient_ms[a];
            if (meet.empty()) break;
            n = node.children[meet.first()];
        }
        if (outcome < 0) {
            std::cout << "outcome deadlock\nwinner draw\n";
        } else {
            Play p;
            p.outcome = outcome;
            std::cout << "outcome " << g.id(outcome) << '\n';
            std::cout << "winner " << lower(to_string(winner(g, p, x_))) << '\n';
        }
        return 0;
    }

private:
    static int idx(Player p) { return p == Player::Eloise ? 0 : 1; }

    std::vector<std::string> block_options(const TreeNode& node, const std::vector<NodeSet>& family) const {
        std::vector<std::string> out;
        for (const auto& s : family) {
            std::string txt = "{";
            s.for_each([&](int k) {
                if (txt.size() > 1) txt += ' ';
                txt += render_tree(t_, node.children[k]);
            });
            out.push_back(txt + "}");
        }
        return out;
    }

    // Winning constructions where the evaluation allows one, first options otherwise.
    Strategy engine_strategy(const LabelledGraph& g, Player p) const {
        EvalResult r = evaluate(g, x_);
        if (sequential_ && p == second_) {
            if (p == Player::Eloise && !r.zero) return strategy_from_hitting_assignment(g, x_);
            if (p == Player::Abelard && !r.one) return strategy_from_avoiding_assignment(g, x_);
        }
        if (p == Player::Eloise && r.one)
            for (const auto& s : max_cliques(g))
                if (labels_subset(g, s, true)) return strategy_from_clique(g, s);
        if (p == Player::Abelard && r.zero)
            for (const auto& s : max_stable_sets(g))
                if (labels_subset(g, s, false)) return strategy_from_stable_set(g, s);
        Strategy st;
        st.player = p;
        return st;
    }

    bool labels_subset(const LabelledGraph& g, const NodeSet& s, bool inside) const {
        bool ok = true;
        s.for_each([&](int i) { ok = ok && (x_.count(g.label(i)) > 0) == inside; });
        return ok;
    }

    int engine_choice(Player p, int node, int seen) const {
        const Strategy& s = engine_[idx(p)];
        if (seen >= 0 && s.mode == Mode::Reactionary) {
            auto it = s.reaction.find(node);
            if (it != s.reaction.end() && seen < static_cast<int>(it->second.size())) return it->second[seen];
        }
        auto it = s.choice.find(node);
        return it == s.choice.end() ? 0 : it->second;
    }

    int choose(Player p, int node, const std::vector<std::string>& opts, int seen, bool announce = true) {
        const char* name = p == Player::Eloise ? "eloise" : "abelard";
        std::cout << name << " options\n";
        for (std::size_t i = 0; i < opts.size(); ++i) std::cout << "  " << i + 1 << ": " << opts[i] << '\n';
        if (human_ != p) {
            int k = engine_choice(p, node, seen);
            if (announce) std::cout << name << " chooses " << k + 1 << ' ' << opts[k] << '\n';
            return k;
        }
        while (true) {
            std::cout << name << "> " << std::flush;
            std::string line;
            if (!std::getline(*in_, line)) throw InputError("input ended during play");
            auto toks = split_ws(line);
            std::cout << line << '\n';
            try {
                std::size_t used = 0;
                int k = toks.size() == 1 ? std::stoi(toks[0], &used) - 1 : -1;
                if (toks.size() == 1 && used == toks[0].size() && k >= 0 && k < static_cast<int>(opts.size())) {
                    if (announce) std::cout << name << " chooses " << k + 1 << ' ' << opts[k] << '\n';
                    return k;
                }
            } catch (const std::logic_error&) {
            }
            std::cout << "invalid choice, enter a number from 1 to " << opts.size() << '\n';
        }
    }

    DecompositionTree t_;
    Assignment x_;
    bool sequential_;
    std::optional<Player> human_;
    Player second_;
    std::istream* in_;
    Strategy engine_[2];
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean graph logic: evaluation, entailment, decomposition, proofs and games"};
    app.require_subcommand(1);
    int code = 0;

    std::string g_path, h_path, x_text, file, out_path, kind;
    bool and_flag = false, or_flag = false;

    auto flavor_of = [&]() {
        if (and_flag == or_flag) throw InputError("pass exactly one of --and / --or");
        return and_flag ? Flavor::And : Flavor::Or;
    };
    auto flavor_flags = [&](CLI::App* c) {
        c->add_flag("--and", and_flag, "conjunctive flavour");
        c->add_flag("--or", or_flag, "disjunctive flavour");
    };

    auto* eval = app.add_subcommand("eval", "evaluate a graph under an assignment");
    eval->add_option("-g,--graph", g_path, "graph file")->required();
    eval->add_option("-x,--assignment", x_text, "comma-separated true labels")->required();
    eval->callback([&] {
        std::cout << evaluate(read_graph_file(g_path), parse_assignment(x_text)).str() << '\n';
    });

    auto* entail = app.add_subcommand("entail", "decide entailment between two graphs");
    flavor_flags(entail);
    entail->add_option("G", g_path, "graph file")->required();
    entail->add_option("H", h_path, "graph file")->required();
    entail->callback([&] {
        Flavor f = flavor_of();
        auto g = read_graph_file(g_path), h = read_graph_file(h_path);
        code = answer(f == Flavor::And ? entails_and(g, h) : entails_or(g, h));
    });

    auto* dec = app.add_subcommand("decompose", "print the modular decomposition tree");
    dec->add_option("G", g_path, "graph file")->required();
    dec->callback([&] {
        auto g = read_graph_file(g_path);
        if (g.empty()) throw InputError("cannot decompose the empty graph");
        std::cout << render_tree(decompose(g)) << '\n';
    });

    auto* webc = app.add_subcommand("web", "print the relation web of a formula");
    webc->add_option("formula", file, "formula file")->required();
    webc->callback([&] { std::cout << format_graph(web(parse_formula(read_file(file)))); });

    auto* synth = app.add_subcommand("synth", "print the formula of a P4-free graph");
    synth->add_option("G", g_path, "graph file")->required();
    synth->callback([&] { std::cout << to_string(cotree_to_formula(read_graph_file(g_path))) << '\n'; });

    bool dnf = false, cnf = false;
    std::string emit;
    std::size_t max_nodes = 4096;
    auto* norm = app.add_subcommand("normalize", "rewrite a graph into DNF or CNF");
    norm->add_flag("--dnf", dnf);
    norm->add_flag("--cnf", cnf);
    norm->add_option("G", g_path, "graph file")->required();
    norm->add_option("--emit-derivation", emit, "write the rewrite derivation to a file");
    norm->add_option("--max-nodes", max_nodes, "node budget for intermediate graphs");
    norm->callback([&] {
        if (dnf == cnf) throw InputError("pass exactly one of --dnf / --cnf");
        auto g = read_graph_file(g_path);
        NormalForm nf = dnf ? to_dnf(g, max_nodes) : to_cnf(g, max_nodes);
        std::cout << format_graph(nf.graph);
        if (!emit.empty()) write_text(emit, format_derivation(nf.derivation));
    });

    auto* derive = app.add_subcommand("derive", "build a derivation witnessing an entailment");
    flavor_flags(derive);
    derive->add_option("G", g_path, "graph file")->required();
    derive->add_option("H", h_path, "graph file")->required();
    derive->add_option("-o,--output", out_path, "derivation file (default: standard output)");
    derive->add_option("--max-nodes", max_nodes, "node budget for intermediate graphs");
    derive->callback([&] {
        Flavor f = flavor_of();
        auto g = read_graph_file(g_path), h = read_graph_file(h_path);
        if (!(f == Flavor::And ? entails_and(g, h) : entails_or(g, h))) {
            std::cout << "false\n";
            code = 1;
            return;
        }
        Derivation d = derive_entailment(g, h, f, max_nodes);
        std::string text = format_derivation(d);
        if (out_path.empty())
            std::cout << text;
        else {
            write_text(out_path, text);
            std::cout << "steps " << d.steps.size() << '\n';
        }
    });

    auto* chk = app.add_subcommand("check-derivation", "verify every step of a derivation");
    flavor_flags(chk);
    chk->add_option("file", file)->required();
    chk->callback([&] {
        std::optional<Flavor> f;
        if (and_flag || or_flag) f = flavor_of();
        CheckResult r = check_derivation(parse_derivation(read_file(file)), f);
        if (r.ok) {
            std::cout << "ok\n";
        } else {
            std::cout << "fails at step " << r.step << ": " << r.reason << '\n';
            code = 1;
        }
    });

    auto* check = app.add_subcommand("check", "test a graph property");
    check->add_option("property", kind)->required()->check(
        CLI::IsMember({"cis", "total", "prime", "p4free", "deterministic"}));
    check->add_option("G", g_path, "graph file")->required();
    check->callback([&] {
        auto g = read_graph_file(g_path);
        if (kind == "cis") {
            code = answer(is_cis(g));
        } else if (kind == "prime") {
            code = answer(is_prime(g));
        } else if (kind == "p4free") {
            auto p4 = find_induced_p4(g);
            code = answer(!p4);
            if (p4) {
                std::cout << "witness";
                for (int i : *p4) std::cout << ' ' << g.id(i);
                std::cout << '\n';
            }
        } else {
            auto w = kind == "total" ? totality_witness(g) : determinism_witness(g);
            code = answer(!w);
            if (w) std::cout << "witness {" << format_assignment(*w) << "}\n";
        }
    });

    std::string mode = "static", human, second, script;
    auto* playc = app.add_subcommand("play", "play the evaluation game");
    playc->add_option("G", g_path, "graph file")->required();
    playc->add_option("-x,--assignment", x_text)->required();
    playc->add_option("--mode", mode)->check(CLI::IsMember({"static", "sequential"}));
    playc->add_option("--human", human)->check(CLI::IsMember({"eloise", "abelard"}));
    playc->add_option("--second", second)->check(CLI::IsMember({"eloise", "abelard"}));
    playc->add_option("--script", script, "read the human's choices from a file");
    playc->callback([&] {
        if (!second.empty() && mode != "sequential") throw InputError("--second only applies to sequential play");
        if (!script.empty() && human.empty()) throw InputError("--script needs --human");
        auto g = read_graph_file(g_path);
        if (g.empty()) throw InputError("cannot play on the empty graph");
        std::ifstream scripted;
        std::istream* in = &std::cin;
        if (!script.empty()) {
            scripted.open(script);
            if (!scripted) throw InputError("cannot open '" + script + "'");
            in = &scripted;
        }
        std::optional<Player> who;
        if (!human.empty()) who = parse_player(human);
        Game game(g, parse_assignment(x_text), mode == "sequential", who,
                  second.empty() ? Player::Abelard : parse_player(second), in);
        code = game.run();
    });

    auto* reduce = app.add_subcommand("reduce", "build the graphs of a SAT or 2QBF reduction");
    reduce->add_option("problem", kind)->required()->check(CLI::IsMember({"sat", "qbf"}));
    reduce->add_option("file", file)->required();
    reduce->callback([&] {
        std::string text = read_file(file);
        if (kind == "sat") {
            EvaluationInstance e = sat_to_evaluation(parse_dimacs(text));
            std::cout << format_graph(e.graph) << "# assignment " << format_assignment(e.assignment) << '\n';
            return;
        }
        NormalizedQbf nq = normalize_qbf(parse_qdimacs(text));
        if (nq.resolved) {
            std::cout << "# resolved " << (*nq.resolved ? "true" : "false") << '\n';
            return;
        }
        EntailmentInstance e = qbf_to_entailment(nq.instance);
        std::cout << "# G\n" << format_graph(e.g) << "# H\n" << format_graph(e.h);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    }
    return code;
}
