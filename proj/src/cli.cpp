#include "copnum/cli.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "copnum/bounds.hpp"
#include "copnum/game.hpp"
#include "copnum/random_graphs.hpp"
#include "copnum/strategies.hpp"

namespace copnum::cli {

void Report::add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
}

void Report::record(std::vector<std::pair<std::string, std::string>> fields) {
    records_.push_back(std::move(fields));
}

std::string Report::number(double v) {
    std::ostringstream s;
    s << std::setprecision(6) << v;
    return s.str();
}

void Report::print(std::ostream& out, bool json, const std::string& prefix) const {
    if (json) {
        nlohmann::ordered_json doc;
        for (const auto& [k, v] : fields_) doc[k] = v;
        if (!records_.empty()) {
            auto& arr = doc["records"] = nlohmann::ordered_json::array();
            for (const auto& rec : records_) {
                nlohmann::ordered_json item;
                for (const auto& [k, v] : rec) item[k] = v;
                arr.push_back(std::move(item));
            }
        }
        out << prefix << doc.dump() << '\n';
        return;
    }
    for (const auto& rec : records_) {
        out << prefix << "record:";
        for (const auto& [k, v] : rec) out << ' ' << k << '=' << v;
        out << '\n';
    }
    for (const auto& [k, v] : fields_) out << prefix << k << ": " << v << '\n';
}

namespace {

class CommandError : public std::runtime_error {
public:
    CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

std::string join(std::span<const Vertex> vs, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(vs[i]);
    }
    return s;
}

std::vector<Vertex> parse_list(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw CommandError(kUsage, "bad vertex list entry '" + item + "'");
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

std::vector<std::size_t> numbers_after(const std::string& name, const std::string& prefix) {
    std::vector<std::size_t> out;
    if (name.rfind(prefix, 0) != 0) return out;
    std::stringstream ss(name.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, '-')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) return {};
        out.push_back(std::stoul(item));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError(kParseError, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string state_text(const GameState& s) {
    return "cops=" + join(s.cops) + " robber=" + std::to_string(s.robber) +
           " to_move=" + (s.to_move == Side::cops ? "cops" : "robber");
}

std::string dist_text(std::size_t d) { return d == kInfinite ? "inf" : std::to_string(d); }

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void add_metrics(Report& r, const Graph& g) {
    auto m = metrics(g);
    r.add("n", g.order());
    r.add("m", g.edge_count());
    r.add("min_degree", m.min_degree);
    r.add("max_degree", m.max_degree);
    r.add("girth", dist_text(m.girth));
    r.add("diameter", dist_text(m.diameter));
    r.add("connected", m.is_connected);
    r.add("bipartite", m.is_bipartite);
}

struct Globals {
    bool json = false;
    std::uint64_t budget = kDefaultStateBudget;
    unsigned threads = 1;
};

}  // namespace

std::optional<LoadedGraph> builtin_graph(const std::string& raw) {
    std::string name = raw;
    if (name.size() > 6 && name.ends_with(".edges")) name.resize(name.size() - 6);
    LoadedGraph out;
    out.source = "builtin:" + name;
    auto labeled = [&](LabeledGraph lg) {
        out.graph = lg.graph;
        out.labels = std::move(lg);
        return out;
    };
    if (name == "petersen") return out.graph = named::petersen(), out;
    if (name == "heawood") return out.graph = named::heawood(), out;
    if (auto v = numbers_after(name, "ag-trunc-"); v.size() == 2)
        return labeled(truncated_affine_graph(static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1])));
    if (auto v = numbers_after(name, "ag-"); v.size() == 1)
        return labeled(incidence_graph(affine_plane(static_cast<unsigned>(v[0]))));
    if (auto v = numbers_after(name, "pg-"); v.size() == 1)
        return labeled(incidence_graph(projective_plane(static_cast<unsigned>(v[0]))));
    if (auto v = numbers_after(name, "witness-"); v.size() == 1) return out.graph = witness_graph(v[0]).graph, out;
    if (auto v = numbers_after(name, "complete-"); v.size() == 1) return out.graph = named::complete(v[0]), out;
    if (auto v = numbers_after(name, "path-"); v.size() == 1) return out.graph = named::path(v[0]), out;
    if (auto v = numbers_after(name, "cycle-"); v.size() == 1) return out.graph = named::cycle(v[0]), out;
    if (auto v = numbers_after(name, "star-"); v.size() == 1) return out.graph = named::star(v[0]), out;
    if (auto v = numbers_after(name, "grid-"); v.size() == 2) return out.graph = named::grid(v[0], v[1]), out;
    // Short forms: pN, cN, kN.
    if (name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1]))) {
        if (auto v = numbers_after(name, name.substr(0, 1)); v.size() == 1) {
            if (name[0] == 'p') return out.graph = named::path(v[0]), out;
            if (name[0] == 'c') return out.graph = named::cycle(v[0]), out;
            if (name[0] == 'k') return out.graph = named::complete(v[0]), out;
        }
    }
    return std::nullopt;
}

LoadedGraph load_graph(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) {
        LoadedGraph out;
        out.graph = parse_graph(read_file(spec));
        out.source = spec;
        return out;
    }
    if (auto b = builtin_graph(spec)) return std::move(*b);
    throw CommandError(kParseError, "no such graph file or builtin name: " + spec);
}

namespace {

SolveOptions solve_options(const Globals& g) { return SolveOptions{g.budget}; }

// solve --------------------------------------------------------------------

int cmd_solve(const Globals& glob, const std::string& spec, unsigned max_cops, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    auto lg = load_graph(spec);
    Report r;
    r.add("command", "solve");
    r.add("graph", lg.source);
    r.add("n", lg.graph.order());
    r.add("m", lg.graph.edge_count());
    std::uint64_t explored = 0;
    for (unsigned k = 1; k <= max_cops; ++k) {
        SolveResult res = [&] {
            try {
                return solve(lg.graph, k, solve_options(glob));
            } catch (const BudgetExceeded& e) {
                r.add("cop_number", "unknown (>= " + std::to_string(k) + ")");
                r.add("states", e.states());
                r.add("budget", glob.budget);
                r.print(out, glob.json);
                throw;
            }
        }();
        explored += res.state_count();
        if (res.cop_win()) {
            r.add("cop_number", k);
            r.add("best_placement", join(*res.best_placement()));
            r.add("capture_time", *res.capture_time());
            r.add("states", res.state_count());
            r.add("states_explored", explored);
            r.add("wall_ms", Report::number(elapsed_ms(t0)));
            r.print(out, glob.json);
            return kOk;
        }
    }
    r.add("cop_number", "> " + std::to_string(max_cops));
    r.add("states_explored", explored);
    r.add("wall_ms", Report::number(elapsed_ms(t0)));
    r.print(out, glob.json);
    return kPreconditionError;
}

// construct ----------------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    unsigned q = 0, k = 0;
    std::size_t n = 0;
    std::string out_path;
};

int cmd_construct(const Globals& glob, const ConstructArgs& a, std::ostream& out) {
    Report r;
    r.add("command", "construct");
    r.add("kind", a.kind);
    std::optional<LabeledGraph> lg;
    Graph g;
    if (a.kind == "pg" || a.kind == "heawood") {
        unsigned q = a.kind == "heawood" ? 2 : a.q;
        if (q == 0) throw CommandError(kUsage, "construct pg needs --q");
        lg = incidence_graph(projective_plane(q));
        r.add("q", q);
        r.add("points", q * q + q + 1);
    } else if (a.kind == "ag") {
        if (a.q == 0) throw CommandError(kUsage, "construct ag needs --q");
        lg = incidence_graph(affine_plane(a.q));
        r.add("q", a.q);
    } else if (a.kind == "ag-trunc") {
        if (a.q == 0) throw CommandError(kUsage, "construct ag-trunc needs --q and --k");
        lg = truncated_affine_graph(a.q, a.k);
        r.add("q", a.q);
        r.add("k", a.k);
        r.add("expected_order", 2 * a.q * a.q + a.q - a.k * a.q);
        r.add("cop_number_lower", a.q + 1 - a.k);
        r.add("cop_number_upper", a.q);
    } else if (a.kind == "witness") {
        auto w = witness_graph(a.n);
        g = w.graph;
        r.add("q", w.params.q);
        r.add("core_order", w.params.core_order);
        r.add("pendant_vertices", w.params.n - w.params.core_order);
        r.add("guaranteed_lower_bound", w.params.guaranteed_lower_bound);
    } else {
        throw CommandError(kUsage, "unknown kind '" + a.kind + "' (pg, ag, ag-trunc, witness, heawood)");
    }
    if (lg) g = lg->graph;
    add_metrics(r, g);

    if (a.out_path.empty()) {
        r.print(out, glob.json, glob.json ? "# " : "# ");
        out << serialize_graph(g);
        return kOk;
    }
    {
        std::ofstream f(a.out_path);
        if (!f) throw CommandError(kPreconditionError, "cannot write " + a.out_path);
        f << serialize_graph(g);
    }
    r.add("edges_file", a.out_path);
    if (lg) {
        std::ofstream f(a.out_path + ".labels");
        if (!f) throw CommandError(kPreconditionError, "cannot write " + a.out_path + ".labels");
        f << serialize_labels(*lg);
        r.add("labels_file", a.out_path + ".labels");
    }
    r.print(out, glob.json);
    return kOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string check;
    std::string graph;
    std::string kind;
    unsigned q = 0, k = 0;
    std::optional<unsigned> cops, cls;
    std::string path;
    std::optional<Vertex> from, to, vertex;
    std::optional<std::uint64_t> warmup;
    std::optional<std::uint64_t> max_rounds;
    std::string file;
    unsigned max_cops = 4;
    bool unchecked = false;
};

int verdict(Report& r, bool pass, const Globals& glob, std::ostream& out) {
    r.add("result", pass ? "PASS" : "FAIL");
    r.print(out, glob.json);
    return pass ? kOk : kVerifyFail;
}

void add_play(Report& r, std::span<const GameState> play, std::size_t limit = 64) {
    for (std::size_t i = 0; i < play.size() && i < limit; ++i)
        r.record({{"ply", std::to_string(i)},
                  {"cops", join(play[i].cops)},
                  {"robber", std::to_string(play[i].robber)},
                  {"to_move", play[i].to_move == Side::cops ? "cops" : "robber"}});
    if (play.size() > limit) r.add("play_truncated_at", limit);
}

unsigned exact_cop_number(const Globals& glob, const Graph& g, unsigned max_cops) {
    return cop_number(g, max_cops, solve_options(glob));
}

int cmd_verify(const Globals& glob, const VerifyArgs& a, std::ostream& out) {
    Report r;
    r.add("command", "verify");
    r.add("check", a.check);
    auto need_graph = [&] {
        if (a.graph.empty()) throw CommandError(kUsage, "verify " + a.check + " needs a graph");
        auto lg = load_graph(a.graph);
        r.add("graph", lg.source);
        r.add("n", lg.graph.order());
        return lg;
    };

    if (a.check == "mindeg") {
        auto lg = need_graph();
        auto m = metrics(lg.graph);
        r.add("girth", dist_text(m.girth));
        r.add("min_degree", m.min_degree);
        if (m.girth < 5) throw CommandError(kPreconditionError, "girth " + std::to_string(m.girth) + " < 5");
        unsigned c = exact_cop_number(glob, lg.graph, a.max_cops);
        r.add("cop_number", c);
        r.add("bound", std::to_string(m.min_degree) + " <= " + std::to_string(c));
        return verdict(r, c >= m.min_degree, glob, out);
    }
    if (a.check == "diam2") {
        auto lg = need_graph();
        auto m = metrics(lg.graph);
        if (m.diameter != 2)
            throw CommandError(kPreconditionError, "diameter is " + dist_text(m.diameter) + ", expected 2");
        unsigned c = exact_cop_number(glob, lg.graph, a.max_cops);
        r.add("cop_number", c);
        r.add("bound", Report::number(2.0 * std::sqrt(static_cast<double>(lg.graph.order())) - 1.0));
        return verdict(r, diameter2_check(lg.graph, c), glob, out);
    }
    if (a.check == "frankl") {
        auto lg = need_graph();
        auto fb = frankl_upper_bound(lg.graph);
        unsigned c = exact_cop_number(glob, lg.graph, a.max_cops);
        r.add("frankl_bound", fb.bound);
        r.add("cop_number", c);
        for (std::size_t i = 0; i < fb.decomposition.pieces.size(); ++i) {
            const auto& p = fb.decomposition.pieces[i];
            r.record({{"piece", std::to_string(i)},
                      {"kind", p.kind == PieceKind::path ? "path" : "neighbourhood"},
                      {"vertices", join(p.vertices)}});
        }
        return verdict(r, fb.bound >= c, glob, out);
    }
    if (a.check == "guard") {
        auto lg = need_graph();
        const Graph& g = lg.graph;
        std::unique_ptr<CopStrategy> guard;
        std::vector<Vertex> subset;
        if (a.vertex) {
            guard = std::make_unique<VertexGuard>(g, *a.vertex);
            subset.push_back(*a.vertex);
            for (Vertex w : g.neighbors(*a.vertex)) subset.push_back(w);
            r.add("guarded", "closed neighbourhood of " + std::to_string(*a.vertex));
        } else {
            std::vector<Vertex> path;
            if (!a.path.empty()) path = parse_list(a.path);
            else if (a.from && a.to) path = isometric_path(g, *a.from, *a.to);
            else throw CommandError(kUsage, "verify guard needs --path, --from/--to or --vertex");
            subset = path;
            if (a.unchecked) guard = std::make_unique<PathGuard>(PathGuard::unchecked(g, path));
            else guard = std::make_unique<PathGuard>(g, path);
            r.add("path", join(path));
            r.add("isometric", is_isometric_path(g, path));
        }
        auto warmup = a.warmup.value_or(g.order());
        r.add("strategy", guard->name());
        r.add("warmup", warmup);
        auto v = verify_guard(g, subset, *guard, warmup);
        r.add("status", v.status == GuardStatus::holds               ? "holds"
                        : v.status == GuardStatus::warmup_insufficient ? "warmup-insufficient"
                                                                       : "guard-failure");
        if (v.sufficient_warmup) r.add("sufficient_warmup", *v.sufficient_warmup);
        add_play(r, v.violation);
        return verdict(r, v.ok(), glob, out);
    }
    if (a.check == "strategy") {
        if (a.kind != "parallel-class")
            throw CommandError(kUsage, "verify strategy supports --kind parallel-class");
        auto lg = truncated_affine_graph(a.q, a.k);
        auto labels = class_labels(lg);
        unsigned cls = a.cls.value_or(labels.front());
        unsigned cops = a.cops.value_or(a.q);
        ParallelClassStrategy strat(lg, cls, cops);
        auto table = std::make_shared<const SolveResult>(solve(lg.graph, cops, solve_options(glob)));
        OptimalRobber robber(table);
        auto cap = a.max_rounds.value_or(default_round_cap(lg.graph.order(), cops));
        auto play = simulate(lg.graph, strat, robber, cap);
        r.add("strategy", "parallel-class");
        r.add("q", a.q);
        r.add("k", a.k);
        r.add("class", cls);
        r.add("cops", cops);
        r.add("n", lg.graph.order());
        r.add("robber", "optimal");
        r.add("captured", play.captured);
        r.add("rounds", play.rounds);
        if (!play.captured) {
            // Both sides are positional, so the first repeated state proves
            // the robber evades forever.
            std::set<GameState> seen;
            std::size_t cut = play.states.size();
            for (std::size_t i = 0; i < play.states.size(); ++i)
                if (!seen.insert(play.states[i]).second) {
                    cut = i + 1;
                    break;
                }
            add_play(r, std::span<const GameState>(play.states.data(), cut));
        }
        return verdict(r, play.captured, glob, out);
    }
    if (a.check == "axioms") {
        IncidenceStructure s;
        std::string expect;
        if (!a.file.empty()) {
            s = parse_incidence(read_file(a.file));
            expect = "partial-linear";
            r.add("source", a.file);
        } else if (a.kind == "pg") {
            s = projective_plane(a.q);
            expect = "projective";
        } else if (a.kind == "ag") {
            s = affine_plane(a.q);
            expect = "affine";
        } else if (a.kind == "ag-trunc") {
            s = remove_parallel_classes(affine_plane(a.q), a.k);
            expect = "partial-linear";
        } else {
            throw CommandError(kUsage, "verify axioms needs --kind pg|ag|ag-trunc or --file");
        }
        auto rep = validate_structure(s);
        r.add("points", s.points);
        r.add("lines", s.lines.size());
        r.add("partial_linear", rep.partial_linear);
        r.add("axiom1_unique_line", rep.unique_line_per_points);
        r.add("axiom2_unique_point", rep.unique_point_per_lines);
        r.add("axiom3_quadrangle", rep.four_points_in_general_position);
        r.add("parallel_classes", rep.parallel_classes_valid);
        r.add("projective", rep.is_projective());
        r.add("affine", rep.is_affine());
        if (rep.partial_linear_violation)
            r.add("counterexample", "points " + std::to_string(rep.partial_linear_violation->a) + "," +
                                        std::to_string(rep.partial_linear_violation->b) + " on lines " +
                                        std::to_string(rep.shared_by_lines->a) + "," +
                                        std::to_string(rep.shared_by_lines->b));
        r.add("expected", expect);
        bool pass = expect == "projective" ? rep.is_projective()
                    : expect == "affine"   ? rep.is_affine()
                                           : rep.partial_linear;
        return verdict(r, pass, glob, out);
    }
    throw CommandError(kUsage, "unknown check '" + a.check +
                                   "' (mindeg, diam2, guard, strategy, axioms, frankl)");
}

// simulate -----------------------------------------------------------------

struct SimulateArgs {
    std::string graph;
    unsigned cops = 1;
    std::string cop_strategy = "optimal", robber_strategy = "optimal";
    std::optional<std::uint64_t> max_rounds;
    bool trace = false;
    std::uint64_t seed = 1;
    std::string path, labels;
    std::optional<unsigned> cls;
};

int cmd_simulate(const Globals& glob, const SimulateArgs& a, std::ostream& out) {
    auto lg = load_graph(a.graph);
    const Graph& g = lg.graph;
    if (!a.labels.empty()) lg.labels = parse_labels(g, read_file(a.labels));

    std::shared_ptr<const SolveResult> table;
    auto solved = [&] {
        if (!table) table = std::make_shared<const SolveResult>(solve(g, a.cops, solve_options(glob)));
        return table;
    };

    std::unique_ptr<CopStrategy> cops;
    if (a.cop_strategy == "optimal") cops = std::make_unique<OptimalCops>(solved());
    else if (a.cop_strategy == "random") cops = std::make_unique<RandomCops>(a.cops, a.seed);
    else if (a.cop_strategy == "path-guard") {
        if (a.path.empty()) throw CommandError(kUsage, "path-guard needs --path");
        if (a.cops != 1) throw CommandError(kUsage, "path-guard plays with one cop");
        cops = std::make_unique<PathGuard>(g, parse_list(a.path));
    } else if (a.cop_strategy == "parallel-class") {
        if (!lg.labels) throw CommandError(kUsage, "parallel-class needs a labelled graph (ag-trunc-Q-K or --labels)");
        auto labels = class_labels(*lg.labels);
        if (labels.empty()) throw CommandError(kPreconditionError, "graph has no parallel classes");
        cops = std::make_unique<ParallelClassStrategy>(*lg.labels, a.cls.value_or(labels.front()), a.cops);
    } else {
        throw CommandError(kUsage, "unknown cop strategy '" + a.cop_strategy +
                                       "' (optimal, parallel-class, path-guard, random)");
    }

    std::unique_ptr<RobberStrategy> robber;
    if (a.robber_strategy == "optimal") robber = std::make_unique<OptimalRobber>(solved());
    else if (a.robber_strategy == "random") robber = std::make_unique<RandomRobber>(a.seed + 1);
    else throw CommandError(kUsage, "unknown robber strategy '" + a.robber_strategy + "' (optimal, random)");

    auto cap = a.max_rounds.value_or(default_round_cap(g.order(), a.cops));
    auto play = simulate(g, *cops, *robber, cap);

    Report r;
    r.add("command", "simulate");
    r.add("graph", lg.source);
    r.add("n", g.order());
    r.add("cops", a.cops);
    r.add("cop_strategy", cops->name());
    r.add("robber_strategy", robber->name());
    r.add("max_rounds", cap);
    r.add("captured", play.captured);
    r.add("outcome", play.captured ? "capture" : "robber survives");
    r.add("rounds", play.rounds);
    if (a.trace) add_play(r, play.states, play.states.size());
    r.print(out, glob.json);
    return kOk;
}

// random -------------------------------------------------------------------

int cmd_random(const Globals& glob, std::size_t n, double p, std::size_t trials, std::uint64_t seed,
               unsigned k_max, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentOptions opts;
    opts.k_max = k_max;
    opts.solve = solve_options(glob);
    opts.threads = glob.threads;
    auto res = cop_number_experiment(n, p, trials, seed, opts);
    Report r;
    for (const auto& t : res.records)
        r.record({{"trial", std::to_string(t.trial)},
                  {"n", std::to_string(n)},
                  {"p", Report::number(p)},
                  {"c", t.cop_number ? std::to_string(*t.cop_number) : "censored"},
                  {"benchmark", Report::number(res.benchmark)},
                  {"violation", t.violation ? "true" : "false"},
                  {"resamples", std::to_string(t.resamples)}});
    r.add("command", "random");
    r.add("n", n);
    r.add("p", Report::number(p));
    r.add("trials", trials);
    r.add("seed", seed);
    r.add("log_base", "e");
    r.add("benchmark", Report::number(res.benchmark));
    r.add("max_c", res.max_c);
    r.add("mean_c", Report::number(res.mean_c));
    r.add("violations", res.violations);
    r.add("censored", res.censored);
    r.add("resamples", res.resamples);
    r.add("below_threshold", res.below_threshold);
    r.add("wall_ms", Report::number(elapsed_ms(t0)));
    r.print(out, glob.json);
    return kOk;
}

// report -------------------------------------------------------------------

int cmd_report(const Globals& glob, const std::string& spec, unsigned max_cops, double threshold,
               std::ostream& out) {
    auto lg = load_graph(spec);
    ReportOptions opts;
    opts.k_max = max_cops;
    opts.solve = solve_options(glob);
    opts.extremal_threshold = threshold;
    auto rep = meyniel_report(lg.graph, lg.source, opts);
    Report r;
    for (const auto& b : rep.lower) r.record({{"bound", "lower"}, {"value", std::to_string(b.value)}, {"source", b.source}});
    for (const auto& b : rep.upper) r.record({{"bound", "upper"}, {"value", std::to_string(b.value)}, {"source", b.source}});
    r.add("command", "report");
    r.add("graph", rep.graph_id);
    r.add("n", rep.n);
    r.add("cop_number", rep.cop_number ? std::to_string(*rep.cop_number) : "unknown");
    r.add("method", rep.method);
    r.add("meyniel_ratio", Report::number(rep.meyniel_ratio));
    r.add("extremal", rep.extremal);
    r.add("consistent", rep.consistent());
    r.print(out, glob.json);
    return rep.consistent() ? kOk : kVerifyFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cops-and-robbers solver and finite-geometry toolkit", "copnum"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals glob;
    if (const char* env = std::getenv("COPNUM_BUDGET")) {
        try {
            glob.budget = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: COPNUM_BUDGET is not a number\n";
            return kUsage;
        }
    }
    app.add_flag("--json", glob.json, "Emit one JSON document instead of key: value lines");
    app.add_option("--budget", glob.budget, "State-space budget per solve (env COPNUM_BUDGET)");
    app.add_option("--threads", glob.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);

    std::string graph_spec;
    unsigned max_cops = 4;
    auto* solve_cmd = app.add_subcommand("solve", "Exact cop number, best placement and capture time");
    solve_cmd->add_option("graph", graph_spec, "Edge-list file or builtin name")->required();
    solve_cmd->add_option("--max-cops", max_cops, "Largest k to try");

    ConstructArgs cons;
    auto* construct_cmd = app.add_subcommand("construct", "Build pg, ag, ag-trunc, witness or heawood graphs");
    construct_cmd->add_option("kind", cons.kind)->required();
    construct_cmd->add_option("--q", cons.q, "Plane order");
    construct_cmd->add_option("--k", cons.k, "Deleted parallel classes");
    construct_cmd->add_option("--n", cons.n, "Witness order");
    construct_cmd->add_option("--out", cons.out_path, "Edge-list output file (labels go to FILE.labels)");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Check a bound, guard, strategy or axiom set");
    verify_cmd->add_option("check", ver.check, "mindeg, diam2, guard, strategy, axioms, frankl")->required();
    verify_cmd->add_option("graph", ver.graph, "Edge-list file or builtin name");
    verify_cmd->add_option("--kind", ver.kind);
    verify_cmd->add_option("--q", ver.q);
    verify_cmd->add_option("--k", ver.k);
    verify_cmd->add_option("--cops", ver.cops);
    verify_cmd->add_option("--class", ver.cls);
    verify_cmd->add_option("--path", ver.path, "Comma-separated path vertices");
    verify_cmd->add_option("--from", ver.from);
    verify_cmd->add_option("--to", ver.to);
    verify_cmd->add_option("--vertex", ver.vertex, "Guard the closed neighbourhood of this vertex");
    verify_cmd->add_option("--warmup", ver.warmup);
    verify_cmd->add_option("--max-rounds", ver.max_rounds);
    verify_cmd->add_option("--file", ver.file, "Incidence-structure file");
    verify_cmd->add_option("--max-cops", ver.max_cops);
    verify_cmd->add_flag("--unchecked", ver.unchecked, "Skip the isometry check on --path");

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Play two strategies against each other");
    simulate_cmd->add_option("graph", sim.graph)->required();
    simulate_cmd->add_option("--cops", sim.cops);
    simulate_cmd->add_option("--cop-strategy", sim.cop_strategy);
    simulate_cmd->add_option("--robber-strategy", sim.robber_strategy);
    simulate_cmd->add_option("--max-rounds", sim.max_rounds);
    simulate_cmd->add_flag("--trace", sim.trace);
    simulate_cmd->add_option("--seed", sim.seed);
    simulate_cmd->add_option("--path", sim.path);
    simulate_cmd->add_option("--labels", sim.labels);
    simulate_cmd->add_option("--class", sim.cls);

    std::size_t rn = 10, trials = 10;
    double rp = 0.5;
    std::uint64_t seed = 1;
    unsigned k_max = 4;
    auto* random_cmd = app.add_subcommand("random", "Cop numbers of seeded G(n,p) samples");
    random_cmd->add_option("--n", rn)->required();
    random_cmd->add_option("--p", rp)->required();
    random_cmd->add_option("--trials", trials);
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("--k-max", k_max);

    double threshold = 0.5;
    auto* report_cmd = app.add_subcommand("report", "All applicable bounds and the c/sqrt(n) ratio");
    report_cmd->add_option("graph", graph_spec)->required();
    report_cmd->add_option("--max-cops", max_cops);
    report_cmd->add_option("--threshold", threshold, "Ratio flagged as extremal");

    std::vector<const char*> argv{"copnum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(glob, graph_spec, max_cops, out);
        if (*construct_cmd) return cmd_construct(glob, cons, out);
        if (*verify_cmd) return cmd_verify(glob, ver, out);
        if (*simulate_cmd) return cmd_simulate(glob, sim, out);
        if (*random_cmd) return cmd_random(glob, rn, rp, trials, seed, k_max, out);
        if (*report_cmd) return cmd_report(glob, graph_spec, max_cops, threshold, out);
    } catch (const CommandError& e) {
        err << "error: " << e.what() << '\n';
        return e.code();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const BudgetExceeded& e) {
        err << "budget error: " << e.what() << '\n';
        return kBudgetError;
    } catch (const IllegalMove& e) {
        err << "illegal move: " << e.what() << '\n';
        err << "state: " << state_text(e.state()) << '\n';
        return kIllegalMove;
    } catch (const NotCopWin& e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionError;
    }
    return kUsage;
}

}  // namespace copnum::cli
