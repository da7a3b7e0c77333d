#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "domgame/closed_forms.hpp"
#include "domgame/corpus.hpp"
#include "domgame/errors.hpp"
#include "domgame/impartial.hpp"
#include "domgame/misere.hpp"
#include "domgame/partizan.hpp"
#include "domgame/reductions.hpp"

namespace domgame::cli {

using nlohmann::json;

namespace {

constexpr const char* kDescription =
    "Exact solvers for the domination game (normal, misere and partizan play).\n"
    "Vertices are 0-based: v_1..v_n in the usual 1-based notation are 0..n-1.\n"
    "Graph inputs: a graph file, P<n> / C<n> for uncolored paths and cycles,\n"
    "or path:<colors> / cycle:<colors> for colored ones (colors over A/B).\n"
    "Partizan winners: Alice (Left) / Bob (Right) win regardless of who starts;\n"
    "First / Second mean the player to move first / second wins.\n"
    "DOMGAME_MAX_N overrides the search bound of 28 vertices.";

struct Input {
    Graph graph;
    enum class Shape { file, path, cycle } shape = Shape::file;
    std::string colors; // set for path:/cycle: shorthand
};

Input resolve_input(const std::string& text)
{
    static const std::regex plain(R"(([PC])(\d+))");
    static const std::regex colored(R"((path|cycle):([AB]+))");
    std::smatch m;
    if (std::regex_match(text, m, plain)) {
        const int n = std::stoi(m[2].str());
        if (n > kMaxMaskVertices)
            throw SizeGuardError("graph too large");
        if (m[1] == "P")
            return {build_path(n), Input::Shape::path, ""};
        return {build_cycle(n), Input::Shape::cycle, ""};
    }
    if (std::regex_match(text, m, colored)) {
        const auto colors = m[2].str();
        if (m[1] == "path")
            return {colored_path(colors), Input::Shape::path, colors};
        return {colored_cycle(colors), Input::Shape::cycle, colors};
    }
    if (text.starts_with("path:") || text.starts_with("cycle:"))
        throw InputError("colored shorthand needs a non-empty A/B string: '" + text + "'");
    return {load_graph_file(text), Input::Shape::file, ""};
}

int max_vertices_from_env()
{
    if (const char* env = std::getenv("DOMGAME_MAX_N")) {
        try {
            const int v = std::stoi(env);
            if (v >= 0)
                return std::min(v, kMaxMaskVertices);
        } catch (const std::exception&) {
        }
        throw InputError(std::string("DOMGAME_MAX_N must be a non-negative integer, got '") + env + "'");
    }
    return kDefaultMaxVertices;
}

Family parse_family(const std::string& s) { return s == "path" ? Family::path : Family::cycle; }

struct Context {
    int max_vertices;
    bool pretty;
};

// Each command fills `doc` with result fields; the caller adds command,
// input and elapsed_ms.
using Command = std::function<int(json& doc)>;

int cmd_nimber(const Context& ctx, const std::string& input, json& doc)
{
    auto in = resolve_input(input);
    if (in.graph.colored())
        throw UsageError("nimber needs an uncolored graph; use 'value' for colored graphs");
    auto g = std::make_shared<const Graph>(std::move(in.graph));
    ImpartialSolver solver(g, {.max_vertices = ctx.max_vertices});
    const Nimber n = solver.grundy(VertexMask{0});
    doc["nimber"] = n.value;
    doc["winner"] = to_string(n.is_zero() ? Winner::Second : Winner::First);
    json result = {{"vertices", g->vertex_count()}, {"edges", g->edge_count()}};
    std::optional<Vertex> best;
    if (g->vertex_count() > 0)
        best = solver.best_move(VertexMask{0});
    result["winning_move"] = best ? json(*best) : json(nullptr);
    doc["result"] = result;
    return 0;
}

int cmd_winner(const Context& ctx, const std::string& variant, const std::string& input, json& doc)
{
    auto in = resolve_input(input);
    const auto s = GameState::initial(std::move(in.graph));
    const bool colored = s.graph().colored();
    json result = {{"variant", variant}, {"partizan", colored}};
    if (!colored) {
        const Winner w =
            variant == "normal" ? normal_winner(s, ctx.max_vertices) : misere_winner(s, ctx.max_vertices);
        doc["winner"] = to_string(w);
        if (variant == "normal")
            doc["nimber"] = grundy(s, ctx.max_vertices).value;
    } else if (variant == "normal") {
        const auto v = partizan_value(s, ctx.max_vertices);
        doc["value"] = cgt::display(v);
        doc["winner"] = winner_label(partizan_winner(v));
        result["outcome"] = to_string(partizan_winner(v));
    } else {
        const Outcome o = misere_outcome(s, ctx.max_vertices);
        doc["winner"] = winner_label(o);
        result["outcome"] = to_string(o);
    }
    doc["result"] = result;
    return 0;
}

int cmd_value(const Context& ctx, const std::string& input, std::optional<std::string> method, json& doc)
{
    auto in = resolve_input(input);
    if (!in.graph.colored())
        throw UsageError("value needs a colored graph (path:<colors>, cycle:<colors> or a file with a colors line)");
    const bool shorthand = in.shape != Input::Shape::file;
    const std::string how = method.value_or(shorthand ? "dp" : "bruteforce");
    cgt::GameValue v;
    if (how == "dp") {
        if (!shorthand)
            throw UsageError("--method dp needs path:<colors> or cycle:<colors> input");
        v = in.shape == Input::Shape::path ? path_dp(in.colors) : cycle_value(in.colors);
    } else {
        v = partizan_value(GameState::initial(std::move(in.graph)), ctx.max_vertices);
    }
    const Outcome o = partizan_winner(v);
    doc["value"] = cgt::display(v);
    doc["winner"] = winner_label(o);
    doc["result"] = {{"method", how}, {"outcome", to_string(o)}};
    return 0;
}

int cmd_closed_form(const std::string& spec, json& doc)
{
    const auto comps = parse_component_spec(spec);
    json parts = json::array();
    for (const auto& c : comps)
        parts.push_back({{"component", std::string(c.kind == ComponentSpec::Kind::path ? "P" : "C") +
                                           std::to_string(c.n)},
                         {"nimber", component_nimber(c).value}});
    doc["nimber"] = union_nimber(comps).value;
    doc["winner"] = to_string(union_winner(comps));
    doc["result"] = {{"components", parts}};
    return 0;
}

int cmd_reduce(const std::string& kind, const std::string& input, const std::optional<std::string>& out_path,
               json& doc)
{
    Graph g;
    std::vector<std::string> header;
    json result = {{"kind", kind}};
    if (kind == "normal") {
        const auto f = load_dnf_file(input);
        const auto normalized = normalize_formula(f);
        auto r = build_normal_reduction(normalized);
        header = r.role_comments();
        header.insert(header.begin(), "formula " + to_string(normalized));
        result["formula"] = to_string(f);
        result["normalized"] = to_string(normalized);
        g = std::move(r.graph);
    } else {
        auto in = resolve_input(input);
        if (kind == "misere") {
            g = build_misere_reduction(in.graph);
            header = misere_role_comments(in.graph);
        } else {
            g = build_partizan_reduction(in.graph);
            header = partizan_role_comments(in.graph);
        }
    }
    const std::string text = graph_to_string(g, header);
    if (out_path) {
        std::ofstream os(*out_path);
        if (!os)
            throw InputError("cannot write '" + *out_path + "'");
        os << text;
        result["written"] = *out_path;
    }
    result["vertices"] = g.vertex_count();
    result["edges"] = g.edge_count();
    result["diameter"] = diameter(g);
    result["graph"] = text;
    doc["result"] = result;
    return 0;
}

struct Tally {
    int checks = 0;
    json failures = json::array();

    void check(bool ok, const std::string& what, json detail = {})
    {
        ++checks;
        if (!ok) {
            detail["check"] = what;
            failures.push_back(detail);
        }
    }
};

void verify_closed_forms(const Context& ctx, int max_n, Tally& t)
{
    auto nimber_of = [&](const GameState& s) { return grundy(s, ctx.max_vertices).value; };
    for (int n = 1; n <= max_n; ++n)
        t.check(nimber_of(GameState::initial(build_path(n))) == path_nimber(n).value, "path P" + std::to_string(n));
    for (int n = 1; n <= std::min(max_n, 16); ++n) {
        t.check(nimber_of(marked_path(PathMark::prime, n)) == marked_path_nimber(PathMark::prime, n).value,
                "prime path " + std::to_string(n));
        t.check(nimber_of(marked_path(PathMark::doubleprime, n)) ==
                    marked_path_nimber(PathMark::doubleprime, n).value,
                "doubleprime path " + std::to_string(n));
    }
    for (int n = 3; n <= std::min(max_n, 20); ++n)
        t.check(nimber_of(GameState::initial(build_cycle(n))) == cycle_nimber(n).value, "cycle C" + std::to_string(n));
    for (int n = 0; n < 4; ++n)
        for (int k = 0; k < 4; ++k)
            t.check(r_table(n, k).value != static_cast<std::uint32_t>(n), "r_table cell");

    std::vector<ComponentSpec> pool;
    const int size_cap = std::min(max_n, 8);
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(size_cap); ++n)
        pool.push_back({ComponentSpec::Kind::path, n});
    for (std::uint64_t n = 3; n <= static_cast<std::uint64_t>(size_cap); ++n)
        pool.push_back({ComponentSpec::Kind::cycle, n});
    // Multisets of one to three components.
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a; b <= pool.size(); ++b)
            for (std::size_t c = b; c <= pool.size(); ++c) {
                if (b == pool.size() && c != pool.size())
                    continue;
                std::vector<ComponentSpec> comps{pool[a]};
                if (b < pool.size())
                    comps.push_back(pool[b]);
                if (c < pool.size())
                    comps.push_back(pool[c]);
                const auto g = build_components(comps);
                t.check(union_winner(comps) == normal_winner(GameState::initial(g), ctx.max_vertices),
                        "union winner");
            }
}

void verify_dp(const Context& ctx, int max_n, Tally& t)
{
    auto coloring = [](int n, std::uint32_t code) {
        std::string s(n, 'A');
        for (int v = 0; v < n; ++v)
            if ((code >> v) & 1)
                s[v] = 'B';
        return s;
    };
    for (int n = 1; n <= max_n; ++n)
        for (std::uint32_t code = 0; code < (1u << n); ++code) {
            const auto s = coloring(n, code);
            const auto dp = path_dp(s);
            const auto bf = partizan_value(GameState::initial(colored_path(s)), ctx.max_vertices);
            t.check(dp == bf, "path:" + s, {{"dp", cgt::display(dp)}, {"bruteforce", cgt::display(bf)}});
        }
    for (int m = 3; m <= std::min(max_n, 8); ++m)
        for (std::uint32_t code = 0; code < (1u << m); ++code) {
            const auto s = coloring(m, code);
            const auto dp = cycle_value(s);
            const auto bf = partizan_value(GameState::initial(colored_cycle(s)), ctx.max_vertices);
            t.check(dp == bf, "cycle:" + s, {{"dp", cgt::display(dp)}, {"bruteforce", cgt::display(bf)}});
        }
}

void verify_reductions(const Context& ctx, int max_n, Tally& t)
{
    auto record = [&](const ReductionReport& r) {
        t.check(r.passed(), std::string(to_string(r.kind)) + " " + r.instance,
                {{"source", r.source_winner}, {"reduced", r.reduced_winner}, {"structure", r.structure_detail}});
    };
    record(verify_normal_reduction(corpus::four_clause_example(), ctx.max_vertices));
    for (const auto& f : corpus::random_normalized_formulas(50, 5, 5, 20240601))
        record(verify_normal_reduction(f, ctx.max_vertices));
    for (int n = 1; n <= max_n; ++n)
        for (const auto& h : corpus::connected_graphs(n)) {
            record(verify_misere_reduction(h, ctx.max_vertices));
            if (h.edge_count() > 0) {
                record(verify_partizan_reduction(h, Convention::normal, ctx.max_vertices));
                record(verify_partizan_reduction(h, Convention::misere, ctx.max_vertices));
            }
        }
}

int cmd_verify(const Context& ctx, const std::string& suite, std::optional<int> max_n, json& doc)
{
    Tally t;
    if (suite == "closedforms")
        verify_closed_forms(ctx, max_n.value_or(24), t);
    else if (suite == "dp")
        verify_dp(ctx, max_n.value_or(10), t);
    else
        verify_reductions(ctx, max_n.value_or(7), t);
    const bool ok = t.failures.empty();
    doc["result"] = {{"suite", suite}, {"checks", t.checks}, {"failed", t.failures.size()},
                     {"passed", ok}, {"failures", t.failures}};
    return ok ? 0 : 1;
}

int cmd_sweep(const Context& ctx, const std::string& family_name, const std::string& variant, int max_n, bool tsv,
              std::ostream& out, json& doc)
{
    const Family family = parse_family(family_name);
    json rows = json::array();
    std::string text;
    if (variant == "misere") {
        const auto table = misere_sweep(family, max_n, ctx.max_vertices);
        for (const auto& r : table)
            rows.push_back({{"n", r.n}, {"winner", to_string(r.winner)}});
        text = sweep_tsv(family, table);
    } else {
        const auto table = misere_partizan_sweep(family, max_n, ctx.max_vertices);
        for (const auto& r : table)
            rows.push_back({{"n", r.n}, {"colors", r.colors}, {"winner", winner_label(r.outcome)}});
        text = sweep_tsv(family, table);
    }
    if (tsv) {
        out << text;
        return -1; // already written
    }
    doc["result"] = {{"family", family_name}, {"variant", variant}, {"rows", rows},
                     {"note", "exhaustive search results; conjecture data, not a theorem"}};
    return 0;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{kDescription, "domgame"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indented JSON with interpretation notes");

    std::string input, variant = "normal", kind, suite, family, method_text;
    std::optional<std::string> method, out_path;
    std::optional<int> max_n;
    int sweep_max = 0;
    bool tsv = false;

    auto* nimber = app.add_subcommand("nimber", "Sprague-Grundy value of an uncolored graph");
    nimber->add_option("input", input, "graph file, P<n> or C<n>")->required();

    auto* winner = app.add_subcommand("winner", "Winner under normal or misere play (colored input is partizan)");
    winner->add_option("--variant", variant, "normal or misere")->check(CLI::IsMember({"normal", "misere"}));
    winner->add_option("input", input, "graph input")->required();

    auto* value = app.add_subcommand("value", "Game value of a colored position");
    value->add_option("input", input, "path:<colors>, cycle:<colors> or a colored graph file")->required();
    value->add_option("--method", method, "dp or bruteforce")->check(CLI::IsMember({"dp", "bruteforce"}));

    auto* closed = app.add_subcommand("closed-form", "Winner of a union of paths and cycles without search");
    closed->add_option("spec", input, "comma-separated P<n>/C<n>, e.g. P3,P6,P7")->required();

    auto* reduce = app.add_subcommand("reduce", "Build a reduction graph");
    reduce->add_option("--kind", kind, "normal (DNF file input), misere or partizan (graph input)")
        ->required()
        ->check(CLI::IsMember({"normal", "misere", "partizan"}));
    reduce->add_option("input", input, "DNF file or graph input")->required();
    reduce->add_option("--out", out_path, "also write the graph file here");

    auto* verify = app.add_subcommand("verify", "Run a verification suite against the brute-force engines");
    verify->add_option("--suite", suite, "closedforms, dp or reductions")
        ->required()
        ->check(CLI::IsMember({"closedforms", "dp", "reductions"}));
    verify->add_option("--max-n", max_n, "largest instance size")->check(CLI::NonNegativeNumber);

    auto* sweep = app.add_subcommand("sweep", "Misere winners over a path or cycle family (conjecture data)");
    sweep->add_option("--family", family, "path or cycle")->required()->check(CLI::IsMember({"path", "cycle"}));
    std::string sweep_variant = "misere";
    sweep->add_option("--variant", sweep_variant, "misere or misere-partizan")
        ->check(CLI::IsMember({"misere", "misere-partizan"}));
    sweep->add_option("--max-n", sweep_max, "largest n")->required()->check(CLI::NonNegativeNumber);
    sweep->add_flag("--tsv", tsv, "emit n<TAB>winner rows instead of JSON");

    std::vector<const char*> argv{"domgame"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    json doc;
    std::string command;
    int code = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Context ctx{max_vertices_from_env(), pretty};
        if (nimber->parsed()) {
            command = "nimber";
            code = cmd_nimber(ctx, input, doc);
        } else if (winner->parsed()) {
            command = "winner";
            code = cmd_winner(ctx, variant, input, doc);
        } else if (value->parsed()) {
            command = "value";
            code = cmd_value(ctx, input, method, doc);
        } else if (closed->parsed()) {
            command = "closed-form";
            code = cmd_closed_form(input, doc);
        } else if (reduce->parsed()) {
            command = "reduce";
            code = cmd_reduce(kind, input, out_path, doc);
        } else if (verify->parsed()) {
            command = "verify";
            input = suite;
            code = cmd_verify(ctx, suite, max_n, doc);
        } else {
            command = "sweep";
            input = family;
            code = cmd_sweep(ctx, family, sweep_variant, sweep_max, tsv, out, doc);
            if (code < 0)
                return 0;
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const SizeGuardError& e) {
        err << "refused: " << e.what() << " (raise DOMGAME_MAX_N to override)\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    doc["command"] = command;
    doc["input"] = input;
    doc["elapsed_ms"] = elapsed.count();
    if (pretty && doc.contains("winner") && (command == "value" || doc["result"].value("partizan", false)))
        doc["notes"] = "Alice/Bob: that player wins whoever starts. First/Second: the player moving first/second "
                       "wins. In a single game Alice moves first.";
    out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
    return code;
}

} // namespace domgame::cli
