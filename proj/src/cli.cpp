#include <clab/cli.hpp>
#include <clab/gadget.hpp>
#include <clab/json_io.hpp>
#include <clab/proper.hpp>
#include <clab/search.hpp>
#include <clab/solver.hpp>
#include <clab/verifier.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace clab::cli
{
    using nlohmann::ordered_json;

    namespace
    {
        struct Envelope
        {
            std::string command;
            ordered_json inputs = ordered_json::object();
            std::string verdict;
            ordered_json details = ordered_json::object();
        };

        auto exit_for(ClaimVerdict v) -> int
        {
            switch (v) {
            case ClaimVerdict::verified: return ok;
            case ClaimVerdict::refuted: return refuted;
            case ClaimVerdict::inconclusive: return inconclusive;
            }
            return inconclusive;
        }

        auto write_file(const std::string & path, const std::string & body) -> void
        {
            std::ofstream f(path);
            if (! f)
                throw InputError("cannot write " + path);
            f << body;
        }

        struct BudgetFlags
        {
            std::uint64_t max_nodes = Budget{}.max_nodes;
            double max_seconds = Budget{}.max_seconds;

            auto add(CLI::App * app) -> void
            {
                app->add_option("--max-nodes", max_nodes, "search node budget per solve")->capture_default_str();
                app->add_option("--max-seconds", max_seconds, "wall-time budget per solve in seconds")->capture_default_str();
            }

            [[nodiscard]] auto budget() const -> Budget { return {max_nodes, max_seconds}; }
        };

        auto require_lists(const GraphFile & f) -> const ListAssignment &
        {
            if (! f.lists)
                throw InputError("input file has no lists");
            for (const auto & v : f.graph.vertices())
                if (! f.lists->contains(v))
                    throw InputError("no list for vertex " + v);
            return *f.lists;
        }

        auto fold_of(const GraphFile & f, unsigned flag) -> unsigned
        {
            if (flag > 0)
                return flag;
            if (f.fold)
                return *f.fold;
            throw InputError("no fold given: pass --b or set \"b\" in the file");
        }
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"clab: multiple list colouring workbench"};
        app.require_subcommand(1);

        // gadget
        unsigned gadget_m = 1;
        std::string gadget_out, gadget_format = "json";
        auto * gadget = app.add_subcommand("gadget", "write the gadget G(m) with its lists");
        gadget->add_option("--m", gadget_m, "fold m >= 1")->required()->check(CLI::PositiveNumber);
        gadget->add_option("--out", gadget_out, "output file (default: stdout)");
        gadget->add_option("--format", gadget_format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

        // solve / encode / export-dot / witness / chif share --input
        std::string input;
        unsigned fold_flag = 0;
        BudgetFlags solve_budget;
        auto * solve = app.add_subcommand("solve", "decide whether the file's lists admit a b-fold colouring");
        solve->add_option("--input", input, "JSON graph file")->required();
        solve->add_option("--b", fold_flag, "fold (default: the file's \"b\")");
        solve_budget.add(solve);

        std::string cnf_out;
        auto * encode = app.add_subcommand("encode", "write a DIMACS CNF for b-fold list colouring");
        encode->add_option("--input", input, "JSON graph file")->required();
        encode->add_option("--b", fold_flag, "fold (default: the file's \"b\")");
        encode->add_option("--out", cnf_out, "output .cnf file")->required();

        std::string dot_out;
        auto * dot = app.add_subcommand("export-dot", "write the graph (and lists) as DOT");
        dot->add_option("--input", input, "JSON graph file")->required();
        dot->add_option("--out", dot_out, "output file (default: stdout)");

        unsigned wit_a = 0, wit_b = 0, wit_universe = 0;
        std::uint64_t wit_budget = 1'000'000;
        double wit_seconds = Budget{}.max_seconds;
        bool wit_confirm = false;
        std::vector<std::string> wit_pinned;
        auto * witness = app.add_subcommand("witness", "search for an a-list assignment with no b-fold colouring");
        witness->add_option("--input", input, "JSON graph file")->required();
        witness->add_option("--a", wit_a, "list size")->required()->check(CLI::PositiveNumber);
        witness->add_option("--b", wit_b, "fold")->required()->check(CLI::PositiveNumber);
        witness->add_option("--universe", wit_universe, "colour universe size (default: a * |V|, enough to decide choosability)");
        witness->add_option("--budget", wit_budget, "maximum assignments examined")->capture_default_str();
        witness->add_option("--max-seconds", wit_seconds, "wall-time budget")->capture_default_str();
        witness->add_flag("--confirm", wit_confirm, "check the file's lists as a witness instead of searching");
        witness->add_option("--pinned", wit_pinned, "vertices allowed lists smaller than a (with --confirm)")->delimiter(',');

        unsigned chif_max_b = 3;
        auto * chif = app.add_subcommand("chif", "fractional chromatic number over denominators up to --max-b");
        chif->add_option("--input", input, "JSON graph file")->required();
        chif->add_option("--max-b", chif_max_b, "largest denominator tried")->capture_default_str()->check(CLI::PositiveNumber);

        // verify
        auto * verify = app.add_subcommand("verify", "verify the lemma, the theorem, or the arithmetic bounds");
        verify->require_subcommand(1);
        unsigned ver_m = 1;
        std::string lemma_method = "both";
        std::size_t trace_limit = 32;
        int parallel = 1;
        BudgetFlags ver_budget;
        auto * lemma = verify->add_subcommand("lemma", "G(m) with its lists has no m-fold colouring");
        lemma->add_option("--m", ver_m, "fold m >= 1")->required()->check(CLI::PositiveNumber);
        lemma->add_option("--method", lemma_method, "dfs, replay or both")->check(CLI::IsMember({"dfs", "replay", "both"}))->capture_default_str();
        lemma->add_option("--traces", trace_limit, "replay traces included in the report")->capture_default_str();
        lemma->add_option("--parallel", parallel, "OpenMP threads for replay")->capture_default_str();
        ver_budget.add(lemma);

        bool whole_graph = false;
        std::string copy_method = "replay";
        std::uint64_t vertex_cap = 10'000;
        auto * theorem = verify->add_subcommand("theorem", "H(m) with the bad lists has no m-fold colouring");
        theorem->add_option("--m", ver_m, "fold m >= 1")->required()->check(CLI::PositiveNumber);
        theorem->add_flag("--whole-graph", whole_graph, "also run the solver on all of H(m)");
        theorem->add_option("--copy-method", copy_method, "replay or dfs")->check(CLI::IsMember({"replay", "dfs"}))->capture_default_str();
        theorem->add_option("--parallel", parallel, "OpenMP threads over copies")->capture_default_str();
        theorem->add_option("--vertex-cap", vertex_cap, "largest H materialised for --whole-graph")->capture_default_str();
        ver_budget.add(theorem);

        std::uint64_t max_m = 1'000'000;
        auto * arithmetic = verify->add_subcommand("arithmetic", "counting inequality and bounds on a(m)");
        arithmetic->add_option("--max-m", max_m, "check every m up to this")->required()->check(CLI::PositiveNumber);

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            // help() follows the selected subcommand chain
            out << app.help();
            return ok;
        }
        catch (const CLI::ParseError & e) {
            ordered_json j{{"command", args.empty() ? "" : args.front()}, {"error", e.what()}};
            out << j.dump(2) << "\n";
            err << "clab: " << e.what() << "\n";
            return input_error;
        }

        auto start = std::chrono::steady_clock::now();
        Envelope env;
        int code = ok;
        bool raw_output = false;

        try {
            if (*gadget) {
                env.command = "gadget";
                env.inputs = {{"m", gadget_m}, {"format", gadget_format}};
                auto g = build_G(gadget_m);
                std::string body = gadget_format == "dot" ? export_dot(g.graph, &g.lists)
                                                          : to_json(GraphFile{g.graph, g.lists, gadget_m}).dump(2) + "\n";
                if (gadget_out.empty()) {
                    out << body;
                    raw_output = true;
                }
                else {
                    write_file(gadget_out, body);
                    env.verdict = "written";
                    env.details = {{"out", gadget_out}, {"vertices", g.graph.vertex_count()}, {"edges", g.graph.edge_count()},
                        {"k", g.params.k}, {"a", g.params.a}, {"p", g.params.p.str()}};
                }
            }
            else if (*solve) {
                env.command = "solve";
                auto f = read_graph_file(input);
                const auto & lists = require_lists(f);
                auto b = fold_of(f, fold_flag);
                env.inputs = {{"input", input}, {"b", b}, {"max_nodes", solve_budget.max_nodes}, {"max_seconds", solve_budget.max_seconds}};
                auto o = decide(f.graph, lists, b, solve_budget.budget());
                env.verdict = outcome_name(o);
                env.details["stats"] = to_json(stats_of(o));
                if (const auto * fe = std::get_if<Feasible>(&o)) {
                    env.details["colouring"] = to_json(fe->colouring, f.graph);
                    env.details["proper"] = static_cast<bool>(is_proper(f.graph, lists, fe->colouring));
                }
                if (const auto * in = std::get_if<Infeasible>(&o); in && in->short_list_vertex)
                    env.details["short_list_vertex"] = *in->short_list_vertex;
                code = is_exhausted(o) ? inconclusive : ok;
            }
            else if (*encode) {
                env.command = "encode";
                auto f = read_graph_file(input);
                auto b = fold_of(f, fold_flag);
                env.inputs = {{"input", input}, {"b", b}, {"out", cnf_out}};
                auto cnf = encode_cnf(f.graph, require_lists(f), b);
                write_file(cnf_out, cnf.to_dimacs());
                env.verdict = "written";
                env.details = {{"variables", cnf.variables}, {"primary_variables", cnf.primary_variables}, {"clauses", cnf.clauses.size()}};
            }
            else if (*dot) {
                env.command = "export-dot";
                auto f = read_graph_file(input);
                auto body = export_dot(f.graph, f.lists ? &*f.lists : nullptr);
                if (dot_out.empty()) {
                    out << body;
                    raw_output = true;
                }
                else {
                    write_file(dot_out, body);
                    env.inputs = {{"input", input}, {"out", dot_out}};
                    env.verdict = "written";
                }
            }
            else if (*witness) {
                env.command = "witness";
                auto f = read_graph_file(input);
                auto universe = wit_universe > 0 ? wit_universe : wit_a * static_cast<unsigned>(f.graph.vertex_count());
                env.inputs = {{"input", input}, {"a", wit_a}, {"b", wit_b}, {"universe", universe}, {"budget", wit_budget}};
                if (wit_confirm) {
                    std::set<std::string> pinned(wit_pinned.begin(), wit_pinned.end());
                    env.inputs["pinned"] = wit_pinned;
                    bool confirmed = confirm_witness(f.graph, require_lists(f), wit_a, wit_b, pinned, {Budget{}.max_nodes, wit_seconds});
                    env.verdict = confirmed ? "witness" : "not_a_witness";
                    code = confirmed ? ok : refuted;
                }
                else {
                    auto o = search_witness(f.graph, wit_a, wit_b, universe, {wit_budget, wit_seconds});
                    env.verdict = witness_outcome_name(o);
                    std::visit([&](const auto & r) { env.details["assignments_checked"] = r.assignments_checked; }, o);
                    if (const auto * w = std::get_if<WitnessFound>(&o))
                        env.details["lists"] = to_json(w->lists, f.graph);
                    code = std::holds_alternative<SearchExhausted>(o) || std::holds_alternative<NoWitnessInUniverse>(o) ? inconclusive : ok;
                }
            }
            else if (*chif) {
                env.command = "chif";
                auto f = read_graph_file(input);
                env.inputs = {{"input", input}, {"max_b", chif_max_b}};
                auto r = chi_f(f.graph, chif_max_b);
                env.verdict = std::to_string(r.numerator) + "/" + std::to_string(r.denominator);
                env.details = {{"numerator", r.numerator}, {"denominator", r.denominator}, {"a", r.a}, {"b", r.b},
                    {"clique_number", r.clique_number},
                    {"kind", r.matches_clique_bound ? "exact" : "bound"}};
            }
            else if (*lemma) {
                env.command = "verify lemma";
                env.inputs = {{"m", ver_m}, {"method", lemma_method}, {"max_nodes", ver_budget.max_nodes},
                    {"max_seconds", ver_budget.max_seconds}};
                std::vector<VerificationReport> reports;
                if (lemma_method != "replay")
                    reports.push_back(verify_lemma_dfs(ver_m, ver_budget.budget()));
                if (lemma_method != "dfs")
                    reports.push_back(verify_lemma_replay(ver_m, {trace_limit, parallel}));
                bool any_refuted = false, all_verified = true;
                auto arr = ordered_json::array();
                for (const auto & r : reports) {
                    any_refuted |= r.verdict == ClaimVerdict::refuted;
                    all_verified &= r.verdict == ClaimVerdict::verified;
                    arr.push_back(to_json(r));
                    err << "lemma m=" << ver_m << " " << to_string(r.method) << ": " << to_string(r.verdict) << " ("
                        << r.branches_checked << " branches)\n";
                }
                auto v = all_verified ? ClaimVerdict::verified : any_refuted ? ClaimVerdict::refuted : ClaimVerdict::inconclusive;
                env.verdict = to_string(v);
                env.details["reports"] = arr;
                code = exit_for(v);
            }
            else if (*theorem) {
                env.command = "verify theorem";
                env.inputs = {{"m", ver_m}, {"whole_graph", whole_graph}, {"copy_method", copy_method},
                    {"max_nodes", ver_budget.max_nodes}, {"max_seconds", ver_budget.max_seconds}};
                TheoremOptions opts;
                opts.budget = ver_budget.budget();
                opts.copy_method = copy_method == "dfs" ? CopyMethod::dfs : CopyMethod::replay;
                opts.threads = parallel;
                opts.vertex_cap = vertex_cap;
                std::vector<VerificationReport> reports{verify_theorem(ver_m, opts)};
                if (whole_graph)
                    reports.push_back(verify_theorem_whole(ver_m, opts));
                bool any_refuted = false, all_verified = true;
                auto arr = ordered_json::array();
                for (const auto & r : reports) {
                    any_refuted |= r.verdict == ClaimVerdict::refuted;
                    all_verified &= r.verdict == ClaimVerdict::verified;
                    arr.push_back(to_json(r));
                    err << r.claim << " m=" << ver_m << ": " << to_string(r.verdict) << "\n";
                }
                auto v = all_verified ? ClaimVerdict::verified : any_refuted ? ClaimVerdict::refuted : ClaimVerdict::inconclusive;
                env.verdict = to_string(v);
                env.details["reports"] = arr;
                code = exit_for(v);
            }
            else if (*arithmetic) {
                env.command = "verify arithmetic";
                env.inputs = {{"max_m", max_m}};
                auto r = verify_arithmetic(max_m);
                env.verdict = to_string(r.verdict);
                env.details["reports"] = ordered_json::array({to_json(r)});
                code = exit_for(r.verdict);
            }
        }
        catch (const std::exception & e) {
            // InputError, GraphError, CapExceeded, InstanceTooLarge, PreconditionViolation, ...
            ordered_json j{{"command", env.command}, {"error", e.what()}};
            out << j.dump(2) << "\n";
            err << "clab: " << e.what() << "\n";
            return input_error;
        }

        if (raw_output)
            return code;

        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        ordered_json j;
        j["command"] = env.command;
        j["inputs"] = env.inputs;
        j["verdict"] = env.verdict;
        j["details"] = env.details;
        j["timing"] = {{"seconds", elapsed.count()}};
        out << j.dump(2) << "\n";
        err << env.command << ": " << env.verdict << "\n";
        return code;
    }
}
