#include <clab/json_io.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace clab
{
    using nlohmann::ordered_json;

    namespace
    {
        constexpr std::uint64_t max_colour = 1u << 20;

        auto require(bool cond, const std::string & what) -> void
        {
            if (! cond)
                throw InputError(what);
        }

        auto string_array(const nlohmann::json & j, const std::string & what) -> std::vector<std::string>
        {
            require(j.is_array(), what + " must be an array");
            std::vector<std::string> out;
            for (const auto & e : j) {
                require(e.is_string(), what + " entries must be strings");
                out.push_back(e.get<std::string>());
            }
            return out;
        }
    }

    auto parse_graph_file(const std::string & text) -> GraphFile
    {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InputError(std::string{"malformed JSON: "} + e.what());
        }
        require(j.is_object(), "graph file must be a JSON object");

        static const std::set<std::string> known{"name", "vertices", "edges", "lists", "b", "rotation"};
        for (const auto & [key, value] : j.items())
            require(known.contains(key), "unknown key: " + key);
        require(j.contains("vertices"), "missing key: vertices");
        require(j.contains("edges"), "missing key: edges");

        std::string name = "g";
        if (j.contains("name")) {
            require(j["name"].is_string(), "name must be a string");
            name = j["name"].get<std::string>();
        }
        auto vertices = string_array(j["vertices"], "vertices");

        require(j["edges"].is_array(), "edges must be an array");
        EdgeNames edges;
        for (const auto & e : j["edges"]) {
            auto pair = string_array(e, "edge");
            require(pair.size() == 2, "each edge must have two endpoints");
            edges.emplace_back(pair[0], pair[1]);
        }

        GraphFile out;
        try {
            out.graph = build_graph(name, vertices, edges);
            if (j.contains("rotation")) {
                require(j["rotation"].is_object(), "rotation must be an object");
                RotationNames rot;
                for (const auto & [v, cyc] : j["rotation"].items())
                    rot[v] = string_array(cyc, "rotation of " + v);
                out.graph = out.graph.with_rotation(rot);
            }
        }
        catch (const GraphError & e) {
            throw InputError(e.what());
        }

        if (j.contains("lists")) {
            require(j["lists"].is_object(), "lists must be an object");
            ListAssignment lists;
            for (const auto & [v, cols] : j["lists"].items()) {
                require(out.graph.index_of(v).has_value(), "list for unknown vertex: " + v);
                require(cols.is_array(), "list of " + v + " must be an array");
                ColourSet s;
                for (const auto & c : cols) {
                    require(c.is_number_integer() && c.get<long long>() >= 0, "colours must be non-negative integers");
                    require(c.get<std::uint64_t>() < max_colour, "colour too large");
                    auto col = static_cast<Colour>(c.get<std::uint64_t>());
                    require(! s.contains(col), "duplicate colour in list of " + v);
                    s.insert(col);
                }
                lists[v] = s;
            }
            out.lists = std::move(lists);
        }

        if (j.contains("b")) {
            require(j["b"].is_number_integer() && j["b"].get<long long>() >= 1, "b must be a positive integer");
            out.fold = j["b"].get<unsigned>();
        }
        return out;
    }

    auto read_graph_file(const std::string & path) -> GraphFile
    {
        std::ifstream in(path);
        if (! in)
            throw InputError("cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph_file(ss.str());
    }

    auto to_json(const ColourSet & s) -> ordered_json
    {
        auto arr = ordered_json::array();
        for (auto c : s.members())
            arr.push_back(c);
        return arr;
    }

    auto to_json(const ListAssignment & lists, const Graph & g) -> ordered_json
    {
        ordered_json j = ordered_json::object();
        for (const auto & v : g.vertices())
            if (auto it = lists.find(v); it != lists.end())
                j[v] = to_json(it->second);
        return j;
    }

    auto to_json(const MultiColouring & phi, const Graph & g) -> ordered_json
    {
        return to_json(phi.assignment, g);
    }

    auto to_json(const GraphFile & file) -> ordered_json
    {
        const auto & g = file.graph;
        ordered_json j;
        j["name"] = g.name();
        j["vertices"] = g.vertices();
        auto edges = ordered_json::array();
        for (const auto & [a, b] : g.edge_names())
            edges.push_back({a, b});
        j["edges"] = edges;
        if (file.lists)
            j["lists"] = to_json(*file.lists, g);
        if (file.fold)
            j["b"] = *file.fold;
        if (auto rot = g.rotation_names()) {
            ordered_json r = ordered_json::object();
            for (const auto & v : g.vertices())
                r[v] = rot->at(v);
            j["rotation"] = r;
        }
        return j;
    }

    auto to_json(const SearchStats & s) -> ordered_json
    {
        return {{"nodes_expanded", s.nodes_expanded}, {"max_depth", s.max_depth}, {"forced_assignments", s.forced_assignments}};
    }

    auto to_json(const ProofTrace & t) -> ordered_json
    {
        ordered_json j;
        j["phi_v"] = to_json(t.phi_v);
        j["phi_w"] = to_json(t.phi_w);
        j["phi_t"] = to_json(t.phi_t);
        j["phi_t'"] = to_json(t.phi_tp);
        j["S"] = to_json(t.S);
        j["T"] = to_json(t.T);
        j["R"] = to_json(t.R);
        j["comparison"] = {{"x_side", t.x_side}, {"v_side", t.v_side}};
        j["chosen_triangle"] = to_string(t.chosen);
        j["residual_union_size"] = t.residual_union_size;
        j["residual_union_sizes"] = t.residual_union_sizes;
        return j;
    }

    auto to_json(const VerificationReport & r) -> ordered_json
    {
        ordered_json j;
        j["claim"] = r.claim;
        j["method"] = to_string(r.method);
        j["verdict"] = to_string(r.verdict);
        j["branches_checked"] = r.branches_checked;
        ordered_json facts = ordered_json::object();
        for (const auto & [k, v] : r.facts)
            facts[k] = v;
        j["facts"] = facts;
        if (r.stats)
            j["stats"] = to_json(*r.stats);
        if (r.replay) {
            const auto & s = *r.replay;
            ordered_json chosen = ordered_json::object();
            for (auto t : {Triangle::abc, Triangle::xyz, Triangle::abc_primed, Triangle::xyz_primed})
                chosen[to_string(t)] = s.chosen_counts[static_cast<std::size_t>(t)];
            j["replay"] = {{"chosen_counts", chosen}, {"undefeated_branches", s.undefeated_branches},
                {"choice_failures", s.choice_failures}, {"s_size_failures", s.s_size_failures},
                {"r_bound_failures", s.r_bound_failures}, {"count_bound_failures", s.count_bound_failures},
                {"min_residual_union", s.min_residual_union}, {"max_residual_union", s.max_residual_union}};
            auto traces = ordered_json::array();
            for (const auto & t : r.traces)
                traces.push_back(to_json(t));
            j["traces"] = traces;
        }
        if (r.counterexample) {
            ordered_json phi = ordered_json::object();
            for (const auto & [v, c] : r.counterexample->assignment)
                phi[v] = to_json(c);
            j["counterexample"] = phi;
        }
        j["notes"] = r.notes;
        return j;
    }
}
