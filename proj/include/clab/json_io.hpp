#pragma once

#include <clab/colours.hpp>
#include <clab/graph.hpp>
#include <clab/search.hpp>
#include <clab/solver.hpp>
#include <clab/verifier.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace clab
{
    class InputError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// {"name", "vertices", "edges", "lists"?, "b"?, "rotation"?}; unknown keys are rejected.
    struct GraphFile
    {
        Graph graph;
        std::optional<ListAssignment> lists;
        std::optional<unsigned> fold;
    };

    /// Throws InputError on malformed JSON, unknown keys, bad colours, or any
    /// GraphError raised while building the graph.
    auto parse_graph_file(const std::string & text) -> GraphFile;
    auto read_graph_file(const std::string & path) -> GraphFile;
    auto to_json(const GraphFile & file) -> nlohmann::ordered_json;

    auto to_json(const ColourSet & s) -> nlohmann::ordered_json;
    auto to_json(const ListAssignment & lists, const Graph & g) -> nlohmann::ordered_json;
    auto to_json(const MultiColouring & phi, const Graph & g) -> nlohmann::ordered_json;
    auto to_json(const SearchStats & s) -> nlohmann::ordered_json;
    auto to_json(const ProofTrace & t) -> nlohmann::ordered_json;
    auto to_json(const VerificationReport & r) -> nlohmann::ordered_json;
}
