#pragma once

#include <clab/colours.hpp>
#include <clab/graph.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace clab
{
    struct Budget
    {
        std::uint64_t max_nodes = 100'000'000;
        double max_seconds = 300.0;
    };

    struct SearchStats
    {
        std::uint64_t nodes_expanded = 0;
        std::uint64_t max_depth = 0;
        std::uint64_t forced_assignments = 0;
    };

    struct Feasible
    {
        MultiColouring colouring;
        SearchStats stats;
    };

    struct Infeasible
    {
        SearchStats stats;
        /// set when some vertex has fewer than b permissible colours
        std::optional<std::string> short_list_vertex;
    };

    struct Exhausted
    {
        Budget budget;
        SearchStats stats;
    };

    using Outcome = std::variant<Feasible, Infeasible, Exhausted>;

    [[nodiscard]] inline auto is_feasible(const Outcome & o) -> bool { return std::holds_alternative<Feasible>(o); }
    [[nodiscard]] inline auto is_infeasible(const Outcome & o) -> bool { return std::holds_alternative<Infeasible>(o); }
    [[nodiscard]] inline auto is_exhausted(const Outcome & o) -> bool { return std::holds_alternative<Exhausted>(o); }
    auto outcome_name(const Outcome & o) -> const char *;
    auto stats_of(const Outcome & o) -> const SearchStats &;

    class MissingListError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Exact decision of whether g has a b-fold L-colouring.
    ///
    /// Depth-first search. At each node forced vertices (exactly b colours
    /// left) are assigned first; the uncoloured vertices are then split into
    /// connected components which are solved independently; within a
    /// component the branching vertex minimises
    ///     available - b * (uncoloured neighbours)
    /// with ties going to the earliest vertex, and its b-subsets are tried in
    /// lexicographic order. A node fails as soon as some uncoloured vertex has
    /// fewer than b colours left. Fully deterministic.
    auto decide(const Graph & g, const ListAssignment & lists, unsigned b, const Budget & budget = {}) -> Outcome;

    class InstanceTooLarge : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    struct BruteForceOptions
    {
        /// allow instances beyond 8 vertices or lists beyond 6 colours
        bool force = false;
        /// count every proper colouring instead of stopping at the first
        bool count_all = true;
    };

    struct BruteForceResult
    {
        Outcome outcome;
        /// proper colourings seen (all of them when count_all)
        std::uint64_t count = 0;
    };

    /// Reference oracle: walks vertices in graph order and tries every
    /// b-subset of each list, rejecting only partial assignments that
    /// already break properness. Shares no code with decide.
    auto brute_force(const Graph & g, const ListAssignment & lists, unsigned b, const BruteForceOptions & opts = {})
        -> BruteForceResult;

    struct Cnf
    {
        int variables = 0;
        int primary_variables = 0;
        std::vector<std::vector<int>> clauses;
        /// (vertex, colour, variable) for each primary variable, in numbering order
        std::vector<std::tuple<std::string, Colour, int>> map;
        unsigned fold = 1;

        [[nodiscard]] auto to_dimacs() const -> std::string;
    };

    /// CNF that is satisfiable iff g has a b-fold L-colouring. Variable
    /// x(v,c) exists for each c in L(v), numbered vertex-major in graph order
    /// with colours ascending. Exactly-b per vertex uses two sequential
    /// counters (at most b of x, at most |L(v)|-b of not-x).
    auto encode_cnf(const Graph & g, const ListAssignment & lists, unsigned b) -> Cnf;
}
