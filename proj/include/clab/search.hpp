#pragma once

#include <clab/colours.hpp>
#include <clab/graph.hpp>
#include <clab/solver.hpp>

#include <cstdint>
#include <set>
#include <variant>

namespace clab
{
    struct WitnessFound
    {
        ListAssignment lists;
        std::uint64_t assignments_checked = 0;
    };

    struct ProvedChoosable
    {
        std::uint64_t assignments_checked = 0;
    };

    /// Every canonical assignment over the universe was checked without a
    /// witness, but the universe is smaller than a * |V| so choosability is
    /// not established.
    struct NoWitnessInUniverse
    {
        std::uint64_t assignments_checked = 0;
    };

    struct SearchExhausted
    {
        std::uint64_t assignments_checked = 0;
    };

    using WitnessOutcome = std::variant<WitnessFound, ProvedChoosable, NoWitnessInUniverse, SearchExhausted>;

    auto witness_outcome_name(const WitnessOutcome & o) -> const char *;

    /// Looks for an a-list assignment with colours from {0 .. universe-1}
    /// that admits no b-fold colouring. Assignments are generated in vertex
    /// order with colours relabelled greedily (each list may use earlier
    /// colours plus the next unused ones), so only one representative per
    /// relabelling class of that form is tried; the first witness in
    /// lexicographic order of the list sequence is returned.
    /// budget.max_nodes caps the number of assignments examined.
    /// Throws std::invalid_argument if universe < a.
    auto search_witness(const Graph & g, unsigned a, unsigned b, unsigned universe, const Budget & budget = {})
        -> WitnessOutcome;

    /// Checks a given assignment: every vertex outside `pinned` has exactly a
    /// colours, pinned vertices at most a, and there is no b-fold colouring.
    auto confirm_witness(const Graph & g, const ListAssignment & lists, unsigned a, unsigned b,
        const std::set<std::string> & pinned = {}, const Budget & budget = {}) -> bool;

    /// (a, b)-colourability: decide with every list equal to {0 .. a-1}.
    auto decide_ab(const Graph & g, unsigned a, unsigned b, const Budget & budget = {}) -> bool;

    struct ChiF
    {
        std::uint64_t numerator = 0;
        std::uint64_t denominator = 1;
        /// (a, b) attaining the value with the smallest b
        unsigned a = 0, b = 0;
        std::uint64_t clique_number = 0;
        /// value equals the clique number, so it is certainly chi_f
        bool matches_clique_bound = false;
    };

    /// min a/b over b <= max_b with g (a, b)-colourable. This is chi_f when
    /// its optimal denominator is at most max_b and an upper bound otherwise.
    /// Intended for at most 10 vertices; larger graphs throw InstanceTooLarge.
    auto chi_f(const Graph & g, unsigned max_b) -> ChiF;

    auto clique_number(const Graph & g) -> std::uint64_t;
}
