#pragma once

// Randomised property suites shared by the unit tests and the acceptance run.

#include "generators.hpp"
#include "oracles.hpp"

#include <clab/proper.hpp>
#include <clab/solver.hpp>

#include <random>
#include <sstream>
#include <string>

namespace clab::testing
{
    struct SuiteResult
    {
        std::string name;
        std::size_t cases = 0;
        std::size_t failures = 0;
        std::string first_failure;

        explicit SuiteResult(std::string n) : name(std::move(n)) {}

        [[nodiscard]] auto ok(std::size_t min_cases) const -> bool { return cases >= min_cases && failures == 0; }

        auto fail(const std::string & why) -> void
        {
            if (failures++ == 0)
                first_failure = why;
        }
    };

    inline auto describe(const Instance & in) -> std::string
    {
        std::ostringstream s;
        s << "|V|=" << in.graph.vertex_count() << " |E|=" << in.graph.edge_count() << " b=" << in.fold;
        return s.str();
    }

    /// decide vs brute_force, and the CNF verdict (DPLL) vs decide.
    inline auto oracle_suite(std::uint64_t seed, std::size_t count) -> std::pair<SuiteResult, SuiteResult>
    {
        SuiteResult agree{"decide == brute_force"}, cnf{"CNF verdict == decide"};
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < count; ++i) {
            auto in = random_instance(rng);
            auto d = decide(in.graph, in.lists, in.fold);
            auto bf = brute_force(in.graph, in.lists, in.fold).outcome;
            ++agree.cases;
            if (is_feasible(d) != is_feasible(bf) || is_exhausted(d))
                agree.fail("case " + std::to_string(i) + " " + describe(in));
            if (const auto * f = std::get_if<Feasible>(&d); f && ! is_proper(in.graph, in.lists, f->colouring))
                agree.fail("improper witness at case " + std::to_string(i));

            auto enc = encode_cnf(in.graph, in.lists, in.fold);
            ++cnf.cases;
            if (Dpll(enc).satisfiable() != is_feasible(d))
                cnf.fail("case " + std::to_string(i) + " " + describe(in));
        }
        return {agree, cnf};
    }

    inline auto list_monotonicity(std::uint64_t seed, std::size_t count) -> SuiteResult
    {
        SuiteResult r{"list monotonicity"};
        std::mt19937_64 rng(seed);
        for (std::size_t attempt = 0; r.cases < count && attempt < 50 * count; ++attempt) {
            auto in = random_instance(rng);
            if (! is_feasible(decide(in.graph, in.lists, in.fold)))
                continue;
            auto bigger = in.lists;
            for (auto & [v, l] : bigger)
                l |= random_list(rng, 6, 0);
            ++r.cases;
            if (! is_feasible(decide(in.graph, bigger, in.fold)))
                r.fail(describe(in));
        }
        return r;
    }

    inline auto edge_monotonicity(std::uint64_t seed, std::size_t count) -> SuiteResult
    {
        SuiteResult r{"edge monotonicity"};
        std::mt19937_64 rng(seed);
        for (std::size_t attempt = 0; r.cases < count && attempt < 50 * count; ++attempt) {
            auto in = random_instance(rng, 7, 4);
            if (! is_infeasible(decide(in.graph, in.lists, in.fold)))
                continue;
            auto es = in.graph.edge_names();
            std::bernoulli_distribution coin(0.5);
            const auto & vs = in.graph.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (! in.graph.adjacent(i, j) && coin(rng))
                        es.emplace_back(vs[i], vs[j]);
            auto denser = build_graph(vs, es);
            ++r.cases;
            if (! is_infeasible(decide(denser, in.lists, in.fold)))
                r.fail(describe(in));
        }
        return r;
    }

    inline auto permutation_equivariance(std::uint64_t seed, std::size_t count) -> SuiteResult
    {
        SuiteResult r{"colour-permutation equivariance"};
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < count; ++i) {
            auto in = random_instance(rng);
            std::vector<Colour> perm(5);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            ListAssignment permuted;
            for (const auto & [v, l] : in.lists)
                permuted[v] = relabel(l, perm);

            auto before = decide(in.graph, in.lists, in.fold);
            auto after = decide(in.graph, permuted, in.fold);
            ++r.cases;
            if (is_feasible(before) != is_feasible(after)) {
                r.fail("verdict changed: " + describe(in));
                continue;
            }
            if (const auto * f = std::get_if<Feasible>(&before)) {
                MultiColouring moved{{}, in.fold};
                for (const auto & [v, c] : f->colouring.assignment)
                    moved.assignment[v] = relabel(c, perm);
                if (! is_proper(in.graph, permuted, moved))
                    r.fail("permuted witness not proper: " + describe(in));
            }
        }
        return r;
    }

    inline auto glue_associativity(std::uint64_t seed, std::size_t count) -> SuiteResult
    {
        SuiteResult r{"glue associativity"};
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> nd(2, 5);
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<Graph> parts;
            for (auto name : {"P1", "P2", "P3"})
                parts.push_back(random_graph(rng, nd(rng), 0.5, name));
            // each part donates its first vertex to "s" and, if it has one, its last to "s2"
            auto ids_for = [](const Graph & g, std::size_t part) {
                std::vector<Identification> ids{{part, g.vertices().front(), "s"}};
                if (g.vertex_count() > 2)
                    ids.push_back({part, g.vertices().back(), "s2"});
                return ids;
            };
            std::vector<Identification> flat, inner;
            for (std::size_t p = 0; p < 3; ++p) {
                auto ids = ids_for(parts[p], p);
                flat.insert(flat.end(), ids.begin(), ids.end());
                if (p < 2)
                    inner.insert(inner.end(), ids.begin(), ids.end());
            }
            EdgeNames extra;

            ++r.cases;
            std::optional<Graph> one, two;
            try {
                one = glue("H", parts, flat, extra);
            }
            catch (const GraphError &) {
            }
            try {
                auto left = glue("L", {parts[0], parts[1]}, inner, {});
                std::vector<Identification> outer{{0, "s", "s"}};
                if (left.index_of("s2"))
                    outer.push_back({0, "s2", "s2"});
                auto right_ids = ids_for(parts[2], 1);
                outer.insert(outer.end(), right_ids.begin(), right_ids.end());
                two = glue("H", {left, parts[2]}, outer, extra);
            }
            catch (const GraphError &) {
            }
            if (one.has_value() != two.has_value())
                r.fail("one association rejected, the other accepted");
            else if (one && ! isomorphic(*one, *two))
                r.fail("results not isomorphic at case " + std::to_string(i));
        }
        return r;
    }

    /// Face tracing walks every dart once; plane graphs give V - E + F = 2;
    /// arbitrary rotations give an even Euler defect.
    inline auto euler_identity(std::uint64_t seed, std::size_t count) -> SuiteResult
    {
        SuiteResult r{"Euler face-count identity"};
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> id(1, 25);
        for (std::size_t i = 0; i < count; ++i) {
            auto g = random_plane_graph(rng, id(rng));
            auto rep = check_embedding(g);
            ++r.cases;
            if (rep.directed_traversals != 2 * rep.edges || ! rep.genus_ok)
                r.fail("plane case " + std::to_string(i));

            auto h = with_random_rotation(rng, g);
            auto rh = check_embedding(h);
            ++r.cases;
            if (rh.directed_traversals != 2 * rh.edges || rh.euler_characteristic() > 2 || (2 - rh.euler_characteristic()) % 2 != 0)
                r.fail("shuffled case " + std::to_string(i));
        }
        return r;
    }
}
