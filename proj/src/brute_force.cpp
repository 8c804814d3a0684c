#include <clab/solver.hpp>

namespace clab
{
    namespace
    {
        struct Enumerator
        {
            const Graph & g;
            const ListAssignment & lists;
            unsigned b;
            bool count_all;

            std::vector<ColourSet> current;
            std::optional<std::vector<ColourSet>> first;
            std::uint64_t count = 0;
            SearchStats stats;

            // Returns false once enumeration should stop.
            auto extend(VertexIndex v) -> bool
            {
                ++stats.nodes_expanded;
                stats.max_depth = std::max<std::uint64_t>(stats.max_depth, v);
                if (v == g.vertex_count()) {
                    ++count;
                    if (! first)
                        first = current;
                    return count_all;
                }
                auto from = lists.at(g.vertices()[v]).members();
                return for_each_subset(from, b, [&](const ColourSet & s) {
                    for (auto w : g.neighbours(v))
                        if (w < v && ! current[w].disjoint(s))
                            return true;
                    current[v] = s;
                    return extend(v + 1);
                });
            }
        };
    }

    auto brute_force(const Graph & g, const ListAssignment & lists, unsigned b, const BruteForceOptions & opts)
        -> BruteForceResult
    {
        if (b == 0)
            throw std::invalid_argument("brute_force: fold must be positive");
        for (const auto & v : g.vertices())
            if (! lists.contains(v))
                throw MissingListError("no list for vertex " + v);

        if (! opts.force) {
            if (g.vertex_count() > 8)
                throw InstanceTooLarge("brute_force: more than 8 vertices");
            for (const auto & v : g.vertices())
                if (lists.at(v).size() > 6)
                    throw InstanceTooLarge("brute_force: list of " + v + " exceeds 6 colours");
        }

        Enumerator e{g, lists, b, opts.count_all, std::vector<ColourSet>(g.vertex_count()), std::nullopt, 0, {}};
        e.extend(0);

        BruteForceResult r{Infeasible{e.stats, std::nullopt}, e.count};
        if (e.first) {
            Feasible f;
            f.stats = e.stats;
            f.colouring.fold = b;
            for (VertexIndex v = 0; v < g.vertex_count(); ++v)
                f.colouring.assignment[g.vertices()[v]] = (*e.first)[v];
            r.outcome = f;
        }
        return r;
    }
}
