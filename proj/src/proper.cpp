#include <clab/proper.hpp>

namespace clab
{
    auto to_string(ViolationKind kind) -> const char *
    {
        switch (kind) {
        case ViolationKind::size: return "size";
        case ViolationKind::list: return "list";
        case ViolationKind::edge: return "edge";
        }
        return "?";
    }

    auto is_proper(const Graph & g, const ListAssignment & lists, const MultiColouring & phi) -> Verdict
    {
        for (const auto & v : g.vertices())
            if (! phi.assignment.contains(v))
                throw MissingVertexError("colouring does not cover vertex " + v);

        for (const auto & v : g.vertices()) {
            const auto & c = phi.assignment.at(v);
            if (c.size() != phi.fold)
                return {false, ViolationKind::size, v};
            auto l = lists.find(v);
            if (l == lists.end() || ! c.subset_of(l->second))
                return {false, ViolationKind::list, v};
        }

        for (auto [a, b] : g.edges()) {
            const auto & x = g.vertices()[a];
            const auto & y = g.vertices()[b];
            if (! phi.assignment.at(x).disjoint(phi.assignment.at(y)))
                return {false, ViolationKind::edge, x + "-" + y};
        }
        return {};
    }
}
