#pragma once

#include <clab/colours.hpp>
#include <clab/graph.hpp>

#include <stdexcept>
#include <string>

namespace clab
{
    enum class ViolationKind
    {
        size,
        list,
        edge
    };

    auto to_string(ViolationKind kind) -> const char *;

    struct Verdict
    {
        bool ok = true;
        ViolationKind kind = ViolationKind::size;
        /// the vertex, or "x-y" for an edge
        std::string where;

        explicit operator bool() const { return ok; }
    };

    class MissingVertexError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Checks that phi is a b-fold L-colouring of g. Vertices are scanned in
    /// graph order (size then list), then edges in canonical order; the first
    /// violation found is reported. Throws MissingVertexError if phi does not
    /// cover every vertex.
    auto is_proper(const Graph & g, const ListAssignment & lists, const MultiColouring & phi) -> Verdict;
}
