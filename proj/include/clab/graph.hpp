#pragma once

#include <clab/colours.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clab
{
    enum class GraphErrorKind
    {
        duplicate_vertex,
        loop,
        unknown_endpoint,
        parallel_edge,
        missing_rotation,
        invalid_rotation
    };

    auto to_string(GraphErrorKind kind) -> const char *;

    class GraphError : public std::runtime_error
    {
    public:
        GraphError(GraphErrorKind kind, const std::string & what);

        [[nodiscard]] auto kind() const -> GraphErrorKind { return _kind; }

    private:
        GraphErrorKind _kind;
    };

    using VertexIndex = std::size_t;
    using EdgeNames = std::vector<std::pair<std::string, std::string>>;
    /// vertex -> neighbours in cyclic (counter-clockwise) order
    using RotationNames = std::map<std::string, std::vector<std::string>>;

    /// Simple undirected graph with named vertices and an optional rotation
    /// system. Immutable once built; every constructor path validates.
    class Graph
    {
    public:
        Graph() = default;

        [[nodiscard]] auto name() const -> const std::string & { return _name; }
        [[nodiscard]] auto vertices() const -> const std::vector<std::string> & { return _vertices; }
        [[nodiscard]] auto vertex_count() const -> std::size_t { return _vertices.size(); }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edges.size(); }

        /// Edges as index pairs (i < j), sorted lexicographically.
        [[nodiscard]] auto edges() const -> const std::vector<std::pair<VertexIndex, VertexIndex>> & { return _edges; }
        [[nodiscard]] auto edge_names() const -> EdgeNames;

        [[nodiscard]] auto index_of(const std::string & v) const -> std::optional<VertexIndex>;
        /// Throws GraphError(unknown_endpoint) if absent.
        [[nodiscard]] auto at(const std::string & v) const -> VertexIndex;
        [[nodiscard]] auto neighbours(VertexIndex v) const -> const std::vector<VertexIndex> & { return _adj[v]; }
        [[nodiscard]] auto degree(VertexIndex v) const -> std::size_t { return _adj[v].size(); }
        [[nodiscard]] auto adjacent(VertexIndex a, VertexIndex b) const -> bool;

        [[nodiscard]] auto has_rotation() const -> bool { return _rotation.has_value(); }
        [[nodiscard]] auto rotation() const -> const std::optional<std::vector<std::vector<VertexIndex>>> & { return _rotation; }
        [[nodiscard]] auto rotation_names() const -> std::optional<RotationNames>;

        /// Same graph with a (validated) rotation system attached.
        [[nodiscard]] auto with_rotation(const RotationNames & rotation) const -> Graph;
        [[nodiscard]] auto without_edge(const std::string & a, const std::string & b) const -> Graph;
        [[nodiscard]] auto renamed(std::string name) const -> Graph;

        friend auto build_graph(std::string name, const std::vector<std::string> & vertices, const EdgeNames & edges) -> Graph;

        auto operator==(const Graph & other) const -> bool = default;

    private:
        std::string _name;
        std::vector<std::string> _vertices;
        std::map<std::string, VertexIndex> _index;
        std::vector<std::vector<VertexIndex>> _adj;
        std::vector<std::pair<VertexIndex, VertexIndex>> _edges;
        std::optional<std::vector<std::vector<VertexIndex>>> _rotation;
    };

    /// Validating constructor. Vertex order is preserved; errors are
    /// GraphError with kinds duplicate_vertex, loop, unknown_endpoint or
    /// parallel_edge.
    auto build_graph(std::string name, const std::vector<std::string> & vertices, const EdgeNames & edges) -> Graph;

    inline auto build_graph(const std::vector<std::string> & vertices, const EdgeNames & edges) -> Graph
    {
        return build_graph("g", vertices, edges);
    }

    struct Identification
    {
        std::size_t part;
        std::string vertex;
        std::string shared;
    };

    /// Disjoint union of `parts` with the listed vertices merged into shared
    /// vertices, then `extra_edges` added. Vertices not identified are renamed
    /// "<part name>.<vertex>". Merges that would create a loop or a parallel
    /// edge are rejected. Rotations are not carried over.
    auto glue(std::string name, const std::vector<Graph> & parts, const std::vector<Identification> & identify,
        const EdgeNames & extra_edges) -> Graph;

    struct EulerReport
    {
        std::size_t vertices = 0;
        std::size_t edges = 0;
        std::size_t faces = 0;
        /// Number of directed edges walked while tracing faces; always 2E.
        std::size_t directed_traversals = 0;
        bool genus_ok = false;

        [[nodiscard]] auto euler_characteristic() const -> long long
        {
            return static_cast<long long>(vertices) - static_cast<long long>(edges) + static_cast<long long>(faces);
        }
    };

    /// Traces the faces of g's rotation system. genus_ok iff V - E + F = 2.
    /// Throws GraphError(missing_rotation) if g has none.
    auto check_embedding(const Graph & g) -> EulerReport;

    /// Faces as vertex-index cycles, in discovery order.
    auto trace_faces(const Graph & g) -> std::vector<std::vector<VertexIndex>>;

    auto export_dot(const Graph & g, const ListAssignment * lists = nullptr) -> std::string;
}
