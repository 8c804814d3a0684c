#include <clab/graph.hpp>

#include <algorithm>
#include <set>

namespace clab
{
    auto to_string(GraphErrorKind kind) -> const char *
    {
        switch (kind) {
        case GraphErrorKind::duplicate_vertex: return "duplicate_vertex";
        case GraphErrorKind::loop: return "loop";
        case GraphErrorKind::unknown_endpoint: return "unknown_endpoint";
        case GraphErrorKind::parallel_edge: return "parallel_edge";
        case GraphErrorKind::missing_rotation: return "missing_rotation";
        case GraphErrorKind::invalid_rotation: return "invalid_rotation";
        }
        return "?";
    }

    GraphError::GraphError(GraphErrorKind kind, const std::string & what) :
        std::runtime_error(std::string{to_string(kind)} + ": " + what),
        _kind(kind)
    {
    }

    auto build_graph(std::string name, const std::vector<std::string> & vertices, const EdgeNames & edges) -> Graph
    {
        Graph g;
        g._name = std::move(name);
        g._vertices = vertices;
        for (VertexIndex i = 0; i < vertices.size(); ++i)
            if (! g._index.emplace(vertices[i], i).second)
                throw GraphError(GraphErrorKind::duplicate_vertex, vertices[i]);

        g._adj.resize(vertices.size());
        std::set<std::pair<VertexIndex, VertexIndex>> seen;
        for (const auto & [a, b] : edges) {
            auto ia = g.index_of(a), ib = g.index_of(b);
            if (! ia)
                throw GraphError(GraphErrorKind::unknown_endpoint, a);
            if (! ib)
                throw GraphError(GraphErrorKind::unknown_endpoint, b);
            if (*ia == *ib)
                throw GraphError(GraphErrorKind::loop, a + "-" + b);
            std::pair<VertexIndex, VertexIndex> e{std::min(*ia, *ib), std::max(*ia, *ib)};
            if (! seen.insert(e).second)
                throw GraphError(GraphErrorKind::parallel_edge, a + "-" + b);
            g._adj[*ia].push_back(*ib);
            g._adj[*ib].push_back(*ia);
        }
        for (auto & n : g._adj)
            std::sort(n.begin(), n.end());
        g._edges.assign(seen.begin(), seen.end());
        return g;
    }

    auto Graph::edge_names() const -> EdgeNames
    {
        EdgeNames out;
        out.reserve(_edges.size());
        for (auto [a, b] : _edges)
            out.emplace_back(_vertices[a], _vertices[b]);
        return out;
    }

    auto Graph::index_of(const std::string & v) const -> std::optional<VertexIndex>
    {
        auto it = _index.find(v);
        if (it == _index.end())
            return std::nullopt;
        return it->second;
    }

    auto Graph::at(const std::string & v) const -> VertexIndex
    {
        auto i = index_of(v);
        if (! i)
            throw GraphError(GraphErrorKind::unknown_endpoint, v);
        return *i;
    }

    auto Graph::adjacent(VertexIndex a, VertexIndex b) const -> bool
    {
        return std::binary_search(_adj[a].begin(), _adj[a].end(), b);
    }

    auto Graph::rotation_names() const -> std::optional<RotationNames>
    {
        if (! _rotation)
            return std::nullopt;
        RotationNames out;
        for (VertexIndex v = 0; v < _vertices.size(); ++v) {
            auto & cyc = out[_vertices[v]];
            for (auto w : (*_rotation)[v])
                cyc.push_back(_vertices[w]);
        }
        return out;
    }

    auto Graph::with_rotation(const RotationNames & rotation) const -> Graph
    {
        std::vector<std::vector<VertexIndex>> rot(_vertices.size());
        std::vector<bool> given(_vertices.size(), false);
        for (const auto & [v, cyc] : rotation) {
            auto iv = index_of(v);
            if (! iv)
                throw GraphError(GraphErrorKind::invalid_rotation, "unknown vertex " + v);
            given[*iv] = true;
            for (const auto & w : cyc) {
                auto iw = index_of(w);
                if (! iw)
                    throw GraphError(GraphErrorKind::invalid_rotation, "unknown vertex " + w);
                rot[*iv].push_back(*iw);
            }
            auto sorted = rot[*iv];
            std::sort(sorted.begin(), sorted.end());
            if (sorted != _adj[*iv])
                throw GraphError(GraphErrorKind::invalid_rotation, "cycle at " + v + " is not a permutation of its neighbours");
        }
        for (VertexIndex v = 0; v < _vertices.size(); ++v)
            if (! given[v] && ! _adj[v].empty())
                throw GraphError(GraphErrorKind::invalid_rotation, "no cycle for " + _vertices[v]);
        Graph g = *this;
        g._rotation = std::move(rot);
        return g;
    }

    auto Graph::without_edge(const std::string & a, const std::string & b) const -> Graph
    {
        auto ia = at(a), ib = at(b);
        std::pair<VertexIndex, VertexIndex> e{std::min(ia, ib), std::max(ia, ib)};
        EdgeNames kept;
        for (auto [x, y] : _edges)
            if (std::pair{x, y} != e)
                kept.emplace_back(_vertices[x], _vertices[y]);
        return build_graph(_name, _vertices, kept);
    }

    auto Graph::renamed(std::string name) const -> Graph
    {
        Graph g = *this;
        g._name = std::move(name);
        return g;
    }

    auto glue(std::string name, const std::vector<Graph> & parts, const std::vector<Identification> & identify,
        const EdgeNames & extra_edges) -> Graph
    {
        std::map<std::pair<std::size_t, std::string>, std::string> shared_of;
        for (const auto & id : identify) {
            if (id.part >= parts.size() || ! parts[id.part].index_of(id.vertex))
                throw GraphError(GraphErrorKind::unknown_endpoint, "glue: " + id.vertex);
            shared_of[{id.part, id.vertex}] = id.shared;
        }

        std::vector<std::string> vertices;
        std::set<std::string> present;
        std::vector<std::vector<std::string>> renamed(parts.size());
        for (std::size_t p = 0; p < parts.size(); ++p) {
            for (const auto & v : parts[p].vertices()) {
                auto it = shared_of.find({p, v});
                auto nv = it != shared_of.end() ? it->second : parts[p].name() + "." + v;
                renamed[p].push_back(nv);
                if (present.insert(nv).second)
                    vertices.push_back(nv);
                else if (it == shared_of.end())
                    throw GraphError(GraphErrorKind::duplicate_vertex, "glue: " + nv);
            }
        }

        EdgeNames edges;
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (auto [a, b] : parts[p].edges())
                edges.emplace_back(renamed[p][a], renamed[p][b]);
        edges.insert(edges.end(), extra_edges.begin(), extra_edges.end());
        return build_graph(std::move(name), vertices, edges);
    }

    auto trace_faces(const Graph & g) -> std::vector<std::vector<VertexIndex>>
    {
        if (! g.has_rotation())
            throw GraphError(GraphErrorKind::missing_rotation, g.name());
        const auto & rot = *g.rotation();

        // position of w in the cycle around v
        std::vector<std::map<VertexIndex, std::size_t>> pos(g.vertex_count());
        for (VertexIndex v = 0; v < g.vertex_count(); ++v)
            for (std::size_t i = 0; i < rot[v].size(); ++i)
                pos[v][rot[v][i]] = i;

        std::set<std::pair<VertexIndex, VertexIndex>> used;
        std::vector<std::vector<VertexIndex>> faces;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            for (auto w : rot[v]) {
                if (used.contains({v, w}))
                    continue;
                std::vector<VertexIndex> face;
                VertexIndex x = v, y = w;
                while (used.insert({x, y}).second) {
                    face.push_back(x);
                    // next dart leaves y along the edge following x in y's cycle
                    const auto & cyc = rot[y];
                    auto z = cyc[(pos[y].at(x) + 1) % cyc.size()];
                    x = y;
                    y = z;
                }
                faces.push_back(std::move(face));
            }
        }
        return faces;
    }

    auto check_embedding(const Graph & g) -> EulerReport
    {
        auto faces = trace_faces(g);
        EulerReport r;
        r.vertices = g.vertex_count();
        r.edges = g.edge_count();
        r.faces = faces.size();
        for (const auto & f : faces)
            r.directed_traversals += f.size();
        r.genus_ok = r.euler_characteristic() == 2;
        return r;
    }

    namespace
    {
        auto quote(const std::string & s) -> std::string
        {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    out += '\\';
                out += c;
            }
            return out + "\"";
        }
    }

    auto export_dot(const Graph & g, const ListAssignment * lists) -> std::string
    {
        std::string out = "graph " + quote(g.name()) + " {\n";
        for (const auto & v : g.vertices()) {
            out += "  " + quote(v);
            if (lists) {
                auto it = lists->find(v);
                auto label = v + ":" + (it != lists->end() ? it->second.to_string() : std::string{"{}"});
                out += " [label=" + quote(label) + "]";
            }
            out += ";\n";
        }
        for (auto [a, b] : g.edges())
            out += "  " + quote(g.vertices()[a]) + " -- " + quote(g.vertices()[b]) + ";\n";
        out += "}\n";
        return out;
    }
}
