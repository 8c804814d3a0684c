#include <clab/gadget.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace clab
{
    using namespace gadget_vertex;

    auto k_of(unsigned m) -> unsigned
    {
        if (m < 1)
            throw std::invalid_argument("m must be at least 1");
        return (2 * m - 1) / 9;
    }

    namespace
    {
        auto factorial(unsigned n) -> BigInt
        {
            BigInt r = 1;
            for (unsigned i = 2; i <= n; ++i)
                r *= i;
            return r;
        }
    }

    auto p_of(unsigned m) -> BigInt
    {
        auto k = k_of(m);
        return factorial(4 * m + k) / (factorial(m) * factorial(m) * factorial(2 * m + k));
    }

    auto params_of(unsigned m) -> GadgetParams
    {
        auto k = k_of(m);
        return GadgetParams{m, k, 4 * m + k, p_of(m)};
    }

    auto build_blocks(unsigned m) -> ColourBlocks
    {
        auto k = k_of(m);
        ColourBlocks bl;
        bl.A = ColourSet::range(0, m);
        bl.B = ColourSet::range(m, 2 * m);
        bl.X = ColourSet::range(2 * m, 3 * m);
        bl.Xp = ColourSet::range(3 * m, 4 * m);
        bl.C = ColourSet::range(2 * m, 4 * m + k);
        bl.D = ColourSet::range(4 * m + k, 6 * m + 2 * k);
        return bl;
    }

    auto copy_blocks(unsigned m, const ColourSet & P, const ColourSet & Q) -> ColourBlocks
    {
        auto k = k_of(m);
        auto z = ColourSet::range(0, 4 * m + k);
        ColourBlocks bl;
        bl.A = P;
        bl.B = Q;
        bl.C = z - P - Q;
        bl.X = bl.C.first(m);
        bl.Xp = (bl.C - bl.X).first(m);
        bl.D = ColourSet::range(4 * m + k, 6 * m + 2 * k);
        return bl;
    }

    namespace
    {
        struct Point
        {
            double x, y;
        };

        auto mid(Point p, Point q) -> Point { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }

        auto make_gadget() -> Graph
        {
            std::vector<std::string> vertices{u, up, v, w, t, tp, a, b, c, x, y, z, ap, bp, cp, xp, yp, zp};
            EdgeNames edges{
                {u, v}, {u, w}, {u, t}, {v, w}, {v, t}, {w, t}, {up, v}, {up, w}, {up, tp}, {v, tp}, {w, tp},
                {a, b}, {b, c}, {c, a}, {a, u}, {a, v}, {b, v}, {b, t}, {c, t}, {c, u},
                {x, y}, {y, z}, {z, x}, {x, u}, {x, w}, {y, w}, {y, t}, {z, t}, {z, u},
                {ap, bp}, {bp, cp}, {cp, ap}, {bp, up}, {bp, v}, {ap, v}, {ap, tp}, {cp, tp}, {cp, up},
                {xp, yp}, {yp, zp}, {zp, xp}, {yp, up}, {yp, w}, {xp, w}, {xp, tp}, {zp, tp}, {zp, up}};
            auto g = build_graph("G", vertices, edges);

            // Straight-line drawing: triangles (u,v,w) and (u',v,w) share vw,
            // t and t' sit inside them, and each inner triangle sits inside its
            // face with vertex i next to the i-th side.
            std::map<std::string, Point> at{
                {u, {-3, 0}}, {up, {3, 0}}, {v, {0, 1}}, {w, {0, -1}}, {t, {-1, 0}}, {tp, {1, 0}}};
            auto place = [&](const std::string & p, const std::string & q, const std::string & r,
                             const std::string & i1, const std::string & i2, const std::string & i3) {
                Point g0{(at[p].x + at[q].x + at[r].x) / 3, (at[p].y + at[q].y + at[r].y) / 3};
                at[i1] = mid(mid(at[p], at[q]), g0);
                at[i2] = mid(mid(at[q], at[r]), g0);
                at[i3] = mid(mid(at[r], at[p]), g0);
            };
            place(u, v, t, a, b, c);
            place(u, w, t, x, y, z);
            place(up, v, tp, bp, ap, cp);
            place(up, w, tp, yp, xp, zp);

            RotationNames rot;
            for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
                const auto & name = g.vertices()[i];
                std::vector<std::pair<double, std::string>> around;
                for (auto j : g.neighbours(i)) {
                    const auto & other = g.vertices()[j];
                    around.emplace_back(std::atan2(at[other].y - at[name].y, at[other].x - at[name].x), other);
                }
                std::sort(around.begin(), around.end());
                auto & cyc = rot[name];
                for (auto & [angle, n] : around)
                    cyc.push_back(n);
            }
            // start u's cycle at w and u''s at v, so the outer face sits at the
            // end of each cycle (used when gluing copies)
            auto start_at = [](std::vector<std::string> & cyc, const std::string & first) {
                std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), first), cyc.end());
            };
            start_at(rot[u], w);
            start_at(rot[up], v);
            return g.with_rotation(rot);
        }
    }

    auto gadget_graph() -> const Graph &
    {
        static const Graph g = make_gadget();
        return g;
    }

    auto gadget_lists(const ColourBlocks & bl) -> ListAssignment
    {
        ListAssignment L;
        L[u] = bl.A;
        L[up] = bl.B;
        for (const auto * s : {&v, &w, &t, &tp})
            L[*s] = bl.A | bl.B | bl.C;
        L[x] = L[a] = bl.X | bl.A | bl.D;
        L[xp] = L[ap] = bl.Xp | bl.A | bl.D;
        L[y] = L[b] = bl.X | bl.B | bl.D;
        L[yp] = L[bp] = bl.Xp | bl.B | bl.D;
        L[z] = L[c] = L[zp] = L[cp] = bl.A | bl.B | bl.D;
        return L;
    }

    auto gadget_instance(unsigned m, const ColourBlocks & blocks) -> GadgetInstance
    {
        return GadgetInstance{gadget_graph(), gadget_lists(blocks), blocks, params_of(m)};
    }

    auto build_G(unsigned m) -> GadgetInstance
    {
        return gadget_instance(m, build_blocks(m));
    }

    PairEnumerator::PairEnumerator(unsigned m) :
        _m(m), _z(ColourSet::range(0, 4 * m + k_of(m)))
    {
    }

    auto PairEnumerator::count() const -> BigInt
    {
        auto zs = 4 * _m + k_of(_m);
        auto choose = [](unsigned n, unsigned r) {
            BigInt acc = 1;
            for (unsigned i = 1; i <= r; ++i)
                acc = acc * (n - r + i) / i;
            return acc;
        };
        return choose(zs, _m) * choose(zs - _m, _m);
    }

    auto PairEnumerator::size() const -> std::uint64_t
    {
        auto c = count();
        if (c > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("pair count does not fit in 64 bits");
        return c.convert_to<std::uint64_t>();
    }

    auto PairEnumerator::at(std::uint64_t index) const -> std::pair<ColourSet, ColourSet>
    {
        auto zs = _z.members();
        auto per_p = binomial(zs.size() - _m, _m);
        auto p = unrank_subset(zs, _m, index / per_p);
        auto q = unrank_subset((_z - p).members(), _m, index % per_p);
        return {p, q};
    }

    auto enumerate_pairs(unsigned m) -> std::vector<std::pair<ColourSet, ColourSet>>
    {
        std::vector<std::pair<ColourSet, ColourSet>> out;
        PairEnumerator(m).for_each([&](const ColourSet & p, const ColourSet & q) {
            out.emplace_back(p, q);
            return true;
        });
        return out;
    }

    auto HConstruction::copy_instance(std::uint64_t index) const -> GadgetInstance
    {
        auto [p, q] = PairEnumerator(params.m).at(index);
        return gadget_instance(params.m, copy_blocks(params.m, p, q));
    }

    auto build_H(unsigned m, const HOptions & opts) -> HConstruction
    {
        HConstruction h;
        h.params = params_of(m);
        const auto & g = gadget_graph();
        h.vertex_count = h.params.p * (g.vertex_count() - 2) + 2;
        h.edge_count = h.params.p * g.edge_count() + 1;
        if (h.vertex_count >= opts.vertex_cap) {
            if (! opts.allow_lazy)
                throw CapExceeded("H(" + std::to_string(m) + ") has " + h.vertex_count.str() + " vertices, cap is "
                    + std::to_string(opts.vertex_cap));
            return h;
        }

        auto pairs = enumerate_pairs(m);
        std::vector<Graph> parts;
        std::vector<Identification> ids;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            parts.push_back(g.renamed("copy" + std::to_string(i)));
            ids.push_back({i, u, u});
            ids.push_back({i, up, up});
        }
        auto glued = glue("H" + std::to_string(m), parts, ids, {{u, up}});

        // Copies are stacked between u and u': at u the copies run from last
        // to first before the edge to u'; at u' the edge to u comes first.
        RotationNames rot;
        const auto base = *g.rotation_names();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto prefix = parts[i].name() + ".";
            for (const auto & [vert, cyc] : base) {
                if (vert == u || vert == up)
                    continue;
                auto & out = rot[prefix + vert];
                for (const auto & n : cyc)
                    out.push_back(n == u || n == up ? n : prefix + n);
            }
        }
        auto & at_u = rot[u];
        for (std::size_t i = parts.size(); i-- > 0;)
            for (const auto & n : base.at(u))
                at_u.push_back(parts[i].name() + "." + n);
        at_u.push_back(up);
        auto & at_up = rot[up];
        at_up.push_back(u);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (const auto & n : base.at(up))
                at_up.push_back(parts[i].name() + "." + n);
        h.graph = glued.with_rotation(rot);

        ListAssignment lists;
        auto zset = ColourSet::range(0, h.params.a);
        lists[u] = zset;
        lists[up] = zset;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto local = gadget_lists(copy_blocks(m, pairs[i].first, pairs[i].second));
            for (const auto & [vert, l] : local)
                if (vert != u && vert != up)
                    lists[parts[i].name() + "." + vert] = l;
        }
        h.bad_lists = std::move(lists);
        return h;
    }
}
