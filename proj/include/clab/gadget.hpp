#pragma once

#include <clab/colours.hpp>
#include <clab/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace clab
{
    using BigInt = boost::multiprecision::cpp_int;

    /// k = floor((2m - 1) / 9)
    auto k_of(unsigned m) -> unsigned;

    /// Multinomial (4m+k)! / (m! m! (2m+k)!), the number of ordered pairs of
    /// disjoint m-subsets of a (4m+k)-set.
    auto p_of(unsigned m) -> BigInt;

    struct GadgetParams
    {
        unsigned m = 1;
        unsigned k = 0;
        /// list size 4m + k
        unsigned a = 4;
        BigInt p = 12;
    };

    auto params_of(unsigned m) -> GadgetParams;

    /// Pairwise disjoint colour blocks used to build the gadget lists.
    /// |A| = |B| = m, |C| = |D| = 2m + k, X and Xp disjoint m-subsets of C.
    struct ColourBlocks
    {
        ColourSet A, B, C, D, X, Xp;

        auto operator==(const ColourBlocks &) const -> bool = default;
    };

    /// Canonical blocks over the universe {0 .. 6m+2k-1}, laid out in the
    /// order A, B, X, Xp, rest of C, D. Throws std::invalid_argument if m < 1.
    auto build_blocks(unsigned m) -> ColourBlocks;

    /// Blocks for the copy of G that defeats u -> P, u' -> Q inside H:
    /// C = Z \ (P u Q), D fresh above Z, X and Xp the two lexicographically
    /// first disjoint m-subsets of C.
    auto copy_blocks(unsigned m, const ColourSet & P, const ColourSet & Q) -> ColourBlocks;

    namespace gadget_vertex
    {
        inline const std::string u = "u", up = "u'", v = "v", w = "w", t = "t", tp = "t'";
        inline const std::string a = "a", b = "b", c = "c", x = "x", y = "y", z = "z";
        inline const std::string ap = "a'", bp = "b'", cp = "c'", xp = "x'", yp = "y'", zp = "z'";
    }

    /// The 18-vertex planar gadget with a straight-line rotation system.
    /// Frame on u, u', v, w, t, t' plus an inner triangle in each of the faces
    /// (u,v,t), (u,w,t), (u',v,t'), (u',w,t').
    auto gadget_graph() -> const Graph &;

    /// Lists on the gadget vertices built from the given blocks.
    auto gadget_lists(const ColourBlocks & blocks) -> ListAssignment;

    struct GadgetInstance
    {
        Graph graph;
        ListAssignment lists;
        ColourBlocks blocks;
        GadgetParams params;
    };

    auto build_G(unsigned m) -> GadgetInstance;
    auto gadget_instance(unsigned m, const ColourBlocks & blocks) -> GadgetInstance;

    /// Ordered pairs (P, Q) of disjoint m-subsets of Z = {0 .. 4m+k-1},
    /// lexicographic in P then Q.
    class PairEnumerator
    {
    public:
        explicit PairEnumerator(unsigned m);

        [[nodiscard]] auto m() const -> unsigned { return _m; }
        [[nodiscard]] auto palette() const -> const ColourSet & { return _z; }
        /// C(|Z|, m) * C(|Z|-m, m)
        [[nodiscard]] auto count() const -> BigInt;
        /// count() as a machine integer; throws std::overflow_error if it does not fit
        [[nodiscard]] auto size() const -> std::uint64_t;
        [[nodiscard]] auto at(std::uint64_t index) const -> std::pair<ColourSet, ColourSet>;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            auto zs = _z.members();
            for_each_subset(zs, _m, [&](const ColourSet & p) {
                auto rest = (_z - p).members();
                return for_each_subset(rest, _m, [&](const ColourSet & q) { return f(p, q); });
            });
        }

    private:
        unsigned _m;
        ColourSet _z;
    };

    /// Materialised pair list; intended for small m.
    auto enumerate_pairs(unsigned m) -> std::vector<std::pair<ColourSet, ColourSet>>;

    class CapExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct HOptions
    {
        std::uint64_t vertex_cap = 10'000;
        /// return a lazy descriptor instead of throwing when the cap is exceeded
        bool allow_lazy = false;
    };

    /// p copies of G glued at u and u' with the edge uu' added, plus the list
    /// assignment that defeats every colouring of u and u'. When the vertex
    /// count reaches the cap only the descriptor is filled in and copies are
    /// produced on demand with copy_instance.
    struct HConstruction
    {
        GadgetParams params;
        BigInt vertex_count;
        BigInt edge_count;
        std::optional<Graph> graph;
        std::optional<ListAssignment> bad_lists;

        [[nodiscard]] auto materialised() const -> bool { return graph.has_value(); }
        [[nodiscard]] auto copy_instance(std::uint64_t index) const -> GadgetInstance;
    };

    auto build_H(unsigned m, const HOptions & opts = {}) -> HConstruction;
}
