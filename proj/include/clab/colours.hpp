#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace clab
{
    using Colour = std::uint32_t;

    /// Finite set of non-negative colours stored as a dense bit vector.
    ///
    /// Trailing zero words are always trimmed, so two sets with the same
    /// members compare equal regardless of how they were built. Ordering is
    /// lexicographic on the ascending member sequence, which is the order
    /// used when enumerating b-subsets.
    class ColourSet
    {
    public:
        ColourSet() = default;
        ColourSet(std::initializer_list<Colour> colours);

        static auto range(Colour first, Colour last_exclusive) -> ColourSet;
        static auto from(std::span<const Colour> colours) -> ColourSet;

        auto insert(Colour c) -> void;
        auto erase(Colour c) -> void;
        [[nodiscard]] auto contains(Colour c) const -> bool;
        [[nodiscard]] auto size() const -> std::size_t;
        [[nodiscard]] auto empty() const -> bool { return _words.empty(); }

        [[nodiscard]] auto members() const -> std::vector<Colour>;
        /// Smallest member; undefined on an empty set.
        [[nodiscard]] auto min() const -> Colour;
        /// One past the largest member, 0 when empty.
        [[nodiscard]] auto bound() const -> Colour;

        [[nodiscard]] auto operator|(const ColourSet & other) const -> ColourSet;
        [[nodiscard]] auto operator&(const ColourSet & other) const -> ColourSet;
        [[nodiscard]] auto operator-(const ColourSet & other) const -> ColourSet;
        auto operator|=(const ColourSet & other) -> ColourSet &;
        auto operator-=(const ColourSet & other) -> ColourSet &;

        [[nodiscard]] auto disjoint(const ColourSet & other) const -> bool;
        [[nodiscard]] auto subset_of(const ColourSet & other) const -> bool;

        /// The first n members in ascending order.
        [[nodiscard]] auto first(std::size_t n) const -> ColourSet;

        [[nodiscard]] auto to_string() const -> std::string;

        auto operator==(const ColourSet & other) const -> bool = default;
        auto operator<=>(const ColourSet & other) const -> std::strong_ordering;

        [[nodiscard]] auto words() const -> std::span<const std::uint64_t> { return {_words.data(), _words.size()}; }

    private:
        auto trim() -> void;

        boost::container::small_vector<std::uint64_t, 4> _words;
    };

    /// Vertex name -> permissible colours.
    using ListAssignment = std::map<std::string, ColourSet>;

    /// A b-fold colouring: every assigned set should have exactly `fold` members.
    struct MultiColouring
    {
        std::map<std::string, ColourSet> assignment;
        unsigned fold = 1;
    };

    /// Applies a colour map to every member. Colours outside the map are kept.
    auto relabel(const ColourSet & s, const std::vector<Colour> & perm) -> ColourSet;

    /// Calls f on every size-r subset of `from` in lexicographic order; stops
    /// early when f returns false. Returns false iff stopped early.
    template <typename F>
    auto for_each_subset(const std::vector<Colour> & from, std::size_t r, F && f) -> bool
    {
        auto n = from.size();
        if (r > n)
            return true;
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i)
            idx[i] = i;
        while (true) {
            ColourSet s;
            for (auto i : idx)
                s.insert(from[i]);
            if (! f(s))
                return false;
            if (r == 0)
                return true;
            std::size_t i = r;
            while (i > 0 && idx[i - 1] == n - r + i - 1)
                --i;
            if (i == 0)
                return true;
            ++idx[i - 1];
            for (std::size_t j = i; j < r; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

    /// Number of r-subsets of an n-set, saturating at UINT64_MAX.
    auto binomial(std::uint64_t n, std::uint64_t r) -> std::uint64_t;

    /// The index-th r-subset of `from` in lexicographic order.
    auto unrank_subset(const std::vector<Colour> & from, std::size_t r, std::uint64_t index) -> ColourSet;
}
