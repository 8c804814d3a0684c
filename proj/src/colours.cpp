#include <clab/colours.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace clab
{
    ColourSet::ColourSet(std::initializer_list<Colour> colours)
    {
        for (auto c : colours)
            insert(c);
    }

    auto ColourSet::range(Colour first, Colour last_exclusive) -> ColourSet
    {
        ColourSet s;
        for (auto c = first; c < last_exclusive; ++c)
            s.insert(c);
        return s;
    }

    auto ColourSet::from(std::span<const Colour> colours) -> ColourSet
    {
        ColourSet s;
        for (auto c : colours)
            s.insert(c);
        return s;
    }

    auto ColourSet::trim() -> void
    {
        while (! _words.empty() && _words.back() == 0)
            _words.pop_back();
    }

    auto ColourSet::insert(Colour c) -> void
    {
        auto w = c / 64;
        if (w >= _words.size())
            _words.resize(w + 1, 0);
        _words[w] |= std::uint64_t{1} << (c % 64);
    }

    auto ColourSet::erase(Colour c) -> void
    {
        auto w = c / 64;
        if (w >= _words.size())
            return;
        _words[w] &= ~(std::uint64_t{1} << (c % 64));
        trim();
    }

    auto ColourSet::contains(Colour c) const -> bool
    {
        auto w = c / 64;
        return w < _words.size() && ((_words[w] >> (c % 64)) & 1);
    }

    auto ColourSet::size() const -> std::size_t
    {
        std::size_t n = 0;
        for (auto w : _words)
            n += std::popcount(w);
        return n;
    }

    auto ColourSet::members() const -> std::vector<Colour>
    {
        std::vector<Colour> out;
        out.reserve(size());
        for (std::size_t i = 0; i < _words.size(); ++i) {
            auto w = _words[i];
            while (w) {
                out.push_back(static_cast<Colour>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    auto ColourSet::min() const -> Colour
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i])
                return static_cast<Colour>(i * 64 + std::countr_zero(_words[i]));
        return 0;
    }

    auto ColourSet::bound() const -> Colour
    {
        if (_words.empty())
            return 0;
        return static_cast<Colour>((_words.size() - 1) * 64 + 64 - std::countl_zero(_words.back()));
    }

    auto ColourSet::operator|(const ColourSet & other) const -> ColourSet
    {
        ColourSet r = *this;
        r |= other;
        return r;
    }

    auto ColourSet::operator|=(const ColourSet & other) -> ColourSet &
    {
        if (other._words.size() > _words.size())
            _words.resize(other._words.size(), 0);
        for (std::size_t i = 0; i < other._words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto ColourSet::operator&(const ColourSet & other) const -> ColourSet
    {
        ColourSet r;
        auto n = std::min(_words.size(), other._words.size());
        r._words.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            r._words[i] = _words[i] & other._words[i];
        r.trim();
        return r;
    }

    auto ColourSet::operator-(const ColourSet & other) const -> ColourSet
    {
        ColourSet r = *this;
        r -= other;
        return r;
    }

    auto ColourSet::operator-=(const ColourSet & other) -> ColourSet &
    {
        auto n = std::min(_words.size(), other._words.size());
        for (std::size_t i = 0; i < n; ++i)
            _words[i] &= ~other._words[i];
        trim();
        return *this;
    }

    auto ColourSet::disjoint(const ColourSet & other) const -> bool
    {
        auto n = std::min(_words.size(), other._words.size());
        for (std::size_t i = 0; i < n; ++i)
            if (_words[i] & other._words[i])
                return false;
        return true;
    }

    auto ColourSet::subset_of(const ColourSet & other) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i) {
            auto o = i < other._words.size() ? other._words[i] : 0;
            if (_words[i] & ~o)
                return false;
        }
        return true;
    }

    auto ColourSet::first(std::size_t n) const -> ColourSet
    {
        ColourSet r;
        for (auto c : members()) {
            if (n-- == 0)
                break;
            r.insert(c);
        }
        return r;
    }

    auto ColourSet::to_string() const -> std::string
    {
        std::string s = "{";
        bool first_member = true;
        for (auto c : members()) {
            if (! first_member)
                s += ',';
            first_member = false;
            s += std::to_string(c);
        }
        return s + "}";
    }

    auto ColourSet::operator<=>(const ColourSet & other) const -> std::strong_ordering
    {
        auto a = members(), b = other.members();
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

    auto relabel(const ColourSet & s, const std::vector<Colour> & perm) -> ColourSet
    {
        ColourSet r;
        for (auto c : s.members())
            r.insert(c < perm.size() ? perm[c] : c);
        return r;
    }

    auto binomial(std::uint64_t n, std::uint64_t r) -> std::uint64_t
    {
        if (r > n)
            return 0;
        r = std::min(r, n - r);
        unsigned __int128 acc = 1;
        for (std::uint64_t i = 1; i <= r; ++i) {
            acc = acc * (n - r + i) / i;
            if (acc > std::numeric_limits<std::uint64_t>::max())
                return std::numeric_limits<std::uint64_t>::max();
        }
        return static_cast<std::uint64_t>(acc);
    }

    auto unrank_subset(const std::vector<Colour> & from, std::size_t r, std::uint64_t index) -> ColourSet
    {
        ColourSet s;
        std::size_t n = from.size();
        std::size_t pos = 0;
        for (std::size_t slot = 0; slot < r; ++slot) {
            while (true) {
                if (pos >= n)
                    throw std::out_of_range("unrank_subset: index out of range");
                auto with_here = binomial(n - pos - 1, r - slot - 1);
                if (index < with_here)
                    break;
                index -= with_here;
                ++pos;
            }
            s.insert(from[pos]);
            ++pos;
        }
        return s;
    }
}
