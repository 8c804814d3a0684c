#include <clab/search.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace clab
{
    auto witness_outcome_name(const WitnessOutcome & o) -> const char *
    {
        switch (o.index()) {
        case 0: return "witness";
        case 1: return "proved_choosable";
        case 2: return "no_witness_in_universe";
        default: return "exhausted";
        }
    }

    namespace
    {
        struct StopSearch
        {
        };

        class WitnessSearch
        {
        public:
            WitnessSearch(const Graph & g, unsigned a, unsigned b, unsigned universe, const Budget & budget) :
                _g(g), _a(a), _b(b), _universe(universe), _budget(budget), _start(std::chrono::steady_clock::now()),
                _lists(g.vertex_count())
            {
            }

            auto remaining_seconds() const -> double
            {
                std::chrono::duration<double> used = std::chrono::steady_clock::now() - _start;
                return _budget.max_seconds - used.count();
            }

            // Candidate lists for the next vertex when `used` colours appear so far.
            auto candidates(unsigned used) const -> std::vector<ColourSet>
            {
                std::vector<ColourSet> out;
                std::vector<Colour> old(used);
                std::iota(old.begin(), old.end(), 0);
                for (unsigned fresh = 0; fresh <= _a; ++fresh) {
                    if (used + fresh > _universe || _a - fresh > used)
                        continue;
                    auto extra = ColourSet::range(used, used + fresh);
                    for_each_subset(old, _a - fresh, [&](const ColourSet & s) {
                        out.push_back(s | extra);
                        return true;
                    });
                }
                std::sort(out.begin(), out.end());
                return out;
            }

            // Decides the colourability of the prefix 0..n-1 under the current lists.
            auto prefix_colourable(std::size_t n) -> bool
            {
                std::vector<std::string> vs(_g.vertices().begin(), _g.vertices().begin() + n);
                EdgeNames es;
                for (auto [x, y] : _g.edges())
                    if (y < n)
                        es.emplace_back(_g.vertices()[x], _g.vertices()[y]);
                auto sub = build_graph(vs, es);
                ListAssignment L;
                for (std::size_t i = 0; i < n; ++i)
                    L[vs[i]] = _lists[i];
                auto secs = remaining_seconds();
                if (secs <= 0)
                    throw StopSearch{};
                auto o = decide(sub, L, _b, Budget{_budget.max_nodes, secs});
                if (is_exhausted(o))
                    throw StopSearch{};
                return is_feasible(o);
            }

            // Fill vertices from i on with the lexicographically least candidates.
            auto complete(std::size_t i, unsigned used) -> void
            {
                for (; i < _g.vertex_count(); ++i) {
                    _lists[i] = candidates(used).front();
                    used = std::max(used, _lists[i].bound());
                }
            }

            // Returns true once a witness is in _lists.
            auto extend(std::size_t i, unsigned used) -> bool
            {
                if (i > 0) {
                    if (++checked > _budget.max_nodes)
                        throw StopSearch{};
                    if (! prefix_colourable(i)) {
                        complete(i, used);
                        return true;
                    }
                }
                if (i == _g.vertex_count())
                    return false;
                for (auto & l : candidates(used)) {
                    _lists[i] = l;
                    if (extend(i + 1, std::max(used, l.bound())))
                        return true;
                }
                return false;
            }

            auto lists() const -> ListAssignment
            {
                ListAssignment L;
                for (std::size_t i = 0; i < _g.vertex_count(); ++i)
                    L[_g.vertices()[i]] = _lists[i];
                return L;
            }

            std::uint64_t checked = 0;

        private:
            const Graph & _g;
            unsigned _a, _b, _universe;
            Budget _budget;
            std::chrono::steady_clock::time_point _start;
            std::vector<ColourSet> _lists;
        };
    }

    auto search_witness(const Graph & g, unsigned a, unsigned b, unsigned universe, const Budget & budget)
        -> WitnessOutcome
    {
        if (universe < a)
            throw std::invalid_argument("universe must be at least a");
        if (b == 0 || a == 0)
            throw std::invalid_argument("a and b must be positive");

        WitnessSearch s(g, a, b, universe, budget);
        try {
            if (s.extend(0, 0))
                return WitnessFound{s.lists(), s.checked};
        }
        catch (const StopSearch &) {
            return SearchExhausted{s.checked};
        }
        if (static_cast<std::uint64_t>(universe) >= static_cast<std::uint64_t>(a) * g.vertex_count())
            return ProvedChoosable{s.checked};
        return NoWitnessInUniverse{s.checked};
    }

    auto confirm_witness(const Graph & g, const ListAssignment & lists, unsigned a, unsigned b,
        const std::set<std::string> & pinned, const Budget & budget) -> bool
    {
        for (const auto & v : g.vertices()) {
            auto it = lists.find(v);
            if (it == lists.end())
                return false;
            auto n = it->second.size();
            if (pinned.contains(v) ? n > a : n != a)
                return false;
        }
        return is_infeasible(decide(g, lists, b, budget));
    }

    auto decide_ab(const Graph & g, unsigned a, unsigned b, const Budget & budget) -> bool
    {
        ListAssignment L;
        auto all = ColourSet::range(0, a);
        for (const auto & v : g.vertices())
            L[v] = all;
        auto o = decide(g, L, b, budget);
        if (is_exhausted(o))
            throw std::runtime_error("decide_ab: budget exhausted");
        return is_feasible(o);
    }

    auto clique_number(const Graph & g) -> std::uint64_t
    {
        const auto n = g.vertex_count();
        if (n > 20)
            throw InstanceTooLarge("clique_number: more than 20 vertices");
        std::vector<std::uint32_t> adj(n, 0);
        for (auto [x, y] : g.edges()) {
            adj[x] |= 1u << y;
            adj[y] |= 1u << x;
        }
        std::uint64_t best = 0;
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            auto size = static_cast<std::uint64_t>(std::popcount(s));
            if (size <= best)
                continue;
            bool clique = true;
            for (std::size_t v = 0; v < n && clique; ++v)
                if ((s >> v) & 1)
                    clique = (adj[v] | (1u << v) | ~s) == ~0u;
            if (clique)
                best = size;
        }
        return best;
    }

    auto chi_f(const Graph & g, unsigned max_b) -> ChiF
    {
        if (g.vertex_count() > 10)
            throw InstanceTooLarge("chi_f: more than 10 vertices");
        if (max_b == 0)
            throw std::invalid_argument("chi_f: max_b must be positive");

        ChiF r;
        r.clique_number = clique_number(g);
        const auto n = std::max<std::size_t>(1, g.vertex_count());
        for (unsigned b = 1; b <= max_b; ++b) {
            for (unsigned a = b; a <= b * n; ++a) {
                // skip a/b that cannot beat the current best
                if (r.b != 0 && static_cast<std::uint64_t>(a) * r.b >= static_cast<std::uint64_t>(r.a) * b)
                    break;
                if (decide_ab(g, a, b)) {
                    r.a = a;
                    r.b = b;
                    break;
                }
            }
        }
        auto d = std::gcd(r.a, r.b);
        r.numerator = r.a / d;
        r.denominator = r.b / d;
        r.matches_clique_bound = r.denominator == 1 && r.numerator == r.clique_number;
        return r;
    }
}
