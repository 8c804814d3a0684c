#include <clab/solver.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>

namespace clab
{
    auto outcome_name(const Outcome & o) -> const char *
    {
        if (is_feasible(o))
            return "feasible";
        if (is_infeasible(o))
            return "infeasible";
        return "exhausted";
    }

    auto stats_of(const Outcome & o) -> const SearchStats &
    {
        return std::visit([](const auto & x) -> const SearchStats & { return x.stats; }, o);
    }

    namespace
    {
        struct BudgetHit
        {
        };

        // Colours are remapped to dense ranks 0..U-1 so every vertex's
        // available set fits in `words` 64-bit words.
        struct State
        {
            std::vector<std::uint64_t> avail;
            std::vector<std::uint64_t> chosen;
            std::vector<char> done;
        };

        class Search
        {
        public:
            Search(const Graph & g, unsigned b, std::size_t words, const Budget & budget) :
                _g(g), _b(b), _words(words), _budget(budget), _start(std::chrono::steady_clock::now())
            {
            }

            auto count(const State & s, VertexIndex v) const -> std::size_t
            {
                std::size_t n = 0;
                for (std::size_t i = 0; i < _words; ++i)
                    n += std::popcount(s.avail[v * _words + i]);
                return n;
            }

            // Fix v's colours and strip them from every neighbour.
            auto assign(State & s, VertexIndex v, const std::uint64_t * colours) const -> void
            {
                s.done[v] = 1;
                for (std::size_t i = 0; i < _words; ++i) {
                    s.chosen[v * _words + i] = colours[i];
                    s.avail[v * _words + i] = colours[i];
                }
                for (auto w : _g.neighbours(v))
                    for (std::size_t i = 0; i < _words; ++i)
                        s.avail[w * _words + i] &= ~colours[i];
            }

            auto tick(std::uint64_t depth) -> void
            {
                ++stats.nodes_expanded;
                stats.max_depth = std::max(stats.max_depth, depth);
                if (stats.nodes_expanded > _budget.max_nodes)
                    throw BudgetHit{};
                if ((stats.nodes_expanded & 1023) == 0) {
                    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - _start;
                    if (elapsed.count() > _budget.max_seconds)
                        throw BudgetHit{};
                }
            }

            auto components(const State & s, const std::vector<VertexIndex> & open) const -> std::vector<std::vector<VertexIndex>>
            {
                std::vector<std::vector<VertexIndex>> out;
                std::vector<char> seen(_g.vertex_count(), 0);
                for (auto root : open) {
                    if (seen[root])
                        continue;
                    std::vector<VertexIndex> comp{root};
                    seen[root] = 1;
                    for (std::size_t i = 0; i < comp.size(); ++i)
                        for (auto w : _g.neighbours(comp[i]))
                            if (! s.done[w] && ! seen[w]) {
                                seen[w] = 1;
                                comp.push_back(w);
                            }
                    std::sort(comp.begin(), comp.end());
                    out.push_back(std::move(comp));
                }
                return out;
            }

            auto solve(State & s, const std::vector<VertexIndex> & comp, std::uint64_t depth) -> bool
            {
                tick(depth);

                for (bool changed = true; changed;) {
                    changed = false;
                    for (auto v : comp) {
                        if (s.done[v])
                            continue;
                        auto n = count(s, v);
                        if (n < _b)
                            return false;
                        if (n == _b) {
                            std::vector<std::uint64_t> forced(s.avail.begin() + v * _words, s.avail.begin() + (v + 1) * _words);
                            assign(s, v, forced.data());
                            ++stats.forced_assignments;
                            changed = true;
                        }
                    }
                }

                std::vector<VertexIndex> open;
                for (auto v : comp)
                    if (! s.done[v])
                        open.push_back(v);
                if (open.empty())
                    return true;

                auto parts = components(s, open);
                if (parts.size() > 1) {
                    std::sort(parts.begin(), parts.end());
                    for (const auto & part : parts)
                        if (! solve(s, part, depth + 1))
                            return false;
                    return true;
                }

                VertexIndex best = open.front();
                long long best_score = 0;
                bool first = true;
                for (auto v : open) {
                    long long uncoloured = 0;
                    for (auto w : _g.neighbours(v))
                        if (! s.done[w])
                            ++uncoloured;
                    long long score = static_cast<long long>(count(s, v)) - static_cast<long long>(_b) * uncoloured;
                    if (first || score < best_score) {
                        best = v;
                        best_score = score;
                        first = false;
                    }
                }

                std::vector<std::size_t> ranks;
                for (std::size_t i = 0; i < _words; ++i) {
                    auto w = s.avail[best * _words + i];
                    while (w) {
                        ranks.push_back(i * 64 + std::countr_zero(w));
                        w &= w - 1;
                    }
                }

                std::vector<std::size_t> idx(_b);
                for (std::size_t i = 0; i < _b; ++i)
                    idx[i] = i;
                const auto n = ranks.size();
                std::vector<std::uint64_t> pick(_words);
                while (true) {
                    std::fill(pick.begin(), pick.end(), 0);
                    for (auto i : idx)
                        pick[ranks[i] / 64] |= std::uint64_t{1} << (ranks[i] % 64);

                    State child = s;
                    assign(child, best, pick.data());
                    if (solve(child, open, depth + 1)) {
                        s = std::move(child);
                        return true;
                    }

                    std::size_t i = _b;
                    while (i > 0 && idx[i - 1] == n - _b + i - 1)
                        --i;
                    if (i == 0)
                        return false;
                    ++idx[i - 1];
                    for (std::size_t j = i; j < _b; ++j)
                        idx[j] = idx[j - 1] + 1;
                }
            }

            SearchStats stats;

        private:
            const Graph & _g;
            unsigned _b;
            std::size_t _words;
            Budget _budget;
            std::chrono::steady_clock::time_point _start;
        };
    }

    auto decide(const Graph & g, const ListAssignment & lists, unsigned b, const Budget & budget) -> Outcome
    {
        if (b == 0)
            throw std::invalid_argument("decide: fold must be positive");

        ColourSet universe;
        for (const auto & v : g.vertices()) {
            auto it = lists.find(v);
            if (it == lists.end())
                throw MissingListError("no list for vertex " + v);
            universe |= it->second;
        }

        for (const auto & v : g.vertices())
            if (lists.at(v).size() < b) {
                Infeasible r;
                r.stats.nodes_expanded = 1;
                r.short_list_vertex = v;
                return r;
            }

        auto colours = universe.members();
        std::map<Colour, std::size_t> rank;
        for (std::size_t i = 0; i < colours.size(); ++i)
            rank[colours[i]] = i;
        std::size_t words = std::max<std::size_t>(1, (colours.size() + 63) / 64);

        const auto n = g.vertex_count();
        State s;
        s.avail.assign(n * words, 0);
        s.chosen.assign(n * words, 0);
        s.done.assign(n, 0);
        for (VertexIndex v = 0; v < n; ++v)
            for (auto c : lists.at(g.vertices()[v]).members()) {
                auto r = rank[c];
                s.avail[v * words + r / 64] |= std::uint64_t{1} << (r % 64);
            }

        Search search(g, b, words, budget);
        std::vector<VertexIndex> all(n);
        for (VertexIndex v = 0; v < n; ++v)
            all[v] = v;

        try {
            if (n > 0 && ! search.solve(s, all, 0))
                return Infeasible{search.stats, std::nullopt};
        }
        catch (const BudgetHit &) {
            return Exhausted{budget, search.stats};
        }

        Feasible f;
        f.stats = search.stats;
        f.colouring.fold = b;
        for (VertexIndex v = 0; v < n; ++v) {
            ColourSet c;
            for (std::size_t i = 0; i < words; ++i) {
                auto w = s.chosen[v * words + i];
                while (w) {
                    c.insert(colours[i * 64 + std::countr_zero(w)]);
                    w &= w - 1;
                }
            }
            f.colouring.assignment[g.vertices()[v]] = c;
        }
        return f;
    }
}
