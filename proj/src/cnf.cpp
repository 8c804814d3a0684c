#include <clab/solver.hpp>
#include <map>

namespace clab
{
    namespace
    {
        // Sequential counter: at most k of lits are true.
        auto at_most(Cnf & cnf, const std::vector<int> & lits, std::size_t k) -> void
        {
            const auto n = lits.size();
            if (k >= n)
                return;
            if (k == 0) {
                for (auto x : lits)
                    cnf.clauses.push_back({-x});
                return;
            }

            // s[i][j]: at least j+1 of lits[0..i] are true
            std::vector<std::vector<int>> s(n - 1, std::vector<int>(k));
            for (auto & row : s)
                for (auto & var : row)
                    var = ++cnf.variables;

            cnf.clauses.push_back({-lits[0], s[0][0]});
            for (std::size_t j = 1; j < k; ++j)
                cnf.clauses.push_back({-s[0][j]});
            for (std::size_t i = 1; i + 1 < n; ++i) {
                cnf.clauses.push_back({-lits[i], s[i][0]});
                cnf.clauses.push_back({-s[i - 1][0], s[i][0]});
                for (std::size_t j = 1; j < k; ++j) {
                    cnf.clauses.push_back({-lits[i], -s[i - 1][j - 1], s[i][j]});
                    cnf.clauses.push_back({-s[i - 1][j], s[i][j]});
                }
                cnf.clauses.push_back({-lits[i], -s[i - 1][k - 1]});
            }
            cnf.clauses.push_back({-lits[n - 1], -s[n - 2][k - 1]});
        }
    }

    auto encode_cnf(const Graph & g, const ListAssignment & lists, unsigned b) -> Cnf
    {
        if (b == 0)
            throw std::invalid_argument("encode_cnf: fold must be positive");

        Cnf cnf;
        cnf.fold = b;
        std::vector<std::map<Colour, int>> var(g.vertex_count());
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            auto it = lists.find(g.vertices()[v]);
            if (it == lists.end())
                throw MissingListError("no list for vertex " + g.vertices()[v]);
            for (auto c : it->second.members()) {
                var[v][c] = ++cnf.variables;
                cnf.map.emplace_back(g.vertices()[v], c, cnf.variables);
            }
        }
        cnf.primary_variables = cnf.variables;

        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> pos, neg;
            for (auto [c, x] : var[v]) {
                pos.push_back(x);
                neg.push_back(-x);
            }
            if (pos.size() < b) {
                cnf.clauses.push_back({});
                continue;
            }
            at_most(cnf, pos, b);
            at_most(cnf, neg, pos.size() - b);
        }

        for (auto [a, bv] : g.edges())
            for (auto [c, x] : var[a]) {
                auto it = var[bv].find(c);
                if (it != var[bv].end())
                    cnf.clauses.push_back({-x, -it->second});
            }
        return cnf;
    }

    auto Cnf::to_dimacs() const -> std::string
    {
        std::string out = "c clab b-fold list colouring\n";
        out += "c fold " + std::to_string(fold) + "\n";
        out += "c primary " + std::to_string(primary_variables) + "\n";
        for (const auto & [v, c, x] : map)
            out += "c map " + v + " " + std::to_string(c) + " " + std::to_string(x) + "\n";
        out += "p cnf " + std::to_string(variables) + " " + std::to_string(clauses.size()) + "\n";
        for (const auto & cl : clauses) {
            for (auto l : cl)
                out += std::to_string(l) + " ";
            out += "0\n";
        }
        return out;
    }
}
