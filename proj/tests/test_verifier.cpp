#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clab/gadget.hpp>
#include <clab/proper.hpp>
#include <clab/verifier.hpp>

#include "support/oracles.hpp"

using namespace clab;
namespace gv = clab::gadget_vertex;

namespace
{
    auto induced(const Graph & g, const std::vector<std::string> & keep) -> Graph
    {
        EdgeNames es;
        for (auto [x, y] : g.edge_names())
            if (std::find(keep.begin(), keep.end(), x) != keep.end() && std::find(keep.begin(), keep.end(), y) != keep.end())
                es.emplace_back(x, y);
        return build_graph(keep, es);
    }

    auto restrict(const ListAssignment & lists, const Graph & g) -> ListAssignment
    {
        ListAssignment out;
        for (const auto & v : g.vertices())
            out[v] = lists.at(v);
        return out;
    }

    /// Frame branches counted by direct enumeration of colourings of the
    /// frame subgraph.
    auto frame_colourings(unsigned m) -> std::uint64_t
    {
        auto gi = build_G(m);
        auto frame = induced(gi.graph, {gv::u, gv::up, gv::v, gv::w, gv::t, gv::tp});
        std::uint64_t n = 0;
        testing::for_each_colouring(frame, restrict(gi.lists, frame), m, [&](const auto &) { ++n; });
        return n;
    }
}

TEST_CASE("replay branch count matches frame enumeration")
{
    CHECK(replay_branch_count(1) == 2);
    CHECK(replay_branch_count(5) == 99'792);
    for (unsigned m = 1; m <= 3; ++m) {
        CHECK(replay_branch_count(m) == frame_colourings(m));
        CHECK(verify_lemma_replay(m).branches_checked == frame_colourings(m));
    }
}

TEST_CASE("forced frame colours")
{
    for (unsigned m : {1u, 2u}) {
        auto gi = build_G(m);
        auto sub = induced(gi.graph, {gv::u, gv::up, gv::v, gv::w});
        std::uint64_t n = 0;
        testing::for_each_colouring(sub, restrict(gi.lists, sub), m, [&](const std::vector<ColourSet> & phi) {
            ++n;
            CHECK(phi[0] == gi.blocks.A);
            CHECK(phi[1] == gi.blocks.B);
            CHECK(phi[2].subset_of(gi.blocks.C));
            CHECK(phi[3].subset_of(gi.blocks.C));
            CHECK(phi[2].disjoint(phi[3]));
        });
        CHECK(n == testing::pascal(2 * m + k_of(m), m) * testing::pascal(m + k_of(m), m));
    }
}

TEST_CASE("replay traces")
{
    for (unsigned m = 1; m <= 5; ++m) {
        auto r = verify_lemma_replay(m, {1'000'000, 1});
        CHECK(r.verdict == ClaimVerdict::verified);
        REQUIRE(r.replay);
        CHECK(r.replay->s_size_failures == 0);
        CHECK(r.replay->undefeated_branches == 0);
        CHECK(r.replay->max_residual_union < 3 * m);
        CHECK(r.traces.size() == r.branches_checked);
        for (const auto & t : r.traces) {
            CHECK(t.S.size() == k_of(m));
            CHECK(t.residual_union_size < 3 * m);
            CHECK(t.R.size() <= k_of(m));
        }
    }
}

TEST_CASE("replay rejects edited gadgets")
{
    auto gi = build_G(1);
    gi.graph = gi.graph.without_edge(gv::a, gv::b);
    CHECK_THROWS_AS(verify_lemma_replay(gi), PreconditionViolation);

    auto other = build_G(1);
    other.lists[gv::t] = other.blocks.A | other.blocks.B | other.blocks.C | other.blocks.D;
    CHECK_THROWS_AS(verify_lemma_replay(other), PreconditionViolation);

    // the DFS is the authority on the edited graph
    CHECK(verify_lemma_dfs(gi).verdict != ClaimVerdict::inconclusive);
}

TEST_CASE("method agreement")
{
    for (unsigned m : {1u, 2u}) {
        CHECK(verify_lemma_dfs(m).verdict == ClaimVerdict::verified);
        CHECK(verify_lemma_replay(m).verdict == ClaimVerdict::verified);
    }
    auto gi = build_G(1);
    auto bf = brute_force(gi.graph, gi.lists, 1, {true, true});
    CHECK(is_infeasible(bf.outcome));
    CHECK(bf.count == 0);
}

TEST_CASE("probes on modified lists")
{
    SUBCASE("five colours everywhere refutes")
    {
        auto gi = build_G(1);
        for (auto & [v, l] : gi.lists)
            l = ColourSet::range(0, 5);
        auto r = verify_lemma_dfs(gi);
        CHECK(r.verdict == ClaimVerdict::refuted);
        REQUIRE(r.counterexample);
        CHECK(is_proper(gi.graph, gi.lists, *r.counterexample));
    }
    SUBCASE("enlarged L(t) agrees with the oracle")
    {
        auto gi = build_G(1);
        gi.lists[gv::t] = gi.blocks.A | gi.blocks.B | gi.blocks.C | gi.blocks.D;
        auto oracle = brute_force(gi.graph, gi.lists, 1, {true, false});
        auto r = verify_lemma_dfs(gi);
        CHECK((r.verdict == ClaimVerdict::refuted) == is_feasible(oracle.outcome));
    }
    SUBCASE("enlarging every list except u, u' to the universe is feasible")
    {
        for (unsigned m : {1u, 2u}) {
            auto gi = build_G(m);
            auto all = gi.blocks.A | gi.blocks.B | gi.blocks.C | gi.blocks.D;
            for (auto & [v, l] : gi.lists)
                if (v != gv::u && v != gv::up)
                    l = all;
            CHECK(is_feasible(decide(gi.graph, gi.lists, m)));
        }
    }
}

TEST_CASE("serial and parallel kernels agree")
{
    for (unsigned m = 1; m <= 4; ++m) {
        auto gi = build_G(m);
        auto s = replay_serial(gi, 100);
        for (int threads : {2, 3, 4}) {
            auto p = replay_parallel(gi, 100, threads);
            CHECK(p.branches_checked == s.branches_checked);
            CHECK(p.traces == s.traces);
            CHECK(*p.replay == *s.replay);
            CHECK(p.verdict == s.verdict);
        }
    }
    TheoremOptions serial, parallel;
    parallel.threads = 4;
    auto a = verify_theorem(2, serial);
    auto b = verify_theorem(2, parallel);
    CHECK(a.verdict == ClaimVerdict::verified);
    CHECK(a.branches_checked == b.branches_checked);
    CHECK(a.facts == b.facts);
    CHECK(a.notes == b.notes);
}

TEST_CASE("theorem")
{
    auto r = verify_theorem(1);
    CHECK(r.verdict == ClaimVerdict::verified);
    TheoremOptions dfs;
    dfs.copy_method = CopyMethod::dfs;
    CHECK(verify_theorem(1, dfs).verdict == ClaimVerdict::verified);
    CHECK(verify_theorem_whole(1).verdict == ClaimVerdict::verified);

    TheoremOptions tiny;
    tiny.vertex_cap = 100;
    CHECK_THROWS_AS(verify_theorem_whole(1, tiny), CapExceeded);
}

TEST_CASE("arithmetic")
{
    auto r = verify_arithmetic(1'000'000);
    CHECK(r.verdict == ClaimVerdict::verified);
    CHECK(r.branches_checked == 1'000'000);
    CHECK(lower_bound_a(1) == 5);
    CHECK(upper_bound_a(1) == 5);
    CHECK(lower_bound_a(5) == 22);
    CHECK(upper_bound_a(5) == 25);
}
