#include <clab/verifier.hpp>

#include <omp.h>

#include <algorithm>
#include <limits>

namespace clab
{
    using namespace gadget_vertex;

    auto to_string(Triangle t) -> const char *
    {
        switch (t) {
        case Triangle::abc: return "(a,b,c)";
        case Triangle::xyz: return "(x,y,z)";
        case Triangle::abc_primed: return "(a',b',c')";
        case Triangle::xyz_primed: return "(x',y',z')";
        }
        return "?";
    }

    auto triangle_vertices(Triangle t) -> std::array<std::string, 3>
    {
        switch (t) {
        case Triangle::abc: return {a, b, c};
        case Triangle::xyz: return {x, y, z};
        case Triangle::abc_primed: return {ap, bp, cp};
        case Triangle::xyz_primed: return {xp, yp, zp};
        }
        return {};
    }

    namespace
    {
        constexpr std::array<Triangle, 4> all_triangles{Triangle::abc, Triangle::xyz, Triangle::abc_primed, Triangle::xyz_primed};

        // frame slots: u, u', v, w, t, t'
        constexpr std::size_t n_frame = 6;

        struct InnerVertex
        {
            ColourSet list;
            std::vector<std::size_t> frame_neighbours;
        };

        struct Context
        {
            unsigned m = 0, k = 0;
            ColourBlocks blocks;
            std::array<std::array<InnerVertex, 3>, 4> triangles;
            std::vector<std::pair<ColourSet, ColourSet>> vw_pairs;
        };

        auto check_precondition(const GadgetInstance & in) -> void
        {
            const auto & g = gadget_graph();
            if (in.graph.vertices() != g.vertices() || in.graph.edges() != g.edges())
                throw PreconditionViolation("replay only applies to the reconstructed gadget graph");
            if (in.lists != gadget_lists(in.blocks))
                throw PreconditionViolation("replay only applies to the gadget list assignment");

            const auto m = in.params.m, k = in.params.k;
            const auto & bl = in.blocks;
            bool ok = bl.A.size() == m && bl.B.size() == m && bl.C.size() == 2 * m + k && bl.D.size() == 2 * m + k
                && bl.X.size() == m && bl.Xp.size() == m && bl.A.disjoint(bl.B) && bl.A.disjoint(bl.C)
                && bl.A.disjoint(bl.D) && bl.B.disjoint(bl.C) && bl.B.disjoint(bl.D) && bl.C.disjoint(bl.D)
                && bl.X.disjoint(bl.Xp) && bl.X.subset_of(bl.C) && bl.Xp.subset_of(bl.C);
            if (! ok)
                throw PreconditionViolation("colour blocks do not satisfy the block invariants");
        }

        auto make_context(const GadgetInstance & in) -> Context
        {
            check_precondition(in);
            Context ctx;
            ctx.m = in.params.m;
            ctx.k = in.params.k;
            ctx.blocks = in.blocks;

            const auto & g = in.graph;
            const std::array<std::string, n_frame> frame{u, up, v, w, t, tp};
            for (std::size_t i = 0; i < 4; ++i) {
                auto names = triangle_vertices(all_triangles[i]);
                for (std::size_t j = 0; j < 3; ++j) {
                    auto & iv = ctx.triangles[i][j];
                    iv.list = in.lists.at(names[j]);
                    for (std::size_t f = 0; f < n_frame; ++f)
                        if (g.adjacent(g.at(names[j]), g.at(frame[f])))
                            iv.frame_neighbours.push_back(f);
                }
            }

            auto cs = ctx.blocks.C.members();
            for_each_subset(cs, ctx.m, [&](const ColourSet & pv) {
                auto rest = (ctx.blocks.C - pv).members();
                return for_each_subset(rest, ctx.m, [&](const ColourSet & pw) {
                    ctx.vw_pairs.emplace_back(pv, pw);
                    return true;
                });
            });
            return ctx;
        }

        struct Chunk
        {
            std::vector<ProofTrace> traces;
            ReplaySummary summary;
            std::uint64_t branches = 0;
        };

        auto merge_summary(ReplaySummary & into, const ReplaySummary & from, bool first) -> void
        {
            for (std::size_t i = 0; i < 4; ++i)
                into.chosen_counts[i] += from.chosen_counts[i];
            into.undefeated_branches += from.undefeated_branches;
            into.choice_failures += from.choice_failures;
            into.s_size_failures += from.s_size_failures;
            into.r_bound_failures += from.r_bound_failures;
            into.count_bound_failures += from.count_bound_failures;
            into.min_residual_union = first ? from.min_residual_union : std::min(into.min_residual_union, from.min_residual_union);
            into.max_residual_union = first ? from.max_residual_union : std::max(into.max_residual_union, from.max_residual_union);
        }

        auto evaluate(const Context & ctx, const std::array<ColourSet, n_frame> & phi) -> ProofTrace
        {
            const auto & bl = ctx.blocks;
            ProofTrace tr;
            tr.phi_v = phi[2];
            tr.phi_w = phi[3];
            tr.phi_t = phi[4];
            tr.phi_tp = phi[5];
            tr.S = bl.C - phi[2] - phi[3];

            for (std::size_t i = 0; i < 4; ++i) {
                ColourSet uni;
                for (const auto & iv : ctx.triangles[i]) {
                    auto residual = iv.list;
                    for (auto f : iv.frame_neighbours)
                        residual -= phi[f];
                    uni |= residual;
                }
                tr.residual_union_sizes[i] = uni.size();
            }

            // the hand argument: pick the side whose X-block meets S least,
            // then the one of v, w that takes more of that block
            tr.x_side = (bl.X & tr.S).size() <= (bl.Xp & tr.S).size();
            const auto & xb = tr.x_side ? bl.X : bl.Xp;
            tr.v_side = (xb & phi[2]).size() >= (xb & phi[3]).size();
            tr.T = xb - (tr.v_side ? phi[2] : phi[3]);
            tr.R = tr.x_side ? bl.B - phi[4] : bl.A - phi[5];
            if (tr.x_side)
                tr.chosen = tr.v_side ? Triangle::abc : Triangle::xyz;
            else
                tr.chosen = tr.v_side ? Triangle::abc_primed : Triangle::xyz_primed;
            tr.residual_union_size = tr.residual_union_sizes[static_cast<std::size_t>(tr.chosen)];
            return tr;
        }

        auto run_pair(const Context & ctx, std::size_t index, std::size_t trace_limit) -> Chunk
        {
            Chunk out;
            const auto & bl = ctx.blocks;
            const auto & [pv, pw] = ctx.vw_pairs[index];
            const auto s = bl.C - pv - pw;
            const auto three_m = 3 * static_cast<std::size_t>(ctx.m);
            bool first = true;

            auto t_opts = (bl.B | s).members();
            auto tp_opts = (bl.A | s).members();
            for_each_subset(t_opts, ctx.m, [&](const ColourSet & pt) {
                return for_each_subset(tp_opts, ctx.m, [&](const ColourSet & ptp) {
                    auto tr = evaluate(ctx, {bl.A, bl.B, pv, pw, pt, ptp});
                    auto & sm = out.summary;
                    ++out.branches;
                    ++sm.chosen_counts[static_cast<std::size_t>(tr.chosen)];
                    auto best = *std::min_element(tr.residual_union_sizes.begin(), tr.residual_union_sizes.end());
                    if (best >= three_m)
                        ++sm.undefeated_branches;
                    if (tr.residual_union_size >= three_m)
                        ++sm.choice_failures;
                    if (tr.S.size() != ctx.k)
                        ++sm.s_size_failures;
                    if (tr.R.size() > ctx.k)
                        ++sm.r_bound_failures;
                    if (tr.residual_union_size > bl.D.size() + tr.T.size() + tr.R.size())
                        ++sm.count_bound_failures;
                    sm.min_residual_union = first ? best : std::min(sm.min_residual_union, best);
                    sm.max_residual_union = first ? best : std::max(sm.max_residual_union, best);
                    first = false;
                    if (out.traces.size() < trace_limit)
                        out.traces.push_back(std::move(tr));
                    return true;
                });
            });
            return out;
        }

        auto assemble(const Context & ctx, std::vector<Chunk> & chunks, std::size_t trace_limit) -> VerificationReport
        {
            VerificationReport r;
            r.claim = "lemma";
            r.method = Method::replay;
            ReplaySummary total;
            bool first = true;
            for (auto & ch : chunks) {
                if (ch.branches == 0)
                    continue;
                r.branches_checked += ch.branches;
                merge_summary(total, ch.summary, first);
                first = false;
                for (auto & tr : ch.traces) {
                    if (r.traces.size() >= trace_limit)
                        break;
                    r.traces.push_back(std::move(tr));
                }
            }
            r.replay = total;

            bool ok = r.branches_checked > 0 && total.undefeated_branches == 0 && total.s_size_failures == 0;
            r.verdict = ok ? ClaimVerdict::verified : ClaimVerdict::refuted;
            r.facts = {{"m", std::to_string(ctx.m)}, {"k", std::to_string(ctx.k)},
                {"vw_pairs", std::to_string(ctx.vw_pairs.size())}, {"A", ctx.blocks.A.to_string()},
                {"B", ctx.blocks.B.to_string()}, {"C", ctx.blocks.C.to_string()}, {"D", ctx.blocks.D.to_string()},
                {"X", ctx.blocks.X.to_string()}, {"X'", ctx.blocks.Xp.to_string()}};
            r.notes.push_back("S is taken as C minus the colours of v and w");
            r.notes.push_back("all four inner triangles are checked; the trace records the one the hand argument picks");
            return r;
        }
    }

    auto replay_serial(const GadgetInstance & instance, std::size_t trace_limit) -> VerificationReport
    {
        auto ctx = make_context(instance);
        std::vector<Chunk> chunks;
        chunks.reserve(ctx.vw_pairs.size());
        for (std::size_t i = 0; i < ctx.vw_pairs.size(); ++i) {
            auto already = std::size_t{0};
            for (const auto & ch : chunks)
                already += ch.traces.size();
            chunks.push_back(run_pair(ctx, i, already >= trace_limit ? 0 : trace_limit - already));
        }
        return assemble(ctx, chunks, trace_limit);
    }

    auto replay_parallel(const GadgetInstance & instance, std::size_t trace_limit, int threads) -> VerificationReport
    {
        auto ctx = make_context(instance);
        std::vector<Chunk> chunks(ctx.vw_pairs.size());
        const auto n = static_cast<long long>(ctx.vw_pairs.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < n; ++i)
            chunks[i] = run_pair(ctx, static_cast<std::size_t>(i), trace_limit);
        return assemble(ctx, chunks, trace_limit);
    }

    auto verify_lemma_replay(const GadgetInstance & instance, const ReplayOptions & opts) -> VerificationReport
    {
        return opts.threads > 1 ? replay_parallel(instance, opts.trace_limit, opts.threads)
                                : replay_serial(instance, opts.trace_limit);
    }

    auto verify_lemma_replay(unsigned m, const ReplayOptions & opts) -> VerificationReport
    {
        return verify_lemma_replay(build_G(m), opts);
    }

    auto replay_branch_count(unsigned m) -> BigInt
    {
        auto k = k_of(m);
        auto choose = [](unsigned n, unsigned r) {
            BigInt acc = 1;
            for (unsigned i = 1; i <= r; ++i)
                acc = acc * (n - r + i) / i;
            return acc;
        };
        auto per_t = choose(m + k, m);
        return choose(2 * m + k, m) * choose(m + k, m) * per_t * per_t;
    }
}
