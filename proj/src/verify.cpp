#include <clab/proper.hpp>
#include <clab/verifier.hpp>

#include <omp.h>

namespace clab
{
    auto to_string(Method m) -> const char *
    {
        switch (m) {
        case Method::dfs: return "dfs";
        case Method::replay: return "replay";
        case Method::arithmetic: return "arithmetic";
        }
        return "?";
    }

    auto to_string(ClaimVerdict v) -> const char *
    {
        switch (v) {
        case ClaimVerdict::verified: return "verified";
        case ClaimVerdict::refuted: return "refuted";
        case ClaimVerdict::inconclusive: return "inconclusive";
        }
        return "?";
    }

    namespace
    {
        // Infeasible => verified, feasible => refuted, budget => inconclusive.
        auto report_from(std::string claim, const Graph & g, const ListAssignment & lists, const Outcome & o)
            -> VerificationReport
        {
            VerificationReport r;
            r.claim = std::move(claim);
            r.method = Method::dfs;
            r.stats = stats_of(o);
            r.branches_checked = r.stats->nodes_expanded;
            if (is_infeasible(o))
                r.verdict = ClaimVerdict::verified;
            else if (const auto * f = std::get_if<Feasible>(&o)) {
                r.verdict = ClaimVerdict::refuted;
                r.counterexample = f->colouring;
                if (! is_proper(g, lists, f->colouring))
                    r.notes.push_back("solver returned a colouring that fails the properness check");
            }
            else
                r.verdict = ClaimVerdict::inconclusive;
            return r;
        }
    }

    auto verify_lemma_dfs(const GadgetInstance & in, const Budget & budget) -> VerificationReport
    {
        auto o = decide(in.graph, in.lists, in.params.m, budget);
        auto r = report_from("lemma", in.graph, in.lists, o);
        r.facts = {{"m", std::to_string(in.params.m)}, {"k", std::to_string(in.params.k)},
            {"vertices", std::to_string(in.graph.vertex_count())}, {"edges", std::to_string(in.graph.edge_count())}};
        return r;
    }

    auto verify_lemma_dfs(unsigned m, const Budget & budget) -> VerificationReport
    {
        return verify_lemma_dfs(build_G(m), budget);
    }

    auto verify_theorem(unsigned m, const TheoremOptions & opts) -> VerificationReport
    {
        PairEnumerator pairs(m);
        const auto n = pairs.size();

        // per copy: verdict, branches; merged in pair order
        std::vector<ClaimVerdict> verdicts(n, ClaimVerdict::inconclusive);
        std::vector<std::uint64_t> branches(n, 0);
        auto run_copy = [&](std::uint64_t i) {
            auto [p, q] = pairs.at(i);
            auto copy = gadget_instance(m, copy_blocks(m, p, q));
            auto r = opts.copy_method == CopyMethod::replay ? replay_serial(copy, 0) : verify_lemma_dfs(copy, opts.budget);
            verdicts[i] = r.verdict;
            branches[i] = r.branches_checked;
        };

        if (opts.threads > 1) {
            const auto total = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
            for (long long i = 0; i < total; ++i)
                run_copy(static_cast<std::uint64_t>(i));
        }
        else
            for (std::uint64_t i = 0; i < n; ++i)
                run_copy(i);

        VerificationReport r;
        r.claim = "theorem";
        r.method = opts.copy_method == CopyMethod::replay ? Method::replay : Method::dfs;
        std::uint64_t verified = 0, refuted = 0;
        std::optional<std::uint64_t> first_bad;
        for (std::uint64_t i = 0; i < n; ++i) {
            r.branches_checked += branches[i];
            if (verdicts[i] == ClaimVerdict::verified)
                ++verified;
            else {
                if (verdicts[i] == ClaimVerdict::refuted)
                    ++refuted;
                if (! first_bad)
                    first_bad = i;
            }
        }
        if (verified == n)
            r.verdict = ClaimVerdict::verified;
        else if (refuted > 0)
            r.verdict = ClaimVerdict::refuted;
        else
            r.verdict = ClaimVerdict::inconclusive;

        auto params = params_of(m);
        r.facts = {{"m", std::to_string(m)}, {"k", std::to_string(params.k)}, {"p", params.p.str()},
            {"copies", std::to_string(n)}, {"copies_verified", std::to_string(verified)},
            {"copy_method", opts.copy_method == CopyMethod::replay ? "replay" : "dfs"}};
        if (first_bad) {
            auto [p, q] = pairs.at(*first_bad);
            r.notes.push_back("first unverified copy: P=" + p.to_string() + " Q=" + q.to_string());
        }
        r.notes.push_back("copies use a shared D block disjoint from Z");
        return r;
    }

    auto verify_theorem_whole(unsigned m, const TheoremOptions & opts) -> VerificationReport
    {
        auto h = build_H(m, HOptions{opts.vertex_cap, false});
        auto o = decide(*h.graph, *h.bad_lists, m, opts.budget);
        auto r = report_from("theorem-whole-graph", *h.graph, *h.bad_lists, o);
        r.facts = {{"m", std::to_string(m)}, {"p", h.params.p.str()}, {"vertices", h.vertex_count.str()},
            {"edges", h.edge_count.str()}};
        return r;
    }

    auto lower_bound_a(std::uint64_t m) -> std::uint64_t
    {
        return 4 * m + (2 * m - 1) / 9 + 1;
    }

    auto upper_bound_a(std::uint64_t m) -> std::uint64_t
    {
        return 5 * m;
    }

    auto verify_arithmetic(std::uint64_t max_m) -> VerificationReport
    {
        VerificationReport r;
        r.claim = "arithmetic";
        r.method = Method::arithmetic;
        std::uint64_t failures = 0;
        std::optional<std::uint64_t> first_failure;
        for (std::uint64_t m = 1; m <= max_m; ++m) {
            auto k = (2 * m - 1) / 9;
            // 5m/2 + 9k/4 < 3m  <=>  10m + 9k < 12m
            bool ok = 9 * k <= 2 * m - 1 && 10 * m + 9 * k < 12 * m && lower_bound_a(m) <= upper_bound_a(m)
                && 4 * m + k + 1 == lower_bound_a(m);
            if (! ok) {
                ++failures;
                if (! first_failure)
                    first_failure = m;
            }
            ++r.branches_checked;
        }
        bool endpoint = max_m >= 1 && lower_bound_a(1) == 5 && upper_bound_a(1) == 5;
        r.verdict = failures == 0 && endpoint ? ClaimVerdict::verified : ClaimVerdict::refuted;
        r.facts = {{"max_m", std::to_string(max_m)}, {"failures", std::to_string(failures)},
            {"a1_lower", std::to_string(lower_bound_a(1))}, {"a1_upper", std::to_string(upper_bound_a(1))}};
        if (first_failure)
            r.notes.push_back("first failing m: " + std::to_string(*first_failure));
        return r;
    }
}
