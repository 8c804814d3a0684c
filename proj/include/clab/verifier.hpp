#pragma once

#include <clab/colours.hpp>
#include <clab/gadget.hpp>
#include <clab/solver.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace clab
{
    enum class Method
    {
        dfs,
        replay,
        arithmetic
    };

    enum class ClaimVerdict
    {
        verified,
        refuted,
        inconclusive
    };

    auto to_string(Method m) -> const char *;
    auto to_string(ClaimVerdict v) -> const char *;

    /// The four inner triangles, in the order (a,b,c), (x,y,z), (a',b',c'), (x',y',z').
    enum class Triangle
    {
        abc,
        xyz,
        abc_primed,
        xyz_primed
    };

    auto to_string(Triangle t) -> const char *;
    auto triangle_vertices(Triangle t) -> std::array<std::string, 3>;

    /// One branch of the frame case analysis: the colours of v, w, t, t' and
    /// the counting sets for the triangle the hand argument would pick.
    struct ProofTrace
    {
        ColourSet phi_v, phi_w, phi_t, phi_tp;
        /// C minus the colours of v and w; always of size k
        ColourSet S;
        /// X (or X') minus the colours of v (or w), per the chosen triangle
        ColourSet T;
        /// B minus phi(t) on the unprimed side, A minus phi(t') on the primed side
        ColourSet R;
        Triangle chosen = Triangle::abc;
        /// |X n S| <= |X' n S|
        bool x_side = true;
        /// |X n phi(v)| >= |X n phi(w)| (or the primed counterpart)
        bool v_side = true;
        /// size of the union of residual lists of the chosen triangle
        std::size_t residual_union_size = 0;
        /// the same for all four triangles
        std::array<std::size_t, 4> residual_union_sizes{};

        auto operator==(const ProofTrace &) const -> bool = default;
    };

    struct ReplaySummary
    {
        std::array<std::uint64_t, 4> chosen_counts{};
        /// branches with no triangle whose residual union is below 3m
        std::uint64_t undefeated_branches = 0;
        /// branches where the hand-picked triangle is not deficient
        std::uint64_t choice_failures = 0;
        std::uint64_t s_size_failures = 0;
        std::uint64_t r_bound_failures = 0;
        /// branches where the residual union exceeds |D| + |T| + |R|
        std::uint64_t count_bound_failures = 0;
        std::size_t min_residual_union = 0;
        std::size_t max_residual_union = 0;

        auto operator==(const ReplaySummary &) const -> bool = default;
    };

    struct VerificationReport
    {
        std::string claim;
        Method method = Method::dfs;
        ClaimVerdict verdict = ClaimVerdict::inconclusive;
        std::uint64_t branches_checked = 0;
        std::vector<ProofTrace> traces;
        std::optional<SearchStats> stats;
        std::optional<ReplaySummary> replay;
        std::optional<MultiColouring> counterexample;
        std::vector<std::string> notes;
        /// claim-specific numbers (copy counts, bounds, ...)
        std::vector<std::pair<std::string, std::string>> facts;
    };

    class PreconditionViolation : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Lemma: decide on G(m) with its lists, b = m. Verified iff infeasible.
    auto verify_lemma_dfs(unsigned m, const Budget & budget = {}) -> VerificationReport;
    auto verify_lemma_dfs(const GadgetInstance & instance, const Budget & budget = {}) -> VerificationReport;

    struct ReplayOptions
    {
        /// traces kept in the report, in branch order
        std::size_t trace_limit = 64;
        /// > 1 selects the OpenMP kernel
        int threads = 1;
    };

    /// Lemma by replaying the frame case analysis: every proper colouring of
    /// u, u', v, w, t, t' is enumerated and checked to leave some inner
    /// triangle whose residual lists cover fewer than 3m colours. Only valid
    /// on the reconstructed gadget with gadget lists; anything else throws
    /// PreconditionViolation.
    auto verify_lemma_replay(unsigned m, const ReplayOptions & opts = {}) -> VerificationReport;
    auto verify_lemma_replay(const GadgetInstance & instance, const ReplayOptions & opts = {}) -> VerificationReport;

    /// Serial reference and OpenMP kernels behind verify_lemma_replay. Both
    /// return identical reports for any thread count.
    auto replay_serial(const GadgetInstance & instance, std::size_t trace_limit) -> VerificationReport;
    auto replay_parallel(const GadgetInstance & instance, std::size_t trace_limit, int threads) -> VerificationReport;

    /// Number of frame branches: ordered pairs of disjoint m-subsets of C,
    /// times C(m+k, m) choices each for t and t'.
    auto replay_branch_count(unsigned m) -> BigInt;

    enum class CopyMethod
    {
        replay,
        dfs
    };

    struct TheoremOptions
    {
        Budget budget;
        CopyMethod copy_method = CopyMethod::replay;
        int threads = 1;
        /// also run decide on the whole of H(m); requires materialisation
        bool whole_graph = false;
        std::uint64_t vertex_cap = 10'000;
    };

    /// Theorem by the per-copy reduction: each ordered pair (P, Q) of
    /// disjoint m-subsets of Z gets the copy with A := P, B := Q, which must
    /// admit no m-fold colouring.
    auto verify_theorem(unsigned m, const TheoremOptions & opts = {}) -> VerificationReport;

    /// Whole-graph check: decide on H(m) with L(u) = L(u') = Z.
    auto verify_theorem_whole(unsigned m, const TheoremOptions & opts = {}) -> VerificationReport;

    /// 9k <= 2m - 1 (so 5m/2 + 9k/4 < 3m) and 4m + k + 1 <= 5m for every m <= max_m.
    auto verify_arithmetic(std::uint64_t max_m) -> VerificationReport;

    auto lower_bound_a(std::uint64_t m) -> std::uint64_t;
    auto upper_bound_a(std::uint64_t m) -> std::uint64_t;
}
