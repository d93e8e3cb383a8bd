#ifndef VARPHRAGMEN_STEP_HPP
#define VARPHRAGMEN_STEP_HPP

// Single-seat subproblem: distribute one new seat among the supporters of a
// candidate so that Σ_k u_k (2 r_k x_k + x_k²) is minimal, subject to
// x_k ≥ 0, x_k = 0 off the support, and Σ_k u_k x_k = 1.

#include "varphragmen/model.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace varphragmen {

template <class T>
struct SubproblemInput {
    const BasicProfile<T>& profile;
    const BasicLoadVector<T>& loads;
    CandidateId candidate;
};

template <class T>
SubproblemInput(const BasicProfile<T>&, const BasicLoadVector<T>&, CandidateId) -> SubproblemInput<T>;

inline constexpr std::size_t default_subset_cap = 12;

namespace detail {

template <class T>
Support<T> require_support(const SubproblemInput<T>& in) {
    if (in.loads.r.size() != in.profile.size())
        throw ElectionError("load vector does not match profile");
    auto s = supporters(in.profile, in.candidate);
    if (s.types.empty()) throw ElectionError("candidate '" + in.candidate.str() + "' has no supporters");
    return s;
}

/// ((Σ_{k∈active} u_k r_k) + 1) / Σ_{k∈active} u_k
template <class T>
T common_level(const SubproblemInput<T>& in, const std::vector<std::size_t>& active) {
    T mass(0), weight(0);
    for (auto k : active) {
        mass += in.profile[k].weight * in.loads.r[k];
        weight += in.profile[k].weight;
    }
    return (mass + T(1)) / weight;
}

template <class T>
std::vector<T> fill_to_level(const SubproblemInput<T>& in, const std::vector<std::size_t>& active,
                             const T& level) {
    std::vector<T> x(in.profile.size(), T(0));
    for (auto k : active) x[k] = level - in.loads.r[k];
    return x;
}

/// Supporters whose load already exceeds `level`; they receive nothing.
template <class T>
std::vector<std::size_t> above_level(const SubproblemInput<T>& in, const Support<T>& s, const T& level) {
    std::vector<std::size_t> out;
    for (auto k : s.types)
        if (in.loads.r[k] > level) out.push_back(k);
    return out;
}

template <class T>
T score_unchecked(const SubproblemInput<T>& in, const std::vector<T>& x) {
    T s(0);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!scalar_traits<T>::is_zero(x[k]))
            s += in.profile[k].weight * (T(2) * in.loads.r[k] * x[k] + x[k] * x[k]);
    return s;
}

// Finishes a solution found by an exact oracle (water-filling or subset
// enumeration), marking the supporters that were left out.
template <class T>
BasicStepSolution<T> make_solution(const SubproblemInput<T>& in, const Support<T>& s, std::vector<T> x,
                                   T level) {
    BasicStepSolution<T> sol{in.candidate, std::move(x), std::move(level), T(0), false, {}, {}};
    sol.score2phi = score_unchecked(in, sol.x);
    sol.unconstrained_x = fill_to_level(in, s.types, common_level(in, s.types));
    if (auto out = above_level(in, s, sol.level); !out.empty()) {
        sol.corrected = true;
        sol.clamp_rounds.push_back(std::move(out));
    }
    return sol;
}

} // namespace detail

/// Common new representation of all supporters, ((Σ_{k∼i} u_k r_k) + 1) / w_i.
/// This is also the quantity the max-load sequential Phragmén rule minimizes.
template <class T>
T unconstrained_level(const SubproblemInput<T>& in) {
    auto s = detail::require_support(in);
    return detail::common_level(in, s.types);
}

/// x_k = ρ_i − r_k on the support, 0 elsewhere. Entries may be negative.
template <class T>
std::vector<T> unconstrained_solution(const SubproblemInput<T>& in) {
    auto s = detail::require_support(in);
    return detail::fill_to_level(in, s.types, detail::common_level(in, s.types));
}

/// Closed form w_i ρ_i² − Σ_{k∼i} u_k r_k². Only meaningful when the
/// unconstrained solution is nonnegative.
template <class T>
T score_interior(const SubproblemInput<T>& in) {
    auto s = detail::require_support(in);
    const T rho = detail::common_level(in, s.types);
    T sq(0);
    for (auto k : s.types) sq += in.profile[k].weight * in.loads.r[k] * in.loads.r[k];
    return s.weight * rho * rho - sq;
}

/// Σ_{k∼i} u_k (2 r_k x_k + x_k²) for a feasible distribution x.
template <class T>
T score_general(const SubproblemInput<T>& in, const std::vector<T>& x) {
    using traits = scalar_traits<T>;
    auto s = detail::require_support(in);
    if (x.size() != in.profile.size()) throw ElectionError("infeasible distribution: wrong length");
    T total(0);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (traits::is_negative(x[k]) && !traits::approx_equal(x[k], T(0)))
            throw ElectionError("infeasible distribution: negative share");
        if (!traits::is_zero(x[k]) && !in.profile[k].approves(in.candidate))
            throw ElectionError("infeasible distribution: share given to a non-supporter");
        total += in.profile[k].weight * x[k];
    }
    if (!traits::approx_equal(total, T(1))) throw ElectionError("infeasible distribution: mass is not 1");
    return detail::score_unchecked(in, x);
}

/// Clamp-and-resolve: solve on the current support, drop every type that
/// came out negative, repeat until the distribution is nonnegative.
template <class T>
BasicStepSolution<T> corrected_solution(const SubproblemInput<T>& in) {
    auto s = detail::require_support(in);
    std::vector<std::size_t> active = s.types;
    BasicStepSolution<T> sol{in.candidate, {}, T(0), T(0), false, {}, {}};

    T level = detail::common_level(in, active);
    sol.unconstrained_x = detail::fill_to_level(in, active, level);
    for (;;) {
        std::vector<std::size_t> negative, keep;
        for (auto k : active) (in.loads.r[k] > level ? negative : keep).push_back(k);
        if (negative.empty()) break;
        // The lowest-load supporter is never above the level, so keep is nonempty.
        sol.clamp_rounds.push_back(std::move(negative));
        active = std::move(keep);
        level = detail::common_level(in, active);
    }
    sol.corrected = !sol.clamp_rounds.empty();
    sol.x = detail::fill_to_level(in, active, level);
    sol.level = level;
    sol.score2phi = score_general(in, sol.x);
    return sol;
}

/// Water-filling: raise the lowest loads to a common level λ until the unit
/// budget is spent. Types with equal load are filled as one block.
template <class T>
BasicStepSolution<T> waterfill_solution(const SubproblemInput<T>& in) {
    auto s = detail::require_support(in);
    std::vector<std::size_t> order = s.types;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return in.loads.r[a] < in.loads.r[b]; });

    T weight(0), mass(0), level(0);
    std::size_t i = 0;
    while (i < order.size()) {
        const T& block_load = in.loads.r[order[i]];
        std::size_t j = i;
        for (; j < order.size() && in.loads.r[order[j]] == block_load; ++j) {
            weight += in.profile[order[j]].weight;
            mass += in.profile[order[j]].weight * in.loads.r[order[j]];
        }
        level = (mass + T(1)) / weight;
        if (j == order.size() || level <= in.loads.r[order[j]]) break;
        i = j;
    }

    std::vector<T> x(in.profile.size(), T(0));
    for (auto k : s.types)
        if (in.loads.r[k] < level) x[k] = level - in.loads.r[k];
    return detail::make_solution(in, s, std::move(x), std::move(level));
}

/// Brute force over every nonempty active set S of supporters: level ρ_S,
/// x = ρ_S − r on S, keep the nonnegative ones, return the lowest score.
/// Ties prefer the larger S, then the lexicographically smaller index list.
template <class T>
BasicStepSolution<T> subset_oracle(const SubproblemInput<T>& in, std::size_t cap = default_subset_cap) {
    auto s = detail::require_support(in);
    const std::size_t m = s.types.size();
    if (m > cap || m >= 63)
        throw ElectionError("subset oracle: " + std::to_string(m) + " supporter types exceed cap " +
                            std::to_string(cap));

    bool found = false;
    std::vector<std::size_t> best_set;
    std::vector<T> best_x;
    T best_score(0), best_level(0);

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::size_t> set;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::uint64_t{1} << b)) set.push_back(s.types[b]);
        const T level = detail::common_level(in, set);
        bool feasible = std::all_of(set.begin(), set.end(),
                                    [&](std::size_t k) { return !(in.loads.r[k] > level); });
        if (!feasible) continue;
        auto x = detail::fill_to_level(in, set, level);
        const T score = score_general(in, x);
        const bool better = !found || score < best_score ||
                            (score == best_score &&
                             (set.size() > best_set.size() ||
                              (set.size() == best_set.size() && set < best_set)));
        if (better) {
            found = true;
            best_set = std::move(set);
            best_x = std::move(x);
            best_score = score;
            best_level = level;
        }
    }
    // The singleton of a minimum-load supporter is always feasible.
    return detail::make_solution(in, s, std::move(best_x), std::move(best_level));
}

} // namespace varphragmen

#endif // VARPHRAGMEN_STEP_HPP
