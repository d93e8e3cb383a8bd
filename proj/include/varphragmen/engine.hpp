#ifndef VARPHRAGMEN_ENGINE_HPP
#define VARPHRAGMEN_ENGINE_HPP

#include "varphragmen/model.hpp"
#include "varphragmen/step.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace varphragmen {

enum class Backend { exact, float64 };

struct MethodConfig {
    Method method = Method::var_phragmen;
    Mode mode = Mode::candidate;
    int seats = 1;
    Backend backend = Backend::exact;
};

template <class T>
struct Selection {
    BasicStepSolution<T> solution;
    std::vector<CandidateId> tied;     // every candidate sharing the minimal criterion, winner included
    std::map<CandidateId, T> criterion; // value minimized for each eligible candidate
};

namespace detail {

/// Seats already held by a party on a closed list: all of its load sits on
/// its own supporters, so this is just their mass.
template <class T>
T closed_list_seats(const BasicProfile<T>& profile, const BasicLoadVector<T>& loads, const Support<T>& s) {
    T n(0);
    for (auto k : s.types) n += profile[k].weight * loads.r[k];
    return n;
}

template <class T>
BasicStepSolution<T> level_solution(const SubproblemInput<T>& in) {
    auto x = unconstrained_solution(in);
    for (const auto& v : x)
        if (scalar_traits<T>::is_negative(v))
            throw std::logic_error("negative share in a max-load step for '" + in.candidate.str() + "'");
    BasicStepSolution<T> sol{in.candidate, x, unconstrained_level(in), T(0), false, {}, x};
    sol.score2phi = score_general(in, sol.x);
    return sol;
}

} // namespace detail

/// Picks the eligible candidate minimizing the method's criterion:
///  - var_phragmen: corrected 2φ_i
///  - seq_phragmen: common level ρ_i
///  - sainte_lague: (2 n_i + 1) / w_i   (closed lists)
///  - dhondt:       (n_i + 1) / w_i     (closed lists)
/// Ties go to the lexicographically smallest id. Candidates with no
/// supporters are skipped.
template <class T>
Selection<T> select_winner(const BasicProfile<T>& profile, const BasicLoadVector<T>& loads,
                           const std::set<CandidateId>& eligible, Method method) {
    Selection<T> sel{BasicStepSolution<T>{CandidateId("_"), {}, T(0), T(0), false, {}, {}}, {}, {}};
    std::optional<CandidateId> best;
    std::optional<BasicStepSolution<T>> best_solution;
    T best_value(0);

    for (const auto& c : eligible) {
        if (!profile.has_candidate(c)) continue;
        auto s = supporters(profile, c);
        if (s.types.empty()) continue;
        SubproblemInput<T> in{profile, loads, c};

        std::optional<BasicStepSolution<T>> sol;
        T value(0);
        switch (method) {
        case Method::var_phragmen:
            sol = corrected_solution(in);
            value = sol->score2phi;
            break;
        case Method::seq_phragmen:
            value = unconstrained_level(in);
            break;
        case Method::sainte_lague:
            value = (T(2) * detail::closed_list_seats(profile, loads, s) + T(1)) / s.weight;
            break;
        case Method::dhondt:
            value = (detail::closed_list_seats(profile, loads, s) + T(1)) / s.weight;
            break;
        }
        sel.criterion.emplace(c, value);

        if (!best || value < best_value) {
            best = c;
            best_value = value;
            best_solution = std::move(sol);
            sel.tied.assign(1, c);
        } else if (value == best_value) {
            sel.tied.push_back(c);
        }
    }
    if (!best) throw ElectionError("no eligible candidate with support");

    SubproblemInput<T> in{profile, loads, *best};
    sel.solution = best_solution ? std::move(*best_solution) : detail::level_solution(in);
    return sel;
}

/// Load variance times the total weight: Σ_k u_k r_k² − n²/w.
template <class T>
T variance(const BasicProfile<T>& profile, const BasicLoadVector<T>& loads) {
    if (loads.r.size() != profile.size()) throw ElectionError("load vector does not match profile");
    const T n(loads.seats_assigned);
    if (!scalar_traits<T>::approx_equal(loads.mass(profile), n))
        throw ElectionError("inconsistent loads: mass differs from seats assigned");
    T sq(0);
    for (std::size_t k = 0; k < profile.size(); ++k) sq += profile[k].weight * loads.r[k] * loads.r[k];
    return sq - n * n / profile.total_weight();
}

template <class T>
void validate_config(const BasicProfile<T>& profile, const MethodConfig& config) {
    if (config.seats < 1) throw ElectionError("seats must be at least 1");
    if (config.mode == Mode::candidate && static_cast<std::size_t>(config.seats) > profile.candidates().size())
        throw ElectionError("candidate mode needs seats <= " + std::to_string(profile.candidates().size()));
    if ((config.method == Method::sainte_lague || config.method == Method::dhondt) && !profile.is_closed_list())
        throw ElectionError(std::string(to_string(config.method)) + " requires a closed-list profile");
}

/// Sequential election: one select_winner per seat, loads updated by the
/// winner's distribution. Candidate mode retires winners; party mode does not.
template <class T>
BasicElectionResult<T> run_election(const BasicProfile<T>& profile, const MethodConfig& config) {
    validate_config(profile, config);

    BasicElectionResult<T> result;
    result.method = config.method;
    result.mode = config.mode;
    for (const auto& c : profile.candidates()) result.seat_counts[c] = 0;

    std::set<CandidateId> eligible(profile.candidates().begin(), profile.candidates().end());
    auto loads = BasicLoadVector<T>::zero(profile);

    for (int seat = 1; seat <= config.seats; ++seat) {
        auto sel = select_winner(profile, loads, eligible, config.method);
        for (std::size_t k = 0; k < loads.r.size(); ++k) loads.r[k] += sel.solution.x[k];
        loads.seats_assigned = seat;

        const CandidateId winner = sel.solution.candidate;
        ++result.seat_counts[winner];
        if (config.mode == Mode::candidate) eligible.erase(winner);

        std::vector<CandidateId> others;
        for (const auto& c : sel.tied)
            if (c != winner) others.push_back(c);
        result.records.push_back(
            {seat, std::move(sel.solution), loads, variance(profile, loads), std::move(others)});
    }
    return result;
}

enum class Divisor { sainte_lague, dhondt };

template <class T>
struct HighestAverages {
    std::vector<CandidateId> sequence;
    std::map<CandidateId, int> counts;
};

/// Classic highest-averages apportionment: each seat goes to the party with
/// the largest votes / (2n+1) (Sainte-Laguë) or votes / (n+1) (D'Hondt).
template <class T>
HighestAverages<T> highest_averages(const std::map<CandidateId, T>& votes, int seats, Divisor divisor) {
    bool any = false;
    for (const auto& [party, v] : votes) {
        if (v < T(0)) throw ElectionError("negative vote count for '" + party.str() + "'");
        any = any || v > T(0);
    }
    if (!any) throw ElectionError("no votes");

    HighestAverages<T> out;
    for (const auto& [party, v] : votes) out.counts[party] = 0;
    for (int seat = 0; seat < seats; ++seat) {
        const CandidateId* best = nullptr;
        T best_avg(0);
        for (const auto& [party, v] : votes) {
            if (!(v > T(0))) continue;
            const int n = out.counts[party];
            const T avg = divisor == Divisor::sainte_lague ? v / T(2 * n + 1) : v / T(n + 1);
            if (!best || avg > best_avg) {
                best = &party;
                best_avg = avg;
            }
        }
        out.sequence.push_back(*best);
        ++out.counts[*best];
    }
    return out;
}

/// Party vote totals w_i of a closed-list profile.
template <class T>
std::map<CandidateId, T> party_votes(const BasicProfile<T>& profile) {
    std::map<CandidateId, T> votes;
    for (const auto& c : profile.candidates()) votes[c] = supporters(profile, c).weight;
    return votes;
}

} // namespace varphragmen

#endif // VARPHRAGMEN_ENGINE_HPP
