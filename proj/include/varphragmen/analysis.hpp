#ifndef VARPHRAGMEN_ANALYSIS_HPP
#define VARPHRAGMEN_ANALYSIS_HPP

// Experiments around the variance rule: closed-list equivalence with the
// classic divisor methods, support monotonicity, the two-party seat-share
// sweep, and agreement of the clamp-and-resolve step with exact minimizers.

#include "varphragmen/engine.hpp"
#include "varphragmen/model.hpp"
#include "varphragmen/step.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace varphragmen {

// ---------------------------------------------------------------------------
// Random profiles

struct GeneratorCaps {
    std::size_t max_types = 8;
    std::size_t max_candidates = 6;
    int max_weight = 100;
};

inline std::string party_name(std::size_t index) {
    if (index < 26) return std::string(1, static_cast<char>('A' + index));
    return "P" + std::to_string(index + 1);
}

/// Integer weights uniform in [1, max_weight]; each approval set is a
/// uniform nonempty subset of the candidate pool.
inline Profile random_profile(std::mt19937_64& rng, const GeneratorCaps& caps = {}) {
    std::uniform_int_distribution<std::size_t> n_cands(1, caps.max_candidates);
    std::uniform_int_distribution<std::size_t> n_types(1, caps.max_types);
    std::uniform_int_distribution<int> weight(1, caps.max_weight);
    const std::size_t m = n_cands(rng);
    const std::size_t t = n_types(rng);
    std::uniform_int_distribution<std::uint64_t> subset(1, (std::uint64_t{1} << m) - 1);

    std::vector<VoterType> types;
    for (std::size_t k = 0; k < t; ++k) {
        VoterType vt{Rational(weight(rng)), {}};
        const auto mask = subset(rng);
        for (std::size_t c = 0; c < m; ++c)
            if (mask & (std::uint64_t{1} << c)) vt.approvals.emplace_back(party_name(c));
        types.push_back(std::move(vt));
    }
    return Profile(std::move(types));
}

/// Singleton approvals only; a party may be spread over several types.
inline Profile random_closed_list(std::mt19937_64& rng, const GeneratorCaps& caps) {
    std::uniform_int_distribution<std::size_t> n_parties(1, caps.max_candidates);
    std::uniform_int_distribution<std::size_t> n_types(1, caps.max_types);
    std::uniform_int_distribution<int> weight(1, caps.max_weight);
    const std::size_t m = n_parties(rng);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    const std::size_t t = std::max(m, n_types(rng));

    std::vector<VoterType> types;
    for (std::size_t k = 0; k < t; ++k) {
        const std::size_t p = k < m ? k : pick(rng);
        types.push_back({Rational(weight(rng)), {CandidateId(party_name(p))}});
    }
    std::shuffle(types.begin(), types.end(), rng);
    return Profile(std::move(types));
}

// ---------------------------------------------------------------------------
// Findings and replay

enum class FindingKind { closed_list_mismatch, oracle_disagreement };

/// A self-contained instance that can be written out and re-run.
struct Counterexample {
    FindingKind kind = FindingKind::oracle_disagreement;
    Profile profile;
    MethodConfig config;                  // closed_list_mismatch
    LoadVector loads;                     // oracle_disagreement
    std::optional<CandidateId> candidate; // oracle_disagreement
    std::vector<std::string> trace;
};

struct ReplayOutcome {
    bool consistent = true;
    std::vector<std::string> trace;
};

namespace detail {

inline std::string join_ids(const std::vector<CandidateId>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i].str();
    return s;
}

inline std::string join_values(const std::vector<Rational>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
    return s + ")";
}

} // namespace detail

/// Runs a party-mode election on a closed list and the matching divisor
/// method; consistent when the winner sequences coincide.
inline ReplayOutcome evaluate_closed_list(const Profile& profile, Method method, int seats) {
    const Divisor divisor = method == Method::var_phragmen ? Divisor::sainte_lague : Divisor::dhondt;
    auto run = run_election(profile, MethodConfig{method, Mode::party, seats, Backend::exact});
    auto ha = highest_averages(party_votes(profile), seats, divisor);
    ReplayOutcome out;
    out.consistent = run.winners() == ha.sequence;
    out.trace.push_back(std::string(to_string(method)) + ": " + detail::join_ids(run.winners()));
    out.trace.push_back(std::string(divisor == Divisor::sainte_lague ? "sainte-lague" : "dhondt") + ": " +
                        detail::join_ids(ha.sequence));
    return out;
}

/// Compares the clamp-and-resolve step against water-filling and subset
/// enumeration on one subproblem. Consistent when x, level and score agree
/// exactly. The trace is only built when asked for or on disagreement.
inline ReplayOutcome evaluate_oracles(const Profile& profile, const LoadVector& loads, const CandidateId& candidate,
                                      bool with_trace = false) {
    SubproblemInput<Rational> in{profile, loads, candidate};
    const auto corrected = corrected_solution(in);
    const auto water = waterfill_solution(in);
    const auto subset = subset_oracle(in);
    auto same = [](const StepSolution& a, const StepSolution& b) {
        return a.x == b.x && a.level == b.level && a.score2phi == b.score2phi;
    };
    ReplayOutcome out;
    out.consistent = same(corrected, water) && same(corrected, subset);
    if (with_trace || !out.consistent) {
        using Named = std::pair<const char*, const StepSolution*>;
        for (const auto& [name, sol] : {Named{"corrected", &corrected}, Named{"waterfill", &water},
                                        Named{"subset", &subset}})
            out.trace.push_back(std::string(name) + ": x=" + detail::join_values(sol->x) +
                                " level=" + sol->level.str() + " score=" + sol->score2phi.str());
    }
    return out;
}

inline ReplayOutcome replay(const Counterexample& ce) {
    if (ce.kind == FindingKind::closed_list_mismatch)
        return evaluate_closed_list(ce.profile, ce.config.method, ce.config.seats);
    if (!ce.candidate) throw ElectionError("oracle counterexample without a candidate");
    return evaluate_oracles(ce.profile, ce.loads, *ce.candidate, true);
}

// ---------------------------------------------------------------------------
// Closed-list equivalence

struct EquivalenceReport {
    int trials = 0;
    int sainte_lague_pass = 0; // var_phragmen vs Sainte-Laguë
    int dhondt_pass = 0;       // seq_phragmen vs D'Hondt
    std::vector<Counterexample> counterexamples;

    bool all_passed() const { return sainte_lague_pass == trials && dhondt_pass == trials; }
};

struct ElectionInstance {
    Profile profile;
    MethodConfig config;
};

/// Closed list with up to 6 parties, weights up to 1000, 1..12 seats, party mode.
inline ElectionInstance random_closed_list_instance(std::mt19937_64& rng) {
    Profile profile = random_closed_list(rng, GeneratorCaps{8, 6, 1000});
    const int seats = std::uniform_int_distribution<int>(1, 12)(rng);
    return {std::move(profile), MethodConfig{Method::var_phragmen, Mode::party, seats, Backend::exact}};
}

inline EquivalenceReport check_closed_list_equivalence(std::uint64_t seed, int trials) {
    if (trials < 1) throw ElectionError("trials must be at least 1");
    std::mt19937_64 rng(seed);

    EquivalenceReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const auto [profile, config] = random_closed_list_instance(rng);
        const int seats = config.seats;
        for (Method m : {Method::var_phragmen, Method::seq_phragmen}) {
            auto outcome = evaluate_closed_list(profile, m, seats);
            if (outcome.consistent) {
                ++(m == Method::var_phragmen ? report.sainte_lague_pass : report.dhondt_pass);
            } else {
                report.counterexamples.push_back({FindingKind::closed_list_mismatch, profile,
                                                  MethodConfig{m, Mode::party, seats, Backend::exact},
                                                  LoadVector::zero(profile), std::nullopt,
                                                  std::move(outcome.trace)});
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Monotonicity

struct MonotonicityReport {
    Profile base_profile;
    Profile augmented_profile;
    CandidateId party;
    Rational delta;
    int seats = 0;
    int seats_before = 0;
    int seats_after = 0;
    bool violated = false;
};

/// Adds `delta` to the first type approving exactly {party}, or appends
/// such a type when there is none.
inline Profile add_exclusive_support(const Profile& profile, const CandidateId& party, const Rational& delta) {
    auto types = profile.types();
    for (auto& t : types) {
        if (t.approvals.size() == 1 && t.approvals.front() == party) {
            t.weight += delta;
            return Profile(std::move(types));
        }
    }
    types.push_back({delta, {party}});
    return Profile(std::move(types));
}

inline int party_seats(const Profile& profile, const CandidateId& party, int seats) {
    auto r = run_election(profile, MethodConfig{Method::var_phragmen, Mode::party, seats, Backend::exact});
    auto it = r.seat_counts.find(party);
    return it == r.seat_counts.end() ? 0 : it->second;
}

/// Variance-rule party-mode seats of `party` before and after a change of profile.
inline MonotonicityReport compare_party_seats(const Profile& base, const Profile& augmented,
                                              const CandidateId& party, int seats, Rational delta = 0) {
    MonotonicityReport r{base, augmented, party, std::move(delta), seats, 0, 0, false};
    r.seats_before = party_seats(base, party, seats);
    r.seats_after = party_seats(augmented, party, seats);
    r.violated = r.seats_after < r.seats_before;
    return r;
}

inline MonotonicityReport monotonicity_probe(const Profile& profile, const CandidateId& party, int seats,
                                             const Rational& delta) {
    if (!profile.has_candidate(party)) throw ElectionError("unknown party '" + party.str() + "'");
    if (delta <= 0) throw ElectionError("delta must be positive");
    return compare_party_seats(profile, add_exclusive_support(profile, party, delta), party, seats, delta);
}

// ---------------------------------------------------------------------------
// Seat-share sweep

/// A profile whose type weights are affine in a parameter α:
/// weight_k(α) = constant_k + slope_k · α. Types whose weight vanishes at a
/// given α are omitted from that profile.
struct AffineFamily {
    struct Term {
        Rational constant;
        Rational slope;
        std::vector<CandidateId> approvals;
    };
    std::vector<Term> terms;

    Profile operator()(const Rational& alpha) const {
        std::vector<VoterType> types;
        for (const auto& t : terms) {
            Rational w = t.constant + t.slope * alpha;
            if (w < 0) throw ElectionError("family weight negative at alpha=" + alpha.str());
            if (w > 0) types.push_back({std::move(w), t.approvals});
        }
        return Profile(std::move(types));
    }
};

using ProfileFamily = std::function<Profile(const Rational&)>;

/// Stand-in two-party family: mass ζ approves both parties, the remaining
/// 1 − ζ splits α : (1 − α) between {A} and {B}.
inline AffineFamily two_party_family(const Rational& zeta) {
    if (zeta < 0 || zeta >= 1) throw ElectionError("zeta must lie in [0, 1)");
    const Rational rest = 1 - zeta;
    const CandidateId a("A"), b("B");
    return AffineFamily{{{Rational(0), rest, {a}}, {rest, Rational(-rest), {b}}, {zeta, Rational(0), {a, b}}}};
}

/// `steps + 1` evenly spaced points from `from` to `to` inclusive.
inline std::vector<Rational> alpha_grid(const Rational& from, const Rational& to, int steps) {
    if (steps < 1) throw ElectionError("alpha grid needs at least one step");
    std::vector<Rational> out;
    for (int i = 0; i <= steps; ++i) out.push_back(from + (to - from) * Rational(i, steps));
    return out;
}

struct SweepResult {
    std::vector<std::pair<Rational, Rational>> points; // (alpha, seat share of the tracked party)
    int seats = 0;
    std::optional<Rational> zeta;
};

inline SweepResult sweep_seat_share(const ProfileFamily& family, const std::vector<Rational>& alphas, int seats,
                                    Backend backend, const CandidateId& party = CandidateId("A")) {
    if (seats < 1) throw ElectionError("seats must be at least 1");
    SweepResult out;
    out.seats = seats;
    const MethodConfig config{Method::var_phragmen, Mode::party, seats, backend};
    for (const auto& alpha : alphas) {
        if (alpha < 0 || alpha > 1) throw ElectionError("alpha outside [0, 1]: " + alpha.str());
        const Profile profile = family(alpha);
        int won = 0;
        if (profile.has_candidate(party)) {
            won = backend == Backend::exact ? run_election(profile, config).seat_counts.at(party)
                                            : run_election(profile.convert<double>(), config).seat_counts.at(party);
        }
        out.points.emplace_back(alpha, Rational(won, seats));
    }
    return out;
}

inline SweepResult sweep_two_party(const Rational& zeta, const std::vector<Rational>& alphas, int seats,
                                   Backend backend) {
    auto r = sweep_seat_share(two_party_family(zeta), alphas, seats, backend);
    r.zeta = zeta;
    return r;
}

// ---------------------------------------------------------------------------
// Oracle agreement

struct OracleCaps {
    std::size_t max_types = 8;
    std::size_t max_candidates = 6;
    int max_seats = 8;
};

struct OracleReport {
    int trials = 0;
    long comparisons = 0;
    long agreements = 0;
    long corrected = 0; // comparisons where clamping was needed
    std::vector<Counterexample> disagreements;

    bool all_agree() const { return agreements == comparisons; }
};

/// Runs a variance-rule election and, before every seat, checks every
/// eligible candidate's subproblem against both exact oracles.
inline void compare_oracles_along(const Profile& profile, const MethodConfig& config, OracleReport& report) {
    validate_config(profile, config);
    std::set<CandidateId> eligible(profile.candidates().begin(), profile.candidates().end());
    auto loads = LoadVector::zero(profile);
    for (int seat = 1; seat <= config.seats; ++seat) {
        for (const auto& c : eligible) {
            auto outcome = evaluate_oracles(profile, loads, c);
            ++report.comparisons;
            if (corrected_solution(SubproblemInput<Rational>{profile, loads, c}).corrected) ++report.corrected;
            if (outcome.consistent)
                ++report.agreements;
            else
                report.disagreements.push_back({FindingKind::oracle_disagreement, profile, config, loads, c,
                                                std::move(outcome.trace)});
        }
        auto sel = select_winner(profile, loads, eligible, config.method);
        for (std::size_t k = 0; k < loads.r.size(); ++k) loads.r[k] += sel.solution.x[k];
        loads.seats_assigned = seat;
        if (config.mode == Mode::candidate) eligible.erase(sel.solution.candidate);
    }
}

/// Random approval profile within `caps`, candidate or party mode with equal
/// probability, 1..max_seats seats (at most one per candidate in candidate mode).
inline ElectionInstance random_oracle_instance(std::mt19937_64& rng, const OracleCaps& caps) {
    Profile profile = random_profile(rng, GeneratorCaps{caps.max_types, caps.max_candidates, 100});
    const Mode mode = std::bernoulli_distribution(0.5)(rng) ? Mode::party : Mode::candidate;
    int seats = std::uniform_int_distribution<int>(1, caps.max_seats)(rng);
    if (mode == Mode::candidate) seats = std::min<int>(seats, static_cast<int>(profile.candidates().size()));
    return {std::move(profile), MethodConfig{Method::var_phragmen, mode, seats, Backend::exact}};
}

inline OracleReport oracle_agreement_on(const Profile& profile, const MethodConfig& config) {
    OracleReport report;
    report.trials = 1;
    compare_oracles_along(profile, config, report);
    return report;
}

inline OracleReport oracle_agreement_campaign(std::uint64_t seed, int trials, const OracleCaps& caps = {}) {
    if (caps.max_types > 8 || caps.max_candidates > 6 || caps.max_seats > 8)
        throw ElectionError("oracle campaign caps are limited to 8 types, 6 candidates, 8 seats");
    if (caps.max_types < 1 || caps.max_candidates < 1 || caps.max_seats < 1)
        throw ElectionError("oracle campaign caps must be positive");
    if (trials < 1) throw ElectionError("trials must be at least 1");

    std::mt19937_64 rng(seed);
    OracleReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const auto [profile, config] = random_oracle_instance(rng, caps);
        compare_oracles_along(profile, config, report);
    }
    return report;
}

} // namespace varphragmen

#endif // VARPHRAGMEN_ANALYSIS_HPP
