#ifndef VARPHRAGMEN_MODEL_HPP
#define VARPHRAGMEN_MODEL_HPP

#include "varphragmen/number.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace varphragmen {

/// Malformed profile text. Carries the 1-based line number when known.
class ProfileError : public std::runtime_error {
public:
    explicit ProfileError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A well-formed request that cannot be carried out: unknown candidate,
/// infeasible seat count, wrong profile shape for a method.
class ElectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CandidateId {
public:
    explicit CandidateId(std::string name) : name_(std::move(name)) {
        if (!valid(name_)) throw ProfileError("invalid candidate name '" + name_ + "'");
    }

    const std::string& str() const noexcept { return name_; }

    static bool valid(std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                            (c >= '0' && c <= '9') || c == '_' || c == '-';
            if (!ok) return false;
        }
        return true;
    }

    friend auto operator<=>(const CandidateId&, const CandidateId&) = default;

private:
    std::string name_;
};

inline std::ostream& operator<<(std::ostream& os, const CandidateId& c) { return os << c.str(); }

template <class T>
struct BasicVoterType {
    T weight;
    std::vector<CandidateId> approvals; // input order, no duplicates

    bool approves(const CandidateId& c) const {
        return std::find(approvals.begin(), approvals.end(), c) != approvals.end();
    }

    std::set<CandidateId> approval_set() const {
        return {approvals.begin(), approvals.end()};
    }

    friend bool operator==(const BasicVoterType&, const BasicVoterType&) = default;
};

/// Weighted voter types over a candidate set. Immutable once built.
template <class T>
class BasicProfile {
public:
    using voter_type = BasicVoterType<T>;

    explicit BasicProfile(std::vector<voter_type> types) : types_(std::move(types)) {
        if (types_.empty()) throw ProfileError("no voter types");
        total_weight_ = T(0);
        for (std::size_t k = 0; k < types_.size(); ++k) {
            const auto& t = types_[k];
            if (!(t.weight > T(0)))
                throw ProfileError("voter type " + std::to_string(k + 1) + " has nonpositive weight");
            if (t.approvals.empty())
                throw ProfileError("voter type " + std::to_string(k + 1) + " has no approvals");
            if (t.approval_set().size() != t.approvals.size())
                throw ProfileError("voter type " + std::to_string(k + 1) + " repeats a candidate");
            total_weight_ += t.weight;
            for (const auto& c : t.approvals)
                if (std::find(candidates_.begin(), candidates_.end(), c) == candidates_.end())
                    candidates_.push_back(c);
        }
    }

    const std::vector<voter_type>& types() const noexcept { return types_; }
    std::size_t size() const noexcept { return types_.size(); }
    const voter_type& operator[](std::size_t k) const { return types_[k]; }
    const std::vector<CandidateId>& candidates() const noexcept { return candidates_; }
    const T& total_weight() const noexcept { return total_weight_; }

    bool has_candidate(const CandidateId& c) const {
        return std::find(candidates_.begin(), candidates_.end(), c) != candidates_.end();
    }

    /// True when every approval set is a singleton (a closed party list).
    bool is_closed_list() const {
        return std::all_of(types_.begin(), types_.end(),
                           [](const voter_type& t) { return t.approvals.size() == 1; });
    }

    template <class U>
    BasicProfile<U> convert() const {
        std::vector<BasicVoterType<U>> out;
        out.reserve(types_.size());
        for (const auto& t : types_) {
            if constexpr (std::is_same_v<T, Rational>)
                out.push_back({scalar_traits<U>::from_rational(t.weight), t.approvals});
            else
                out.push_back({static_cast<U>(t.weight), t.approvals});
        }
        return BasicProfile<U>(std::move(out));
    }

    /// Every weight multiplied by `factor` (> 0).
    BasicProfile scaled(const T& factor) const {
        auto out = types_;
        for (auto& t : out) t.weight *= factor;
        return BasicProfile(std::move(out));
    }

    /// Types with equal approval sets merged into the first occurrence.
    BasicProfile merged() const {
        std::vector<voter_type> out;
        std::vector<std::set<CandidateId>> seen;
        for (const auto& t : types_) {
            auto s = t.approval_set();
            auto it = std::find(seen.begin(), seen.end(), s);
            if (it == seen.end()) {
                seen.push_back(std::move(s));
                out.push_back(t);
            } else {
                out[static_cast<std::size_t>(it - seen.begin())].weight += t.weight;
            }
        }
        return BasicProfile(std::move(out));
    }

    friend bool operator==(const BasicProfile& a, const BasicProfile& b) {
        return a.types_ == b.types_;
    }

private:
    std::vector<voter_type> types_;
    std::vector<CandidateId> candidates_;
    T total_weight_{};
};

using VoterType = BasicVoterType<Rational>;
using Profile = BasicProfile<Rational>;

/// Type indices approving a candidate and their total weight w_i.
template <class T>
struct Support {
    std::vector<std::size_t> types;
    T weight{};
};

template <class T>
Support<T> supporters(const BasicProfile<T>& profile, const CandidateId& c) {
    if (!profile.has_candidate(c)) throw ElectionError("unknown candidate '" + c.str() + "'");
    Support<T> s;
    s.weight = T(0);
    for (std::size_t k = 0; k < profile.size(); ++k) {
        if (profile[k].approves(c)) {
            s.types.push_back(k);
            s.weight += profile[k].weight;
        }
    }
    return s;
}

/// Per-type representation r_k after `seats_assigned` seats.
template <class T>
struct BasicLoadVector {
    std::vector<T> r;
    int seats_assigned = 0;

    static BasicLoadVector zero(std::size_t types) {
        return {std::vector<T>(types, T(0)), 0};
    }

    template <class P>
    static BasicLoadVector zero(const BasicProfile<P>& profile) {
        return zero(profile.size());
    }

    /// Σ_k u_k r_k, which equals seats_assigned for consistent loads.
    T mass(const BasicProfile<T>& profile) const {
        T m(0);
        for (std::size_t k = 0; k < r.size(); ++k) m += profile[k].weight * r[k];
        return m;
    }

    friend bool operator==(const BasicLoadVector&, const BasicLoadVector&) = default;
};

using LoadVector = BasicLoadVector<Rational>;

enum class Method { var_phragmen, seq_phragmen, sainte_lague, dhondt };
enum class Mode { candidate, party };

inline std::string_view to_string(Method m) {
    switch (m) {
    case Method::var_phragmen: return "var-phragmen";
    case Method::seq_phragmen: return "seq-phragmen";
    case Method::sainte_lague: return "sainte-lague";
    case Method::dhondt: return "dhondt";
    }
    return "?";
}

inline std::string_view to_string(Mode m) {
    return m == Mode::candidate ? "candidate" : "party";
}

/// One candidate's distribution of a new seat over voter types.
template <class T>
struct BasicStepSolution {
    CandidateId candidate;
    std::vector<T> x;
    T level{};
    T score2phi{};
    bool corrected = false;
    std::vector<std::vector<std::size_t>> clamp_rounds;
    // Eq.-(9)-style distribution before any clamping; may hold negatives.
    std::vector<T> unconstrained_x;

    friend bool operator==(const BasicStepSolution&, const BasicStepSolution&) = default;
};

using StepSolution = BasicStepSolution<Rational>;

template <class T>
struct BasicSeatRecord {
    int seat_index = 0; // 1-based
    BasicStepSolution<T> solution;
    BasicLoadVector<T> loads_after;
    T variance_after{};
    std::vector<CandidateId> tied_with;

    friend bool operator==(const BasicSeatRecord&, const BasicSeatRecord&) = default;
};

template <class T>
struct BasicElectionResult {
    Method method = Method::var_phragmen;
    Mode mode = Mode::candidate;
    std::vector<BasicSeatRecord<T>> records;
    std::map<CandidateId, int> seat_counts;

    std::vector<CandidateId> winners() const {
        std::vector<CandidateId> w;
        for (const auto& r : records) w.push_back(r.solution.candidate);
        return w;
    }

    friend bool operator==(const BasicElectionResult&, const BasicElectionResult&) = default;
};

using SeatRecord = BasicSeatRecord<Rational>;
using ElectionResult = BasicElectionResult<Rational>;

namespace detail {

inline bool is_separator(char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r';
}

} // namespace detail

/// Parses the `W : c1, c2, ...` profile format. `#` starts a comment, blank
/// lines are skipped, W is an integer or `p/q`.
inline Profile parse_profile(std::string_view text) {
    std::vector<VoterType> types;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ProfileError("expected '<weight> : <names>'", line_no);
        auto weight = parse_fraction(line.substr(0, colon));
        if (!weight) throw ProfileError("malformed weight", line_no);
        if (*weight <= 0) throw ProfileError("nonpositive weight", line_no);

        VoterType t{*weight, {}};
        std::string_view rest = line.substr(colon + 1);
        std::size_t i = 0;
        while (i < rest.size()) {
            while (i < rest.size() && detail::is_separator(rest[i])) ++i;
            std::size_t j = i;
            while (j < rest.size() && !detail::is_separator(rest[j])) ++j;
            if (j > i) {
                std::string_view name = rest.substr(i, j - i);
                if (!CandidateId::valid(name))
                    throw ProfileError("invalid candidate name '" + std::string(name) + "'", line_no);
                CandidateId c{std::string(name)};
                if (t.approves(c)) throw ProfileError("duplicate candidate '" + c.str() + "'", line_no);
                t.approvals.push_back(std::move(c));
            }
            i = j;
        }
        if (t.approvals.empty()) throw ProfileError("empty approval list", line_no);
        types.push_back(std::move(t));
    }
    if (types.empty()) throw ProfileError("no voter types");
    return Profile(std::move(types));
}

/// One line per type in the parseable format, e.g. `9 : a1, a2`.
template <class T>
std::string render_type(const BasicVoterType<T>& t) {
    std::string s = scalar_traits<T>::exact_string(t.weight) + " :";
    for (std::size_t j = 0; j < t.approvals.size(); ++j)
        s += (j ? ", " : " ") + t.approvals[j].str();
    return s;
}

inline std::string render_profile(const Profile& profile) {
    std::string out;
    for (const auto& t : profile.types()) out += render_type(t) + "\n";
    return out;
}

} // namespace varphragmen

#endif // VARPHRAGMEN_MODEL_HPP
