#ifndef VARPHRAGMEN_RENDER_HPP
#define VARPHRAGMEN_RENDER_HPP

// Text renderings of election results and sweeps. Values stay exact
// internally; decimals are produced by format_decimal (half-to-even).

#include "varphragmen/analysis.hpp"
#include "varphragmen/engine.hpp"
#include "varphragmen/model.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace varphragmen {

enum class OutputKind { table, csv, json };

struct OutputFormat {
    OutputKind kind = OutputKind::table;
    int decimals = 4;
};

namespace detail {

template <class T>
bool any_negative(const std::vector<T>& xs) {
    for (const auto& v : xs)
        if (scalar_traits<T>::is_negative(v)) return true;
    return false;
}

template <class T>
void trace_rows(std::ostringstream& os, const BasicElectionResult<T>& result, int decimals, bool uncorrected) {
    for (const auto& rec : result.records) {
        const auto& xs = uncorrected ? rec.solution.unconstrained_x : rec.solution.x;
        os << rec.seat_index << '\t' << rec.solution.candidate.str();
        for (const auto& v : xs) os << '\t' << format_decimal(v, decimals);
        if (uncorrected && any_negative(xs)) os << "\t[negative]";
        if (!uncorrected && rec.solution.corrected) os << "\t[corrected]";
        os << '\n';
    }
}

} // namespace detail

/// Tab-separated per-seat table: seat number, winner, the share of the seat
/// given to each voter type. With `uncorrected`, the shares are the ones
/// before clamping and rows containing a negative share are flagged.
template <class T>
std::string render_trace_table(const Profile& profile, const BasicElectionResult<T>& result, int decimals,
                               bool uncorrected = false) {
    std::ostringstream os;
    os << "Seat #\ti";
    for (const auto& t : profile.types()) os << '\t' << render_type(t);
    os << '\n';
    detail::trace_rows(os, result, decimals, uncorrected);
    return os.str();
}

template <class T>
std::string render_counts_table(const BasicElectionResult<T>& result) {
    std::ostringstream os;
    os << "winners:";
    for (const auto& c : result.winners()) os << ' ' << c.str();
    os << '\n';
    for (const auto& [c, n] : result.seat_counts) os << c.str() << '\t' << n << '\n';
    return os.str();
}

template <class T>
std::string render_csv(const Profile& profile, const BasicElectionResult<T>& result, int decimals) {
    std::ostringstream os;
    os << "seat,winner";
    for (std::size_t k = 0; k < profile.size(); ++k) os << ",x" << (k + 1);
    os << ",level,score,corrected\n";
    for (const auto& rec : result.records) {
        os << rec.seat_index << ',' << rec.solution.candidate.str();
        for (const auto& v : rec.solution.x) os << ',' << format_decimal(v, decimals);
        os << ',' << format_decimal(rec.solution.level, decimals) << ','
           << format_decimal(rec.solution.score2phi, decimals) << ','
           << (rec.solution.corrected ? "true" : "false") << '\n';
    }
    return os.str();
}

template <class T>
nlohmann::json to_json(const Profile& profile, const BasicElectionResult<T>& result, int decimals,
                       Backend backend = Backend::exact) {
    using traits = scalar_traits<T>;
    nlohmann::json j;
    j["method"] = std::string(to_string(result.method));
    j["mode"] = std::string(to_string(result.mode));
    j["seats"] = result.records.size();
    j["backend"] = backend == Backend::exact ? "exact" : "float64";
    j["profile"] = render_profile(profile);
    j["records"] = nlohmann::json::array();
    for (const auto& rec : result.records) {
        nlohmann::json r;
        r["seat"] = rec.seat_index;
        r["winner"] = rec.solution.candidate.str();
        r["x"] = nlohmann::json::array();
        r["x_decimal"] = nlohmann::json::array();
        for (const auto& v : rec.solution.x) {
            r["x"].push_back(traits::exact_string(v));
            r["x_decimal"].push_back(format_decimal(v, decimals));
        }
        r["level"] = traits::exact_string(rec.solution.level);
        r["level_decimal"] = format_decimal(rec.solution.level, decimals);
        r["score"] = traits::exact_string(rec.solution.score2phi);
        r["score_decimal"] = format_decimal(rec.solution.score2phi, decimals);
        r["variance"] = traits::exact_string(rec.variance_after);
        r["corrected"] = rec.solution.corrected;
        r["clamp_rounds"] = rec.solution.clamp_rounds;
        r["tied"] = nlohmann::json::array();
        for (const auto& c : rec.tied_with) r["tied"].push_back(c.str());
        j["records"].push_back(std::move(r));
    }
    j["counts"] = nlohmann::json::object();
    for (const auto& [c, n] : result.seat_counts) j["counts"][c.str()] = n;
    return j;
}

inline std::string render_sweep_csv(const SweepResult& sweep, int decimals) {
    std::ostringstream os;
    os << "alpha,share\n";
    for (const auto& [alpha, share] : sweep.points)
        os << format_decimal(alpha, decimals) << ',' << format_decimal(share, decimals) << '\n';
    return os.str();
}

inline std::string render_probe(const MonotonicityReport& r) {
    std::ostringstream os;
    os << r.party.str() << ": " << r.seats_before << " → " << r.seats_after << ' '
       << (r.violated ? "VIOLATED" : "OK") << '\n';
    return os.str();
}

} // namespace varphragmen

#endif // VARPHRAGMEN_RENDER_HPP
