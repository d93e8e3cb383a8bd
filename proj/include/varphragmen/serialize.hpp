#ifndef VARPHRAGMEN_SERIALIZE_HPP
#define VARPHRAGMEN_SERIALIZE_HPP

// Counterexample files: `<stem>.profile` in the profile text format plus a
// `<stem>.json` sidecar that is self-contained (it embeds the profile too).

#include "varphragmen/analysis.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace varphragmen {

inline std::string_view to_string(FindingKind k) {
    return k == FindingKind::closed_list_mismatch ? "closed-list-mismatch" : "oracle-disagreement";
}

inline Method parse_method(std::string_view s) {
    for (Method m : {Method::var_phragmen, Method::seq_phragmen, Method::sainte_lague, Method::dhondt})
        if (to_string(m) == s) return m;
    throw ProfileError("unknown method '" + std::string(s) + "'");
}

inline Mode parse_mode(std::string_view s) {
    if (s == "candidate") return Mode::candidate;
    if (s == "party") return Mode::party;
    throw ProfileError("unknown mode '" + std::string(s) + "'");
}

inline nlohmann::json to_json(const Counterexample& ce) {
    nlohmann::json j;
    j["kind"] = std::string(to_string(ce.kind));
    j["profile"] = render_profile(ce.profile);
    j["method"] = std::string(to_string(ce.config.method));
    j["mode"] = std::string(to_string(ce.config.mode));
    j["seats"] = ce.config.seats;
    j["loads"] = nlohmann::json::array();
    for (const auto& r : ce.loads.r) j["loads"].push_back(r.str());
    j["seats_assigned"] = ce.loads.seats_assigned;
    if (ce.candidate) j["candidate"] = ce.candidate->str();
    j["trace"] = ce.trace;
    return j;
}

inline Counterexample counterexample_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    Counterexample ce{kind == "closed-list-mismatch" ? FindingKind::closed_list_mismatch
                                                     : FindingKind::oracle_disagreement,
                      parse_profile(j.at("profile").get<std::string>()),
                      MethodConfig{parse_method(j.at("method").get<std::string>()),
                                   parse_mode(j.at("mode").get<std::string>()), j.at("seats").get<int>(),
                                   Backend::exact},
                      LoadVector{},
                      std::nullopt,
                      j.at("trace").get<std::vector<std::string>>()};
    for (const auto& s : j.at("loads")) {
        auto v = parse_fraction(s.get<std::string>());
        if (!v) throw ProfileError("malformed load '" + s.get<std::string>() + "'");
        ce.loads.r.push_back(*v);
    }
    ce.loads.seats_assigned = j.at("seats_assigned").get<int>();
    if (j.contains("candidate")) ce.candidate = CandidateId(j.at("candidate").get<std::string>());
    return ce;
}

/// Writes `<dir>/<stem>.profile` and `<dir>/<stem>.json`; returns the JSON path.
inline std::filesystem::path write_counterexample(const std::filesystem::path& dir, const std::string& stem,
                                                  const Counterexample& ce) {
    std::filesystem::create_directories(dir);
    std::ofstream(dir / (stem + ".profile")) << render_profile(ce.profile);
    const auto json_path = dir / (stem + ".json");
    std::ofstream(json_path) << to_json(ce).dump(2) << '\n';
    return json_path;
}

inline Counterexample read_counterexample(const std::filesystem::path& json_path) {
    std::ifstream in(json_path);
    if (!in) throw ProfileError("cannot open " + json_path.string());
    return counterexample_from_json(nlohmann::json::parse(in));
}

} // namespace varphragmen

#endif // VARPHRAGMEN_SERIALIZE_HPP
