#include "varphragmen/render.hpp"

#include <gtest/gtest.h>

using namespace varphragmen;

namespace {

const Profile& profile12() {
    static const Profile p = parse_profile("9: a1, a2\n1: a1, a2, b\n3: b, c");
    return p;
}

ElectionResult profile12_run() {
    return run_election(profile12(), MethodConfig{Method::var_phragmen, Mode::candidate, 3});
}

} // namespace

TEST(TraceTable, CorrectedLayout) {
    EXPECT_EQ(render_trace_table(profile12(), profile12_run(), 4),
              "Seat #\ti\t9 : a1, a2\t1 : a1, a2, b\t3 : b, c\n"
              "1\ta1\t0.1000\t0.1000\t0.0000\n"
              "2\tb\t0.0000\t0.1750\t0.2750\n"
              "3\ta2\t0.1111\t0.0000\t0.0000\t[corrected]\n");
}

TEST(TraceTable, UncorrectedShowsNegativeShare) {
    EXPECT_EQ(render_trace_table(profile12(), profile12_run(), 4, true),
              "Seat #\ti\t9 : a1, a2\t1 : a1, a2, b\t3 : b, c\n"
              "1\ta1\t0.1000\t0.1000\t0.0000\n"
              "2\tb\t0.0000\t0.1750\t0.2750\n"
              "3\ta2\t0.1175\t-0.0575\t0.0000\t[negative]\n");
}

TEST(Csv, HeaderAndRows) {
    const auto csv = render_csv(profile12(), profile12_run(), 4);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "seat,winner,x1,x2,x3,level,score,corrected");
    EXPECT_NE(csv.find("3,a2,0.1111,0.0000,0.0000,0.2111,0.3111,true"), std::string::npos);
}

TEST(Json, SchemaAndExactValues) {
    const auto j = to_json(profile12(), profile12_run(), 4);
    EXPECT_EQ(j["method"], "var-phragmen");
    EXPECT_EQ(j["mode"], "candidate");
    EXPECT_EQ(j["seats"], 3);
    ASSERT_EQ(j["records"].size(), 3u);
    const auto& r3 = j["records"][2];
    EXPECT_EQ(r3["seat"], 3);
    EXPECT_EQ(r3["winner"], "a2");
    EXPECT_EQ(r3["x"], nlohmann::json({"1/9", "0", "0"}));
    EXPECT_EQ(r3["level"], "19/90");
    EXPECT_EQ(r3["score"], "14/45");
    EXPECT_EQ(r3["corrected"], true);
    EXPECT_EQ(j["records"][0]["tied"], nlohmann::json({"a2"}));
    EXPECT_EQ(j["counts"]["a1"], 1);
    EXPECT_EQ(j["counts"]["c"], 0);
}

TEST(Json, EmbeddedProfileReproducesResult) {
    const auto j = to_json(profile12(), profile12_run(), 4);
    const Profile again = parse_profile(j["profile"].get<std::string>());
    const auto rerun = run_election(again, MethodConfig{Method::var_phragmen, Mode::candidate, 3});
    EXPECT_EQ(to_json(again, rerun, 4), j);
}

TEST(Sweep, CsvHeader) {
    SweepResult s{{{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1, 2)}}, 2, Rational(0)};
    EXPECT_EQ(render_sweep_csv(s, 4), "alpha,share\n0.0000,0.0000\n0.5000,0.5000\n");
}
