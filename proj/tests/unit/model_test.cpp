#include "varphragmen/analysis.hpp"
#include "varphragmen/model.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace varphragmen;

namespace {

const char* kProfile12 = "9: a1, a2\n1: a1, a2, b\n3: b, c";
const char* kProfile13 = "4: A\n1: B\n3: C\n9: A, B\n3: B, C";

std::vector<std::string> names(const std::vector<CandidateId>& ids) {
    std::vector<std::string> out;
    for (const auto& c : ids) out.push_back(c.str());
    return out;
}

} // namespace

TEST(ParseProfile, Profile12WithOverlap) {
    const Profile p = parse_profile(kProfile12);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(names(p.candidates()), (std::vector<std::string>{"a1", "a2", "b", "c"}));
    EXPECT_EQ(p.total_weight(), Rational(13));
    EXPECT_EQ(p[1].weight, Rational(1));
    EXPECT_EQ(names(p[1].approvals), (std::vector<std::string>{"a1", "a2", "b"}));
}

TEST(ParseProfile, Profile13PartyProfile) {
    const Profile p = parse_profile(kProfile13);
    EXPECT_EQ(p.size(), 5u);
    EXPECT_EQ(p.total_weight(), Rational(20));
    EXPECT_EQ(names(p.candidates()), (std::vector<std::string>{"A", "B", "C"}));
}

TEST(ParseProfile, CommentsBlankLinesAndSeparators) {
    const Profile p = parse_profile("# header\n\n  3/2 : x y,z   # trailing\n\t2:x\r\n");
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0].weight, Rational(3, 2));
    EXPECT_EQ(names(p[0].approvals), (std::vector<std::string>{"x", "y", "z"}));
    EXPECT_EQ(p.total_weight(), Rational(7, 2));
}

TEST(ParseProfile, DuplicateApprovalSetsAreKept) {
    const Profile p = parse_profile("2: A\n3: A\n");
    EXPECT_EQ(p.size(), 2u);
    const Profile m = p.merged();
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0].weight, Rational(5));
}

TEST(ParseProfile, Errors) {
    EXPECT_THROW(parse_profile(""), ProfileError);
    EXPECT_THROW(parse_profile("# only a comment\n"), ProfileError);
    EXPECT_THROW(parse_profile("0: A"), ProfileError);
    EXPECT_THROW(parse_profile("-1: A"), ProfileError);
    EXPECT_THROW(parse_profile("3:"), ProfileError);
    EXPECT_THROW(parse_profile("3: , ,"), ProfileError);
    EXPECT_THROW(parse_profile("3 A B"), ProfileError);
    EXPECT_THROW(parse_profile("x: A"), ProfileError);
    EXPECT_THROW(parse_profile("1/0: A"), ProfileError);
    EXPECT_THROW(parse_profile("1: A, A"), ProfileError);
    EXPECT_THROW(parse_profile("1: A, B!"), ProfileError);
}

TEST(ParseProfile, ErrorCarriesLineNumber) {
    try {
        parse_profile("1: A\n# c\n2: B, B\n");
        FAIL() << "expected ProfileError";
    } catch (const ProfileError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(ParseProfile, NamesAreCaseSensitive) {
    const Profile p = parse_profile("1: a, A");
    EXPECT_EQ(p.candidates().size(), 2u);
}

TEST(Supporters, Profile13Examples) {
    const Profile p12 = parse_profile(kProfile12);
    auto a1 = supporters(p12, CandidateId("a1"));
    EXPECT_EQ(a1.types, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(a1.weight, Rational(10));
    auto c = supporters(p12, CandidateId("c"));
    EXPECT_EQ(c.types, (std::vector<std::size_t>{2}));
    EXPECT_EQ(c.weight, Rational(3));

    const Profile p13 = parse_profile(kProfile13);
    auto b = supporters(p13, CandidateId("B"));
    EXPECT_EQ(b.types, (std::vector<std::size_t>{1, 3, 4}));
    EXPECT_EQ(b.weight, Rational(13));

    EXPECT_THROW(supporters(p12, CandidateId("z")), ElectionError);
}

TEST(Profile, ClosedListDetection) {
    EXPECT_TRUE(parse_profile("2: A\n3: B").is_closed_list());
    EXPECT_FALSE(parse_profile(kProfile13).is_closed_list());
}

TEST(Profile, ConvertToDouble) {
    const auto d = parse_profile("1/4: A\n3: A, B").convert<double>();
    EXPECT_DOUBLE_EQ(d.total_weight(), 3.25);
    EXPECT_EQ(d.candidates().size(), 2u);
}

// Property: rendering a parsed profile reparses to the same profile, and
// Σ_i w_i = Σ_k u_k |approvals(k)|.
TEST(ProfileProperties, RoundTripAndSupportSum) {
    std::mt19937_64 rng(2016);
    std::uniform_int_distribution<int> den(1, 9), sep(0, 2);
    const char* seps[] = {", ", " ", ",\t"};
    for (int trial = 0; trial < 300; ++trial) {
        const Profile base = random_profile(rng);
        std::string text = "# generated\n";
        for (const auto& t : base.types()) {
            text += t.weight.str() + "/" + std::to_string(den(rng)) + " :";
            for (const auto& c : t.approvals) text += seps[sep(rng)] + c.str();
            text += "\n";
        }
        const Profile p = parse_profile(text);
        const Profile again = parse_profile(render_profile(p));
        ASSERT_EQ(p, again) << text;
        ASSERT_EQ(p.candidates(), again.candidates());

        Rational lhs(0), rhs(0);
        for (const auto& c : p.candidates()) lhs += supporters(p, c).weight;
        for (const auto& t : p.types()) rhs += t.weight * static_cast<int>(t.approvals.size());
        ASSERT_EQ(lhs, rhs);

        ASSERT_EQ(parse_profile(text), p); // deterministic
    }
}
