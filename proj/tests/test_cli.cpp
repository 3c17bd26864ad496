#include <sstream>

#include <gtest/gtest.h>

#include "qrr/cli.hpp"
#include "qrr/text.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = qrr::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExpandExample) {
    const auto r = run({"expand", "--family", "A", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 + q + q^2 + q^4\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ExpandJson) {
    const auto r = run({"expand", "--family", "B", "--n", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"terms\":[[0,\"1\"],[1,\"1\"],[2,\"1\"],[4,\"1\"]]}\n");
}

TEST(Cli, VerifyBressoud1) {
    const auto r = run({"verify", "--identity", "bressoud1", "--n-max", "40"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyEveryIdentity) {
    for (const char* id : {"bressoud2", "santos-s", "santos-t", "u"}) {
        EXPECT_EQ(run({"verify", "--identity", id, "--n-max", "15"}).code, 0) << id;
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"expand", "--family", "X", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"expand", "--family", "A"}).code, 2);
    EXPECT_EQ(run({"expand", "--family", "A", "--n", "-1"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"expand", "--family", "A", "--n", "2", "--bogus"}).code, 2);
    EXPECT_EQ(run({"limit", "--family", "S", "--n-max", "3"}).code, 2);
    EXPECT_EQ(run({"verify", "--identity", "bressoud3", "--n-max", "3"}).code, 2);
    EXPECT_EQ(run({"guess", "--family", "B", "--order", "2", "--deg-t", "2", "--deg-q", "3", "--fit", "0-14",
                   "--confirm", "15..18"})
                  .code,
              2);
    // A well-formed command whose windows are too small for the ansatz.
    const auto r = run({"guess", "--family", "B", "--order", "2", "--deg-t", "2", "--deg-q", "3", "--fit", "0..0",
                        "--confirm", "1..2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, FailedCheckPrintsWitness) {
    const auto r = run({"verify-recurrence", "--key", "bressoud1", "--family", "C", "--n-max", "10"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("family C"), std::string::npos);
    EXPECT_NE(r.out.find("n: "), std::string::npos);
    EXPECT_NE(r.out.find("residual: "), std::string::npos);

    const auto j = run({"verify-recurrence", "--key", "bressoud1", "--family", "C", "--n-max", "10", "--format",
                        "json"});
    EXPECT_EQ(j.code, 1);
    const auto reports = qrr::Json::parse(j.out);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_EQ(reports[0]["status"], "fail");
    EXPECT_FALSE(qrr::qpoly_from_json(reports[0]["witness"]["residual"]).is_zero());
}

TEST(Cli, JsonRoundTripsByteIdentical) {
    const std::vector<std::vector<std::string>> commands = {
        {"verify", "--identity", "santos-t", "--n-max", "12", "--format", "json"},
        {"verify-recurrence", "--key", "santos", "--family", "A", "--n-max", "6", "--format", "json"},
        {"limit", "--family", "D", "--n-max", "10", "--format", "json"},
        {"guess", "--family", "S", "--order", "2", "--deg-t", "2", "--deg-q", "2", "--fit", "0..14", "--confirm",
         "15..18", "--format", "json"},
    };
    for (const auto& cmd : commands) {
        const auto r = run(cmd);
        ASSERT_LE(r.code, 1) << r.err;
        const auto parsed = qrr::Json::parse(r.out);
        EXPECT_EQ(parsed.dump(2) + "\n", r.out);
        if (cmd[0] != "guess") {
            for (const auto& rep : parsed) {
                EXPECT_EQ(qrr::to_json(qrr::report_from_json(rep)).dump(), rep.dump());
            }
        }
    }
}

TEST(Cli, GuessText) {
    const auto r = run({"guess", "--family", "B", "--order", "2", "--deg-t", "2", "--deg-q", "3", "--fit", "0..14",
                        "--confirm", "15..18"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "(q - q^2*t)*P[n] + (-1 - q + q^2*t - q^3*t^2)*P[n+1] + (1)*P[n+2] = 0\n");
    const auto none = run({"guess", "--family", "B", "--order", "1", "--deg-t", "1", "--deg-q", "1", "--fit",
                           "0..14", "--confirm", "15..18"});
    EXPECT_EQ(none.code, 0);
    EXPECT_EQ(none.out, "no recurrence within the ansatz\n");
}

TEST(Cli, LimitAndDeterminism) {
    const auto a = run({"limit", "--family", "A", "--n-max", "20"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, run({"limit", "--family", "A", "--n-max", "20"}).out);
    const auto timed = run({"--timing", "limit", "--family", "A", "--n-max", "20"});
    EXPECT_EQ(timed.out, a.out);
    EXPECT_NE(timed.err.find("elapsed"), std::string::npos);
}
