#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "lehmer/cli.hpp"
#include "lehmer/poly_io.hpp"

namespace lehmer::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, Det) {
    const auto r = invoke({"det", "3"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "1 - z - q*z\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DetZeroIsUsageError) {
    const auto r = invoke({"det", "0"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, MalformedInvocations) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate", "3"}).code, kExitUsage);
    EXPECT_EQ(invoke({"det"}).code, kExitUsage);
    EXPECT_EQ(invoke({"det", "three"}).code, kExitUsage);
    EXPECT_EQ(invoke({"det", "-4"}).code, kExitUsage);
    EXPECT_EQ(invoke({"limit", "--zdeg", "2"}).code, kExitUsage);
    EXPECT_EQ(invoke({"stabilize", "5", "3"}).code, kExitUsage);
    EXPECT_EQ(invoke({"lambda", "100001"}).code, kExitUsage);
}

TEST(Cli, Help) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, Verify) {
    const auto r = invoke({"verify", "6"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out,
              "PASS lambda_sum == lambda_rec\n"
              "PASS lu_generic == closed_factors\n"
              "PASS L*U == M\n"
              "PASS prod U[j,j] == lambda(n)\n"
              "PASS det_cofactor == det_closed\n"
              "PASS det_bareiss == det_closed\n");
}

TEST(Cli, VerifyJson) {
    const auto r = invoke({"verify", "4", "--json"});
    EXPECT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("ok").get<bool>());
    EXPECT_EQ(j.at("checks").size(), 6u);
}

TEST(Cli, LambdaAndQbinom) {
    EXPECT_EQ(invoke({"lambda", "0"}).out, "1\n");
    EXPECT_EQ(invoke({"lambda", "4"}).out, "1 - z - q*z - q^2*z + q^2*z^2\n");
    EXPECT_EQ(invoke({"qbinom", "4", "2"}).out, "1 + q + 2*q^2 + q^3 + q^4\n");
    EXPECT_EQ(invoke({"qbinom", "3", "5"}).out, "0\n");
    const auto neg = invoke({"qbinom", "3", "-1"});
    EXPECT_EQ(neg.code, kExitOk);
    EXPECT_EQ(neg.out, "0\n");
}

TEST(Cli, MatrixUsesHalfPowerView) {
    EXPECT_EQ(invoke({"matrix", "1"}).out, "1\n");
    EXPECT_EQ(invoke({"matrix", "3"}).out,
              "# u = q^(1/2), v = z^(1/2)\n"
              "1, v, 0\n"
              "v, 1, v*u\n"
              "0, v*u, 1\n");
}

TEST(Cli, Lu) {
    const std::string expected =
        "# u = q^(1/2), v = z^(1/2)\n"
        "U[1,1] = 1\n"
        "U[1,2] = v\n"
        "L[2,1] = v\n"
        "U[2,2] = 1 - z\n"
        "U[2,3] = v*u\n"
        "L[3,2] = v*u / (1 - z)\n"
        "U[3,3] = (1 - z - q*z) / (1 - z)\n";
    EXPECT_EQ(invoke({"lu", "3"}).out, expected);
    EXPECT_EQ(invoke({"lu", "3", "--generic"}).code, kExitOk);
}

TEST(Cli, LimitStabilizeDyck) {
    EXPECT_EQ(invoke({"limit", "--zdeg", "2", "--qdeg", "4"}).out,
              "z^0: 1\n"
              "z^1: -1 - q - q^2 - q^3 - q^4\n"
              "z^2: q^2 + q^3 + 2*q^4\n");
    EXPECT_EQ(invoke({"stabilize", "6", "1"}).out, "4\n");
    EXPECT_EQ(invoke({"stabilize", "6", "0"}).out, "inf\n");
    EXPECT_EQ(invoke({"dyck", "3", "2"}).out, "4\n");
    EXPECT_EQ(invoke({"dyck", "8", "8"}).out, "1430\n");
}

TEST(Cli, JsonRoundTripsToText) {
    const std::vector<std::vector<std::string>> commands{
        {"lambda", "7"}, {"det", "9"}, {"qbinom", "7", "3"}, {"det", "1"}};
    for (const auto& cmd : commands) {
        auto with_json = cmd;
        with_json.insert(with_json.begin(), "--json");
        const auto text = invoke(cmd);
        const auto js = invoke(with_json);
        ASSERT_EQ(js.code, kExitOk);
        const Poly2 p = poly_from_json(nlohmann::json::parse(js.out));
        EXPECT_EQ(to_text(p) + "\n", text.out) << cmd[0];
    }
}

TEST(Cli, JsonFlagAfterSubcommand) {
    EXPECT_EQ(invoke({"det", "2", "--json"}).out, "[[0,0,\"1\"],[1,0,\"-1\"]]\n");
    const auto m = nlohmann::json::parse(invoke({"matrix", "2", "--json"}).out);
    EXPECT_EQ(poly_from_json(m.at("super")[0]), Poly2::monomial(1, 0, 1));
    const auto s = nlohmann::json::parse(invoke({"stabilize", "4", "0", "--json"}).out);
    EXPECT_TRUE(s.at("agreement_q_degree").is_null());
    const auto l = nlohmann::json::parse(invoke({"limit", "--zdeg", "1", "--qdeg", "1", "--json"}).out);
    EXPECT_EQ(poly_from_json(l.at("terms")), Poly2(1) - Poly2::qz(1, 0, 1) - Poly2::qz(1, 1, 1));
}

}  // namespace
}  // namespace lehmer::cli
