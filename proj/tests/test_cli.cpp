#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

namespace {

struct Run {
  std::string out;
  int code;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ARITHCP_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, TableFamilyTwo) {
  const auto r = run("table --family 2 --max-n 15 --check");
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 16u);
  EXPECT_EQ(rows.front(), "m,n,smooth,total,provenance");
  EXPECT_EQ(rows.back(), "2,15,127,175978875,closed-form");
}

TEST(Cli, TableFamilyThree) {
  const auto r = run("table --family 3 --max-n 20 --check");
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows[17], "3,17,2835,12731777602,closed-form");
}

TEST(Cli, TableFamilyOneEdge) {
  const auto r = run("table --family 1 --max-n 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(1), "1,1,3,3,convolution");
  const auto j = run("table --family 1 --max-n 1 --format json");
  EXPECT_EQ(j.out, "[{\"m\":1,\"n\":1,\"smooth\":3,\"total\":3,\"provenance\":\"convolution\"}]\n");
}

TEST(Cli, TableRejectsFamily) {
  EXPECT_EQ(run("table --family 4 --max-n 3").code, 2);
  EXPECT_NE(run("table --family 2 --format xml").code, 0);
}

TEST(Cli, VerifyNonSmooth) {
  const auto r = run("verify '{\"m\":1,\"n\":5,\"a\":[1],\"b\":[5,8,3,1,1]}'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("smooth: no"), std::string::npos);
  EXPECT_NE(r.out.find("ancestor: CP_{1,3} (1 | 5,3,1)"), std::string::npos);
  EXPECT_NE(r.out.find("critical group: Z/2Z"), std::string::npos);
}

TEST(Cli, VerifyFromStdin) {
  const auto r = run("verify < " + std::string(TEST_DATA_DIR) + "/unit.json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("smooth: yes"), std::string::npos);
  EXPECT_NE(r.out.find("critical group: Z/2Z (order 2, snf 2,0)"), std::string::npos);
  EXPECT_EQ(run("verify --file " + std::string(TEST_DATA_DIR) + "/unit.json").code, 0);
  EXPECT_EQ(run("verify --file /nonexistent.json").code, 2);
}

TEST(Cli, VerifyInvalid) {
  const auto r = run("verify '{\"m\":3,\"n\":2,\"a\":[6,4,2],\"b\":[13,2]}'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("b1"), std::string::npos);
  EXPECT_EQ(run("verify 'not json'").code, 2);
}

TEST(Cli, EnumerateAll) {
  const auto r = run("enumerate --m 2 --n 3 --mode all");
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 56u);
  EXPECT_NE(rows.back().find("\"count\":55"), std::string::npos);
  EXPECT_NE(rows.back().find("\"bound\":\"certified\""), std::string::npos);
  EXPECT_EQ(lines(run("enumerate --m 1 --n 5 --mode all").out).size(), 141u);
}

TEST(Cli, EnumerateSmoothDeterministic) {
  const auto r = run("enumerate --m 1 --n 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 4u);
  const auto a = run("enumerate --m 3 --n 3");
  const auto b = run("enumerate --m 3 --n 3");
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"bound\":\"heuristic\""), std::string::npos);
}

TEST(Cli, EnumerateIncomplete) {
  EXPECT_EQ(run("enumerate --m 3 --n 3 --bound-a 4 --bound-b 4").code, 3);
}

TEST(Cli, Asymptotics) {
  const auto three = lines(run("asymptotics --family 3 --max-n 5").out);
  EXPECT_EQ(three.front(), "# target 78157/600 = 130.2616666667 relative to C_n");
  const auto two = lines(run("asymptotics --family 2 --max-n 2").out);
  EXPECT_EQ(two.front(), "# target 76523/14400 = 5.3140972222 relative to C_{n+1}");
  const auto one = lines(run("asymptotics --family 1 --max-n 40").out);
  EXPECT_EQ(one.size(), 42u);
  EXPECT_EQ(one.back().substr(0, 3), "40,");
}

TEST(Cli, Probe) {
  const auto r = run("probe-conjecture --max-m 3 --max-n 3 --bound-a 256 --bound-b 256");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3,3,48,10,24/5,4.800000,stabilized"), std::string::npos);
}
