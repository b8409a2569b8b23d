/*
    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using descpat::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("descpat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& body) {
        const auto path = dir_ / name;
        std::ofstream(path) << body;
        return path.string();
    }

  private:
    std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, DiscoverText) {
    const auto s = file("s.txt", "abc\nacb\nbcb\n");
    const Outcome r = invoke({"discover", "--sample", s, "--chars", "--length", "2", "--gaps", "0-0", "--support", "2/3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("pattern: a $1\n"), std::string::npos);
    EXPECT_NE(r.out.find("support: 2/3"), std::string::npos);
}

TEST_F(CliTest, DiscoverJsonIsDeterministicAndRefeedable) {
    const auto s = file("s.txt", "abc\nacb\nabcb\n");
    const std::vector<std::string> args{"discover", "--sample", s, "--chars", "--length", "2",
                                        "--gaps", "0-5", "--json"};
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    json ja = json::parse(a.out);
    json jb = json::parse(b.out);
    EXPECT_TRUE(ja["wall_time_ms"].is_number());
    ja.erase("wall_time_ms");
    jb.erase("wall_time_ms");
    EXPECT_EQ(ja, jb);
    EXPECT_EQ(ja["pattern"], "a b");
    EXPECT_EQ(ja["support"]["fraction"], "3/3");
    EXPECT_EQ(ja["trace"].size(), 2u);

    const Outcome again = invoke({"check", "--sample", s, "--chars", "--length", "2", "--gaps", "0-5", "--start",
                                  ja["pattern"].get<std::string>()});
    EXPECT_EQ(again.code, 0) << again.err;
    EXPECT_EQ(again.out.substr(0, 11), "descriptive");
}

TEST_F(CliTest, CheckReportsCertificate) {
    const auto s = file("s.txt", "abc\nacb\nabcb\n");
    const Outcome r = invoke({"check", "--sample", s, "--chars", "--length", "2", "--gaps", "0-5", "--start", "$1 $2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("not-descriptive"), std::string::npos);
    EXPECT_NE(r.out.find("certificate: a b"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
    const auto s = file("s.txt", "abc\nacb\nbcb\n");
    EXPECT_EQ(invoke({"discover", "--sample", s, "--chars", "--length", "2", "--gaps", "0-0,0-0"}).code, 2);
    EXPECT_EQ(invoke({"discover", "--sample", s, "--chars", "--length", "2", "--support", "0"}).code, 2);
    EXPECT_EQ(invoke({"discover", "--sample", s, "--chars", "--length", "2", "--support", "abc"}).code, 1);
    EXPECT_EQ(invoke({"discover", "--sample", s, "--chars", "--length", "2", "--gaps", "2-1"}).code, 2);
    EXPECT_EQ(invoke({"discover", "--sample", s, "--chars", "--length", "2", "--gaps", "0-x"}).code, 1);
    EXPECT_EQ(invoke({"discover", "--sample", (s + ".missing"), "--length", "2"}).code, 1);
    EXPECT_EQ(invoke({"discover", "--sample", s, "--chars"}).code, 1);
    EXPECT_EQ(invoke({"discover", "--sample", s, "--chars", "--length", "3", "--start", "$1 a $1", "--class",
                      "regular"}).code,
              2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);

    const Outcome miss = invoke({"discover", "--sample", s, "--chars", "--length", "4", "--gaps", "0-0,0-0,0-0"});
    EXPECT_EQ(miss.code, 2);
    EXPECT_NE(miss.err.find("0/3"), std::string::npos) << miss.err;
}

TEST_F(CliTest, MalformedTraceFile) {
    const auto bad = file("bad.txt", "#alphabet: a b\nabc\n");
    EXPECT_EQ(invoke({"discover", "--sample", bad, "--chars", "--length", "2"}).code, 1);
    const auto empty = file("empty.txt", "# nothing\n");
    EXPECT_EQ(invoke({"discover", "--sample", empty, "--length", "1"}).code, 1);
}

TEST_F(CliTest, MatchWord) {
    const Outcome r = invoke({"match", "--word", "aabacabcbbacc", "--pattern", "a $1 b $1", "--gaps", "1-3,4-4,2-3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "matched  aabacabcbbacc  $1=c  positions=1,5,10,13\n");

    const Outcome miss = invoke({"match", "--word", "b", "--pattern", "a", "--gaps", ""});
    EXPECT_EQ(miss.code, 0);
    EXPECT_EQ(miss.out.substr(0, 9), "unmatched");

    EXPECT_EQ(invoke({"match", "--word", "ab", "--pattern", "a $1", "--gaps", "0-1,0-1"}).code, 2);
    EXPECT_EQ(invoke({"match", "--pattern", "a"}).code, 1);
}

TEST_F(CliTest, MatchAngluinJson) {
    const Outcome r = invoke({"match", "--word", "baabcacbaacbccac", "--pattern", "$1 a b $2 $1 a $3 b c $2",
                              "--angluin", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.dump().find("\"matched\":true") != std::string::npos, true) << r.out;
}

TEST_F(CliTest, MatchSampleSupport) {
    const auto s = file("s.txt", "abc\nacb\nbcb\n");
    const Outcome r = invoke({"match", "--sample", s, "--chars", "--pattern", "a $1", "--gaps", "0-0"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("unmatched  bcb"), std::string::npos);
    EXPECT_NE(r.out.find("support: 2/3"), std::string::npos);
}

TEST_F(CliTest, VerifySuites) {
    const Outcome tiny = invoke({"verify", "--suite", "tiny"});
    EXPECT_EQ(tiny.code, 0) << tiny.out << tiny.err;
    const Outcome random = invoke({"verify", "--suite", "random", "--seed", "7", "--cases", "500", "--json"});
    EXPECT_EQ(random.code, 0) << random.err;
    json parsed;
    EXPECT_NO_THROW(parsed = json::parse(random.out));
    EXPECT_EQ(invoke({"verify", "--suite", "random", "--cases", "0"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--suite", "huge"}).code, 1);
}
