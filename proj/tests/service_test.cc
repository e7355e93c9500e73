// Copyright 2026 The Blocking Wythoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <httplib.h>

#include <sstream>
#include <thread>

#include "bwn/solver.hpp"
#include "commands.hpp"
#include "game_service.hpp"
#include "json_io.hpp"

namespace bwn::service {
namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GameError& e) {
    return e.code();
  }
  return "";
}

TEST(Base64Test, RoundTrip) {
  EXPECT_EQ(base64_encode(std::vector<uint8_t>{'f', 'o', 'o', 'b'}), "Zm9vYg==");
  EXPECT_EQ(base64_encode(std::vector<uint8_t>{}), "");
  std::vector<uint8_t> bytes(257);
  for (size_t i = 0; i < bytes.size(); ++i) bytes[i] = static_cast<uint8_t>(i * 37);
  EXPECT_EQ(base64_decode(base64_encode(bytes)), bytes);
  EXPECT_THROW(base64_decode("Zm9*"), std::invalid_argument);
}

TEST(ServiceTest, GridPayloadMatchesSolver) {
  GameService svc(64 << 20);
  const json j = svc.grid("all", 2, 16);
  EXPECT_EQ(j["mode"], "all");
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["n"], 16);
  const auto bytes = base64_decode(j["bits"].get<std::string>());
  const PGrid g = grid_from_payload({Mode::kAll, Flavor::kBlocking, 2}, 16, bytes);
  EXPECT_EQ(g, solve_grid({Mode::kAll, Flavor::kBlocking, 2}, 16));
  EXPECT_TRUE(g.is_p(8, 12));
  const PGrid w = grid_from_payload({Mode::kAll, Flavor::kBlocking, 1}, 8,
                                    base64_decode(svc.grid("all", 1, 8)["bits"].get<std::string>()));
  EXPECT_TRUE(w.is_p(1, 2));
  EXPECT_TRUE(w.is_p(2, 1));
  const PGrid r3 = grid_from_payload({Mode::kAll, Flavor::kBlocking, 3}, 8,
                                     base64_decode(svc.grid("all", 3, 8)["bits"].get<std::string>()));
  EXPECT_TRUE(r3.is_p(0, 1));
  EXPECT_TRUE(r3.is_p(0, 2));
  EXPECT_EQ(code_of([&] { svc.grid("both", 2, 16); }), "bad_request");
  EXPECT_EQ(code_of([&] { svc.grid("all", 0, 16); }), "bad_request");
}

TEST(ServiceTest, GridCapacity) {
  GameService svc(1024);
  EXPECT_EQ(code_of([&] { svc.grid("all", 2, 1000); }), "capacity");
  EXPECT_EQ(status_for("capacity"), 413);
  EXPECT_EQ(status_for("not_found"), 404);
  EXPECT_EQ(status_for("wrong_phase"), 409);
  EXPECT_EQ(status_for("over_budget"), 422);
  EXPECT_EQ(status_for("bad_request"), 400);
}

TEST(ServiceTest, SessionFlow) {
  GameService svc(64 << 20);
  const json created = svc.create_game({{"mode", "all"}, {"k", 2}, {"n", 16}, {"start", {8, 12}}, {"human", "next"}});
  EXPECT_EQ(created["phase"], "await_move");
  EXPECT_EQ(created["blocked"], json::parse("[[3,7]]"));
  const std::string id = created["id"];
  EXPECT_EQ(svc.get_game(id), created);
  EXPECT_EQ(code_of([&] { svc.block(id, {{"cells", json::array()}}); }), "wrong_phase");
  EXPECT_EQ(code_of([&] { svc.move(id, {{"to", {3, 7}}}); }), "blocked_target");
  const json after = svc.move(id, {{"to", {8, 11}}});
  // Human moved; the human now blocks for the engine.
  EXPECT_EQ(after["phase"], "await_block");
  EXPECT_EQ(after["blocker"], "human");
  EXPECT_EQ(after["position"], json::parse("[8,11]"));
  EXPECT_EQ(code_of([&] { svc.block(id, {{"cells", {{0, 11}, {1, 11}}}}); }), "over_budget");
  const json replied = svc.block(id, {{"cells", json::array()}});
  // One history entry per move: the human's, then the engine's reply.
  ASSERT_EQ(replied["history"].size(), 2u);
  EXPECT_EQ(replied["history"][1]["mover"], "engine");
  EXPECT_TRUE(replied["status"] != "ongoing" || replied["phase"] == "await_move");
  EXPECT_EQ(code_of([&] { svc.get_game("nope"); }), "not_found");
  EXPECT_EQ(svc.session_count(), 1u);
}

TEST(ServiceTest, CreateGameValidation) {
  GameService svc(64 << 20, 512);
  auto body = [](json patch) {
    json b = {{"mode", "all"}, {"k", 2}, {"n", 16}, {"start", {1, 1}}, {"human", "next"}};
    b.merge_patch(patch);
    return b;
  };
  EXPECT_EQ(code_of([&] { svc.create_game(body({{"start", {16, 0}}})); }), "invalid_start");
  EXPECT_EQ(code_of([&] { svc.create_game(body({{"n", 4096}})); }), "invalid_start");
  EXPECT_EQ(code_of([&] { svc.create_game(body({{"human", "both"}})); }), "bad_request");
  EXPECT_EQ(code_of([&] { svc.create_game(body({{"k", "two"}})); }), "bad_request");
  EXPECT_EQ(code_of([&] { svc.create_game(body({{"start", {1}}})); }), "bad_request");
  EXPECT_EQ(code_of([&] { svc.create_game(json::array()); }), "bad_request");
}

TEST(ServiceTest, ConcurrentSessions) {
  GameService svc(64 << 20);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&svc, t] {
      for (int i = 0; i < 10; ++i)
        svc.create_game({{"k", 2 + t % 2}, {"n", 64}, {"start", {5 + i, 9}}, {"human", "previous"}});
    });
  for (auto& th : threads) th.join();
  EXPECT_EQ(svc.session_count(), 80u);
  EXPECT_EQ(svc.cache().size(), 2u);
}

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    service_.mount(server_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
  }

  GameService service_{64 << 20};
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpTest, EndToEnd) {
  httplib::Client cli("127.0.0.1", port_);
  auto grid = cli.Get("/api/grid?mode=all&k=2&n=16");
  ASSERT_TRUE(grid);
  EXPECT_EQ(grid->status, 200);
  EXPECT_EQ(json::parse(grid->body)["n"], 16);

  auto bad = cli.Get("/api/grid?mode=all&n=16");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  EXPECT_EQ(json::parse(bad->body)["code"], "bad_request");

  auto created = cli.Post("/api/game", R"({"mode":"all","k":2,"n":16,"start":[8,12],"human":"next"})",
                          "application/json");
  ASSERT_TRUE(created);
  ASSERT_EQ(created->status, 200) << created->body;
  const std::string id = json::parse(created->body)["id"];

  auto state = cli.Get("/api/game/" + id);
  ASSERT_TRUE(state);
  EXPECT_EQ(json::parse(state->body)["blocked"], json::parse("[[3,7]]"));

  auto blocked = cli.Post("/api/game/" + id + "/move", R"({"to":[3,7]})", "application/json");
  ASSERT_TRUE(blocked);
  EXPECT_EQ(blocked->status, 422);
  EXPECT_EQ(json::parse(blocked->body)["code"], "blocked_target");

  auto wrong = cli.Post("/api/game/" + id + "/block", R"({"cells":[]})", "application/json");
  ASSERT_TRUE(wrong);
  EXPECT_EQ(wrong->status, 409);

  auto moved = cli.Post("/api/game/" + id + "/move", R"({"to":[0,12]})", "application/json");
  ASSERT_TRUE(moved);
  EXPECT_EQ(moved->status, 200);
  EXPECT_EQ(json::parse(moved->body)["position"], json::parse("[0,12]"));

  auto garbage = cli.Post("/api/game", "{not json", "application/json");
  ASSERT_TRUE(garbage);
  EXPECT_EQ(garbage->status, 400);

  auto missing = cli.Get("/api/game/g999");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  EXPECT_EQ(json::parse(missing->body)["code"], "not_found");
}

TEST(CommandsTest, PairsCsv) {
  std::ostringstream out;
  EXPECT_EQ(run_pairs({.k = 2, .n = 64, .limit = 4}, out), 0);
  EXPECT_EQ(out.str(), "n,a_n,b_n,delta_n\n0,0,0,0\n1,0,1,1\n2,1,3,2\n3,2,2,0\n");
}

TEST(CommandsTest, SolveWritesGrid) {
  const std::string path = ::testing::TempDir() + "/bwn_solve_test.bwng";
  std::ostringstream out;
  EXPECT_EQ(run_solve({.k = 3, .n = 40, .mode = Mode::kNimOnly, .flavor = Flavor::kComply, .out_path = path}, out), 0);
  EXPECT_EQ(load_grid(path), solve_any({Mode::kNimOnly, Flavor::kComply, 3}, 40));
}

TEST(CommandsTest, VerifyExitCodes) {
  std::ostringstream out;
  EXPECT_EQ(run_verify_command("terminal", {}, out), 0);
  EXPECT_TRUE(json::parse(out.str())["passed"].get<bool>());
  std::ostringstream cases;
  EXPECT_EQ(run_verify_command("cases", {.bound = 60}, cases), 0);
  std::ostringstream th;
  EXPECT_EQ(run_verify_command("theorem1", {.k = 2, .n = 512}, th), 0);
  EXPECT_THROW(run_verify("everything", {}), std::invalid_argument);
}

TEST(CommandsTest, VerifyReportsEachCheck) {
  for (const char* what : {"prop2", "duality"}) {
    std::ostringstream out;
    EXPECT_EQ(run_verify_command(what, {.k = 3, .n = 256}, out), 0) << what;
    EXPECT_EQ(json::parse(out.str())["check"], what);
  }
}

TEST(CommandsTest, Splits) {
  std::ostringstream out;
  EXPECT_EQ(run_splits({.k = 3, .n = 8192}, out), 0);
  const json j = json::parse(out.str());
  ASSERT_EQ(j["clusters"].size(), 1u);
  EXPECT_NEAR(j["clusters"][0]["center"].get<double>(), 2.0, 0.01);
}

TEST(CommandsTest, PlayLoop) {
  std::istringstream in("move 9 9\nmove 3 7\nquit\n");
  std::ostringstream out;
  EXPECT_EQ(run_play({.k = 2, .n = 16, .start = {8, 12}, .human = "next"}, in, out), 0);
  EXPECT_NE(out.str().find("rejected (illegal_move)"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("rejected (blocked_target)"), std::string::npos) << out.str();
}

}  // namespace
}  // namespace bwn::service
