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

#include "game_service.hpp"

#include <httplib.h>

namespace bwn::service {
namespace {

uint32_t require_u32(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_number_integer() || body[key].get<int64_t>() < 0)
    throw GameError("bad_request", std::string("field '") + key + "' must be a non-negative integer");
  const auto v = body[key].get<uint64_t>();
  if (v > UINT32_MAX) throw GameError("bad_request", std::string("field '") + key + "' is too large");
  return static_cast<uint32_t>(v);
}

std::string require_string(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_string())
    throw GameError("bad_request", std::string("field '") + key + "' must be a string");
  return body[key].get<std::string>();
}

Mode mode_or_throw(const std::string& s) {
  try {
    return parse_mode(s);
  } catch (const std::invalid_argument& e) {
    throw GameError("bad_request", e.what());
  }
}

}  // namespace

int status_for(const std::string& code) {
  if (code == "not_found") return 404;
  if (code == "wrong_phase" || code == "wrong_role" || code == "game_over") return 409;
  if (code == "over_budget" || code == "not_an_option" || code == "not_blockable" ||
      code == "blocked_target" || code == "illegal_move")
    return 422;
  if (code == "capacity") return 413;
  return 400;
}

GameService::GameService(uint64_t grid_cache_bytes, uint32_t max_session_board)
    : cache_(grid_cache_bytes), max_session_board_(max_session_board) {}

json GameService::grid(const std::string& mode, uint32_t k, uint32_t n, const std::string& flavor) {
  BlockingSpec spec{mode_or_throw(mode), Flavor::kBlocking, k};
  try {
    spec.flavor = parse_flavor(flavor);
  } catch (const std::invalid_argument& e) {
    throw GameError("bad_request", e.what());
  }
  if (k < 1) throw GameError("bad_request", "k must be >= 1");
  try {
    const auto g = cache_.get(spec, n);
    return {{"mode", to_string(spec.mode)},
            {"flavor", to_string(spec.flavor)},
            {"k", k},
            {"n", n},
            {"bits", base64_encode(g->payload())}};
  } catch (const CapacityError& e) {
    throw GameError("capacity", e.what());
  }
}

json GameService::create_game(const json& body) {
  if (!body.is_object()) throw GameError("bad_request", "body must be a JSON object");
  const Mode mode = mode_or_throw(body.contains("mode") ? require_string(body, "mode") : "all");
  const uint32_t k = require_u32(body, "k");
  const uint32_t n = require_u32(body, "n");
  if (!body.contains("start")) throw GameError("bad_request", "field 'start' is required");
  const Position start = parse_position(body["start"]);
  const Seat seat = parse_seat(require_string(body, "human"));
  if (k < 1) throw GameError("unsupported_spec", "k must be >= 1");
  if (n < 1 || n > max_session_board_)
    throw GameError("invalid_start", "board side must be in [1, " + std::to_string(max_session_board_) + "]");
  const BlockingSpec spec{mode, Flavor::kBlocking, k};

  auto session = std::make_shared<Session>();
  try {
    session->grid = cache_.get(spec, n);
  } catch (const CapacityError& e) {
    throw GameError("capacity", e.what());
  }
  std::string id;
  {
    std::lock_guard lock(sessions_mu_);
    id = "g" + std::to_string(next_id_++);
  }
  session->state = new_game(spec, n, start, seat, *session->grid, id);
  json out = to_json(session->state);
  std::lock_guard lock(sessions_mu_);
  sessions_.emplace(id, std::move(session));
  return out;
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
  std::lock_guard lock(sessions_mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw GameError("not_found", "no game with id '" + id + "'");
  return it->second;
}

json GameService::get_game(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  return to_json(s->state);
}

json GameService::block(const std::string& id, const json& body) {
  auto s = find(id);
  if (!body.is_object() || !body.contains("cells"))
    throw GameError("bad_request", "field 'cells' is required");
  auto cells = parse_positions(body["cells"]);
  std::lock_guard lock(s->mu);
  human_block(s->state, std::move(cells), *s->grid);
  return to_json(s->state);
}

json GameService::move(const std::string& id, const json& body) {
  auto s = find(id);
  if (!body.is_object() || !body.contains("to")) throw GameError("bad_request", "field 'to' is required");
  const Position to = parse_position(body["to"]);
  std::lock_guard lock(s->mu);
  human_move(s->state, to, *s->grid);
  return to_json(s->state);
}

size_t GameService::session_count() const {
  std::lock_guard lock(sessions_mu_);
  return sessions_.size();
}

namespace {

template <class F>
void respond(httplib::Response& res, F&& handler) {
  try {
    res.set_content(handler().dump(), "application/json");
  } catch (const GameError& e) {
    res.status = status_for(e.code());
    res.set_content(json{{"code", e.code()}, {"message", e.what()}}.dump(), "application/json");
  } catch (const json::exception& e) {
    res.status = 400;
    res.set_content(json{{"code", "bad_request"}, {"message", e.what()}}.dump(), "application/json");
  } catch (const std::exception& e) {
    res.status = 500;
    res.set_content(json{{"code", "internal"}, {"message", e.what()}}.dump(), "application/json");
  }
}

uint32_t query_u32(const httplib::Request& req, const char* key) {
  if (!req.has_param(key)) throw GameError("bad_request", std::string("missing query parameter '") + key + "'");
  const std::string v = req.get_param_value(key);
  size_t used = 0;
  unsigned long parsed = 0;
  try {
    parsed = std::stoul(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty() || parsed > UINT32_MAX)
    throw GameError("bad_request", std::string("query parameter '") + key + "' must be an integer");
  return static_cast<uint32_t>(parsed);
}

json parse_body(const httplib::Request& req) {
  return json::parse(req.body.empty() ? "{}" : req.body);
}

}  // namespace

void GameService::mount(httplib::Server& server) {
  server.Get("/api/grid", [this](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] {
      const std::string mode = req.has_param("mode") ? req.get_param_value("mode") : "all";
      const std::string flavor = req.has_param("flavor") ? req.get_param_value("flavor") : "blocking";
      return grid(mode, query_u32(req, "k"), query_u32(req, "n"), flavor);
    });
  });
  server.Post("/api/game", [this](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { return create_game(parse_body(req)); });
  });
  server.Get(R"(/api/game/([A-Za-z0-9]+))", [this](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { return get_game(req.matches[1]); });
  });
  server.Post(R"(/api/game/([A-Za-z0-9]+)/block)", [this](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { return block(req.matches[1], parse_body(req)); });
  });
  server.Post(R"(/api/game/([A-Za-z0-9]+)/move)", [this](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { return move(req.matches[1], parse_body(req)); });
  });
}

}  // namespace bwn::service
