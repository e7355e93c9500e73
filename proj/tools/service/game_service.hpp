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

#pragma once

// HTTP/JSON game service. Every handler is also callable directly so the
// API can be exercised without a socket.
//
//   GET  /api/grid?mode&k&n[&flavor]  {mode,k,n,flavor,bits}  bits = base64 payload
//   POST /api/game                    {mode,k,n,start:[x,y],human:"next"|"previous"}
//   GET  /api/game/{id}
//   POST /api/game/{id}/block         {cells:[[x,y],...]}
//   POST /api/game/{id}/move          {to:[x,y]}
//
// Errors are {code, message} with a 4xx status.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "bwn/game.hpp"
#include "bwn/grid_cache.hpp"
#include "json_io.hpp"

namespace httplib {
class Server;
}

namespace bwn::service {

// HTTP status for a GameError code.
int status_for(const std::string& game_error_code);

class GameService {
 public:
  explicit GameService(uint64_t grid_cache_bytes, uint32_t max_session_board = 4096);

  json grid(const std::string& mode, uint32_t k, uint32_t n, const std::string& flavor = "blocking");
  json create_game(const json& body);
  json get_game(const std::string& id);
  json block(const std::string& id, const json& body);
  json move(const std::string& id, const json& body);

  void mount(httplib::Server& server);

  size_t session_count() const;
  const GridCache& cache() const { return cache_; }

 private:
  // Actions on one session are serialized by its mutex; grids are shared
  // read-only.
  struct Session {
    std::mutex mu;
    GameState state;
    std::shared_ptr<const PGrid> grid;
  };

  std::shared_ptr<Session> find(const std::string& id);

  GridCache cache_;
  uint32_t max_session_board_;
  mutable std::mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  uint64_t next_id_ = 1;
};

}  // namespace bwn::service
