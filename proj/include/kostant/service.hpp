#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "kostant/json_io.hpp"

namespace httplib {
class Server;
}

namespace kostant {

struct Response {
    int status = 200;
    json body;
};

// In-memory game sessions. Handlers return HTTP-shaped responses so they can be tested without
// a socket: 400 invalid spec, 404 unknown session, 409 illegal move or undo at the start.
class SessionService {
public:
    // body: {"diagram": {...} | "family"/"rank", "mode": "modified"|"classic", "sources": [...], "start": v}
    Response create_session(const json& body);
    Response get_session(const std::string& id) const;
    Response post_move(const std::string& id, const json& body);  // {"vertex": v}
    Response undo(const std::string& id);
    Response view(const std::string& id, const std::string& name) const;  // word|inversions|tableau|dfa

    json snapshot() const;
    void restore(const json& snap);
    std::size_t size() const;

private:
    struct Session {
        std::string id;
        GameBoard board;
        int start_vertex = 0;
        GameTrace trace;
        std::int64_t created = 0;
        std::int64_t updated = 0;
        mutable std::mutex mu;

        Session(std::string i, GameBoard b, int start) : id(std::move(i)), board(std::move(b)), start_vertex(start) {}
    };

    std::shared_ptr<Session> find(const std::string& id) const;
    json state_view(const Session& s) const;
    std::string fresh_id();

    mutable std::shared_mutex mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t counter_ = 0;
};

// Routes: POST /sessions, GET /sessions/{id}, POST /sessions/{id}/moves, POST /sessions/{id}/undo,
// GET /sessions/{id}/views/{name}; CORS headers for cors_origin on every response.
void install_routes(httplib::Server& server, SessionService& service, const std::string& cors_origin = "*");

}  // namespace kostant
