#include "kostant/service.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include <httplib.h>

namespace kostant {

namespace {

std::int64_t now_seconds()
{
    return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
}

Response error(int status, const std::string& message)
{
    return {status, {{"error", message}}};
}

bool finite_type(const DynkinDiagram& d)
{
    try {
        positive_roots(d, 512);
        return true;
    } catch (const NotFiniteType&) {
        return false;
    }
}

}  // namespace

std::string SessionService::fresh_id()
{
    static thread_local std::mt19937_64 rng(std::random_device{}());
    std::ostringstream os;
    os << std::hex << (rng() & 0xffffffffULL) << '-' << ++counter_;
    return os.str();
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) const
{
    std::shared_lock lock(mu_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionService::size() const
{
    std::shared_lock lock(mu_);
    return sessions_.size();
}

json SessionService::state_view(const Session& s) const
{
    const Configuration& c = s.trace.final();
    json j = {{"schema", kSchema},
              {"id", s.id},
              {"board", to_json(s.board)},
              {"configuration", to_json(c)},
              {"statuses", statuses_json(s.board, c)},
              {"legal_moves", sad_vertices(s.board, c)},
              {"moves", s.trace.moves},
              {"terminal", is_terminal(s.board, c)},
              {"created", s.created},
              {"updated", s.updated}};
    if (s.board.mode() == Mode::Classic) j["start"] = s.start_vertex;
    Word w = word_of_moves(s.trace.moves);
    j["word"] = {{"letters", w}, {"string", word_string(w)}};
    if (s.board.mode() == Mode::Modified && finite_type(s.board.diagram())) {
        RootSystem rs(s.board.diagram());
        WeylElement e = element_of(rs, w);
        j["word"]["length"] = length(rs, e);
        j["word"]["in_WJ"] = is_min_rep(rs, e, complement(rs.rank(), s.board.sources()));
    }
    const auto& d = s.board.diagram();
    if (s.board.mode() == Mode::Modified && d.family() == Family::A && s.board.sources().size() == 1)
        j["tableau"] = to_json(play_to_tableau(s.trace.moves, s.board.sources()[0], d.rank() + 1));
    return j;
}

Response SessionService::create_session(const json& body)
{
    try {
        if (!body.is_object()) return error(400, "request body must be a JSON object");
        DynkinDiagram d = body.contains("diagram") ? diagram_from_json(body.at("diagram")) : diagram_from_json(body);
        Mode mode = parse_mode(body.value("mode", std::string("modified")));
        std::vector<int> sources = body.value("sources", std::vector<int>{});
        int start = body.value("start", 0);
        GameBoard b = board_from_diagram(d, mode, sources);
        auto s = std::make_shared<Session>("", b, start);
        s->trace.states.push_back(b.initial(mode == Mode::Classic ? start : 0));
        s->created = s->updated = now_seconds();
        {
            std::unique_lock lock(mu_);
            s->id = fresh_id();
            sessions_[s->id] = s;
        }
        return {201, state_view(*s)};
    } catch (const Error& e) {
        return error(400, e.what());
    } catch (const json::exception& e) {
        return error(400, e.what());
    }
}

Response SessionService::get_session(const std::string& id) const
{
    auto s = find(id);
    if (!s) return error(404, "unknown session " + id);
    std::lock_guard lock(s->mu);
    return {200, state_view(*s)};
}

Response SessionService::post_move(const std::string& id, const json& body)
{
    auto s = find(id);
    if (!s) return error(404, "unknown session " + id);
    int v = 0;
    try {
        v = body.at("vertex").get<int>();
    } catch (const json::exception&) {
        return error(400, "body must be {\"vertex\": <int>}");
    }
    std::lock_guard lock(s->mu);
    try {
        Configuration next = fire(s->board, s->trace.final(), v);
        s->trace.states.push_back(std::move(next));
        s->trace.moves.push_back(v);
        s->updated = now_seconds();
    } catch (const IllegalMove& e) {
        Response r = error(409, e.what());
        r.body["status"] = status_name(status(s->board, s->trace.final(), v));
        return r;
    } catch (const IndexOutOfRange& e) {
        return error(409, e.what());
    }
    return {200, state_view(*s)};
}

Response SessionService::undo(const std::string& id)
{
    auto s = find(id);
    if (!s) return error(404, "unknown session " + id);
    std::lock_guard lock(s->mu);
    if (s->trace.moves.empty()) return error(409, "nothing to undo");
    s->trace.moves.pop_back();
    s->trace.states.pop_back();
    s->updated = now_seconds();
    return {200, state_view(*s)};
}

Response SessionService::view(const std::string& id, const std::string& name) const
{
    auto s = find(id);
    if (!s) return error(404, "unknown session " + id);
    std::lock_guard lock(s->mu);
    const auto& d = s->board.diagram();
    Word w = word_of_moves(s->trace.moves);
    try {
        if (name == "word") {
            json j = state_view(*s)["word"];
            j["schema"] = kSchema;
            return {200, j};
        }
        if (s->board.mode() != Mode::Modified) return error(409, "view '" + name + "' needs a modified game");
        if (name == "tableau") {
            if (d.family() != Family::A || s->board.sources().size() != 1)
                return error(409, "tableau view needs type A with a single source");
            return {200, {{"schema", kSchema},
                          {"tableau", to_json(play_to_tableau(s->trace.moves, s->board.sources()[0], d.rank() + 1))}}};
        }
        if (!finite_type(d)) return error(409, "view '" + name + "' needs a finite-type diagram");
        RootSystem rs(d);
        WeylElement e = element_of(rs, w);
        if (name == "inversions") {
            json roots = json::array();
            for (const auto& r : inversion_set(rs, e)) roots.push_back(to_json(r));
            return {200, {{"schema", kSchema}, {"inversions", roots}, {"count", roots.size()}}};
        }
        if (name == "dfa") {
            std::vector<int> J = complement(rs.rank(), s->board.sources());
            Dfa a = build_dfa(rs, J, 100'000);
            std::size_t state = a.initial;
            for (int x : w) state = a.next(state, x);
            return {200, {{"schema", kSchema}, {"J", J}, {"dfa", to_json(a)}, {"current", state}}};
        }
    } catch (const LimitExceeded& e) {
        return error(409, e.what());
    }
    return error(404, "unknown view '" + name + "'");
}

json SessionService::snapshot() const
{
    std::shared_lock lock(mu_);
    json out = json::array();
    for (const auto& [id, s] : sessions_) {
        std::lock_guard slock(s->mu);
        out.push_back({{"id", id},
                       {"board", to_json(s->board)},
                       {"start", s->start_vertex},
                       {"moves", s->trace.moves},
                       {"created", s->created},
                       {"updated", s->updated}});
    }
    return {{"schema", kSchema}, {"sessions", out}};
}

void SessionService::restore(const json& snap)
{
    std::unique_lock lock(mu_);
    for (const auto& j : snap.at("sessions")) {
        const json& bj = j.at("board");
        GameBoard b = board_from_diagram(diagram_from_json(bj.at("diagram")), parse_mode(bj.at("mode").get<std::string>()),
                                         bj.at("sources").get<std::vector<int>>());
        int start = j.value("start", 0);
        auto s = std::make_shared<Session>(j.at("id").get<std::string>(), b, start);
        s->trace = replay(b, b.initial(b.mode() == Mode::Classic ? start : 0), j.at("moves").get<std::vector<int>>());
        s->created = j.value("created", std::int64_t{0});
        s->updated = j.value("updated", std::int64_t{0});
        sessions_[s->id] = s;
    }
}

void install_routes(httplib::Server& server, SessionService& service, const std::string& cors_origin)
{
    auto reply = [cors_origin](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", cors_origin);
        res.set_content(r.body.dump(), "application/json");
    };
    auto parse = [](const httplib::Request& req) {
        return req.body.empty() ? json::object() : json::parse(req.body, nullptr, false);
    };
    server.Options(R"(/.*)", [cors_origin](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", cors_origin);
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
    server.Post("/sessions", [&service, reply, parse](const httplib::Request& req, httplib::Response& res) {
        json body = parse(req);
        reply(res, body.is_discarded() ? Response{400, {{"error", "malformed JSON"}}} : service.create_session(body));
    });
    server.Get(R"(/sessions/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.get_session(req.matches[1]));
    });
    server.Post(R"(/sessions/([^/]+)/moves)", [&service, reply, parse](const httplib::Request& req, httplib::Response& res) {
        json body = parse(req);
        reply(res, body.is_discarded() ? Response{400, {{"error", "malformed JSON"}}} : service.post_move(req.matches[1], body));
    });
    server.Post(R"(/sessions/([^/]+)/undo)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.undo(req.matches[1]));
    });
    server.Get(R"(/sessions/([^/]+)/views/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.view(req.matches[1], req.matches[2]));
    });
}

}  // namespace kostant
