#include <doctest.h>

#include <algorithm>

#include <random>
#include <thread>

#include <httplib.h>

#include "kostant/service.hpp"

using namespace kostant;

namespace {

std::string create(SessionService& s, const json& body)
{
    Response r = s.create_session(body);
    REQUIRE(r.status == 201);
    return r.body["id"].get<std::string>();
}

json cfg(std::vector<Int> c)
{
    return json(c);
}

}  // namespace

TEST_CASE("create sessions")
{
    SessionService s;
    Response a2 = s.create_session({{"family", "A"}, {"rank", 2}, {"sources", {1, 2}}});
    CHECK(a2.status == 201);
    CHECK(a2.body["legal_moves"] == json::array({1, 2}));
    CHECK(a2.body["schema"] == "kostant/v1");
    CHECK(a2.body["statuses"] == json::array({"sad", "sad"}));

    CHECK(s.create_session({{"family", "A"}, {"rank", 1}, {"sources", json::array()}}).body["legal_moves"] == json::array());
    CHECK(s.create_session({{"diagram", {{"family", "B"}, {"rank", 2}}}, {"sources", {1}}}).body["legal_moves"] ==
          json::array({1}));

    Response classic = s.create_session({{"family", "A"}, {"rank", 4}, {"mode", "classic"}, {"start", 1}});
    CHECK(classic.status == 201);
    CHECK(classic.body["configuration"] == cfg({1, 0, 0, 0}));
    CHECK(classic.body["legal_moves"] == json::array({2}));

    CHECK(s.create_session({{"family", "D"}, {"rank", 2}}).status == 400);
    CHECK(s.create_session({{"family", "A"}, {"rank", 2}, {"sources", {5}}}).status == 400);
    CHECK(s.create_session({{"family", "A"}, {"rank", 2}, {"mode", "classic"}, {"sources", {1}}}).status == 400);
    CHECK(s.create_session(json::array()).status == 400);
    CHECK(s.size() == 4);
}

TEST_CASE("B2 full modification replay")
{
    SessionService s;
    std::string id = create(s, {{"family", "B"}, {"rank", 2}, {"sources", {1, 2}}});
    std::vector<json> seen{s.get_session(id).body["configuration"]};
    for (int v : {1, 2, 1, 2}) {
        Response r = s.post_move(id, {{"vertex", v}});
        REQUIRE(r.status == 200);
        seen.push_back(r.body["configuration"]);
    }
    CHECK(seen == std::vector<json>{cfg({0, 0}), cfg({1, 0}), cfg({1, 2}), cfg({4, 2}), cfg({4, 3})});
    json last = s.get_session(id).body;
    CHECK(last["terminal"] == true);
    CHECK(last["legal_moves"] == json::array());
    CHECK(last["word"]["letters"] == json::array({2, 1, 2, 1}));
    CHECK(last["word"]["length"] == 4);
    CHECK(last["word"]["in_WJ"] == true);

    Response again = s.post_move(id, {{"vertex", 1}});
    CHECK(again.status == 409);
    CHECK(again.body.contains("status"));
    CHECK(s.get_session(id).body["configuration"] == cfg({4, 3}));
}

TEST_CASE("illegal moves leave the state alone")
{
    SessionService s;
    std::string id = create(s, {{"family", "B"}, {"rank", 2}, {"sources", {1}}});
    Response bad = s.post_move(id, {{"vertex", 2}});
    CHECK(bad.status == 409);
    CHECK(bad.body["status"] == "happy");
    CHECK(s.get_session(id).body["moves"] == json::array());
    CHECK(s.post_move(id, {{"vertex", 7}}).status == 409);
    CHECK(s.post_move(id, {{"v", 1}}).status == 400);
    CHECK(s.post_move("nope", {{"vertex", 1}}).status == 404);
    CHECK(s.get_session("nope").status == 404);
}

TEST_CASE("undo")
{
    SessionService s;
    std::string id = create(s, {{"family", "A"}, {"rank", 3}, {"sources", {2}}});
    CHECK(s.undo(id).status == 409);
    s.post_move(id, {{"vertex", 2}});
    s.post_move(id, {{"vertex", 1}});
    json after_two = s.get_session(id).body["configuration"];
    Response third = s.post_move(id, {{"vertex", 3}});
    REQUIRE(third.status == 200);
    Response u = s.undo(id);
    CHECK(u.status == 200);
    CHECK(u.body["configuration"] == after_two);
    CHECK(u.body["moves"] == json::array({2, 1}));
    CHECK(s.post_move(id, {{"vertex", 3}}).body["configuration"] == third.body["configuration"]);
    CHECK(s.undo("nope").status == 404);
}

TEST_CASE("views")
{
    SessionService s;
    std::string id = create(s, {{"family", "A"}, {"rank", 3}, {"sources", {2}}});
    for (int v : {2, 1, 3, 2}) REQUIRE(s.post_move(id, {{"vertex", v}}).status == 200);
    CHECK(s.get_session(id).body["tableau"] == json::parse("[[1,3],[2,4]]"));
    CHECK(s.view(id, "tableau").body["tableau"] == json::parse("[[1,3],[2,4]]"));
    CHECK(s.view(id, "word").body["string"] == "s2s3s1s2");
    CHECK(s.view(id, "inversions").body["count"] == 4);
    Response dfa = s.view(id, "dfa");
    CHECK(dfa.status == 200);
    CHECK(dfa.body["J"] == json::array({1, 3}));
    std::size_t cur = dfa.body["current"].get<std::size_t>();
    const auto& acc = dfa.body["dfa"]["accepting"];
    CHECK(std::find(acc.begin(), acc.end(), json(cur)) != acc.end());
    CHECK(s.view(id, "bogus").status == 404);

    std::string b2 = create(s, {{"family", "B"}, {"rank", 2}, {"sources", {1}}});
    CHECK(s.view(b2, "tableau").status == 409);
    std::string cl = create(s, {{"family", "A"}, {"rank", 2}, {"mode", "classic"}, {"start", 1}});
    CHECK(s.view(cl, "inversions").status == 409);
    std::string tri = create(s, {{"diagram", {{"vertices", 3}, {"edges", {{1, 2}, {2, 3}, {1, 3}}}}}, {"sources", {1}}});
    CHECK(s.view(tri, "dfa").status == 409);
    CHECK(s.view(tri, "word").status == 200);
}

TEST_CASE("responses follow the library on random plays")
{
    std::mt19937_64 rng(5);
    SessionService s;
    auto d = build_diagram("D", 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> I{1 + static_cast<int>(rng() % 5)};
        std::string id = create(s, {{"family", "D"}, {"rank", 5}, {"sources", I}});
        GameBoard b = GameBoard::modified(d, I);
        std::vector<int> moves;
        for (;;) {
            auto legal = sad_vertices(b, replay(b, b.initial(), moves).final());
            if (legal.empty()) break;
            int v = legal[rng() % legal.size()];
            moves.push_back(v);
            Response r = s.post_move(id, {{"vertex", v}});
            REQUIRE(r.status == 200);
            CHECK(r.body["configuration"] == json(replay(b, b.initial(), moves).final().chips));
        }
        CHECK(s.get_session(id).body["terminal"] == true);
    }
}

TEST_CASE("sessions are isolated under concurrent use")
{
    SessionService s;
    std::vector<std::string> ids;
    for (int i = 0; i < 8; ++i) ids.push_back(create(s, {{"family", "A"}, {"rank", 4}, {"sources", {1, 2, 3, 4}}}));
    std::vector<std::thread> workers;
    for (const auto& id : ids)
        workers.emplace_back([&s, id] {
            for (;;) {
                json st = s.get_session(id).body;
                if (st["legal_moves"].empty()) break;
                s.post_move(id, {{"vertex", st["legal_moves"][0]}});
            }
        });
    for (auto& t : workers) t.join();
    for (const auto& id : ids) {
        json st = s.get_session(id).body;
        CHECK(st["configuration"] == cfg({4, 6, 6, 4}));
        CHECK(st["moves"].size() == 10);
    }
}

TEST_CASE("snapshot and restore")
{
    SessionService s;
    std::string id = create(s, {{"family", "G"}, {"rank", 2}, {"sources", {2}}});
    s.post_move(id, {{"vertex", 2}});
    std::string cl = create(s, {{"family", "A"}, {"rank", 3}, {"mode", "classic"}, {"start", 2}});
    s.post_move(cl, {{"vertex", 1}});
    SessionService t;
    t.restore(json::parse(s.snapshot().dump()));
    CHECK(t.size() == 2);
    CHECK(t.get_session(id).body["configuration"] == s.get_session(id).body["configuration"]);
    CHECK(t.get_session(cl).body["configuration"] == s.get_session(cl).body["configuration"]);
    CHECK(t.get_session(cl).body["start"] == 2);
}

TEST_CASE("HTTP round trip")
{
    SessionService service;
    httplib::Server server;
    install_routes(server, service, "http://localhost:5173");
    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client cli("127.0.0.1", port);
    auto created = cli.Post("/sessions", R"({"family":"B","rank":2,"sources":[1,2]})", "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    CHECK(created->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");
    std::string id = json::parse(created->body)["id"];

    for (int v : {1, 2, 1}) {
        auto r = cli.Post("/sessions/" + id + "/moves", json{{"vertex", v}}.dump(), "application/json");
        REQUIRE(r);
        CHECK(r->status == 200);
    }
    auto state = cli.Get("/sessions/" + id);
    REQUIRE(state);
    CHECK(json::parse(state->body)["configuration"] == cfg({4, 2}));

    auto bad = cli.Post("/sessions/" + id + "/moves", R"({"vertex":1})", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 409);
    auto junk = cli.Post("/sessions/" + id + "/moves", "{not json", "application/json");
    REQUIRE(junk);
    CHECK(junk->status == 400);

    auto undo = cli.Post("/sessions/" + id + "/undo", "", "application/json");
    REQUIRE(undo);
    CHECK(json::parse(undo->body)["configuration"] == cfg({1, 2}));

    auto word = cli.Get("/sessions/" + id + "/views/word");
    REQUIRE(word);
    CHECK(json::parse(word->body)["letters"] == json::array({2, 1}));
    auto inv = cli.Get("/sessions/" + id + "/views/inversions");
    REQUIRE(inv);
    CHECK(json::parse(inv->body)["count"] == 2);

    auto missing = cli.Get("/sessions/zzz");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto pre = cli.Options("/sessions");
    REQUIRE(pre);
    CHECK(pre->status == 204);
    CHECK(pre->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

    server.stop();
    th.join();
}
