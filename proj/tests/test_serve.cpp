#include <filesystem>
#include <random>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "swapplanarity/io.hpp"
#include "swapplanarity/serve.hpp"

using namespace swapplanarity;
namespace fs = std::filesystem;

namespace {

// Server on an ephemeral port, stopped and joined on scope exit.
struct RunningServer {
  PuzzleServer server;
  int port;
  std::thread thread;
  explicit RunningServer(ServeOptions options) : server([&] {
    options.port = 0;
    return options;
  }()) {
    port = server.bind();
    REQUIRE(port > 0);
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~RunningServer() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

}  // namespace

TEST_CASE("new puzzle endpoint") {
  RunningServer s({});
  auto cli = s.client();
  auto res = cli.Get("/api/puzzle/new?n=9&s=1&delta=1500&seed=42");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->get_header_value("Content-Type") == "application/json");
  CHECK(res->get_header_value("X-Seed") == "42");
  const PuzzleInstance inst = load_instance(res->body);
  CHECK(inst.vertex_count() == 9);
  CHECK(inst.meta.seed == 42);
  CHECK(inst.meta.s == 1);
  CHECK(inst.metrics.delta == 1500);

  auto again = cli.Get("/api/puzzle/new?n=9&s=1&delta=1500&seed=42");
  REQUIRE(again);
  CHECK(again->body == res->body);

  auto frac = cli.Get("/api/puzzle/new?n=8&s=1&delta_frac=0.03&seed=1");
  REQUIRE(frac);
  CHECK(load_instance(frac->body).metrics.delta == 1966);

  auto bad = cli.Get("/api/puzzle/new?n=abc");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(nlohmann::json::parse(bad->body).contains("error"));

  auto too_big = cli.Get("/api/puzzle/new?n=1000");
  REQUIRE(too_big);
  CHECK(too_big->status == 400);

  auto impossible = cli.Get("/api/puzzle/new?n=3&m=3&s=1&seed=1");
  REQUIRE(impossible);
  CHECK(impossible->status == 422);
}

TEST_CASE("solve endpoint") {
  RunningServer s({});
  auto cli = s.client();
  auto res = cli.Post("/api/solve", to_json(make_eight_cycle_fixture()), "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  const auto body = nlohmann::json::parse(res->body);
  CHECK(body["min_swaps"] == 6);
  CHECK(body["solutions"].size() == 32);

  auto shallow = cli.Post("/api/solve?max_depth=2", to_json(make_eight_cycle_fixture()),
                          "application/json");
  REQUIRE(shallow);
  CHECK(nlohmann::json::parse(shallow->body)["min_swaps"].is_null());

  auto too_deep = cli.Post("/api/solve?max_depth=30", to_json(make_eight_cycle_fixture()),
                           "application/json");
  REQUIRE(too_deep);
  CHECK(too_deep->status == 400);

  auto malformed = cli.Post("/api/solve", "{\"version\": ", "application/json");
  REQUIRE(malformed);
  CHECK(malformed->status == 400);
  CHECK(nlohmann::json::parse(malformed->body).contains("position"));

  PuzzleInstance dup = make_eight_cycle_fixture();
  dup.edges.push_back(dup.edges[0]);
  auto invalid = cli.Post("/api/solve", to_json(dup), "application/json");
  REQUIRE(invalid);
  CHECK(invalid->status == 422);
}

TEST_CASE("static hosting and level cache") {
  const fs::path root =
      fs::temp_directory_path() / ("swapplanarity-serve-" + std::to_string(std::random_device{}()));
  fs::create_directories(root / "ui");
  std::ofstream(root / "ui" / "index.html") << "<html>board</html>";
  {
    ServeOptions opts;
    opts.ui_dir = root / "ui";
    opts.levels_dir = root / "levels";
    RunningServer s(opts);
    auto cli = s.client();
    auto index = cli.Get("/");
    REQUIRE(index);
    CHECK(index->status == 200);
    CHECK(index->body == "<html>board</html>");

    auto first = cli.Get("/api/puzzle/new?n=8&s=1&seed=5");
    REQUIRE(first);
    CHECK(first->status == 200);
    std::size_t cached = 0;
    for (const auto& entry : fs::directory_iterator(root / "levels")) {
      (void)entry;
      ++cached;
    }
    CHECK(cached == 1);
    auto second = cli.Get("/api/puzzle/new?n=8&s=1&seed=5");
    REQUIRE(second);
    CHECK(second->body == first->body);
  }
  {
    RunningServer bare({});
    auto cli = bare.client();
    auto index = cli.Get("/");
    REQUIRE(index);
    CHECK(index->status == 200);
    CHECK(index->body.find("/api/puzzle/new") != std::string::npos);
  }
  fs::remove_all(root);
}
