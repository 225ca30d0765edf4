#include "swapplanarity/serve.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <system_error>

#include "httplib.h"
#include "json.hpp"
#include "swapplanarity/errors.hpp"
#include "swapplanarity/generate.hpp"
#include "swapplanarity/io.hpp"

namespace swapplanarity {
namespace {

constexpr const char* kJson = "application/json";
constexpr int kMaxServedN = 40;
constexpr int kMaxServedS = 6;

struct BadRequest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
T query_number(const httplib::Request& req, const char* name, T fallback) {
  if (!req.has_param(name)) return fallback;
  const std::string text = req.get_param_value(name);
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw BadRequest(std::string("query parameter '") + name + "' is not a valid number");
  return value;
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  nlohmann::json body{{"error", message}};
  res.status = status;
  res.set_content(body.dump() + "\n", kJson);
}

GenerationParams level_params(const httplib::Request& req) {
  GenerationParams p;
  p.n = query_number(req, "n", 11);
  p.m = query_number(req, "m", 0);
  p.removed = query_number(req, "removed", p.m > 0 ? 0 : 4);
  p.s = query_number(req, "s", 2);
  p.flips = query_number(req, "flips", 3);
  if (req.has_param("delta_frac")) {
    const double frac = query_number(req, "delta_frac", 0.03);
    p.delta = std::llround(frac * static_cast<double>(p.grid_size));
  } else {
    p.delta = query_number<std::int64_t>(req, "delta", p.delta);
  }
  const RenderMetrics metrics = default_metrics(p.delta);
  p.rho = query_number<std::int64_t>(req, "rho", metrics.rho);
  p.lambda = query_number<std::int64_t>(req, "lambda", metrics.lambda);
  p.seed = req.has_param("seed") ? query_number<std::uint64_t>(req, "seed", 0)
                                 : std::random_device{}() * 0x100000001ULL;
  if (p.n < 3 || p.n > kMaxServedN) throw BadRequest("n must be in [3, 40]");
  if (p.s < 1 || p.s > kMaxServedS) throw BadRequest("s must be in [1, 6]");
  return p;
}

std::string cache_name(const GenerationParams& p) {
  return "level-n" + std::to_string(p.n) + "-m" + std::to_string(p.m) + "-r" +
         std::to_string(p.removed) + "-s" + std::to_string(p.s) + "-d" + std::to_string(p.delta) +
         "-rho" + std::to_string(p.rho) + "-l" + std::to_string(p.lambda) + "-f" +
         std::to_string(p.flips) + "-seed" + std::to_string(p.seed) + ".json";
}

}  // namespace

struct PuzzleServer::Impl {
  ServeOptions options;
  httplib::Server server;
  int bound_port = -1;

  std::string level_body(const GenerationParams& p) {
    std::filesystem::path cached;
    if (!options.levels_dir.empty()) {
      cached = options.levels_dir / cache_name(p);
      std::error_code ec;
      if (std::filesystem::exists(cached, ec)) return read_text_file(cached);
    }
    const std::string body = to_json(generate_level(p).instance);
    if (!cached.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(options.levels_dir, ec);
      // Write then rename so concurrent readers never see a partial file.
      const auto tmp = cached.string() + ".tmp" + std::to_string(std::random_device{}());
      write_text_file(tmp, body);
      std::filesystem::rename(tmp, cached, ec);
    }
    return body;
  }

  void install_routes() {
    server.Get("/api/puzzle/new", [this](const httplib::Request& req, httplib::Response& res) {
      try {
        const GenerationParams p = level_params(req);
        res.set_content(level_body(p), kJson);
        res.set_header("X-Seed", std::to_string(p.seed));
      } catch (const BadRequest& e) {
        send_error(res, 400, e.what());
      } catch (const GenerationError& e) {
        send_error(res, 422, e.what());
      } catch (const std::invalid_argument& e) {
        send_error(res, 400, e.what());
      }
    });

    server.Post("/api/solve", [this](const httplib::Request& req, httplib::Response& res) {
      try {
        const PuzzleInstance inst = load_instance(req.body);
        SolveOptions so;
        so.max_depth = query_number(req, "max_depth", options.max_depth);
        if (so.max_depth < 0 || so.max_depth > options.max_depth)
          throw BadRequest("max_depth must be in [0, " + std::to_string(options.max_depth) + "]");
        so.max_states = options.max_states;
        res.set_content(to_json(min_swaps(inst, so), true), kJson);
      } catch (const InstanceFormatError& e) {
        nlohmann::json body{{"error", e.what()}};
        if (e.position() != InstanceFormatError::npos) body["position"] = e.position();
        res.status = 400;
        res.set_content(body.dump() + "\n", kJson);
      } catch (const InvalidInstance& e) {
        send_error(res, 422, e.what());
      } catch (const SearchLimitExceeded& e) {
        send_error(res, 422, e.what());
      } catch (const std::invalid_argument& e) {
        send_error(res, 400, e.what());
      }
    });

    std::error_code ec;
    if (!options.ui_dir.empty() && std::filesystem::is_directory(options.ui_dir, ec)) {
      server.set_mount_point("/", options.ui_dir.string());
    } else {
      server.Get("/", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(
            "<!doctype html><title>Swap Planarity</title>"
            "<p>No UI bundle found. The JSON API is at /api/puzzle/new and /api/solve.</p>\n",
            "text/html");
      });
    }
  }
};

PuzzleServer::PuzzleServer(ServeOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  impl_->install_routes();
}

PuzzleServer::~PuzzleServer() { stop(); }

int PuzzleServer::bind() {
  if (impl_->options.port == 0)
    impl_->bound_port = impl_->server.bind_to_any_port(impl_->options.host);
  else if (impl_->server.bind_to_port(impl_->options.host, impl_->options.port))
    impl_->bound_port = impl_->options.port;
  return impl_->bound_port;
}

bool PuzzleServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void PuzzleServer::stop() {
  if (impl_) impl_->server.stop();
}

void PuzzleServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace swapplanarity
