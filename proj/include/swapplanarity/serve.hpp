#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>

namespace swapplanarity {

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 binds an ephemeral port
  std::filesystem::path levels_dir;  // optional on-disk cache of generated levels
  std::filesystem::path ui_dir;      // static files served at /, if present
  int max_depth = 6;                 // default and ceiling for /api/solve
  std::size_t max_states = 5'000'000;
};

/// JSON API for the play client:
///   GET  /api/puzzle/new?n&m&s&delta&seed[&flips&removed]  -> instance JSON
///   POST /api/solve[?max_depth=K]  (body: instance JSON)    -> solve report JSON
/// Errors come back as {"error": "..."} with a 4xx status.
class PuzzleServer {
 public:
  explicit PuzzleServer(ServeOptions options);
  ~PuzzleServer();
  PuzzleServer(const PuzzleServer&) = delete;
  PuzzleServer& operator=(const PuzzleServer&) = delete;

  /// Binds host:port (port 0 picks a free one). Returns the bound port, or -1.
  int bind();
  /// Serves on the bound socket until stop(). Blocks.
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace swapplanarity
