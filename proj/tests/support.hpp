#pragma once

#include "eft/lmfdb_client.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <vector>

namespace eft::testing {

inline std::filesystem::path data_dir() { return EFT_TEST_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return data_dir() / "fixtures"; }

/// Fresh empty directory under the build tree.
inline std::filesystem::path scratch_dir(const std::string& name) {
  static std::mt19937_64 rng{std::random_device{}()};
  auto p = std::filesystem::path(EFT_TEST_SCRATCH_DIR) / (name + "-" + std::to_string(rng()));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline ClientOptions offline_options(const std::string& name) {
  ClientOptions o;
  o.fixture_dir = fixture_dir();
  o.cache_dir = scratch_dir(name);
  o.min_request_interval = std::chrono::milliseconds(0);
  o.backoff_base = std::chrono::milliseconds(1);
  return o;
}

/// Scripted transport: `handler` maps a request target to a response.
class FakeTransport : public HttpTransport {
public:
  using Handler = std::function<HttpResponse(const std::string& target)>;

  explicit FakeTransport(Handler handler) : handler_(std::move(handler)) {}

  HttpResponse get(const std::string& base_url, const std::string& target) override {
    {
      std::lock_guard lock(mutex_);
      targets_.push_back(target);
      times_.push_back(std::chrono::steady_clock::now());
      base_url_ = base_url;
    }
    return handler_(target);
  }

  std::size_t calls() const {
    std::lock_guard lock(mutex_);
    return targets_.size();
  }
  std::vector<std::string> targets() const {
    std::lock_guard lock(mutex_);
    return targets_;
  }
  std::vector<std::chrono::steady_clock::time_point> times() const {
    std::lock_guard lock(mutex_);
    return times_;
  }

private:
  Handler handler_;
  mutable std::mutex mutex_;
  std::vector<std::string> targets_;
  std::vector<std::chrono::steady_clock::time_point> times_;
  std::string base_url_;
};

} // namespace eft::testing
