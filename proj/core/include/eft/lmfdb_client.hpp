#pragma once

// Client for the public LMFDB JSON API with an on-disk cache and offline
// fixtures.
//
// Live:        cache, then network (written to cache), then fixtures.
// CacheOnly:   cache only.
// FixtureOnly: committed fixtures only; never touches the network.
//
// Environment: EFT_CACHE_DIR overrides the cache directory, EFT_FIXTURE_DIR
// the fixture directory, EFT_LMFDB_CONFIG the endpoint configuration file.

#include "eft/records.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace eft {

enum class DataMode { Live, CacheOnly, FixtureOnly };

std::string_view to_string(DataMode m) noexcept;
DataMode data_mode_from_string(std::string_view s);

struct HttpResponse {
  int status = 0;  // 0 when the request never reached a server
  std::string body;
  std::string error;
};

/// GET of `target` (path plus query) against `base_url`. Implementations must
/// be safe to call from several threads.
class HttpTransport {
public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse get(const std::string& base_url, const std::string& target) = 0;
};

/// HTTPS transport backed by cpp-httplib.
std::shared_ptr<HttpTransport> make_default_transport(std::chrono::seconds timeout =
                                                          std::chrono::seconds(20));

struct Endpoint {
  std::string path;
  std::string query;  // with {placeholders}
};

/// Endpoint paths, query templates and response field names.
struct EndpointConfig {
  std::string base_url = "https://www.lmfdb.org";
  Endpoint newforms{"/api/mf_newforms/",
                    "level={level}&weight={weight}&char_order=1"
                    "&_fields=label,level,weight,dim,traces&_format=json"};
  Endpoint newform_by_label{"/api/mf_newforms/",
                            "label={label}&_fields=label,level,weight,dim,traces&_format=json"};
  Endpoint hecke_nf{"/api/mf_hecke_nf/", "label={label}&_fields=label,an&_format=json"};
  Endpoint curves{"/api/ec_curvedata/",
                  "conductor={conductor}&_fields=lmfdb_iso,conductor,rank&_format=json"};
  Endpoint lfunction_instances{"/api/lfunc_instances/", "url={url}&_fields=label&_format=json"};
  Endpoint lfunctions{"/api/lfunc_lfunctions/",
                      "label={label}&_fields=label,positive_zeros,order_of_vanishing,"
                      "root_number,degree&_format=json"};
  std::map<std::string, std::string> fields{
      {"data", "data"},           {"next", "next"},
      {"newform_label", "label"}, {"dim", "dim"},
      {"traces", "traces"},       {"an", "an"},
      {"class_label", "lmfdb_iso"}, {"conductor", "conductor"},
      {"rank", "rank"},           {"lfunction_label", "label"},
      {"zeros", "positive_zeros"}, {"order_of_vanishing", "order_of_vanishing"},
      {"root_number", "root_number"}};

  const std::string& field(const std::string& role) const;

  /// Missing keys keep their defaults. Throws std::runtime_error on bad JSON.
  static EndpointConfig load(const std::filesystem::path& file);
};

struct ClientOptions {
  std::filesystem::path cache_dir;
  std::filesystem::path fixture_dir;
  EndpointConfig endpoints;
  std::chrono::milliseconds min_request_interval{500};
  int max_retries = 3;
  std::chrono::milliseconds backoff_base{500};

  /// Defaults from the environment and the installed data directory.
  static ClientOptions from_environment();
};

class LmfdbClient {
public:
  explicit LmfdbClient(ClientOptions options = ClientOptions::from_environment(),
                       std::shared_ptr<HttpTransport> transport = nullptr);
  ~LmfdbClient();
  LmfdbClient(const LmfdbClient&) = delete;
  LmfdbClient& operator=(const LmfdbClient&) = delete;

  std::vector<NewformRecord> fetch_newforms(int weight, int level, DataMode mode);
  std::vector<IsogenyClassRecord> fetch_isogeny_classes(int conductor, DataMode mode);
  /// Accepts an L-function label or the label of the newform it comes from.
  ZerosRecord fetch_zeros(const std::string& label, DataMode mode);
  /// Integer-normalised a(n) of a rational newform.
  CoefficientRecord fetch_coefficients(const std::string& newform_label, DataMode mode);

  // Whole-fixture views used by the table verifications.
  std::vector<ReferenceCell> reference_table() const;
  std::vector<NewformRecord> fixture_newforms() const;
  std::vector<IsogenyClassRecord> fixture_classes(int rank) const;

  const ClientOptions& options() const noexcept { return options_; }
  std::size_t network_requests() const noexcept { return requests_.load(); }
  /// Set once a request exhausts its retries without reaching a server;
  /// later Live fetches then skip the network.
  bool offline() const noexcept { return offline_.load(); }

private:
  struct Fixtures;
  const Fixtures& fixtures() const;

  template <class T, class Parse, class Dump, class Live, class Fixture>
  T resolve(DataMode mode, const std::string& key, Parse parse, Dump dump, Live live,
            Fixture fixture);

  std::optional<std::string> read_cache(const std::string& key) const;
  void write_cache(const std::string& key, const std::string& body) const;
  std::filesystem::path cache_path(const std::string& key) const;
  std::mutex& key_mutex(const std::string& key);

  /// Rate-limited, retried GET; returns the body of every result page.
  std::vector<std::string> get_pages(const Endpoint& endpoint, const std::string& query);
  std::string fetch_one(const std::string& target);
  [[noreturn]] void schema_drift(const std::string& what, const std::string& payload) const;

  std::vector<NewformRecord> live_newforms(int weight, int level);
  std::vector<IsogenyClassRecord> live_classes(int conductor);
  ZerosRecord live_zeros(const std::string& label);
  CoefficientRecord live_coefficients(const std::string& label);

  ClientOptions options_;
  std::shared_ptr<HttpTransport> transport_;

  mutable std::once_flag fixtures_once_;
  mutable std::unique_ptr<Fixtures> fixtures_;

  std::mutex keys_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> key_mutexes_;

  std::mutex rate_mutex_;
  std::chrono::steady_clock::time_point last_request_{};
  std::atomic<std::size_t> requests_{0};
  std::atomic<bool> offline_{false};
};

} // namespace eft
