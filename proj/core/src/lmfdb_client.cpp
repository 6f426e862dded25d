#include "eft/lmfdb_client.hpp"

#include "eft/errors.hpp"
#include "json_support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#ifndef EFT_DEFAULT_DATA_DIR
#define EFT_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;

namespace eft {

std::string_view to_string(DataMode m) noexcept {
  switch (m) {
  case DataMode::Live: return "live";
  case DataMode::CacheOnly: return "cache-only";
  case DataMode::FixtureOnly: return "fixture-only";
  }
  return "?";
}

DataMode data_mode_from_string(std::string_view s) {
  if (s == "live") return DataMode::Live;
  if (s == "cache-only" || s == "cache") return DataMode::CacheOnly;
  if (s == "fixture-only" || s == "fixture" || s == "offline") return DataMode::FixtureOnly;
  throw std::invalid_argument("unknown data mode '" + std::string(s) +
                              "' (expected live, cache-only or fixture-only)");
}

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const fs::path& target, const std::string& body) {
  fs::create_directories(target.parent_path());
  thread_local std::mt19937_64 rng{std::random_device{}()};
  const fs::path tmp =
      target.parent_path() / (".tmp-" + std::to_string(rng()) + "-" + target.filename().string());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << body;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto " + target.string() + ": " + ec.message());
  }
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 0xF];
  return out;
}

std::string url_encode(std::string_view s) {
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 0xF]);
    }
  }
  return out;
}

std::string fill(std::string tmpl, const std::map<std::string, std::string>& values) {
  for (const auto& [name, value] : values) {
    const std::string marker = "{" + name + "}";
    for (auto pos = tmpl.find(marker); pos != std::string::npos; pos = tmpl.find(marker, pos)) {
      const std::string encoded = url_encode(value);
      tmpl.replace(pos, marker.size(), encoded);
      pos += encoded.size();
    }
  }
  return tmpl;
}

bool is_newform_label(const std::string& label) {
  return std::count(label.begin(), label.end(), '.') == 3 &&
         label.find('-') == std::string::npos;
}

// "11.2.a.a" -> {11, 2}
std::pair<int, int> level_weight_of(const std::string& newform_label) {
  std::istringstream ss(newform_label);
  std::string level, weight;
  std::getline(ss, level, '.');
  std::getline(ss, weight, '.');
  try {
    return {std::stoi(level), std::stoi(weight)};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed newform label '" + newform_label + "'");
  }
}

// Accepts numbers or numeric strings, which the API uses interchangeably.
double as_double(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return std::stod(v.get<std::string>());
  throw std::invalid_argument("not a number");
}

std::int64_t as_int(const json& v) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) return std::stoll(v.get<std::string>());
  if (v.is_number()) {
    const double d = v.get<double>();
    if (d == std::floor(d)) return static_cast<std::int64_t>(d);
  }
  throw std::invalid_argument("not an integer");
}

} // namespace

// ---------------------------------------------------------------------------

const std::string& EndpointConfig::field(const std::string& role) const {
  const auto it = fields.find(role);
  if (it == fields.end()) throw std::out_of_range("no field configured for '" + role + "'");
  return it->second;
}

EndpointConfig EndpointConfig::load(const fs::path& file) {
  EndpointConfig cfg;
  json doc;
  try {
    doc = json::parse(read_file(file));
  } catch (const json::exception& e) {
    throw std::runtime_error("bad endpoint config " + file.string() + ": " + e.what());
  }
  cfg.base_url = doc.value("base_url", cfg.base_url);
  if (doc.contains("endpoints")) {
    const json& eps = doc["endpoints"];
    auto take = [&eps](const char* name, Endpoint& target) {
      if (!eps.contains(name)) return;
      target.path = eps[name].value("path", target.path);
      target.query = eps[name].value("query", target.query);
    };
    take("newforms", cfg.newforms);
    take("newform_by_label", cfg.newform_by_label);
    take("hecke_nf", cfg.hecke_nf);
    take("curves", cfg.curves);
    take("lfunction_instances", cfg.lfunction_instances);
    take("lfunctions", cfg.lfunctions);
  }
  if (doc.contains("fields")) {
    for (const auto& [role, name] : doc["fields"].items()) {
      cfg.fields[role] = name.get<std::string>();
    }
  }
  return cfg;
}

ClientOptions ClientOptions::from_environment() {
  ClientOptions o;
  const char* data_env = std::getenv("EFT_DATA_DIR");
  const fs::path data_dir = data_env && *data_env ? fs::path(data_env) : fs::path(EFT_DEFAULT_DATA_DIR);

  if (const char* f = std::getenv("EFT_FIXTURE_DIR"); f && *f) {
    o.fixture_dir = f;
  } else {
    o.fixture_dir = data_dir / "fixtures";
  }

  if (const char* c = std::getenv("EFT_CACHE_DIR"); c && *c) {
    o.cache_dir = c;
  } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    o.cache_dir = fs::path(xdg) / "eft";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    o.cache_dir = fs::path(home) / ".cache" / "eft";
  } else {
    o.cache_dir = fs::temp_directory_path() / "eft-cache";
  }

  fs::path config = data_dir / "config" / "lmfdb_endpoints.json";
  if (const char* c = std::getenv("EFT_LMFDB_CONFIG"); c && *c) config = c;
  if (fs::exists(config)) o.endpoints = EndpointConfig::load(config);
  return o;
}

// ---------------------------------------------------------------------------

struct LmfdbClient::Fixtures {
  std::vector<ReferenceCell> reference;
  std::vector<NewformRecord> newforms;
  std::map<int, int> max_level;  // weight -> highest level covered
  std::map<int, std::vector<IsogenyClassRecord>> classes;  // by rank
  std::set<int> empty_conductors;
  std::vector<ZerosRecord> zeros;
  std::vector<CoefficientRecord> coefficients;
  std::vector<std::string> problems;
};

LmfdbClient::LmfdbClient(ClientOptions options, std::shared_ptr<HttpTransport> transport)
    : options_(std::move(options)), transport_(std::move(transport)) {}

LmfdbClient::~LmfdbClient() = default;

const LmfdbClient::Fixtures& LmfdbClient::fixtures() const {
  std::call_once(fixtures_once_, [this] {
    auto fx = std::make_unique<Fixtures>();
    const fs::path dir = options_.fixture_dir;
    auto load = [&](const char* name, auto&& body) {
      try {
        body(json::parse(read_file(dir / name)));
      } catch (const std::exception& e) {
        fx->problems.push_back(std::string(name) + ": " + e.what());
      }
    };
    load("table1.json", [&](const json& doc) {
      fx->reference = doc.at("reference_table").get<std::vector<ReferenceCell>>();
      fx->newforms = doc.at("newforms").get<std::vector<NewformRecord>>();
      for (const auto& c : doc.at("coverage")) {
        fx->max_level[c.at("weight").get<int>()] = c.at("max_level").get<int>();
      }
    });
    for (const char* name : {"rank1_classes.json", "rank2_classes.json"}) {
      load(name, [&](const json& doc) {
        const int rank = doc.at("rank").get<int>();
        fx->classes[rank] = doc.at("classes").get<std::vector<IsogenyClassRecord>>();
        for (int n : doc.value("empty_conductors", std::vector<int>{})) {
          fx->empty_conductors.insert(n);
        }
      });
    }
    std::error_code ec;
    std::vector<fs::path> zero_files;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind("zeros_", 0) == 0 && entry.path().extension() == ".json") {
        zero_files.push_back(entry.path());
      }
    }
    std::sort(zero_files.begin(), zero_files.end());
    for (const auto& p : zero_files) {
      load(p.filename().string().c_str(), [&](const json& doc) {
        fx->zeros.push_back(doc.get<ZerosRecord>());
        if (doc.contains("dirichlet_coefficients")) {
          fx->coefficients.push_back(doc.get<CoefficientRecord>());
        }
      });
    }
    fixtures_ = std::move(fx);
  });
  return *fixtures_;
}

std::vector<ReferenceCell> LmfdbClient::reference_table() const {
  const auto& fx = fixtures();
  if (fx.reference.empty()) {
    throw DataUnavailable("reference table fixture missing under " +
                          options_.fixture_dir.string());
  }
  return fx.reference;
}

std::vector<NewformRecord> LmfdbClient::fixture_newforms() const { return fixtures().newforms; }

std::vector<IsogenyClassRecord> LmfdbClient::fixture_classes(int rank) const {
  const auto& fx = fixtures();
  const auto it = fx.classes.find(rank);
  if (it == fx.classes.end()) {
    throw DataUnavailable("no fixture of rank-" + std::to_string(rank) + " isogeny classes under " +
                          options_.fixture_dir.string());
  }
  return it->second;
}

// ---------------------------------------------------------------------------

fs::path LmfdbClient::cache_path(const std::string& key) const {
  const auto q = key.find('?');
  std::string prefix;
  for (char c : key.substr(0, q)) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') prefix.push_back(c);
  }
  return options_.cache_dir / (prefix + "-" + hex(fnv1a(key)) + ".json");
}

std::optional<std::string> LmfdbClient::read_cache(const std::string& key) const {
  const fs::path p = cache_path(key);
  std::error_code ec;
  if (!fs::exists(p, ec)) return std::nullopt;
  try {
    const json doc = json::parse(read_file(p));
    if (doc.value("key", std::string{}) != key) return std::nullopt;  // hash collision
    return doc.at("records").dump();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void LmfdbClient::write_cache(const std::string& key, const std::string& body) const {
  json doc{{"key", key}, {"records", json::parse(body)}};
  write_file_atomic(cache_path(key), doc.dump(1));
}

std::mutex& LmfdbClient::key_mutex(const std::string& key) {
  std::lock_guard lock(keys_mutex_);
  auto& slot = key_mutexes_[key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

template <class T, class Parse, class Dump, class Live, class Fixture>
T LmfdbClient::resolve(DataMode mode, const std::string& key, Parse parse, Dump dump, Live live,
                       Fixture fixture) {
  if (mode == DataMode::FixtureOnly) return fixture();
  if (mode == DataMode::CacheOnly) {
    if (auto cached = read_cache(key)) return parse(*cached);
    throw DataUnavailable("no cached response for " + key + " in " + options_.cache_dir.string());
  }
  std::lock_guard single_flight(key_mutex(key));
  if (auto cached = read_cache(key)) return parse(*cached);
  std::string network_error;
  try {
    T value = live();
    write_cache(key, dump(value));
    return value;
  } catch (const DataUnavailable& e) {
    network_error = e.what();
  }
  try {
    return fixture();
  } catch (const DataUnavailable& e) {
    throw DataUnavailable(network_error + "; " + e.what());
  }
}

// ---------------------------------------------------------------------------

std::string LmfdbClient::fetch_one(const std::string& target) {
  {
    std::lock_guard lock(rate_mutex_);
    if (!transport_) transport_ = make_default_transport();
  }
  if (offline_.load()) {
    throw DataUnavailable("network unreachable earlier in this session; skipped GET " + target);
  }
  std::string last_error;
  bool reached_server = false;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(options_.backoff_base * (1 << (attempt - 1)));
    {
      std::lock_guard lock(rate_mutex_);
      const auto now = std::chrono::steady_clock::now();
      const auto ready = last_request_ + options_.min_request_interval;
      if (requests_.load() > 0 && now < ready) std::this_thread::sleep_until(ready);
      last_request_ = std::chrono::steady_clock::now();
      requests_.fetch_add(1);
    }
    const HttpResponse r = transport_->get(options_.endpoints.base_url, target);
    if (r.status == 200) return r.body;
    reached_server = reached_server || r.status != 0;
    last_error = r.status == 0 ? r.error : "HTTP " + std::to_string(r.status);
    const bool transient = r.status == 0 || r.status == 429 || r.status >= 500;
    if (!transient) break;
  }
  if (!reached_server) offline_.store(true);
  throw DataUnavailable("GET " + options_.endpoints.base_url + target + " failed: " + last_error);
}

void LmfdbClient::schema_drift(const std::string& what, const std::string& payload) const {
  const fs::path p =
      options_.cache_dir / "schema-drift" / (hex(fnv1a(payload)) + ".json");
  try {
    write_file_atomic(p, payload);
  } catch (const std::exception&) {
    // keep the original diagnosis even if the payload cannot be saved
  }
  throw SchemaDrift(what, p.string());
}

std::vector<std::string> LmfdbClient::get_pages(const Endpoint& endpoint,
                                                const std::string& query) {
  constexpr int kMaxPages = 50;
  std::vector<std::string> pages;
  std::string target = endpoint.path + "?" + query;
  const std::string& next_field = options_.endpoints.field("next");
  for (int page = 0; page < kMaxPages; ++page) {
    std::string body = fetch_one(target);
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::exception& e) {
      schema_drift(std::string("response from ") + endpoint.path + " is not JSON", body);
    }
    if (!doc.is_object() || !doc.contains(options_.endpoints.field("data")) ||
        !doc[options_.endpoints.field("data")].is_array()) {
      schema_drift(std::string("response from ") + endpoint.path + " has no data array", body);
    }
    std::string next;
    if (doc.contains(next_field) && doc[next_field].is_string()) {
      next = doc[next_field].get<std::string>();
    }
    pages.push_back(std::move(body));
    if (next.empty()) break;
    target = next;
  }
  return pages;
}

// ---------------------------------------------------------------------------

std::vector<NewformRecord> LmfdbClient::live_newforms(int weight, int level) {
  const auto& cfg = options_.endpoints;
  const auto& f = cfg.fields;
  std::vector<NewformRecord> out;
  const auto pages = get_pages(
      cfg.newforms,
      fill(cfg.newforms.query, {{"level", std::to_string(level)}, {"weight", std::to_string(weight)}}));
  for (const auto& body : pages) {
    const json doc = json::parse(body);
    for (const auto& item : doc[f.at("data")]) {
      std::string label;
      int dim = 0;
      json traces;
      try {
        label = item.at(f.at("newform_label")).get<std::string>();
        dim = static_cast<int>(as_int(item.at(f.at("dim"))));
        traces = item.at(f.at("traces"));
      } catch (const std::exception& e) {
        schema_drift("newform entry lacks label/dim/traces: " + std::string(e.what()), body);
      }
      std::optional<std::int64_t> a2;
      if (dim == 1) {
        if (!traces.is_array() || traces.size() < 2) {
          schema_drift("traces of " + label + " are too short", body);
        }
        a2 = as_int(traces[1]);
      } else {
        // a(2) is rational iff its coordinates in the Hecke ring basis
        // (whose first element is 1) vanish beyond the first.
        const auto nf_pages = get_pages(cfg.hecke_nf, fill(cfg.hecke_nf.query, {{"label", label}}));
        const json nf = json::parse(nf_pages.front());
        const auto& data = nf[f.at("data")];
        if (!data.empty() && data[0].contains(f.at("an"))) {
          const json& an = data[0][f.at("an")];
          if (an.is_array() && an.size() >= 2 && an[1].is_array() && !an[1].empty()) {
            const json& coords = an[1];
            bool rational = true;
            for (std::size_t i = 1; i < coords.size(); ++i) rational &= as_int(coords[i]) == 0;
            if (rational) a2 = as_int(coords[0]);
          }
        }
      }
      out.push_back(make_newform_record(label, weight, level, dim, a2));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const NewformRecord& a, const NewformRecord& b) { return a.label < b.label; });
  return out;
}

std::vector<IsogenyClassRecord> LmfdbClient::live_classes(int conductor) {
  const auto& cfg = options_.endpoints;
  const auto& f = cfg.fields;
  std::map<std::string, int> rank_of;
  const auto pages =
      get_pages(cfg.curves, fill(cfg.curves.query, {{"conductor", std::to_string(conductor)}}));
  for (const auto& body : pages) {
    const json doc = json::parse(body);
    for (const auto& item : doc[f.at("data")]) {
      try {
        rank_of[item.at(f.at("class_label")).get<std::string>()] =
            static_cast<int>(as_int(item.at(f.at("rank"))));
      } catch (const std::exception& e) {
        schema_drift("curve entry lacks class label/rank: " + std::string(e.what()), body);
      }
    }
  }
  std::vector<IsogenyClassRecord> out;
  for (const auto& [label, rank] : rank_of) {
    IsogenyClassRecord r;
    r.conductor = conductor;
    r.class_label = label;
    r.rank = rank;
    r.classes_at_conductor = static_cast<int>(rank_of.size());
    r.validate();
    out.push_back(std::move(r));
  }
  return out;
}

ZerosRecord LmfdbClient::live_zeros(const std::string& label) {
  const auto& cfg = options_.endpoints;
  const auto& f = cfg.fields;
  ZerosRecord rec;
  std::string lfunction = label;
  if (is_newform_label(label)) {
    std::string url = "ModularForm/GL2/Q/holomorphic/" + label;
    std::replace(url.begin() + 30, url.end(), '.', '/');
    const auto pages =
        get_pages(cfg.lfunction_instances, fill(cfg.lfunction_instances.query, {{"url", url}}));
    const json doc = json::parse(pages.front());
    const auto& data = doc[f.at("data")];
    if (data.empty()) throw DataUnavailable("no L-function registered for " + label);
    try {
      lfunction = data[0].at(f.at("lfunction_label")).get<std::string>();
    } catch (const std::exception& e) {
      schema_drift("instance entry lacks label: " + std::string(e.what()), pages.front());
    }
    rec.newform_label = label;
    std::tie(rec.level, rec.weight) = level_weight_of(label);
  }
  const auto pages = get_pages(cfg.lfunctions, fill(cfg.lfunctions.query, {{"label", lfunction}}));
  const json doc = json::parse(pages.front());
  const auto& data = doc[f.at("data")];
  if (data.empty()) throw DataUnavailable("no L-function with label " + lfunction);
  try {
    const json& item = data[0];
    rec.lfunction_label = lfunction;
    for (const auto& z : item.at(f.at("zeros"))) rec.positive_ordinates.push_back(as_double(z));
    std::sort(rec.positive_ordinates.begin(), rec.positive_ordinates.end());
    rec.completeness_height =
        rec.positive_ordinates.empty() ? 0.0 : rec.positive_ordinates.back();
    rec.analytic_rank = static_cast<int>(as_int(item.at(f.at("order_of_vanishing"))));
    if (item.contains(f.at("root_number"))) {
      rec.sign = static_cast<int>(std::lround(as_double(item.at(f.at("root_number")))));
    }
    if (item.contains("degree")) rec.degree = static_cast<int>(as_int(item.at("degree")));
  } catch (const SchemaDrift&) {
    throw;
  } catch (const std::exception& e) {
    schema_drift("L-function entry malformed: " + std::string(e.what()), pages.front());
  }
  rec.validate();
  return rec;
}

CoefficientRecord LmfdbClient::live_coefficients(const std::string& label) {
  const auto& cfg = options_.endpoints;
  const auto& f = cfg.fields;
  const auto pages =
      get_pages(cfg.newform_by_label, fill(cfg.newform_by_label.query, {{"label", label}}));
  const json doc = json::parse(pages.front());
  const auto& data = doc[f.at("data")];
  if (data.empty()) throw DataUnavailable("no newform with label " + label);
  CoefficientRecord rec;
  rec.newform_label = label;
  std::tie(rec.level, rec.weight) = level_weight_of(label);
  try {
    if (as_int(data[0].at(f.at("dim"))) != 1) {
      throw DataUnavailable(label + " has a non-rational coefficient field");
    }
    for (const auto& t : data[0].at(f.at("traces"))) rec.coefficients.push_back(as_int(t));
  } catch (const DataUnavailable&) {
    throw;
  } catch (const std::exception& e) {
    schema_drift("newform entry lacks dim/traces: " + std::string(e.what()), pages.front());
  }
  return rec;
}

// ---------------------------------------------------------------------------

std::vector<NewformRecord> LmfdbClient::fetch_newforms(int weight, int level, DataMode mode) {
  if (weight < 1 || level < 1) throw std::invalid_argument("weight and level must be >= 1");
  const auto& ep = options_.endpoints.newforms;
  const std::string key =
      ep.path + "?" +
      fill(ep.query, {{"level", std::to_string(level)}, {"weight", std::to_string(weight)}});
  return resolve<std::vector<NewformRecord>>(
      mode, key, [](const std::string& s) { return newforms_from_json(s); },
      [](const std::vector<NewformRecord>& v) { return newforms_to_json(v); },
      [&] { return live_newforms(weight, level); },
      [&] {
        const auto& fx = fixtures();
        const auto it = fx.max_level.find(weight);
        if (it == fx.max_level.end() || level > it->second) {
          throw DataUnavailable("fixtures do not cover S_" + std::to_string(weight) + "(" +
                                std::to_string(level) + ")");
        }
        std::vector<NewformRecord> out;
        for (const auto& r : fx.newforms) {
          if (r.weight == weight && r.level == level) out.push_back(r);
        }
        return out;
      });
}

std::vector<IsogenyClassRecord> LmfdbClient::fetch_isogeny_classes(int conductor, DataMode mode) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  const auto& ep = options_.endpoints.curves;
  const std::string key =
      ep.path + "?" + fill(ep.query, {{"conductor", std::to_string(conductor)}});
  return resolve<std::vector<IsogenyClassRecord>>(
      mode, key, [](const std::string& s) { return classes_from_json(s); },
      [](const std::vector<IsogenyClassRecord>& v) { return classes_to_json(v); },
      [&] { return live_classes(conductor); },
      [&] {
        const auto& fx = fixtures();
        if (fx.empty_conductors.count(conductor)) return std::vector<IsogenyClassRecord>{};
        std::vector<IsogenyClassRecord> out;
        for (const auto& [rank, rows] : fx.classes) {
          for (const auto& r : rows) {
            if (r.conductor == conductor) out.push_back(r);
          }
        }
        if (out.empty()) {
          throw DataUnavailable("fixtures carry no isogeny classes of conductor " +
                                std::to_string(conductor));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
          return a.class_label < b.class_label;
        });
        return out;
      });
}

ZerosRecord LmfdbClient::fetch_zeros(const std::string& label, DataMode mode) {
  const std::string key = options_.endpoints.lfunctions.path + "?zeros=" + label;
  return resolve<ZerosRecord>(
      mode, key, [](const std::string& s) { return zeros_from_json(s); },
      [](const ZerosRecord& z) { return zeros_to_json(z); }, [&] { return live_zeros(label); },
      [&] {
        for (const auto& z : fixtures().zeros) {
          if (z.lfunction_label == label || z.newform_label == label) return z;
        }
        throw DataUnavailable("no zeros fixture for '" + label + "'");
      });
}

CoefficientRecord LmfdbClient::fetch_coefficients(const std::string& newform_label,
                                                  DataMode mode) {
  const auto& ep = options_.endpoints.newform_by_label;
  const std::string key = ep.path + "?" + fill(ep.query, {{"label", newform_label}});
  return resolve<CoefficientRecord>(
      mode, key, [](const std::string& s) { return coefficients_from_json(s); },
      [](const CoefficientRecord& c) { return coefficients_to_json(c); },
      [&] { return live_coefficients(newform_label); },
      [&] {
        for (const auto& c : fixtures().coefficients) {
          if (c.newform_label == newform_label) return c;
        }
        throw DataUnavailable("no coefficient fixture for '" + newform_label + "'");
      });
}

} // namespace eft
