#include "eft/lmfdb_client.hpp"

#include <httplib.h>

namespace eft {

namespace {

class HttplibTransport final : public HttpTransport {
public:
  explicit HttplibTransport(std::chrono::seconds timeout) : timeout_(timeout) {}

  HttpResponse get(const std::string& base_url, const std::string& target) override {
    HttpResponse out;
    try {
      httplib::Client client(base_url);
      client.set_connection_timeout(timeout_);
      client.set_read_timeout(timeout_);
      client.set_follow_location(true);
      client.set_default_headers({{"User-Agent", "eft/0.1 (explicit-formula toolkit)"},
                                  {"Accept", "application/json"}});
      auto res = client.Get(target);
      if (!res) {
        out.error = httplib::to_string(res.error());
        return out;
      }
      out.status = res->status;
      out.body = std::move(res->body);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
    return out;
  }

private:
  std::chrono::seconds timeout_;
};

} // namespace

std::shared_ptr<HttpTransport> make_default_transport(std::chrono::seconds timeout) {
  return std::make_shared<HttplibTransport>(timeout);
}

} // namespace eft
