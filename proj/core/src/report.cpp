#include "eft/applications.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>

namespace eft {

namespace {

// Display width of UTF-8 text (counts code points).
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

} // namespace

std::string render_text(const VerificationReport& report) {
  const std::vector<std::string> headers{"key", "prediction", "observation", "expected", "flag"};
  std::vector<std::size_t> width;
  for (const auto& h : headers) width.push_back(display_width(h));
  for (const auto& e : report.entries) {
    width[0] = std::max(width[0], display_width(e.key));
    width[1] = std::max(width[1], display_width(e.prediction));
    width[2] = std::max(width[2], display_width(e.observation));
    width[3] = std::max(width[3], display_width(e.expected));
  }

  std::string out = report.title + "\n";
  auto row = [&](const std::string& a, const std::string& b, const std::string& c,
                 const std::string& d, const std::string& e) {
    out += pad(a, width[0]) + "  " + pad(b, width[1]) + "  " + pad(c, width[2]) + "  " +
           pad(d, width[3]) + "  " + e + "\n";
  };
  row(headers[0], headers[1], headers[2], headers[3], headers[4]);
  for (const auto& e : report.entries) {
    row(e.key, e.prediction, e.observation, e.expected, std::string(to_string(e.flag)));
  }
  for (const auto& c : report.claims) {
    out += fmt::format("claim [{}] {}: {}\n", c.holds ? "HOLDS" : "FAILS", c.name, c.detail);
  }
  out += fmt::format("{}: {} entries, {} sound, {} violation, {} mismatch\n",
                     report.pass() ? "PASS" : "FAIL", report.entries.size(),
                     report.count(Flag::Sound), report.count(Flag::Violation),
                     report.count(Flag::Mismatch));
  return out;
}

std::string render_json(const VerificationReport& report) {
  using nlohmann::json;
  json doc;
  doc["title"] = report.title;
  doc["pass"] = report.pass();
  doc["counts"] = {{"entries", report.entries.size()},
                   {"sound", report.count(Flag::Sound)},
                   {"violation", report.count(Flag::Violation)},
                   {"mismatch", report.count(Flag::Mismatch)}};
  doc["entries"] = json::array();
  for (const auto& e : report.entries) {
    doc["entries"].push_back({{"key", e.key},
                              {"prediction", e.prediction},
                              {"observation", e.observation},
                              {"expected", e.expected},
                              {"flag", std::string(to_string(e.flag))}});
  }
  doc["claims"] = json::array();
  for (const auto& c : report.claims) {
    doc["claims"].push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  }
  return doc.dump(2);
}

} // namespace eft
