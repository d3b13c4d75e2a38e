#include "bkvc/config_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace bkvc {

namespace {

std::map<std::string, double*, std::less<>> slots(Configuration& c) {
  std::map<std::string, double*, std::less<>> out;
  for (int i = 0; i < kNumCuts; ++i) out.emplace(std::string(kCutNames[i]), &c.cuts[i]);
  out.emplace("mu", &c.mu);
  out.emplace("nu", &c.nu);
  out.emplace("xi", &c.xi);
  out.emplace("pi", &c.pi);
  out.emplace("lambda", &c.lambda);
  for (int i = 0; i < 6; ++i) {
    out.emplace("pi" + std::to_string(i + 1), &c.pi_frac[i]);
    out.emplace("lambda" + std::to_string(i + 1), &c.lambda_frac[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string dump_config(const Configuration& c) {
  std::string out;
  auto line = [&out](std::string_view key, double v) {
    out.append(key).append(" = ").append(fmt(v)).push_back('\n');
  };
  for (int i = 0; i < kNumCuts; ++i) line(kCutNames[i], c.cuts[i]);
  line("mu", c.mu);
  line("nu", c.nu);
  line("xi", c.xi);
  line("pi", c.pi);
  for (int i = 0; i < 6; ++i) line("pi" + std::to_string(i + 1), c.pi_frac[i]);
  line("lambda", c.lambda);
  for (int i = 0; i < 6; ++i) line("lambda" + std::to_string(i + 1), c.lambda_frac[i]);
  return out;
}

Configuration parse_config(std::string_view text) {
  Configuration c;
  auto table = slots(c);
  std::set<std::string, std::less<>> seen;
  int lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'key = value'");
    const std::string_view key = trim(raw.substr(0, eq));
    const std::string_view val = trim(raw.substr(eq + 1));
    const auto slot = table.find(key);
    if (slot == table.end()) throw ParseError(lineno, "unknown key '" + std::string(key) + "'");
    if (!seen.emplace(key).second) {
      throw ParseError(lineno, "duplicate key '" + std::string(key) + "'");
    }
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), x);
    if (ec != std::errc{} || ptr != val.data() + val.size() || val.empty()) {
      throw ParseError(lineno, "bad number '" + std::string(val) + "' for " + std::string(key));
    }
    *slot->second = x;
  }
  return c;
}

Configuration read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void write_config_file(const std::string& path, const Configuration& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump_config(c);
}

}  // namespace bkvc
