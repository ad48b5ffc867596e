#include "tiltwall/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <variant>

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

using Value = std::variant<std::int64_t, bool, std::string>;

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorKind::Config, "config line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& s) {
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_str = !in_str;
    if (s[i] == '#' && !in_str) return s.substr(0, i);
  }
  return s;
}

Value parse_value(const std::string& raw, int line) {
  if (raw.empty()) fail(line, "missing value");
  if (raw == "true") return true;
  if (raw == "false") return false;
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') fail(line, "unterminated string");
    const std::string body = raw.substr(1, raw.size() - 2);
    if (body.find('"') != std::string::npos || body.find('\\') != std::string::npos) {
      fail(line, "escapes are not supported in strings");
    }
    return body;
  }
  std::string digits;
  for (char ch : raw) {
    if (ch != '_') digits += ch;
  }
  std::size_t pos = 0;
  try {
    const long long v = std::stoll(digits, &pos, 10);
    if (pos != digits.size()) fail(line, "malformed integer '" + raw + "'");
    return static_cast<std::int64_t>(v);
  } catch (const std::invalid_argument&) {
    fail(line, "malformed value '" + raw + "'");
  } catch (const std::out_of_range&) {
    fail(line, "integer out of range '" + raw + "'");
  }
}

std::int64_t as_int(const Value& v, const std::string& key, int line) {
  if (const auto* p = std::get_if<std::int64_t>(&v)) return *p;
  fail(line, key + " must be an integer");
}

bool as_bool(const Value& v, const std::string& key, int line) {
  if (const auto* p = std::get_if<bool>(&v)) return *p;
  fail(line, key + " must be true or false");
}

Rational as_rational(const Value& v, const std::string& key, int line) {
  if (const auto* p = std::get_if<std::int64_t>(&v)) return Rational(static_cast<long long>(*p));
  if (const auto* s = std::get_if<std::string>(&v)) {
    try {
      return Rational::parse(*s);
    } catch (const Error&) {
      fail(line, key + " is not a rational \"p/q\"");
    }
  }
  fail(line, key + " must be an integer or a \"p/q\" string");
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  cfg.hash = fnv1a_hex(text);
  std::string section;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "malformed section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "threefold" && section != "charge" && section != "options") {
        fail(line, "unknown section [" + section + "]");
      }
      if (!seen.insert("[" + section + "]").second) fail(line, "duplicate section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const Value v = parse_value(trim(s.substr(eq + 1)), line);
    if (section.empty()) fail(line, "key '" + key + "' outside any section");
    if (!seen.insert(section + "." + key).second) fail(line, "duplicate key " + section + "." + key);

    if (section == "threefold") {
      if (key == "h3") cfg.threefold.h3 = as_int(v, key, line);
      else if (key == "c2H") cfg.threefold.c2H = as_int(v, key, line);
      else if (key == "b2") cfg.threefold.b2 = as_int(v, key, line);
      else if (key == "tors") cfg.threefold.n_tors = as_int(v, key, line);
      else if (key == "pic_rank1") cfg.threefold.pic_rank1 = as_bool(v, key, line);
      else fail(line, "unknown key threefold." + key);
    } else if (section == "charge") {
      if (key == "betaH") cfg.charge.betaH = as_rational(v, key, line);
      else if (key == "m") cfg.charge.m = as_rational(v, key, line);
      else if (key == "n") cfg.charge.n = as_int(v, key, line);
      else if (key == "Q") {
        const auto* s2 = std::get_if<std::string>(&v);
        if (s2 && *s2 == "auto") cfg.charge.Q.reset();
        else cfg.charge.Q = as_rational(v, key, line);
      } else fail(line, "unknown key charge." + key);
    } else {
      if (key == "order") cfg.options.order = as_int(v, key, line);
      else if (key == "n_max") cfg.options.n_max = as_int(v, key, line);
      else if (key == "decimal") cfg.options.decimal = static_cast<int>(as_int(v, key, line));
      else if (key == "granularity") cfg.options.granularity = as_int(v, key, line);
      else fail(line, "unknown key options." + key);
    }
  }
  try {
    cfg.threefold.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Config, e.what());
  }
  if (cfg.charge.n < 1) throw Error(ErrorKind::Config, "charge.n must be positive");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Config, "cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace tiltwall
