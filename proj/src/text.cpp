#include "splitplane/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include <json.hpp>

namespace splitplane {

std::string format_shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string format_fixed17(double v) {
  if (v == 0.0) return "0";  // also folds -0 so outputs are sign-stable
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_string(const DoubleNumber& h) {
  std::string out = format_shortest(h.t());
  out += std::signbit(h.x()) ? '-' : '+';
  out += format_shortest(std::abs(h.x()));
  out += 'j';
  return out;
}

namespace {

[[noreturn]] void bad(std::string_view text, std::size_t pos, const char* what) {
  throw SyntaxError(pos, std::string(what) + " in double number '" + std::string(text) + "'");
}

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() const { return pos >= s.size(); }
  char peek() const { return at_end() ? '\0' : s[pos]; }

  // Unsigned real literal; returns false (without consuming) if none is present.
  bool number(double& out) {
    if (at_end() || !(std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) return false;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), out);
    if (ec != std::errc()) bad(s, pos, "malformed number");
    pos = static_cast<std::size_t>(ptr - s.data());
    return true;
  }
};

// Parses one signed term: [sign] (number [j] | j). Sets is_imag.
double term(Scanner& sc, bool& is_imag, bool leading) {
  sc.skip_ws();
  double sign = 1.0;
  if (sc.peek() == '+' || sc.peek() == '-') {
    sign = sc.peek() == '-' ? -1.0 : 1.0;
    ++sc.pos;
    sc.skip_ws();
  } else if (!leading) {
    bad(sc.s, sc.pos, "expected '+' or '-'");
  }
  double value = 1.0;
  const bool had_number = sc.number(value);
  sc.skip_ws();
  is_imag = false;
  if (sc.peek() == 'j') {
    is_imag = true;
    ++sc.pos;
  } else if (!had_number) {
    bad(sc.s, sc.pos, "expected a number");
  }
  return sign * value;
}

}  // namespace

DoubleNumber parse_double_number(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SyntaxError(e.byte, "malformed JSON double number");
    }
    if (!j.is_object() || !j.contains("t") || !j.contains("x") || !j["t"].is_number() ||
        !j["x"].is_number()) {
      throw SyntaxError(first, "JSON double number needs numeric fields t and x");
    }
    return DoubleNumber(j["t"].get<double>(), j["x"].get<double>());
  }

  Scanner sc{text, first};
  double t = 0.0, x = 0.0;
  bool imag = false;
  const double v1 = term(sc, imag, true);
  (imag ? x : t) = v1;
  sc.skip_ws();
  if (!sc.at_end()) {
    if (imag) bad(text, sc.pos, "imaginary part must come last");
    bool imag2 = false;
    const double v2 = term(sc, imag2, false);
    if (!imag2) bad(text, sc.pos, "second term must carry the j suffix");
    x = v2;
    sc.skip_ws();
    if (!sc.at_end()) bad(text, sc.pos, "trailing characters");
  }
  return DoubleNumber(t, x);
}

}  // namespace splitplane
