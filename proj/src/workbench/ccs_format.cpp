#include "ccs/workbench/ccs_format.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace ccs {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view rstrip(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = rstrip(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty()) lines.push_back({number, line});
  }
  return lines;
}

int parse_n(const Line& line) {
  int n = 0;
  const char* first = line.text.data();
  const char* last = first + line.text.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || first == last) throw SyntaxError(line.number, 1, "expected the point count");
  if (ptr != last) throw SyntaxError(line.number, static_cast<int>(ptr - first) + 1, "unexpected character after the point count");
  if (n < 3) throw SyntaxError(line.number, 1, "point count must be at least 3");
  return n;
}

std::vector<Sign> parse_signs(const Line& line, int n) {
  std::vector<Sign> signs;
  signs.reserve(line.text.size());
  for (std::size_t c = 0; c < line.text.size(); ++c) {
    if (line.text[c] == '+') signs.push_back(Sign::CCW);
    else if (line.text[c] == '-') signs.push_back(Sign::CW);
    else throw SyntaxError(line.number, static_cast<int>(c) + 1, "expected '+' or '-'");
  }
  const std::size_t expected = triple_count(n);
  if (signs.size() != expected) {
    throw SyntaxError(line.number, static_cast<int>(std::min(signs.size(), expected)) + 1,
                      "expected " + std::to_string(expected) + " signs, found " + std::to_string(signs.size()));
  }
  return signs;
}

std::vector<Point> parse_coords(const Line& line, int n) {
  constexpr std::string_view kPrefix = "coords:";
  if (line.text.substr(0, kPrefix.size()) != kPrefix) throw SyntaxError(line.number, 1, "expected 'coords:'");
  std::vector<Point> pts;
  std::size_t pos = kPrefix.size();
  const std::string_view t = line.text;
  while (true) {
    while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) ++pos;
    if (pos >= t.size()) break;
    const std::size_t start = pos;
    while (pos < t.size() && t[pos] != ' ' && t[pos] != '\t') ++pos;
    const std::string_view token = t.substr(start, pos - start);
    const auto comma = token.find(',');
    const int column = static_cast<int>(start) + 1;
    if (comma == std::string_view::npos) throw SyntaxError(line.number, column, "expected a point 'x,y'");
    try {
      pts.push_back({Rational::parse(token.substr(0, comma)), Rational::parse(token.substr(comma + 1))});
    } catch (const std::invalid_argument& e) {
      throw SyntaxError(line.number, column, e.what());
    }
  }
  if (static_cast<int>(pts.size()) != n) {
    throw SyntaxError(line.number, static_cast<int>(t.size()) + 1,
                      "expected " + std::to_string(n) + " points, found " + std::to_string(pts.size()));
  }
  return pts;
}

}  // namespace

PseudoConfiguration parse_ccs(std::string_view text, bool unchecked) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw SyntaxError(1, 1, "empty input");
  const int n = parse_n(lines[0]);
  if (lines.size() < 2) throw SyntaxError(lines[0].number + 1, 1, "missing sign line");
  std::vector<Sign> signs = parse_signs(lines[1], n);
  std::optional<std::vector<Point>> coords;
  if (lines.size() >= 3) coords = parse_coords(lines[2], n);
  if (lines.size() > 3) throw SyntaxError(lines[3].number, 1, "unexpected extra line");

  if (coords) {
    PseudoConfiguration from_coords = [&] {
      try {
        return PseudoConfiguration::from_points(*coords);
      } catch (const Error& e) {
        throw SyntaxError(lines[2].number, 1, e.what());
      }
    }();
    if (!std::equal(signs.begin(), signs.end(), from_coords.signs().begin())) {
      throw SyntaxError(lines[2].number, 1, "coordinates do not match the sign line");
    }
    return from_coords;
  }
  if (unchecked) return PseudoConfiguration::unchecked(n, std::move(signs));
  return PseudoConfiguration::from_signs(n, std::move(signs));
}

std::string serialize_ccs(const PseudoConfiguration& cfg) {
  std::string out = std::to_string(cfg.size()) + "\n" + cfg.sign_string() + "\n";
  if (cfg.coords()) {
    out += "coords:";
    for (const Point& p : *cfg.coords()) out += " " + p.x.to_string() + "," + p.y.to_string();
    out += "\n";
  }
  return out;
}

}  // namespace ccs
