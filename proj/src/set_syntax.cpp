#include "zforce/set_syntax.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include "zforce/errors.hpp"

namespace zf {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> to_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || p != end) return std::nullopt;
  return v;
}

std::string without_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

VertexSet parse_vertex_set(const Graph& g, std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    // "{1,2}" is a wrapped list, but "w_{1,2}" alone is not.
    int depth = 0;
    bool wraps = true;
    for (std::size_t k = 0; k + 1 < text.size(); ++k) {
      if (text[k] == '{') ++depth;
      if (text[k] == '}' && --depth == 0) wraps = false;
    }
    if (wraps) text = trim(text.substr(1, text.size() - 2));
  }
  VertexSet out(g.vertex_count());
  if (text.empty()) return out;

  auto add = [&](std::string_view token) {
    token = trim(token);
    if (token.empty()) throw ParameterError("empty entry in vertex set");
    if (auto id = to_int(token)) {
      if (*id < 0 || *id >= g.vertex_count()) {
        throw ParameterError("vertex " + std::string(token) + " out of range [0, " +
                             std::to_string(g.vertex_count()) + ")");
      }
      out.insert(*id);
      return;
    }
    if (auto v = g.find_label(without_spaces(token))) {
      out.insert(*v);
      return;
    }
    throw ParameterError("unknown vertex '" + std::string(token) + "'");
  };

  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth < 0) throw ParameterError("unbalanced brackets in vertex set");
    if (c == ',' && depth == 0) {
      add(text.substr(start, k - start));
      start = k + 1;
    }
  }
  if (depth != 0) throw ParameterError("unbalanced brackets in vertex set");
  add(text.substr(start));
  return out;
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    if (auto v = to_int(text)) return {*v, *v};
    throw ParameterError("bad range '" + std::string(text) + "', expected a..b");
  }
  auto lo = to_int(text.substr(0, dots));
  auto hi = to_int(text.substr(dots + 2));
  if (!lo || !hi) throw ParameterError("bad range '" + std::string(text) + "', expected a..b");
  if (*lo > *hi) throw ParameterError("empty range '" + std::string(text) + "'");
  return {*lo, *hi};
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    auto v = to_int(piece);
    if (!v) throw ParameterError("bad integer '" + std::string(trim(piece)) + "'");
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace zf
