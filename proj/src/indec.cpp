#include "sphercat/indec.hpp"

#include <charconv>

#include "sphercat/error.hpp"

namespace sphercat {

std::string format_label(Indec t) { return std::to_string(t.shift) + "," + std::to_string(t.width); }

namespace {

int parse_int(std::string_view text, const std::string& whole) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::parse_error, "bad label '" + whole + "', expected i,r");
  }
  return value;
}

}  // namespace

Indec parse_label(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::parse_error, "bad label '" + text + "', expected i,r");
  const std::string_view view(text);
  Indec t{parse_int(view.substr(0, comma), text), parse_int(view.substr(comma + 1), text)};
  if (t.width < 0) throw Error(ErrorCode::parse_error, "width must be non-negative in '" + text + "'");
  return t;
}

std::vector<Indec> Window::labels() const {
  std::vector<Indec> out;
  if (empty()) return out;
  out.reserve(static_cast<std::size_t>(shift_count()) * static_cast<std::size_t>(max_width + 1));
  for (int i = shift_min; i <= shift_max; ++i)
    for (int r = 0; r <= max_width; ++r) out.push_back({i, r});
  return out;
}

}  // namespace sphercat
