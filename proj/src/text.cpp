#include "greenaug/text.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstdint>

namespace greenaug {
namespace {

struct CodePoint {
  UChar32 value;  // negative for ill-formed input
  std::size_t begin;
  std::size_t end;
};

std::vector<CodePoint> decode(std::string_view utf8) {
  std::vector<CodePoint> out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(utf8.data());
  const auto length = static_cast<std::int32_t>(utf8.size());
  std::int32_t offset = 0;
  while (offset < length) {
    const std::int32_t begin = offset;
    UChar32 c = 0;
    U8_NEXT(bytes, offset, length, c);
    out.push_back({c, static_cast<std::size_t>(begin), static_cast<std::size_t>(offset)});
  }
  return out;
}

bool is_space(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }
bool is_punct(UChar32 c) { return c >= 0 && u_ispunct(c); }

void append_utf8(std::string& out, UChar32 c) {
  char buffer[U8_MAX_LENGTH];
  std::int32_t length = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<std::uint8_t*>(buffer), length, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buffer, static_cast<std::size_t>(length));
}

}  // namespace

std::size_t count_code_points(std::string_view utf8) { return decode(utf8).size(); }

std::string trim(std::string_view utf8) {
  const auto points = decode(utf8);
  std::size_t first = 0;
  std::size_t last = points.size();
  while (first < last && is_space(points[first].value)) ++first;
  while (last > first && is_space(points[last - 1].value)) --last;
  if (first == last) return {};
  return std::string(utf8.substr(points[first].begin, points[last - 1].end - points[first].begin));
}

std::vector<std::string> tokenize(std::string_view utf8) {
  const auto points = decode(utf8);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < points.size()) {
    while (i < points.size() && is_space(points[i].value)) ++i;
    std::size_t end = i;
    while (end < points.size() && !is_space(points[end].value)) ++end;

    std::size_t first = i;
    std::size_t last = end;
    while (first < last && is_punct(points[first].value)) ++first;
    while (last > first && is_punct(points[last - 1].value)) --last;
    if (first < last) {
      std::string token;
      for (std::size_t k = first; k < last; ++k) {
        const UChar32 c = points[k].value;
        if (c < 0) {
          token.append(utf8.substr(points[k].begin, points[k].end - points[k].begin));
        } else {
          append_utf8(token, u_tolower(c));
        }
      }
      tokens.push_back(std::move(token));
    }
    i = end;
  }
  return tokens;
}

}  // namespace greenaug
