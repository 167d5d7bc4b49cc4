#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "weblens/error.hpp"

namespace weblens {

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline bool is_host_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_';
}

}  // namespace detail

/// Lowercase registrable host name such as `example.com`.
///
/// Only `normalize_domain` (or `Domain::parse`) produces values, so every
/// instance satisfies: non-empty, at least one dot, only [a-z0-9._-], no
/// empty labels. Only a leading `www.` is removed; other subdomains stay
/// distinct domains.
class Domain {
 public:
  static Domain parse(std::string_view raw);

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const Domain&, const Domain&) = default;
  friend bool operator==(const Domain&, const Domain&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Domain& d) { return os << d.value_; }

 private:
  explicit Domain(std::string v) : value_(std::move(v)) {}
  std::string value_;
};

/// Strips scheme, `www.` prefixes, port, path, query and fragment, then
/// lowercases. Throws MalformedDomain when nothing host-like remains.
inline Domain normalize_domain(std::string_view raw) { return Domain::parse(raw); }

inline Domain Domain::parse(std::string_view raw) {
  const std::string original(raw);
  std::string s = detail::to_lower(detail::trim(raw));

  if (auto scheme = s.find("://"); scheme != std::string::npos) {
    const bool scheme_ok =
        scheme > 0 && std::isalpha(static_cast<unsigned char>(s[0])) &&
        std::all_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(scheme), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
        });
    if (!scheme_ok) throw MalformedDomain(original);
    s.erase(0, scheme + 3);
  }
  if (auto end = s.find_first_of("/?#"); end != std::string::npos) s.erase(end);
  if (auto colon = s.find(':'); colon != std::string::npos) {
    const std::string_view port(s.data() + colon + 1, s.size() - colon - 1);
    if (!std::all_of(port.begin(), port.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw MalformedDomain(original);
    }
    s.erase(colon);
  }
  if (!s.empty() && s.back() == '.') s.pop_back();

  // Repeated so that normalization stays idempotent on `www.www.x.com`.
  while (s.starts_with("www.") && s.find('.', 4) != std::string::npos) s.erase(0, 4);

  if (s.empty() || s.find('.') == std::string::npos) throw MalformedDomain(original);
  if (!std::all_of(s.begin(), s.end(), detail::is_host_char)) throw MalformedDomain(original);
  if (s.front() == '.' || s.back() == '.' || s.find("..") != std::string::npos) {
    throw MalformedDomain(original);
  }

  return Domain(std::move(s));
}

enum class ReliabilityLabel { Controversial, Verified, Unlabeled };

inline constexpr std::array<ReliabilityLabel, 3> kAllLabels = {
    ReliabilityLabel::Controversial, ReliabilityLabel::Verified, ReliabilityLabel::Unlabeled};

inline constexpr std::string_view to_string(ReliabilityLabel label) {
  switch (label) {
    case ReliabilityLabel::Controversial: return "controversial";
    case ReliabilityLabel::Verified: return "verified";
    case ReliabilityLabel::Unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

/// Case-insensitive; surrounding whitespace ignored.
inline std::optional<ReliabilityLabel> parse_label(std::string_view text) {
  const std::string lowered = detail::to_lower(detail::trim(text));
  for (auto label : kAllLabels) {
    if (lowered == to_string(label)) return label;
  }
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, ReliabilityLabel label) {
  return os << to_string(label);
}

}  // namespace weblens
