#include "raag/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace raag {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash), text), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 12) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string_view ip = text.substr(0, dot);
    bool neg = !ip.empty() && ip.front() == '-';
    std::int64_t whole = ip.empty() || ip == "-" ? 0 : parse_int(ip, text);
    std::int64_t part = frac.empty() ? 0 : parse_int(frac, text);
    Rational r(whole);
    r += Rational(neg ? -part : part, scale);
    return r;
  }
  return Rational(parse_int(text, text));
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double approximate(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace raag
