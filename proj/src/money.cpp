#include "navecon/money.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "navecon/errors.hpp"

namespace navecon {

double round_half_even(double value, int decimals) {
  if (!std::isfinite(value)) return value;
  double scale = std::pow(10.0, decimals);
  double scaled = value * scale;
  double floor_v = std::floor(scaled);
  double frac = scaled - floor_v;
  double rounded;
  if (frac > 0.5) {
    rounded = floor_v + 1.0;
  } else if (frac < 0.5) {
    rounded = floor_v;
  } else {
    // exact tie: pick the even neighbor
    rounded = (std::fmod(floor_v, 2.0) == 0.0) ? floor_v : floor_v + 1.0;
  }
  return rounded / scale;
}

std::string format_usd(double value, int decimals) {
  double r = round_half_even(value, decimals);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, r);
  std::string digits(buf);

  // insert thousands separators into the integer part
  std::size_t start = digits.starts_with('-') ? 1 : 0;
  std::size_t dot = digits.find('.');
  std::size_t int_end = (dot == std::string::npos) ? digits.size() : dot;
  std::string out = digits.substr(0, start);
  std::size_t int_len = int_end - start;
  for (std::size_t i = 0; i < int_len; ++i) {
    if (i > 0 && (int_len - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[start + i]);
  }
  out.append(digits.substr(int_end));
  return out;
}

std::string format_usd_auto(double value) {
  return format_usd(value, std::fabs(value) >= 1.0 ? 2 : 3);
}

std::string format_shortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "0";
  return std::string(buf, ptr);
}

double parse_double_strict(const std::string& text) {
  double out = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw ValidationError("not a number: '" + text + "'");
  }
  return out;
}

}  // namespace navecon
