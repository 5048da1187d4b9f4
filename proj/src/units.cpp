#include "spinrad/units.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "spinrad/constants.hpp"
#include "spinrad/errors.hpp"

namespace spinrad::units {

namespace {

// Parses the leading float and returns the remaining suffix.
double parse_prefix(std::string_view text, std::string_view& suffix,
                    std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr == begin) {
    throw ConfigError("cannot parse " + std::string(what) + " from '" +
                      std::string(text) + "'");
  }
  suffix = std::string_view(res.ptr, static_cast<size_t>(end - res.ptr));
  while (!suffix.empty() && suffix.front() == ' ') suffix.remove_prefix(1);
  return value;
}

}  // namespace

double parse_length_cm(std::string_view text) {
  std::string_view suffix;
  const double v = parse_prefix(text, suffix, "length");
  if (suffix == "nm") return v * cgs::cm_per_nm;
  if (suffix == "um" || suffix == "µm") return v * cgs::cm_per_um;
  if (suffix == "cm") return v;
  throw ConfigError("length '" + std::string(text) +
                    "' needs a unit suffix (nm, um, cm)");
}

double parse_temperature_k(std::string_view text) {
  std::string_view suffix;
  const double v = parse_prefix(text, suffix, "temperature");
  if (suffix.empty() || suffix == "K") return v;
  throw ConfigError("temperature '" + std::string(text) +
                    "' has an unknown suffix (expected K)");
}

double parse_frequency(std::string_view text) {
  std::string_view suffix;
  const double v = parse_prefix(text, suffix, "frequency");
  if (suffix.empty() || suffix == "s^-1" || suffix == "/s" ||
      suffix == "rad/s" || suffix == "1/s") {
    return v;
  }
  throw ConfigError("frequency '" + std::string(text) +
                    "' has an unknown suffix (expected s^-1)");
}

double parse_time_s(std::string_view text) {
  std::string_view suffix;
  const double v = parse_prefix(text, suffix, "time");
  if (suffix.empty() || suffix == "s") return v;
  throw ConfigError("time '" + std::string(text) +
                    "' has an unknown suffix (expected s)");
}

double parse_number(std::string_view text) {
  std::string_view suffix;
  const double v = parse_prefix(text, suffix, "number");
  if (!suffix.empty()) {
    throw ConfigError("unexpected suffix on number '" + std::string(text) +
                      "'");
  }
  return v;
}

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace spinrad::units
