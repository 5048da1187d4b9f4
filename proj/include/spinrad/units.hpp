#pragma once

#include <string>
#include <string_view>

namespace spinrad::units {

/// "50nm", "1um", "2.5e-4cm" -> cm. The suffix is mandatory for lengths.
double parse_length_cm(std::string_view text);

/// "0.5K" or bare number -> kelvin.
double parse_temperature_k(std::string_view text);

/// "1e6", "1e6s^-1", "1e6/s", "1e6rad/s" -> 1/s.
double parse_frequency(std::string_view text);

/// "10s", "1e3" -> seconds.
double parse_time_s(std::string_view text);

/// Bare floating-point number; throws ConfigError on trailing junk.
double parse_number(std::string_view text);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

}  // namespace spinrad::units
