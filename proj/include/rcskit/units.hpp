#ifndef RCSKIT_UNITS_HPP
#define RCSKIT_UNITS_HPP

namespace rcskit {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

// 10*log10(e): scale between natural-log units and dB.
inline constexpr double kDbPerNat = 4.342944819032518;

// 10^(x/10). Throws validation_error on non-finite input.
double db_to_linear(double x_db);

// 10*log10(x). Throws validation_error unless x > 0.
double linear_to_db(double x);

} // namespace rcskit

#endif
