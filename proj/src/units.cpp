#include "rcskit/units.hpp"
#include "rcskit/errors.hpp"

#include <cmath>
#include <string>

namespace rcskit {

double db_to_linear(double x_db) {
    if (!std::isfinite(x_db))
        throw validation_error("db_to_linear: non-finite input " + std::to_string(x_db));
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw validation_error("linear_to_db: input must be a positive finite value, got " +
                               std::to_string(x));
    return 10.0 * std::log10(x);
}

} // namespace rcskit
