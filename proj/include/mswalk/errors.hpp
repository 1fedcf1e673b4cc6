#ifndef MSWALK_ERRORS_HPP
#define MSWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mswalk {

/// Malformed input data, files, or configuration.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: degenerate model, singular matrix, screened-out fits.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mswalk

#endif
