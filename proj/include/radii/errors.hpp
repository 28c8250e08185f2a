#pragma once

#include <stdexcept>
#include <string>

namespace radii {

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotInvertible : ValidationError {
    explicit NotInvertible(const std::string& msg) : ValidationError(msg) {}
};

struct InvalidSeries : ValidationError {
    explicit InvalidSeries(const std::string& msg) : ValidationError(msg) {}
};

struct NotEtale : ValidationError {
    explicit NotEtale(const std::string& msg) : ValidationError(msg) {}
};

struct OutOfRegime : ValidationError {
    explicit OutOfRegime(const std::string& msg) : ValidationError(msg) {}
};

}  // namespace radii
