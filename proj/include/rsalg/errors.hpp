#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsalg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// operands from different coefficient rings
struct domain_mismatch : error {
    using error::error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& m) : error(m) {}
};

// malformed literal or file syntax
struct parse_error : error {
    using error::error;
};

// a structural invariant does not hold (e.g. grading incompatibility)
struct validation_error : error {
    using error::error;
};

// modular evaluation hit a denominator divisible by the prime
struct characteristic_error : error {
    using error::error;
};

struct incomplete_assignment : error {
    using error::error;
};

// element is not a scalar multiple of the unit
class extraction_error : public error {
public:
    using error::error;
    extraction_error(const std::string& msg, std::vector<std::size_t> coords)
        : error(msg), coords_(std::move(coords)) {}
    // basis indices where the element differs from a unit multiple
    const std::vector<std::size_t>& coordinates() const { return coords_; }

private:
    std::vector<std::size_t> coords_;
};

struct parameter_error : error {
    using error::error;
};

} // namespace rsalg
