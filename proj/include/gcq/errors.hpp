#pragma once

#include <stdexcept>
#include <string>

namespace gcq {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct not_prime_power : error { using error::error; };
struct overflow : error { using error::error; };
struct field_mismatch : error { using error::error; };
struct zero_inverse : error { using error::error; };
struct division_by_zero_poly : error { using error::error; };
struct both_zero : error { using error::error; };
struct window_too_small : error { using error::error; };
struct bad_period : error { using error::error; };
struct zero_polynomial : error { using error::error; };
struct zero_sequence : error { using error::error; };
struct bad_element : error { using error::error; };
struct empty_input : error { using error::error; };
struct bound_too_small : error { using error::error; };
struct budget_exceeded : error { using error::error; };

} // namespace gcq
