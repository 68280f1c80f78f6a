#pragma once

#include <stdexcept>
#include <string>

namespace terracini {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class zero_point_error : public error {
public:
    using error::error;
};

class zero_factor_error : public error {
public:
    using error::error;
};

class zero_form_error : public error {
public:
    using error::error;
};

class degree_zero_error : public error {
public:
    using error::error;
};

class degree_too_small_error : public error {
public:
    using error::error;
};

class bad_prime_error : public error {
public:
    using error::error;
};

class not_a_root_error : public error {
public:
    using error::error;
};

class duplicate_point_error : public error {
public:
    using error::error;
};

class subset_search_too_large_error : public error {
public:
    using error::error;
};

class not_general_position_error : public error {
public:
    using error::error;
};

class chart_failure_error : public error {
public:
    using error::error;
};

class exhausted_error : public error {
public:
    using error::error;
};

class degenerate_curve_error : public error {
public:
    using error::error;
};

class unsupported_family_error : public error {
public:
    using error::error;
};

class unsupported_cell_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace terracini
