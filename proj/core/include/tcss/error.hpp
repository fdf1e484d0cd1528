#pragma once

#include <stdexcept>
#include <string>

namespace tcss {

enum class errc {
    non_prime,
    reducible_modulus,
    not_eisenstein,
    bad_constant,
    non_unit_leading,
    precision_too_low,
    context_mismatch,
    not_divisible,
    wcap_too_small,
    zero_coefficient,
    domain_violation,
    consistency_violation,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace tcss
