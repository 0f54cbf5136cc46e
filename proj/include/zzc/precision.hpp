#pragma once

// Working precision, error types and decimal ingestion shared by every module.

#include <boost/multiprecision/mpfr.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zzc {

/// Arbitrary precision real. Expression templates are disabled so `auto`
/// always binds to a value.
using real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested accuracy cannot be reached at the configured working digits,
/// or an iterative procedure ran out of budget.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter point violates the feasibility chain.
class constraint_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text that is not a plain decimal literal.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct precision_config {
    unsigned working_digits = 50;
    real abs_tol = real("1e-20");

    void check() const
    {
        if (working_digits < 20)
            throw domain_error("working_digits must be at least 20");
        if (!(abs_tol > 0))
            throw domain_error("abs_tol must be positive");
    }
};

inline unsigned current_digits() { return real::default_precision(); }

/// Sets the process-wide mpfr precision for the lifetime of the object and
/// restores the previous value on exit. Values created inside the scope carry
/// this precision.
class working_precision {
public:
    explicit working_precision(unsigned digits) : saved_(real::default_precision())
    {
        if (digits < 20)
            throw domain_error("working_digits must be at least 20");
        real::default_precision(digits);
    }
    explicit working_precision(const precision_config& cfg) : working_precision(cfg.working_digits) {}
    ~working_precision() { real::default_precision(saved_); }

    working_precision(const working_precision&) = delete;
    working_precision& operator=(const working_precision&) = delete;

private:
    unsigned saved_;
};

/// Digits requested through ZZC_DIGITS, or `fallback` when unset or invalid.
inline unsigned digits_from_env(unsigned fallback = 50)
{
    const char* v = std::getenv("ZZC_DIGITS");
    if (v == nullptr || *v == '\0')
        return fallback;
    char* end = nullptr;
    const unsigned long d = std::strtoul(v, &end, 10);
    if (end == v || *end != '\0' || d < 20 || d > 10000)
        return fallback;
    return static_cast<unsigned>(d);
}

/// Parses a decimal literal at the current working precision. Never passes
/// through a binary double.
inline real parse_real(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
        ++i;
    s.erase(0, i);
    if (s.empty())
        throw parse_error("empty numeric literal");
    // mpfr accepts more than plain decimals (nan, inf, hex); keep to decimals.
    bool digit = false;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const char ch = s[k];
        if (ch >= '0' && ch <= '9') {
            digit = true;
            continue;
        }
        if (ch == '.' || ch == 'e' || ch == 'E')
            continue;
        if ((ch == '+' || ch == '-') && (k == 0 || s[k - 1] == 'e' || s[k - 1] == 'E'))
            continue;
        throw parse_error("not a decimal number: '" + s + "'");
    }
    if (!digit)
        throw parse_error("not a decimal number: '" + s + "'");
    try {
        return real(s);
    } catch (const std::exception&) {
        throw parse_error("not a decimal number: '" + s + "'");
    }
}

/// Decimal text that reads back to the same value at the current precision.
inline std::string to_decimal(const real& x)
{
    // numeric_limits is meaningless for variable precision; use the live setting.
    return x.str(static_cast<std::streamsize>(current_digits()) + 5, std::ios_base::scientific);
}

/// Fixed-point rendering for reports.
inline std::string to_fixed(const real& x, int decimals)
{
    return x.str(decimals, std::ios_base::fixed);
}

inline real pi() { return boost::math::constants::pi<real>(); }

} // namespace zzc
