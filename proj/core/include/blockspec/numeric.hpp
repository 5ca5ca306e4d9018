#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace blockspec {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer (GMP backed).
using Int = mp::mpz_int;
/// Exact rational, the coefficient type of all counting series.
using Rat = mp::mpq_rational;
/// Variable-precision float (MPFR backed); precision is set per scope.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Invalid user-supplied configuration (CLI exit code 2).
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Internal consistency failure, e.g. a counting series with a
/// non-integer coefficient (CLI exit code 3).
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sets the thread-default MPFR precision (in decimal digits) for the
/// lifetime of the guard.  Numbers constructed inside the scope keep the
/// precision they were created with.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const Rat& q) { return Real(q); }
inline Real to_real(const Int& n) { return Real(n); }

/// Plain decimal rendering with `digits` significant digits, '.' separator,
/// no exponent.  Used for every numeric CSV cell that is not an exact
/// integer, so downstream tools never see locale or scientific notation.
std::string to_decimal(const Real& x, unsigned digits);
std::string to_decimal(const Rat& q, unsigned digits);

/// x^n for nonnegative integer n.
Real pow_ui(const Real& x, unsigned long n);
Rat pow_ui(const Rat& x, unsigned long n);

}  // namespace blockspec
