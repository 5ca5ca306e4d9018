#include "blockspec/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace blockspec {

std::string to_decimal(const Real& x, unsigned digits) {
    if (x == 0) return "0";
    // Significant digits -> fixed decimal places after the point.
    Real ax = abs(x);
    long mag = static_cast<long>(floor(log10(ax)).convert_to<double>());
    long places = static_cast<long>(digits) - 1 - mag;
    if (places < 0) places = 0;
    std::ostringstream os;
    os.setf(std::ios_base::fixed);
    os.precision(places);
    os << x;
    std::string s = os.str();
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    return s;
}

std::string to_decimal(const Rat& q, unsigned digits) {
    if (denominator(q) == 1) return numerator(q).convert_to<std::string>();
    ScopedPrecision guard(digits + 10);
    return to_decimal(Real(q), digits);
}

Real pow_ui(const Real& x, unsigned long n) {
    Real r(1);
    Real b = x;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Rat pow_ui(const Rat& x, unsigned long n) {
    Rat r(1);
    Rat b = x;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

}  // namespace blockspec
