#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace plumbcalc {

// All lattice arithmetic is exact: arbitrary-precision integers and
// rationals, no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
    unsigned long long budget;
    explicit BudgetExceeded(unsigned long long budget_)
        : std::runtime_error("search node budget exceeded (budget = " +
                             std::to_string(budget_) + ")"),
          budget(budget_) {}
};

// floor division, denominator must be positive
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

inline Int floor_rat(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

// nearest integer, ties toward +infinity
inline Int round_nearest(const Rat& x) {
    return floor_rat(x + Rat(1, 2));
}

// cpp_rational keeps numerator/denominator reduced with positive
// denominator, so streaming prints "p" or "p/q" as required.
inline std::string format_rational(const Rat& x) {
    return x.str();
}

inline Rat parse_rational(std::string_view text) {
    std::string s(text);
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw std::runtime_error("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

}  // namespace plumbcalc
