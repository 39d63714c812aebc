#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace e6 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Bad user-supplied data (CLI exit 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal identity failed; signals a modeling bug, not bad input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Canonical "p/q" form, plain "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw input_error("bad rational '" + s + "': " + e.what());
    }
}

}  // namespace e6
