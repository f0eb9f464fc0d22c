#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wheelkit {

using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

// Accepts "p", "p/q", optional leading '-'.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("parse_rat: bad literal '") + s + "'");
    }
}

} // namespace wheelkit
