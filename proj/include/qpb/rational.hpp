// Exact rational scalars and their text form.
//
// All algebraic identities in this library are checked over Q with exact
// arithmetic; no tolerance is involved outside qpb/numeric.hpp.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qpb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Malformed input (files, CLI options, index ranges). Distinct from a failed
// mathematical check, which is reported, not thrown.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Accepts (-?digits)(/digits)? -- e.g. "7", "-3", "3/6" (reduced to 1/2).
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t from) {
        std::size_t p = from;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        return p;
    };
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t num_end = digits(pos);
    if (num_end == pos) throw input_error("malformed rational literal: '" + std::string(text) + "'");
    BigInt num(std::string(text.substr(0, num_end)));
    BigInt den = 1;
    if (num_end < text.size()) {
        if (text[num_end] != '/') throw input_error("malformed rational literal: '" + std::string(text) + "'");
        std::size_t den_end = digits(num_end + 1);
        if (den_end != text.size() || den_end == num_end + 1)
            throw input_error("malformed rational literal: '" + std::string(text) + "'");
        den = BigInt(std::string(text.substr(num_end + 1)));
        if (den == 0) throw input_error("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

// Canonical reduced text: "p/q" with q > 1, otherwise just "p".
inline std::string emit_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

}  // namespace qpb
