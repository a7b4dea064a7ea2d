#include "fredpair/rational.hpp"

#include "fredpair/errors.hpp"

#include <ostream>

namespace fredpair {

Rational::Rational(long num, long den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0) throw validation_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    // mpq_set_str accepts "num" and "num/den"; -1 signals a bad literal.
    if (text.empty() || mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0)
        throw parse_error("bad rational literal: \"" + text + "\"");
    if (v.get_den() == 0) throw parse_error("zero denominator in rational literal: \"" + text + "\"");
    v.canonicalize();
    return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw validation_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace fredpair
