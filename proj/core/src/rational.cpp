#include "geocount/rational.hpp"

#include <cctype>
#include <ostream>

#include "geocount/errors.hpp"

namespace geocount {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw InvalidInput("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// mpz_set_str rejects an explicit leading plus.
std::string drop_plus(const std::string& s) { return s[0] == '+' ? s.substr(1) : s; }

}  // namespace

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_valid_integer_token(s))
            throw InvalidInput("malformed rational: '" + s + "'");
        return Rational(Integer(drop_plus(s)));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_valid_integer_token(num) || !is_valid_integer_token(den))
        throw InvalidInput("malformed rational: '" + s + "'");
    return Rational(Integer(drop_plus(num)), Integer(drop_plus(den)));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Integer Rational::round_nearest() const {
    // floor(x + 1/2): ties round up.
    Rational shifted = *this + Rational(Integer(1), Integer(2));
    return shifted.floor();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace geocount
