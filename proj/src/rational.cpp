#include "polyspace/rational.hpp"

#include <cctype>
#include <string>

#include "polyspace/errors.hpp"

namespace polyspace {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::SingularLength: return "SingularLength";
        case Errc::NotAFacet: return "NotAFacet";
        case Errc::DegenerateWall: return "DegenerateWall";
        case Errc::NonGenericSegment: return "NonGenericSegment";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::AffineIndexUsed: return "AffineIndexUsed";
        case Errc::WrongTotalDegree: return "WrongTotalDegree";
        case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
        case Errc::EmptyChamber: return "EmptyChamber";
        case Errc::EmptyTarget: return "EmptyTarget";
        case Errc::NotAdjacent: return "NotAdjacent";
        case Errc::BaseNotInSet: return "BaseNotInSet";
        case Errc::BadPartition: return "BadPartition";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

[[noreturn]] void bad(std::string_view text) {
    throw Error(Errc::ParseError, "cannot parse rational '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer ten_pow(unsigned long k) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        Integer d(std::string(den), 10);
        if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
        out = Rational(Integer(std::string(num), 10), d);
        out.canonicalize();
    } else {
        // decimal with optional exponent
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_part = s.substr(e + 1);
            bool exp_neg = false;
            if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
                exp_neg = exp_part.front() == '-';
                exp_part.remove_prefix(1);
            }
            if (!all_digits(exp_part) || exp_part.size() > 6) bad(text);
            exponent = std::stol(std::string(exp_part));
            if (exp_neg) exponent = -exponent;
            s = s.substr(0, e);
        }
        std::string digits;
        long frac_len = 0;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            auto whole = s.substr(0, dot);
            auto frac = s.substr(dot + 1);
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
                (whole.empty() && frac.empty()))
                bad(text);
            digits = std::string(whole) + std::string(frac);
            frac_len = static_cast<long>(frac.size());
        } else {
            if (!all_digits(s)) bad(text);
            digits = std::string(s);
        }
        long scale = exponent - frac_len;
        Integer mantissa(digits, 10);
        if (scale >= 0) {
            out = Rational(mantissa * ten_pow(static_cast<unsigned long>(scale)));
        } else {
            out = Rational(mantissa, ten_pow(static_cast<unsigned long>(-scale)));
            out.canonicalize();
        }
    }
    return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
    if (digits < 0) digits = 0;
    Integer scale = ten_pow(static_cast<unsigned long>(digits));
    Rational scaled = abs(value) * scale;
    // round half away from zero
    Integer q = scaled.get_num() / scaled.get_den();
    Rational remainder = scaled - Rational(q);
    if (remainder * 2 >= 1) q += 1;
    std::string body = q.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sgn(value) < 0 && q != 0) body.insert(0, "-");
    return body;
}

Rational factorial(unsigned k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return Rational(out);
}

}  // namespace polyspace
