#include "qfre/rational.hpp"

#include <cctype>

namespace qfre {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    // "p/q" form
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view p = text.substr(0, slash);
        std::string_view q = text.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) return std::nullopt;
        BigInt num{std::string(p)};
        BigInt den{std::string(q)};
        if (den == 0) return std::nullopt;
        Rational r(num, den);
        return negative ? -r : r;
    }

    // decimal with optional exponent: digits [. digits] [e[+-]digits]
    std::string_view mantissa = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        std::string_view es = text.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) return std::nullopt;
        exp10 = std::stol(std::string(es));
        if (eneg) exp10 = -exp10;
    }

    std::string_view ipart = mantissa;
    std::string_view fpart;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        ipart = mantissa.substr(0, dot);
        fpart = mantissa.substr(dot + 1);
        if (fpart.empty() || !all_digits(fpart)) return std::nullopt;
    }
    if (ipart.empty()) {
        if (fpart.empty()) return std::nullopt;
    } else if (!all_digits(ipart)) {
        return std::nullopt;
    }

    std::string digits;
    digits.reserve(ipart.size() + fpart.size());
    digits.append(ipart);
    digits.append(fpart);
    if (digits.empty()) return std::nullopt;

    BigInt num{digits};
    BigInt den{1};
    long shift = exp10 - static_cast<long>(fpart.size());
    for (long i = 0; i < shift; ++i) num *= 10;
    for (long i = 0; i > shift; --i) den *= 10;
    Rational r(num, den);
    return negative ? -r : r;
}

Rational parse_rational_or_throw(std::string_view text, std::string_view what) {
    auto r = parse_rational(text);
    if (!r) {
        throw std::invalid_argument("invalid rational for " + std::string(what) + ": '" +
                                    std::string(text) + "'");
    }
    return *r;
}

}  // namespace qfre
