#include "rcds/rational.hpp"

#include "rcds/error.hpp"

#include <cctype>

namespace rcds {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view token) {
    std::string_view s = token;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw error("empty numeric token");

    Int num, den = 1;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds))
            throw error("malformed fraction token '" + std::string(token) + "'");
        num = Int(std::string(ns), 10);
        den = Int(std::string(ds), 10);
        if (den == 0) throw error("zero denominator in '" + std::string(token) + "'");
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw error("malformed decimal token '" + std::string(token) + "'");
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw error("malformed decimal token '" + std::string(token) + "'");
        std::string digits = std::string(ip) + std::string(fp);
        num = digits.empty() ? Int(0) : Int(digits, 10);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    } else {
        if (!all_digits(s))
            throw error("malformed numeric token '" + std::string(token) + "'");
        num = Int(std::string(s), 10);
    }

    if (negative) num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace rcds
