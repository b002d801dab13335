#include "gha/core/rational.hpp"

#include <cctype>

namespace gha {

namespace {

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(const std::string& s) {
    std::string t = (s[0] == '+') ? s.substr(1) : s;
    return mpz_class(t, 10);
}

}  // namespace

Q parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty rational");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den))
            throw InputError("malformed rational: " + raw);
        mpz_class d = parse_integer(den);
        if (d == 0) throw InputError("zero denominator: " + raw);
        Q q(parse_integer(num), d);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        if (!is_integer_text(ip) || (!fp.empty() && !is_integer_text(fp)) ||
            (!fp.empty() && (fp[0] == '-' || fp[0] == '+')))
            throw InputError("malformed rational: " + raw);
        mpz_class scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpz_class num = mpz_class(ip + fp, 10);
        Q q(neg ? mpz_class(-num) : num, scale);
        q.canonicalize();
        return q;
    }
    if (!is_integer_text(s)) throw InputError("malformed rational: " + raw);
    return Q(parse_integer(s));
}

std::string format_rational(const Q& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace gha
