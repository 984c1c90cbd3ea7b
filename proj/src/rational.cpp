#include "sepsys/rational.hpp"

#include <cctype>

namespace sepsys {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    std::string num = text, den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw ParseError("malformed rational literal '" + text + "'");
    }
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_int(num) || !is_int(den))
        throw ParseError("malformed rational literal '" + text + "'");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ParseError("malformed rational literal '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string int_str(const Integer& z) {
    return z.get_str();
}

Integer common_denominator(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) {
        Rational c = v;
        c.canonicalize();
        Integer d = c.get_den();
        l = lcm(l, d);
    }
    if (l < 0) l = -l;
    return l;
}

} // namespace sepsys
