#include "rsc/rational.hpp"

#include "rsc/errors.hpp"

#include <cctype>

namespace rsc {

Rational rat_pow(const Rational& base, unsigned long e) {
    if (e == 0) return Rational(1); // 0^0 = 1 by convention
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

std::string rat_str(const Rational& x) {
    return x.get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw MalformedInputError("empty rational literal");
    std::string t = s;
    auto bad = [&] { throw MalformedInputError("bad rational literal: '" + s + "'"); };
    std::size_t slash = t.find('/');
    std::size_t dot = t.find('.');
    if (slash != std::string::npos && dot != std::string::npos) bad();
    auto digits_only = [&](const std::string& u, std::size_t from) {
        if (from >= u.size()) return false;
        for (std::size_t i = from; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (dot != std::string::npos) {
        // Finite decimal -> exact rational over a power of ten.
        std::string head = t.substr(0, dot), tail = t.substr(dot + 1);
        if (!digits_only(head, start) && head.size() != start) bad();
        if (!tail.empty() && !digits_only(tail, 0)) bad();
        if (head.size() == start && tail.empty()) bad();
        std::string numstr = head + tail;
        if (numstr.size() == start) bad();
        mpz_class num(numstr, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
        Rational out(num, den);
        out.canonicalize();
        return out;
    }
    if (slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        std::size_t nstart = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
        if (!digits_only(num, nstart) || !digits_only(den, 0)) bad();
        mpz_class den_z(den, 10);
        if (den_z == 0) throw MalformedInputError("zero denominator: '" + s + "'");
        Rational out(mpz_class(num, 10), den_z);
        out.canonicalize();
        return out;
    }
    if (!digits_only(t, start)) bad();
    return Rational(mpz_class(t, 10));
}

} // namespace rsc
