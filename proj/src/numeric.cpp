#include "yf/numeric.hpp"

#include "yf/errors.hpp"

namespace yf {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw internal_error("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_str(const BigRat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRat parse_rat(std::string_view text) {
    if (text.empty())
        throw parse_error("empty rational");
    const auto slash = text.find('/');
    const auto digits_ok = [](std::string_view s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    std::string num, den = "1";
    if (slash == std::string_view::npos) {
        num = std::string(text);
        if (!digits_ok(num))
            throw parse_error("bad rational: " + num);
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
        if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+')
            throw parse_error("bad rational: " + std::string(text));
    }
    if (num[0] == '+')
        num.erase(num.begin());
    BigInt n(num, 10), d(den, 10);
    if (d == 0)
        throw parse_error("zero denominator: " + std::string(text));
    return make_rat(n, d);
}

std::string int_str(const BigInt& n) {
    return n.get_str();
}

std::string approx_decimal(const BigRat& q, int digits) {
    if (digits < 0)
        throw precondition_error("approx_decimal: negative digit count");
    const bool neg = q < 0;
    BigRat a = neg ? BigRat(-q) : q;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(|q| * 10^digits), half away from zero
    BigInt num = a.get_num() * scale;
    BigInt den = a.get_den();
    BigInt quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den)
        quot += 1;
    BigInt ipart = quot / scale;
    BigInt fpart = quot % scale;
    std::string out = neg && quot != 0 ? "-" : "";
    out += ipart.get_str();
    if (digits > 0) {
        std::string frac = fpart.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

} // namespace yf
