#include "symring/rational.hpp"

#include "symring/error.hpp"

namespace symring {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw Error("empty rational literal");
    std::string s(text);
    // mpq_set_str accepts junk like "1/2/3" leniently in some bases; vet
    // the shape first: [-+]?digits[/digits]?
    auto digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view body = text;
    if (body.front() == '+' || body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    bool ok = slash == std::string_view::npos
                  ? digits(body)
                  : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
    if (!ok) throw Error("malformed rational literal '" + s + "'");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error("malformed rational literal '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw Error("zero denominator in rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace symring
