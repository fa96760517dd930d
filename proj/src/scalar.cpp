#include "schurder/scalar.hpp"

namespace schurder {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = t.find('/');
    auto valid_int = [](const std::string& x) {
        std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
        if (i >= x.size()) return false;
        for (; i < x.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string x) { return (!x.empty() && x[0] == '+') ? x.substr(1) : x; };
    if (slash == std::string::npos) {
        if (!valid_int(t)) throw std::invalid_argument("bad rational literal: " + s);
        return Rational(Integer(strip_plus(t)));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("bad rational literal: " + s);
    Integer d(strip_plus(den));
    if (d.is_zero()) throw std::invalid_argument("zero denominator: " + s);
    return Rational(Integer(strip_plus(num)), d);
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

}  // namespace schurder
