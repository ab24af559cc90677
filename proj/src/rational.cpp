#include "epiprob/rational.hpp"

#include <cctype>

namespace epiprob {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat Rat::parse(const std::string& s) {
    size_t start = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) start = 1;
    size_t slash = s.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = all_digits(s, start, s.size());
    } else {
        ok = all_digits(s, start, slash) && all_digits(s, slash + 1, s.size());
    }
    if (!ok) throw input_error("bad rational literal: \"" + s + "\" (expected p or p/q)");

    mpq_class v;
    const std::string body = s[0] == '+' ? s.substr(1) : s;
    if (v.set_str(body, 10) != 0) throw input_error("bad rational literal: \"" + s + "\"");
    if (v.get_den() == 0) throw input_error("zero denominator in rational: \"" + s + "\"");
    v.canonicalize();
    return Rat(v);
}

std::string Rat::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal_string(int digits) const {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class num = v_.get_num() * scale * 2 + v_.get_den() * (is_negative() ? -1 : 1);
    mpz_class scaled = num / (v_.get_den() * 2);  // truncation toward zero = half away rounding
    bool neg = scaled < 0;
    mpz_class mag = neg ? mpz_class(-scaled) : scaled;
    std::string d = mag.get_str();
    if (static_cast<int>(d.size()) <= digits) d.insert(0, digits + 1 - d.size(), '0');
    if (digits > 0) d.insert(d.size() - digits, ".");
    return (neg ? "-" : "") + d;
}

}  // namespace epiprob
