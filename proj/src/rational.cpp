// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/rational.hpp"

#include <cctype>

#include "pmdcert/error.hpp"

namespace pmd {

Rational rational_from_string(const std::string& text) {
    const auto bad = [&]() {
        fail(ErrorCode::parse_error, "invalid rational literal: '" + text + "'");
    };
    const auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    const std::size_t slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) bad();
    mpz_class n(num), d(den);
    if (d == 0) bad();
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

} // namespace pmd
