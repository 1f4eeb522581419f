#include "schenker/natural.hpp"

#include <cctype>
#include <stdexcept>

namespace schenker {

Natural natural_from_decimal(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("natural_from_decimal: empty string");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("natural_from_decimal: not a nonnegative decimal: '" +
                                        text + "'");
    }
    return Natural(text, 10);
}

std::string to_decimal(const Natural& x) {
    return x.get_str(10);
}

bool fits_u64(const Natural& x) {
    // unsigned long is 64 bits on every platform we target
    static_assert(sizeof(unsigned long) == 8, "LP64 platform expected");
    return x >= 0 && x.fits_ulong_p();
}

std::uint64_t to_u64(const Natural& x) {
    if (!fits_u64(x))
        throw std::overflow_error("to_u64: value does not fit in 64 bits");
    return x.get_ui();
}

Natural pow_natural(const Natural& base, unsigned long exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

} // namespace schenker
