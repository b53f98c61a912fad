#include "taut/rational.hpp"

#include <ostream>

namespace taut {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw error("Rational: empty literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw error("Rational: bad literal '" + text + "'");
    if (q.get_den() == 0) throw error("Rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

long Rational::to_long() const {
    if (!is_integer()) throw error("Rational: '" + str() + "' is not an integer");
    if (!v_.get_num().fits_slong_p()) throw error("Rational: integer overflow in to_long");
    return v_.get_num().get_si();
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational Rational::falling_factorial(unsigned long n, unsigned long k) {
    mpz_class r(1);
    for (unsigned long i = 0; i < k; ++i) r *= mpz_class(n - i);
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace taut
