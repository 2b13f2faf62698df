#ifndef OPL_RATIONAL_HPP
#define OPL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace opl {

// Exact rational scalar. All linear algebra in this project is over Q;
// there is no floating point anywhere.
using Q = mpq_class;
using Z = mpz_class;

inline Q frac(long num, long den = 1) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
Q parse_rational(const std::string& s);

std::string to_string(const Q& q);

// Bit length of the numerator, used for pivot selection.
inline size_t num_bits(const Q& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
}

}  // namespace opl

#endif
