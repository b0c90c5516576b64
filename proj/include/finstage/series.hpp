#ifndef FINSTAGE_SERIES_HPP
#define FINSTAGE_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "finstage/exactnum.hpp"

namespace finstage {

// Harmonic partial sums up to this many terms fold term by term; longer
// ranges use balanced binary splitting.
inline constexpr unsigned long kHarmonicFoldLimit = 64;

inline constexpr unsigned long kDefaultLiouvilleCap = 7;

// Block k of the grouped harmonic series: 1/(2^(k-1)+1) + ... + 1/2^k.
struct OresmeBlock {
    unsigned long k = 0;
    BigRational sum;
    bool at_least_half = false;
    BigNat first_denominator;
    BigNat last_denominator;
    // Denominators used by 1/1 and blocks 1..k together, i.e. 2^k.
    BigNat denominators_so_far;
};

OresmeBlock oresme_block(unsigned long k);

// sum_{i=first}^{last} 1/i, exact. Empty ranges sum to 0.
BigRational harmonic_range(unsigned long first, unsigned long last);

// H_n = sum_{i=1}^{n} 1/i.
BigRational harmonic_partial(unsigned long n);

struct GeometricCheck {
    BigRational term_sum;    // 1/2 + 1/4 + ... + 1/2^n
    BigRational closed_form; // 1 - 2^-n
    bool agree = false;
};

GeometricCheck geometric_partial(unsigned long n);

// [S_n, S_n + 1/(n*n!)] with S_n = sum_{v=0}^{n} 1/v!; contains e.
struct Enclosure {
    unsigned long n = 0;
    RationalInterval interval;
};

Enclosure e_enclosure(unsigned long n);

// The decimal digits (up to `max_fraction_digits` after the point) shared by
// every number in `interval`; interval must be non-negative.
std::string certified_decimals(const RationalInterval& interval, std::size_t max_fraction_digits);

struct LiouvillePartial {
    unsigned long m = 0;
    BigRational sum;                         // sum_{v=1}^{m} 10^-v!
    std::vector<unsigned long> one_positions; // read off the exact expansion
    std::vector<unsigned long> factorials;    // 1!, 2!, ..., m!
    bool digits_match = false;               // ones exactly at the factorials, zeros elsewhere
    BigRational tail_bound;                  // 2 * 10^-(m+1)!
};

LiouvillePartial liouville_partial(unsigned long m, unsigned long cap = kDefaultLiouvilleCap);

} // namespace finstage

#endif
