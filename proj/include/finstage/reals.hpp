#ifndef FINSTAGE_REALS_HPP
#define FINSTAGE_REALS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "finstage/exactnum.hpp"

namespace finstage {

enum class RealKind { Rational, SqrtFrac, EulerFrac, LiouvilleTau };

std::string_view kind_name(RealKind kind);

// A real x in (0, 1) emitted one binary digit at a time. After d bits the
// emitted prefix P satisfies P/2^d <= x < (P+1)/2^d, and every kind keeps an
// integer certificate for that sandwich:
//
//   Rational p/q      long division, P*q <= p*2^d < (P+1)*q
//   SqrtFrac a/b      (P + s*2^d)^2 * b <= a*4^d < (P + 1 + s*2^d)^2 * b,
//                     s = floor(sqrt(a/b))
//   EulerFrac         e - 2 enclosed by [S_n - 2, S_n - 2 + 1/(n*n!)],
//                     S_n = sum_{v=0}^{n} 1/v!
//   LiouvilleTau      sum 10^-v! enclosed by [T_m, T_m + 2*10^-(m+1)!]
//
// Enclosure kinds emit a bit only once the enclosure sits strictly on one
// side of the midpoint of the current dyadic interval. Dyadic rationals use
// the terminating expansion.
//
// Instances are single-consumer generators; copies are independent.
class ComputableReal {
public:
    static ComputableReal rational(const BigRational& value);
    // Fractional part of sqrt(a/b).
    static ComputableReal sqrt_frac(const BigNat& a, const BigNat& b);
    static ComputableReal euler_frac();
    static ComputableReal liouville_tau();

    // "sqrt2", "e", "tau" or "rat:p/q".
    static ComputableReal from_name(std::string_view name);

    RealKind kind() const noexcept;
    const std::string& name() const noexcept { return name_; }

    int next_bit();
    // First `depth` bits; advances the stream only as far as needed.
    BinaryString prefix(std::size_t depth);

    std::size_t depth() const noexcept { return bits_.size(); }
    const BinaryString& emitted_bits() const noexcept { return bits_; }
    // P_d, the emitted prefix read as an integer.
    const BigNat& emitted() const noexcept { return prefix_value_; }

    // Re-checks the kind-specific integer inequality at the current depth.
    bool certify() const;
    // Certifies x > P_d / 2^d, i.e. the expansion does not stop at depth d.
    bool strictly_above_prefix() const;

    // Rational inputs that are dyadic land exactly on a prefix boundary; the
    // first depth where that happened (the terminating convention applies).
    std::optional<std::size_t> boundary_ambiguity() const noexcept { return boundary_depth_; }

    bool is_dyadic() const;
    std::optional<BigRational> exact_value() const;

    // Index of the enclosure used by EulerFrac (n) or LiouvilleTau (m).
    std::optional<unsigned long> enclosure_index() const;

private:
    struct RationalState {
        BigNat p, q;
        BigNat remainder; // p*2^d - P*q
    };
    struct SqrtState {
        BigNat a, b;
        BigNat offset;  // floor(sqrt(a/b))
        BigNat scaled;  // P + offset*2^d
        BigNat a_pow4;  // a*4^d
    };
    struct EulerState {
        unsigned long n = 1;
        BigNat sum_scaled = 2; // n! * S_n
        BigNat fact = 1;       // n!
    };
    struct LiouvilleState {
        unsigned long m = 1;
        BigRational partial{BigInt(1), BigInt(10)};
    };
    using State = std::variant<RationalState, SqrtState, EulerState, LiouvilleState>;

    ComputableReal(std::string name, State state);

    RationalInterval enclosure() const;
    void refine();

    std::string name_;
    State state_;
    BinaryString bits_;
    BigNat prefix_value_ = 0;
    std::optional<std::size_t> boundary_depth_;
};

} // namespace finstage

#endif
