#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace texdim {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// Covers what the counting and capacity formulas need (binomials with
// arguments in the tens of thousands overflow every fixed-width type);
// no general big/big division is provided because nothing here needs it.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(unsigned long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}

    static BigInt pow2(std::uint64_t exponent);
    static BigInt pow(const BigInt& base, std::uint32_t exponent);
    // Exact binomial coefficient; requires n < 2^32.
    static BigInt binomial(std::uint64_t n, std::uint64_t k);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    // Quotient and remainder by a small positive divisor; remainder carries
    // the sign convention of truncated division.
    struct DivSmall;
    DivSmall divmod_small(std::uint32_t divisor) const;

    bool operator==(const BigInt& rhs) const;
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;
    bool operator>(const BigInt& rhs) const { return rhs < *this; }
    bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
    bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

    std::string to_string() const;
    double to_double() const;
    // Natural log of the magnitude; robust for values far beyond double range.
    double log_magnitude() const;
    std::size_t bit_length() const;

    // Fits in int64 (for JSON emission as a native integer when possible).
    bool fits_int64() const;
    std::int64_t to_int64() const;

private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // little-endian, no leading zeros

    void trim();
    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

struct BigInt::DivSmall {
    BigInt quotient;
    std::uint32_t remainder = 0;
};

}  // namespace texdim
