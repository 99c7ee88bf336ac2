#include "texdim/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace texdim {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid UB on LLONG_MIN by negating in unsigned space.
    unsigned long long mag = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                   : static_cast<unsigned long long>(v);
    while (mag != 0) {
        mag_.push_back(static_cast<std::uint32_t>(mag & 0xFFFFFFFFULL));
        mag >>= 32;
    }
}

BigInt::BigInt(unsigned long long v) {
    if (v == 0) return;
    sign_ = 1;
    while (v != 0) {
        mag_.push_back(static_cast<std::uint32_t>(v & 0xFFFFFFFFULL));
        v >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out.push_back(static_cast<std::uint32_t>(sum & 0xFFFFFFFFULL));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (sign_ == 0) return rhs;
    if (rhs.sign_ == 0) return *this;
    BigInt out;
    if (sign_ == rhs.sign_) {
        out.sign_ = sign_;
        out.mag_ = add_mag(mag_, rhs.mag_);
        return out;
    }
    int cmp = compare_mag(mag_, rhs.mag_);
    if (cmp == 0) return BigInt();
    if (cmp > 0) {
        out.sign_ = sign_;
        out.mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        out.sign_ = rhs.sign_;
        out.mag_ = sub_mag(rhs.mag_, mag_);
    }
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    BigInt out;
    if (sign_ == 0 || rhs.sign_ == 0) return out;
    out.sign_ = sign_ * rhs.sign_;
    out.mag_ = mul_mag(mag_, rhs.mag_);
    return out;
}

BigInt::DivSmall BigInt::divmod_small(std::uint32_t divisor) const {
    if (divisor == 0) throw std::domain_error("BigInt: division by zero");
    DivSmall result;
    if (sign_ == 0) {
        result.remainder = 0;
        return result;
    }
    std::vector<std::uint32_t> q(mag_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag_[i];
        q[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    result.quotient.sign_ = sign_;
    result.quotient.mag_ = std::move(q);
    result.quotient.trim();
    result.remainder = static_cast<std::uint32_t>(rem);
    return result;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return sign_ == rhs.sign_ && mag_ == rhs.mag_;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
    int cmp = compare_mag(mag_, rhs.mag_);
    return sign_ >= 0 ? cmp < 0 : cmp > 0;
}

bool BigInt::is_even() const {
    return mag_.empty() || (mag_[0] & 1u) == 0;
}

BigInt BigInt::pow2(std::uint64_t exponent) {
    BigInt out;
    out.sign_ = 1;
    out.mag_.assign(exponent / 32 + 1, 0);
    out.mag_.back() = 1u << (exponent % 32);
    return out;
}

BigInt BigInt::pow(const BigInt& base, std::uint32_t exponent) {
    BigInt result(1);
    BigInt acc = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= acc;
        exponent >>= 1;
        if (exponent != 0) acc *= acc;
    }
    return result;
}

BigInt BigInt::binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigInt();
    if (n >= (1ULL << 32))
        throw std::domain_error("BigInt::binomial: n too large");
    k = std::min(k, n - k);
    BigInt result(1);
    // result stays integral after each divide: C(n-k+i, i) is an integer.
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= BigInt(static_cast<unsigned long long>(n - k + i));
        auto d = result.divmod_small(static_cast<std::uint32_t>(i));
        result = std::move(d.quotient);
    }
    return result;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> chunks;  // base 1e9 digits, little-endian
    BigInt cur = *this;
    cur.sign_ = 1;
    while (!cur.is_zero()) {
        auto d = cur.divmod_small(1000000000u);
        chunks.push_back(d.remainder);
        cur = std::move(d.quotient);
    }
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    std::uint32_t top = mag_.back();
    std::size_t bits = (mag_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigInt::to_double() const {
    if (sign_ == 0) return 0.0;
    double value = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;)
        value = value * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -value : value;
}

double BigInt::log_magnitude() const {
    if (sign_ == 0) throw std::domain_error("BigInt::log_magnitude of zero");
    const std::size_t bits = bit_length();
    if (bits <= 960) return std::log(std::abs(to_double()));
    // mantissa = top ~96 bits scaled into [0.5, 1)
    double mantissa = 0.0;
    const std::size_t top = mag_.size();
    for (std::size_t i = top; i-- > (top >= 3 ? top - 3 : 0);)
        mantissa = mantissa * 4294967296.0 + mag_[i];
    const std::size_t dropped_bits = (top >= 3 ? (top - 3) * 32 : 0);
    return std::log(mantissa) + static_cast<double>(dropped_bits) * std::log(2.0);
}

bool BigInt::fits_int64() const {
    if (sign_ == 0) return true;
    if (bit_length() < 64) return true;
    if (bit_length() == 64 && sign_ < 0) {
        // exactly -2^63
        return mag_.size() == 2 && mag_[0] == 0 && mag_[1] == 0x80000000u;
    }
    return false;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::domain_error("BigInt::to_int64 overflow");
    std::uint64_t v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return sign_ < 0 ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
}

}  // namespace texdim
