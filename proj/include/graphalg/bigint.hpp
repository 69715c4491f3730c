#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace graphalg {

// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
// Value semantics throughout; magnitude never has trailing zero limbs and
// zero is the unique value with empty magnitude and sign 0.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(std::string_view decimal);

    static BigInt from_string(std::string_view decimal) { return BigInt(decimal); }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o) { *this = divmod(*this, o).first; return *this; }
    BigInt& operator%=(const BigInt& o) { *this = divmod(*this, o).second; return *this; }

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }
    friend BigInt operator/(BigInt a, const BigInt& b) { a /= b; return a; }
    friend BigInt operator%(BigInt a, const BigInt& b) { a %= b; return a; }

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);

    // Division that must be exact; throws std::logic_error on a remainder.
    static BigInt exact_div(const BigInt& a, const BigInt& b);

    // Euclidean residue in [0, |m|).
    static BigInt mod_floor(const BigInt& a, const BigInt& m);

    static BigInt gcd(BigInt a, BigInt b);

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error if out of range

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian limbs

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace graphalg
