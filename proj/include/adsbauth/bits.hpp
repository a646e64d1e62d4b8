#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "adsbauth/rng.hpp"

namespace adsbauth {

// Packed bit string, MSB-first within each byte (Mode S wire order).
// Bit 0 is the first bit on the air.
class BitString {
public:
    BitString() = default;
    explicit BitString(size_t nbits) : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

    static BitString from_bytes(const std::vector<uint8_t>& bytes, size_t nbits) {
        if (bytes.size() * 8 < nbits) throw std::invalid_argument("BitString: byte buffer too short");
        BitString b(nbits);
        b.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<long>((nbits + 7) / 8));
        b.mask_tail();
        return b;
    }

    // Parses uppercase/lowercase hex, most significant nibble first.
    static BitString from_hex(const std::string& hex, size_t nbits) {
        if (hex.size() * 4 < nbits) throw std::invalid_argument("BitString: hex string too short");
        BitString b(nbits);
        for (size_t i = 0; i < b.bytes_.size(); ++i) {
            uint8_t v = static_cast<uint8_t>(nibble(hex[2 * i]) << 4);
            if (2 * i + 1 < hex.size()) v |= nibble(hex[2 * i + 1]);
            b.bytes_[i] = v;
        }
        b.mask_tail();
        return b;
    }

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }
    const std::vector<uint8_t>& bytes() const { return bytes_; }

    bool bit(size_t i) const {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
    }

    void set_bit(size_t i, bool v) {
        uint8_t mask = static_cast<uint8_t>(1u << (7 - (i & 7)));
        if (v) bytes_[i >> 3] |= mask;
        else bytes_[i >> 3] &= static_cast<uint8_t>(~mask);
    }

    void flip_bit(size_t i) { set_bit(i, !bit(i)); }

    void append_bit(bool v) {
        if (nbits_ % 8 == 0) bytes_.push_back(0);
        ++nbits_;
        set_bit(nbits_ - 1, v);
    }

    // Appends the low `nbits` of `value`, most significant bit first.
    void append_uint(uint64_t value, size_t nbits) {
        for (size_t i = nbits; i-- > 0;) append_bit((value >> i) & 1);
    }

    // Reads `nbits` (<= 64) starting at bit `pos`, MSB first.
    uint64_t get_uint(size_t pos, size_t nbits) const {
        if (nbits > 64 || pos + nbits > nbits_) throw std::out_of_range("BitString::get_uint");
        uint64_t v = 0;
        for (size_t i = 0; i < nbits; ++i) v = (v << 1) | (bit(pos + i) ? 1 : 0);
        return v;
    }

    void set_uint(size_t pos, uint64_t value, size_t nbits) {
        if (nbits > 64 || pos + nbits > nbits_) throw std::out_of_range("BitString::set_uint");
        for (size_t i = 0; i < nbits; ++i) set_bit(pos + i, (value >> (nbits - 1 - i)) & 1);
    }

    BitString slice(size_t pos, size_t len) const {
        if (pos + len > nbits_) throw std::out_of_range("BitString::slice");
        BitString out;
        out.bytes_.reserve((len + 7) / 8);
        for (size_t i = 0; i < len; ++i) out.append_bit(bit(pos + i));
        return out;
    }

    void append(const BitString& other) {
        for (size_t i = 0; i < other.nbits_; ++i) append_bit(other.bit(i));
    }

    BitString& operator^=(const BitString& other) {
        if (other.nbits_ != nbits_) throw std::invalid_argument("BitString: xor length mismatch");
        for (size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
        return *this;
    }

    friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }

    bool operator==(const BitString& other) const {
        return nbits_ == other.nbits_ && bytes_ == other.bytes_;
    }
    bool operator!=(const BitString& other) const { return !(*this == other); }

    bool all_zero() const {
        for (uint8_t b : bytes_)
            if (b) return false;
        return true;
    }

    // Uppercase hex, most significant nibble first; covers ceil(nbits/4) digits.
    std::string to_hex() const {
        static const char* digits = "0123456789ABCDEF";
        size_t ndigits = (nbits_ + 3) / 4;
        std::string s;
        s.reserve(ndigits);
        for (size_t i = 0; i < ndigits; ++i) {
            uint8_t byte = bytes_[i / 2];
            uint8_t nib = (i % 2 == 0) ? (byte >> 4) : (byte & 0xF);
            s.push_back(digits[nib]);
        }
        return s;
    }

    static BitString random(size_t nbits, SplitMix64& rng) {
        BitString b(nbits);
        for (size_t i = 0; i < b.bytes_.size(); ++i) b.bytes_[i] = static_cast<uint8_t>(rng.next() >> 56);
        b.mask_tail();
        return b;
    }

private:
    static uint8_t nibble(char c) {
        if (c >= '0' && c <= '9') return static_cast<uint8_t>(c - '0');
        if (c >= 'A' && c <= 'F') return static_cast<uint8_t>(c - 'A' + 10);
        if (c >= 'a' && c <= 'f') return static_cast<uint8_t>(c - 'a' + 10);
        throw std::invalid_argument("BitString: bad hex digit");
    }

    // Keeps unused tail bits zero so byte-wise compare equals bit-wise compare.
    void mask_tail() {
        if (nbits_ % 8 != 0 && !bytes_.empty())
            bytes_.back() &= static_cast<uint8_t>(0xFF << (8 - nbits_ % 8));
    }

    size_t nbits_ = 0;
    std::vector<uint8_t> bytes_;
};

} // namespace adsbauth
