#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubesense/errors.hpp"

namespace cubesense {

// x with every coordinate in `mask` complemented.
inline std::uint64_t flip(std::uint64_t x, std::uint64_t mask) { return x ^ mask; }

// A boolean function on n variables as a 2^n-entry bit vector. Bit x of the
// table is f(x); bit i of the index x is coordinate i of the input.
//
// Wire format: lowercase hex, most-significant nibble first, ceil(2^n / 4)
// digits. n disambiguates leading zeros and must be carried alongside.
class TruthTable {
public:
    static constexpr int kMaxVars = 20;

    explicit TruthTable(int n) : n_(checked_vars(n)) {
        words_.assign(word_count(n_), 0);
    }

    int vars() const { return n_; }
    std::uint64_t size() const { return std::uint64_t(1) << n_; }

    bool get(std::uint64_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1u;
    }
    void set(std::uint64_t x, bool v) {
        const std::uint64_t bit = std::uint64_t(1) << (x & 63);
        if (v)
            words_[x >> 6] |= bit;
        else
            words_[x >> 6] &= ~bit;
    }

    // Raw 64-bit words; bits past 2^n (only possible for n < 6) stay zero.
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    // Clears bits past the table end. Call after writing words() wholesale.
    void mask_tail() {
        if (n_ < 6) words_[0] &= (std::uint64_t(1) << size()) - 1;
    }

    std::uint64_t ones() const {
        std::uint64_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    static std::size_t hex_digits(int n) {
        return std::size_t(((std::uint64_t(1) << n) + 3) / 4);
    }

    std::string to_hex() const {
        const std::size_t digits = hex_digits(n_);
        std::string out(digits, '0');
        for (std::size_t d = 0; d < digits; ++d) {
            // digit d counts from the most significant nibble
            const std::size_t shift = 4 * (digits - 1 - d);
            const unsigned nib = (words_[shift >> 6] >> (shift & 63)) & 0xF;
            out[d] = "0123456789abcdef"[nib];
        }
        return out;
    }

    static TruthTable parse_hex(std::string_view hex, int n) {
        TruthTable t(n);
        if (hex.size() != hex_digits(n))
            throw ParseError("truth table hex: expected " + std::to_string(hex_digits(n)) +
                             " digits for n=" + std::to_string(n) + ", got " +
                             std::to_string(hex.size()));
        for (std::size_t d = 0; d < hex.size(); ++d) {
            const unsigned nib = nibble_value(hex[d]);
            const std::size_t shift = 4 * (hex.size() - 1 - d);
            t.words_[shift >> 6] |= std::uint64_t(nib) << (shift & 63);
        }
        if (n < 2 && (t.words_[0] >> t.size()) != 0)
            throw ParseError("truth table hex: bits set past table end");
        return t;
    }

    bool operator==(const TruthTable&) const = default;

private:
    static int checked_vars(int n) {
        if (n < 0 || n > kMaxVars)
            throw DimensionTooLarge("variable count must be in [0, " +
                                    std::to_string(kMaxVars) + "], got " + std::to_string(n));
        return n;
    }
    static std::size_t word_count(int n) {
        return std::size_t(((std::uint64_t(1) << n) + 63) / 64);
    }
    static unsigned nibble_value(char c) {
        if (c >= '0' && c <= '9') return unsigned(c - '0');
        if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
        throw ParseError(std::string("truth table hex: bad character '") + c + "'");
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

} // namespace cubesense
