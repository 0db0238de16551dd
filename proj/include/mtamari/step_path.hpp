#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace mtamari {

// A Dyck path stored one bit per step (bit i set <=> step i is Up), so paths
// of half-size up to 32 fit in a single machine word.
class step_path {
public:
    using word_type = std::uint64_t;
    static constexpr int max_size = 32;

    step_path() = default;

    // Validates: balance and the prefix (never below the axis) condition.
    static step_path from_bits(word_type bits, int length)
    {
        if (length < 0 || length > 2 * max_size) {
            throw invalid_input("path length " + std::to_string(length) + " exceeds the supported maximum of "
                                + std::to_string(2 * max_size) + " steps");
        }
        if (length < 64 && (bits >> length) != 0) {
            throw invalid_input("stray bits beyond the path length");
        }
        int height = 0;
        for (int i = 0; i < length; ++i) {
            height += ((bits >> i) & 1u) ? 1 : -1;
            if (height < 0) {
                throw below_axis("path goes below the axis at step " + std::to_string(i + 1));
            }
        }
        if (height != 0) {
            throw unbalanced_path("path has " + std::to_string((length + height) / 2) + " up steps and "
                                  + std::to_string((length - height) / 2) + " down steps");
        }
        return step_path(bits, length / 2);
    }

    // Half-size N: the number of up steps.
    int size() const noexcept { return half_; }
    int length() const noexcept { return 2 * half_; }
    bool empty() const noexcept { return half_ == 0; }
    word_type bits() const noexcept { return bits_; }

    bool is_up(int i) const noexcept { return (bits_ >> i) & 1u; }

    std::string to_string() const
    {
        std::string s(static_cast<std::size_t>(length()), 'd');
        for (int i = 0; i < length(); ++i) {
            if (is_up(i)) {
                s[static_cast<std::size_t>(i)] = 'u';
            }
        }
        return s;
    }

    friend bool operator==(const step_path&, const step_path&) = default;

    // Lexicographic on the step sequence with Up < Down; shorter paths first.
    friend std::strong_ordering operator<=>(const step_path& a, const step_path& b) noexcept
    {
        if (a.half_ != b.half_) {
            return a.half_ <=> b.half_;
        }
        const word_type diff = a.bits_ ^ b.bits_;
        if (diff == 0) {
            return std::strong_ordering::equal;
        }
        const int first = std::countr_zero(diff);
        // The path with an Up at the first differing step sorts first.
        return a.is_up(first) ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    step_path(word_type bits, int half) : bits_(bits), half_(half) {}

    word_type bits_ = 0;
    int half_ = 0;
};

inline step_path parse_path(std::string_view s)
{
    if (s.size() > 2 * static_cast<std::size_t>(step_path::max_size)) {
        throw invalid_input("path string too long");
    }
    step_path::word_type bits = 0;
    int ups = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'u') {
            bits |= step_path::word_type{1} << i;
            ++ups;
        } else if (s[i] != 'd') {
            throw bad_character(std::string("unexpected character '") + s[i] + "' at position "
                                + std::to_string(i + 1));
        }
    }
    const int downs = static_cast<int>(s.size()) - ups;
    if (ups != downs) {
        throw unbalanced_path("path has " + std::to_string(ups) + " up steps and " + std::to_string(downs)
                              + " down steps");
    }
    return step_path::from_bits(bits, static_cast<int>(s.size()));
}

} // namespace mtamari

template <>
struct std::hash<mtamari::step_path> {
    std::size_t operator()(const mtamari::step_path& p) const noexcept
    {
        return std::hash<std::uint64_t>{}(p.bits() ^ (static_cast<std::uint64_t>(p.size()) << 58));
    }
};
