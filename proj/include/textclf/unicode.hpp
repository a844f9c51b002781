#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "textclf/unicode_data.hpp"

namespace textclf::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

namespace detail {

inline bool in_ranges(const data::CpRange* ranges, std::size_t count, char32_t cp) {
    const auto* end = ranges + count;
    auto it = std::upper_bound(ranges, end, cp, [](char32_t v, const data::CpRange& r) {
        return v < r.lo;
    });
    return it != ranges && cp <= (it - 1)->hi;
}

// Hangul syllable arithmetic (UAX #15 section 3.12).
inline constexpr char32_t kHangulSBase = 0xAC00;
inline constexpr char32_t kHangulLBase = 0x1100;
inline constexpr char32_t kHangulVBase = 0x1161;
inline constexpr char32_t kHangulTBase = 0x11A7;
inline constexpr int kHangulLCount = 19;
inline constexpr int kHangulVCount = 21;
inline constexpr int kHangulTCount = 28;
inline constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
inline constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

} // namespace detail

inline bool is_punctuation(char32_t cp) {
    // U+0964/U+0965 (danda, double danda) are category Po and therefore
    // already inside the table; they are called out here because Bangla
    // sentence-final punctuation must never survive cleaning.
    if (cp == 0x0964 || cp == 0x0965) return true;
    return detail::in_ranges(data::kPunctuation, data::kPunctuation_count, cp);
}

inline bool is_symbol(char32_t cp) {
    return detail::in_ranges(data::kSymbol, data::kSymbol_count, cp);
}

// Category C: control, format, surrogate, private use, unassigned.
inline bool is_other(char32_t cp) {
    return detail::in_ranges(data::kOther, data::kOther_count, cp);
}

// Unicode White_Space property.
inline bool is_whitespace(char32_t cp) {
    switch (cp) {
        case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
        case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

inline std::uint8_t combining_class(char32_t cp) {
    const auto* begin = data::kCombining;
    const auto* end = begin + data::kCombining_count;
    auto it = std::lower_bound(begin, end, cp, [](const data::CombiningClass& e, char32_t v) {
        return e.cp < v;
    });
    return (it != end && it->cp == cp) ? it->ccc : 0;
}

// Decodes UTF-8; invalid sequences become U+FFFD one byte at a time.
inline std::u32string decode_utf8(std::string_view in) {
    std::u32string out;
    out.reserve(in.size());
    std::size_t i = 0;
    const auto n = in.size();
    while (i < n) {
        auto b0 = static_cast<unsigned char>(in[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        char32_t min_cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2; cp = b0 & 0x1F; min_cp = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3; cp = b0 & 0x0F; min_cp = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4; cp = b0 & 0x07; min_cp = 0x10000;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + len > n) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            auto b = static_cast<unsigned char>(in[i + k]);
            if ((b & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (b & 0x3F);
        }
        if (!ok || cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode_utf8(const std::u32string& in) {
    std::string out;
    out.reserve(in.size() * 2);
    for (char32_t cp : in) append_utf8(out, cp);
    return out;
}

// Canonical decomposition followed by canonical reordering.
inline std::u32string nfd(const std::u32string& in) {
    using namespace detail;
    std::u32string out;
    out.reserve(in.size());
    for (char32_t cp : in) {
        if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
            char32_t s = cp - kHangulSBase;
            out.push_back(kHangulLBase + s / kHangulNCount);
            out.push_back(kHangulVBase + (s % kHangulNCount) / kHangulTCount);
            char32_t t = s % kHangulTCount;
            if (t != 0) out.push_back(kHangulTBase + t);
            continue;
        }
        const auto* begin = data::kDecomp;
        const auto* end = begin + data::kDecomp_count;
        auto it = std::lower_bound(begin, end, cp,
                                   [](const data::Decomposition& e, char32_t v) {
                                       return e.cp < v;
                                   });
        if (it != end && it->cp == cp) {
            for (std::uint8_t k = 0; k < it->len; ++k)
                out.push_back(data::kDecompData[it->offset + k]);
        } else {
            out.push_back(cp);
        }
    }
    // canonical ordering: stable insertion by combining class
    for (std::size_t i = 1; i < out.size(); ++i) {
        std::uint8_t cc = combining_class(out[i]);
        if (cc == 0) continue;
        std::size_t j = i;
        while (j > 0 && combining_class(out[j - 1]) > cc) {
            std::swap(out[j - 1], out[j]);
            --j;
        }
    }
    return out;
}

namespace detail {

inline char32_t compose_pair(char32_t a, char32_t b) {
    // Hangul L+V and LV+T compose algorithmically.
    if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
        b < kHangulVBase + kHangulVCount) {
        return kHangulSBase +
               ((a - kHangulLBase) * kHangulVCount + (b - kHangulVBase)) * kHangulTCount;
    }
    if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
        (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
        b < kHangulTBase + kHangulTCount) {
        return a + (b - kHangulTBase);
    }
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    const auto* begin = data::kComposition;
    const auto* end = begin + data::kComposition_count;
    auto it = std::lower_bound(begin, end, key,
                               [](const data::CompositionPair& e, std::uint64_t v) {
                                   return e.key < v;
                               });
    return (it != end && it->key == key) ? it->composed : 0;
}

} // namespace detail

// Canonical composition (NFC) per UAX #15.
inline std::u32string nfc(const std::u32string& in) {
    std::u32string seq = nfd(in);
    if (seq.empty()) return seq;
    std::u32string out;
    out.reserve(seq.size());
    out.push_back(seq[0]);
    std::ptrdiff_t starter = combining_class(seq[0]) == 0 ? 0 : -1;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        char32_t c = seq[i];
        std::uint8_t cc = combining_class(c);
        if (starter >= 0) {
            bool blocked = false;
            if (static_cast<std::ptrdiff_t>(out.size()) - 1 > starter)
                blocked = combining_class(out.back()) >= cc;
            if (!blocked) {
                char32_t composed = detail::compose_pair(out[starter], c);
                if (composed != 0) {
                    out[starter] = composed;
                    continue;
                }
            }
        }
        out.push_back(c);
        if (cc == 0) starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
    }
    return out;
}

inline std::string nfc_utf8(std::string_view in) {
    return encode_utf8(nfc(decode_utf8(in)));
}

} // namespace textclf::unicode
