#!/usr/bin/env python3
"""Regenerates include/textclf/unicode_data.hpp from Python's unicodedata.

Emits, as sorted C++ tables:
  - code point ranges for the general categories P*, S*, C* (Cn included)
  - nonzero canonical combining classes
  - full canonical decompositions (NFD), Hangul syllables excluded
  - primary composition pairs (exclusions already filtered out)

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_FIRST, HANGUL_LAST = 0xAC00, 0xD7A3
SURROGATE_FIRST, SURROGATE_LAST = 0xD800, 0xDFFF


def category_ranges(prefix):
    ranges = []
    start = None
    for cp in range(MAX_CP):
        if SURROGATE_FIRST <= cp <= SURROGATE_LAST:
            cat = "Cs"
        else:
            cat = unicodedata.category(chr(cp))
        if cat.startswith(prefix):
            if start is None:
                start = cp
        else:
            if start is not None:
                ranges.append((start, cp - 1))
                start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def combining_classes():
    out = []
    for cp in range(MAX_CP):
        if SURROGATE_FIRST <= cp <= SURROGATE_LAST:
            continue
        ccc = unicodedata.combining(chr(cp))
        if ccc:
            out.append((cp, ccc))
    return out


def decompositions():
    out = []
    for cp in range(MAX_CP):
        if SURROGATE_FIRST <= cp <= SURROGATE_LAST:
            continue
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        s = chr(cp)
        d = unicodedata.normalize("NFD", s)
        if d != s:
            out.append((cp, [ord(c) for c in d]))
    return out


def composition_pairs():
    out = []
    for cp in range(MAX_CP):
        if SURROGATE_FIRST <= cp <= SURROGATE_LAST:
            continue
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        raw = unicodedata.decomposition(chr(cp))
        if not raw or raw.startswith("<"):
            continue
        fields = raw.split()
        if len(fields) != 2:
            continue
        a, b = int(fields[0], 16), int(fields[1], 16)
        # Keep the pair only if NFC actually composes it; this drops
        # composition exclusions and non-starter decompositions.
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            out.append(((a << 32) | b, cp))
    out.sort()
    return out


def emit(f):
    punct = category_ranges("P")
    sym = category_ranges("S")
    other = category_ranges("C")
    ccc = combining_classes()
    decomp = decompositions()
    comp = composition_pairs()

    flat = []
    decomp_index = []
    for cp, seq in decomp:
        decomp_index.append((cp, len(flat), len(seq)))
        flat.extend(seq)

    w = f.write
    w("// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.\n")
    w("// Unicode character database version %s.\n" % unicodedata.unidata_version)
    w("#pragma once\n\n")
    w("#include <cstdint>\n#include <cstddef>\n\n")
    w("namespace textclf::unicode::data {\n\n")
    w("struct CpRange { char32_t lo; char32_t hi; };\n")
    w("struct CombiningClass { char32_t cp; std::uint8_t ccc; };\n")
    w("struct Decomposition { char32_t cp; std::uint32_t offset; std::uint8_t len; };\n")
    w("struct CompositionPair { std::uint64_t key; char32_t composed; };\n\n")

    def dump_ranges(name, ranges):
        w("inline constexpr CpRange %s[] = {\n" % name)
        for i in range(0, len(ranges), 6):
            row = ", ".join("{0x%X, 0x%X}" % r for r in ranges[i : i + 6])
            w("    %s,\n" % row)
        w("};\n")
        w("inline constexpr std::size_t %s_count = %d;\n\n" % (name, len(ranges)))

    dump_ranges("kPunctuation", punct)
    dump_ranges("kSymbol", sym)
    dump_ranges("kOther", other)

    w("inline constexpr CombiningClass kCombining[] = {\n")
    for i in range(0, len(ccc), 8):
        row = ", ".join("{0x%X, %d}" % e for e in ccc[i : i + 8])
        w("    %s,\n" % row)
    w("};\n")
    w("inline constexpr std::size_t kCombining_count = %d;\n\n" % len(ccc))

    w("inline constexpr std::uint32_t kDecompData[] = {\n")
    for i in range(0, len(flat), 10):
        row = ", ".join("0x%X" % v for v in flat[i : i + 10])
        w("    %s,\n" % row)
    w("};\n\n")

    w("inline constexpr Decomposition kDecomp[] = {\n")
    for i in range(0, len(decomp_index), 5):
        row = ", ".join("{0x%X, %d, %d}" % e for e in decomp_index[i : i + 5])
        w("    %s,\n" % row)
    w("};\n")
    w("inline constexpr std::size_t kDecomp_count = %d;\n\n" % len(decomp_index))

    w("inline constexpr CompositionPair kComposition[] = {\n")
    for i in range(0, len(comp), 4):
        row = ", ".join("{0x%XULL, 0x%X}" % e for e in comp[i : i + 4])
        w("    %s,\n" % row)
    w("};\n")
    w("inline constexpr std::size_t kComposition_count = %d;\n\n" % len(comp))

    w("} // namespace textclf::unicode::data\n")

    print(
        "punct ranges %d, symbol ranges %d, other ranges %d, ccc %d, "
        "decomp %d (flat %d), composition %d"
        % (len(punct), len(sym), len(other), len(ccc), len(decomp), len(flat), len(comp))
    )


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "include/textclf/unicode_data.hpp"
    with open(out, "w", encoding="utf-8") as f:
        emit(f)
