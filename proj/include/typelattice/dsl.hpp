#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "type_lattice.hpp"

namespace typelattice::cli {

using prime_sets::PrimeIndexing;
using prime_sets::SymbolicPrimeSet;
using type_lattice::ExtendedNat;
using type_lattice::TypeRep;

// Text form of a type:
//   type     := "{" entry ("," entry)* "}"
//   entry    := selector ":" value
//   selector := "default" | "mod" INT "=" INT ("," INT)* | "primes" "{" INT+ "}"
//   value    := NAT | "inf"
// Whitespace-insensitive. Exactly one "default" entry is required and is
// applied first regardless of position; the remaining entries are applied
// in textual order, later entries overriding earlier ones.
namespace detail {

enum class Tok { LBrace, RBrace, Comma, Colon, Equals, Ident, Nat, End };

struct Token {
    Tok kind;
    std::string text;
    std::uint64_t number = 0;
    std::size_t pos = 0;
};

inline std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (c == '{') { out.push_back({Tok::LBrace, "{", 0, start}); ++i; continue; }
        if (c == '}') { out.push_back({Tok::RBrace, "}", 0, start}); ++i; continue; }
        if (c == ',') { out.push_back({Tok::Comma, ",", 0, start}); ++i; continue; }
        if (c == ':') { out.push_back({Tok::Colon, ":", 0, start}); ++i; continue; }
        if (c == '=') { out.push_back({Tok::Equals, "=", 0, start}); ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t value = 0;
            std::size_t digits = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                if (++digits > 19) throw ParseError("number too large", start);
                value = value * 10 + static_cast<std::uint64_t>(s[i] - '0');
                ++i;
            }
            out.push_back({Tok::Nat, s.substr(start, i - start), value, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), 0, start});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({Tok::End, "", 0, s.size()});
    return out;
}

class TypeParser {
public:
    TypeParser(const std::string& text, PrimeIndexing ix) : tokens_(lex(text)), ix_(ix) {}

    TypeRep parse() {
        expect(Tok::LBrace, "expected '{'");
        std::vector<Entry> entries;
        entries.push_back(parse_entry());
        while (peek().kind == Tok::Comma) {
            advance();
            entries.push_back(parse_entry());
        }
        expect(Tok::RBrace, "expected '}'");
        expect(Tok::End, "trailing input after type");

        const Entry* default_entry = nullptr;
        for (const auto& e : entries) {
            if (e.kind != Entry::Default) continue;
            if (default_entry) throw ParseError("duplicate default entry", e.pos);
            default_entry = &e;
        }
        if (!default_entry) throw ParseError("exactly one default entry is required", 0);

        TypeRep t = TypeRep::constant(ix_, default_entry->value);
        for (const auto& e : entries) {
            if (e.kind == Entry::Default) continue;
            if (e.kind == Entry::Mod)
                t = t.with(SymbolicPrimeSet::cells(ix_, e.indices), e.value);
            else
                t = t.with(SymbolicPrimeSet::of_primes(ix_, e.primes), e.value);
        }
        return t;
    }

private:
    struct Entry {
        enum Kind { Default, Mod, Primes } kind;
        std::vector<std::uint32_t> indices;
        std::vector<std::uint64_t> primes;
        ExtendedNat value = ExtendedNat::finite(0);
        std::size_t pos = 0;
    };

    Entry parse_entry() {
        const Token head = expect(Tok::Ident, "expected a selector (default, mod, or primes)");
        Entry entry;
        entry.pos = head.pos;
        if (head.text == "default") {
            entry.kind = Entry::Default;
        } else if (head.text == "mod") {
            entry.kind = Entry::Mod;
            const Token m = expect(Tok::Nat, "expected a modulus after 'mod'");
            if (m.number != ix_.modulus())
                throw ParseError("mod " + m.text + " does not match the session modulus " +
                                     std::to_string(ix_.modulus()),
                                 m.pos);
            expect(Tok::Equals, "expected '=' after the modulus");
            entry.indices.push_back(parse_cell_index(m.number));
            // A comma continues the index list only when a number follows;
            // otherwise it separates entries and is left for the caller.
            while (peek().kind == Tok::Comma && peek(1).kind == Tok::Nat) {
                advance();
                entry.indices.push_back(parse_cell_index(m.number));
            }
        } else if (head.text == "primes") {
            entry.kind = Entry::Primes;
            expect(Tok::LBrace, "expected '{' after 'primes'");
            while (peek().kind == Tok::Nat) {
                const Token p = advance();
                if (!prime_sets::is_prime(p.number))
                    throw ParseError(p.text + " is not prime", p.pos);
                entry.primes.push_back(p.number);
            }
            if (entry.primes.empty())
                throw ParseError("expected at least one prime", peek().pos);
            expect(Tok::RBrace, "expected '}' after the prime list");
        } else {
            throw ParseError("unknown selector '" + head.text + "'", head.pos);
        }
        expect(Tok::Colon, "expected ':' before the value");
        entry.value = parse_value();
        return entry;
    }

    std::uint32_t parse_cell_index(std::uint64_t modulus) {
        const Token t = expect(Tok::Nat, "expected a cell index");
        if (t.number >= modulus)
            throw ParseError("cell index " + t.text + " must be below the modulus " +
                                 std::to_string(modulus),
                             t.pos);
        return static_cast<std::uint32_t>(t.number);
    }

    ExtendedNat parse_value() {
        const Token t = advance();
        if (t.kind == Tok::Ident && t.text == "inf") return ExtendedNat::infinity();
        if (t.kind == Tok::Nat) {
            if (t.number > 0xFFFFFFFEull) throw ParseError("value too large", t.pos);
            return ExtendedNat::finite(static_cast<std::uint32_t>(t.number));
        }
        throw ParseError("expected a value (a natural number or 'inf')", t.pos);
    }

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = std::min(next_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }

    Token advance() {
        const Token t = peek();
        if (next_ + 1 < tokens_.size()) ++next_;
        return t;
    }

    Token expect(Tok kind, const std::string& message) {
        const Token t = peek();
        if (t.kind != kind) throw ParseError(message, t.pos);
        return advance();
    }

    std::vector<Token> tokens_;
    PrimeIndexing ix_;
    std::size_t next_ = 0;
};

} // namespace detail

inline TypeRep parse_type(const std::string& text, PrimeIndexing ix) {
    return detail::TypeParser(text, ix).parse();
}

// Deterministic DSL form that parse_type maps back to the same TypeRep.
// The piece covering the most cells becomes the default entry; the other
// cell-backed pieces become mod entries; primes carrying a value away from
// their cell's piece are emitted as trailing overrides.
inline std::string render_type(const TypeRep& t) {
    const auto& pieces = t.pieces();
    const std::uint32_t k = t.indexing().modulus();

    auto popcount = [](const std::vector<bool>& mask) {
        std::size_t n = 0;
        for (bool b : mask) n += b;
        return n;
    };
    std::size_t def = 0;
    for (std::size_t i = 1; i < pieces.size(); ++i)
        if (popcount(pieces[i].set.cell_mask()) > popcount(pieces[def].set.cell_mask())) def = i;

    std::string out = "{ default: " + to_string(pieces[def].value);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == def || popcount(pieces[i].set.cell_mask()) == 0) continue;
        out += ", mod " + std::to_string(k) + " = ";
        bool first = true;
        for (std::uint32_t c = 0; c < k; ++c) {
            if (!pieces[i].set.cell_mask()[c]) continue;
            if (!first) out += ", ";
            out += std::to_string(c);
            first = false;
        }
        out += ": " + to_string(pieces[i].value);
    }
    for (const auto& piece : pieces) {
        if (piece.set.plus().empty()) continue;
        out += ", primes {";
        for (std::size_t i = 0; i < piece.set.plus().size(); ++i) {
            if (i) out += " ";
            out += std::to_string(piece.set.plus()[i]);
        }
        out += "}: " + to_string(piece.value);
    }
    out += " }";
    return out;
}

// Compact description of a symbolic prime set, e.g.
// "cells {0, 2} mod 16 plus {5} minus {2}" or "{3, 7}" for finite sets.
inline std::string render_prime_set(const SymbolicPrimeSet& s) {
    auto list = [](const std::vector<std::uint64_t>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(v[i]);
        }
        return out + "}";
    };
    if (s.is_finite()) return list(s.finite_elements());

    std::string out = "cells {";
    bool first = true;
    for (std::uint32_t c = 0; c < s.indexing().modulus(); ++c) {
        if (!s.cell_mask()[c]) continue;
        if (!first) out += ", ";
        out += std::to_string(c);
        first = false;
    }
    out += "} mod " + std::to_string(s.indexing().modulus());
    if (!s.plus().empty()) out += " plus " + list(s.plus());
    if (!s.minus().empty()) out += " minus " + list(s.minus());
    return out;
}

} // namespace typelattice::cli
