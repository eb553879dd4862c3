#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "padico/padic_number.hpp"

namespace padico {

/// Finite alphabet; has_blank reserves digit index 0 as a word separator,
/// so no symbol may map to it.
struct Alphabet {
    std::vector<std::string> symbols;
    bool has_blank = false;
};

/// Symbol sequence (one level of indirection keeps multi-character tokens
/// possible; DNA uses single-letter tokens).
using Symbols = std::vector<std::string>;

Symbols symbols_from_chars(const std::string& s);
std::string symbols_to_string(const Symbols& s);

struct Encoded {
    PadicNumber value;
    bool truncated = false;  // input was longer than the precision window
};

/// Injective assignment of alphabet symbols to digit indices of a fixed
/// digit system; the whole-string encoding is digit-by-digit.
class EncodingMap {
public:
    EncodingMap(Alphabet alphabet, DigitSystemPtr sys,
                std::vector<uint32_t> assignment);

    const Alphabet& alphabet() const { return alphabet_; }
    const DigitSystemPtr& system() const { return sys_; }
    const FieldParamsPtr& params() const { return sys_->params(); }
    uint32_t digit_of(const std::string& symbol) const;  // throws UnknownSymbol

    /// Symbol index for a digit, or npos when the digit is a hole
    /// (outside the assignment image).
    static constexpr size_t npos = static_cast<size_t>(-1);
    size_t symbol_of(uint32_t digit) const;

    Encoded encode(const Symbols& s) const;
    /// Joins words with single blank separator digits; requires has_blank.
    Encoded encode_words(const std::vector<Symbols>& words) const;
    Symbols decode(const PadicNumber& x) const;
    bool in_image(const PadicNumber& x) const;

private:
    Alphabet alphabet_;
    DigitSystemPtr sys_;
    std::vector<uint32_t> assignment_;              // symbol index -> digit index
    std::vector<size_t> inverse_;                   // digit index -> symbol index / npos
    std::unordered_map<std::string, size_t> index_; // symbol -> symbol index
};

/// Smallest residue degree f with p^f >= alphabet size (+1 for a blank).
int min_residue_degree(size_t alphabet_size, long p, bool with_blank);

/// Baire distance p^(-n), n = longest common prefix; 0 when s = t.
mpq_class baire_distance(const Symbols& s, const Symbols& t, long p);

// DNA presets. Letter order A,G,C,T maps to ascending digit indices; the
// precision is the caller's choice.
EncodingMap preset_dd5(int precision);   // 5-adic, standard digits, blank = 0
EncodingMap preset_xk2(int precision);   // 2-adic over F_4, digits {0,1,w,1+w}, no blank
EncodingMap preset_cyc2(int precision);  // 2-adic over F_4, Teichmuller digits, no blank
EncodingMap preset_cyc7(int precision);  // 2-adic over F_8, Teichmuller digits, blank = 0
EncodingMap make_preset(const std::string& name, int precision);

struct FastaRecord {
    std::string id;
    std::string sequence;  // uppercased, whitespace stripped
};

/// Reads FASTA text; throws MalformedFasta with a line number.
std::vector<FastaRecord> read_fasta(std::istream& in);

enum class Exec { serial, parallel };

/// Encodes many records; the parallel path (OpenMP when available) gives
/// bit-identical results to the serial reference.
std::vector<Encoded> encode_batch(const EncodingMap& map,
                                  const std::vector<Symbols>& inputs,
                                  Exec exec = Exec::parallel);

} // namespace padico
