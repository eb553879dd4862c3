#include "padico/encoder.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

namespace padico {

Symbols symbols_from_chars(const std::string& s) {
    Symbols out;
    out.reserve(s.size());
    for (char c : s) out.push_back(std::string(1, c));
    return out;
}

std::string symbols_to_string(const Symbols& s) {
    std::string out;
    for (const auto& sym : s) out += sym;
    return out;
}

EncodingMap::EncodingMap(Alphabet alphabet, DigitSystemPtr sys,
                         std::vector<uint32_t> assignment)
    : alphabet_(std::move(alphabet)), sys_(std::move(sys)),
      assignment_(std::move(assignment)) {
    const size_t n = alphabet_.symbols.size();
    if (n == 0) throw Error("empty alphabet");
    if (assignment_.size() != n) throw Error("assignment size != alphabet size");
    if (n + (alphabet_.has_blank ? 1 : 0) > sys_->size())
        throw Error("alphabet does not fit into the digit system");

    inverse_.assign(sys_->size(), npos);
    for (size_t i = 0; i < n; ++i) {
        uint32_t d = assignment_[i];
        if (d >= sys_->size()) throw Error("digit index out of range");
        if (alphabet_.has_blank && d == 0)
            throw Error("blank digit 0 assigned to a symbol");
        if (inverse_[d] != npos) throw Error("assignment not injective");
        inverse_[d] = i;
        if (!index_.emplace(alphabet_.symbols[i], i).second)
            throw Error("duplicate symbol in alphabet");
    }
}

uint32_t EncodingMap::digit_of(const std::string& symbol) const {
    auto it = index_.find(symbol);
    if (it == index_.end()) throw UnknownSymbol("symbol not in alphabet: " + symbol);
    return assignment_[it->second];
}

size_t EncodingMap::symbol_of(uint32_t digit) const { return inverse_[digit]; }

Encoded EncodingMap::encode(const Symbols& s) const {
    const size_t n = static_cast<size_t>(params()->precision);
    for (const auto& sym : s) digit_of(sym);  // validate even past the window
    bool truncated = s.size() > n;
    OKElem acc(params());
    const size_t len = std::min(s.size(), n);
    for (size_t k = len; k-- > 0;) {
        acc = ok_mul_p_pow(acc, 1);
        acc = ok_add(acc, sys_->digit(digit_of(s[k])));
    }
    return Encoded{PadicNumber::from_ok(sys_, acc), truncated};
}

Encoded EncodingMap::encode_words(const std::vector<Symbols>& words) const {
    if (!alphabet_.has_blank)
        throw Error("word encoding needs a digit system with a blank");
    Symbols joined;
    bool first = true;
    for (const auto& w : words) {
        if (!first) joined.push_back("");  // placeholder for the separator
        first = false;
        joined.insert(joined.end(), w.begin(), w.end());
    }
    // encode with explicit separator digits
    const size_t n = static_cast<size_t>(params()->precision);
    bool truncated = joined.size() > n;
    OKElem acc(params());
    const size_t len = std::min(joined.size(), n);
    for (size_t k = len; k-- > 0;) {
        acc = ok_mul_p_pow(acc, 1);
        if (!joined[k].empty()) acc = ok_add(acc, sys_->digit(digit_of(joined[k])));
    }
    return Encoded{PadicNumber::from_ok(sys_, acc), truncated};
}

Symbols EncodingMap::decode(const PadicNumber& x) const {
    if (x.shift() < 0)
        throw HoleDigit("value has a pole; not in the image of any string");
    const long n = params()->precision;
    std::vector<uint32_t> digits(static_cast<size_t>(n), 0);
    {
        auto unit_digits = x.digit_indices();
        for (long v = x.is_zero() ? n : x.shift(); v < n; ++v)
            digits[static_cast<size_t>(v)] = unit_digits[static_cast<size_t>(v - x.shift())];
    }

    Symbols out;
    if (alphabet_.has_blank) {
        for (uint32_t d : digits) {
            if (d == 0) break;  // word separator ends the word
            size_t s = symbol_of(d);
            if (s == npos) throw HoleDigit("digit outside the assignment image");
            out.push_back(alphabet_.symbols[s]);
        }
        return out;
    }

    // no blank: all N digits are letters; trailing zero digits are padding
    // only when 0 is unassigned
    bool zero_assigned = symbol_of(0) != npos;
    long last = n - 1;
    if (!zero_assigned) {
        while (last >= 0 && digits[static_cast<size_t>(last)] == 0) --last;
    }
    for (long k = 0; k <= last; ++k) {
        size_t s = symbol_of(digits[static_cast<size_t>(k)]);
        if (s == npos) throw HoleDigit("digit outside the assignment image");
        out.push_back(alphabet_.symbols[s]);
    }
    return out;
}

bool EncodingMap::in_image(const PadicNumber& x) const {
    if (x.shift() < 0) return false;
    const long n = params()->precision;
    auto unit_digits = x.is_zero() ? std::vector<uint32_t>() : x.digit_indices();
    for (long v = x.is_zero() ? n : x.shift(); v < n; ++v) {
        uint32_t d = unit_digits[static_cast<size_t>(v - x.shift())];
        if (d == 0 && alphabet_.has_blank) continue;
        if (symbol_of(d) == npos) return false;
    }
    return true;
}

int min_residue_degree(size_t alphabet_size, long p, bool with_blank) {
    if (alphabet_size == 0) throw Error("empty alphabet");
    unsigned long long need = alphabet_size + (with_blank ? 1 : 0);
    unsigned long long q = 1;
    int f = 0;
    while (q < need) {
        q *= static_cast<unsigned long long>(p);
        ++f;
    }
    return std::max(f, 1);
}

mpq_class baire_distance(const Symbols& s, const Symbols& t, long p) {
    if (s == t) return mpq_class(0);
    size_t n = 0;
    while (n < s.size() && n < t.size() && s[n] == t[n]) ++n;
    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(n));
    mpq_class r(1, pn);
    r.canonicalize();
    return r;
}

namespace {
const std::vector<std::string> kDna = {"A", "G", "C", "T"};
}

EncodingMap preset_dd5(int precision) {
    auto sys = DigitSystem::make(DigitKind::standard, make_params(5, 1, precision));
    return EncodingMap(Alphabet{kDna, true}, sys, {1, 2, 3, 4});
}

EncodingMap preset_xk2(int precision) {
    auto params = make_params(2, 2, precision);
    // digits 0, 1, w, 1 + w  (w the residue generator, w^2 = w + 1 mod 2)
    std::vector<OKElem> digits;
    digits.push_back(OKElem(params));
    digits.push_back(OKElem::one(params));
    digits.push_back(OKElem(params, {mpz_class(0), mpz_class(1)}));
    digits.push_back(OKElem(params, {mpz_class(1), mpz_class(1)}));
    auto sys = DigitSystem::make(DigitKind::custom, params, std::move(digits));
    return EncodingMap(Alphabet{kDna, false}, sys, {0, 1, 2, 3});
}

EncodingMap preset_cyc2(int precision) {
    auto sys = DigitSystem::make(DigitKind::teichmuller, make_params(2, 2, precision));
    return EncodingMap(Alphabet{kDna, false}, sys, {0, 1, 2, 3});
}

EncodingMap preset_cyc7(int precision) {
    auto sys = DigitSystem::make(DigitKind::teichmuller, make_params(2, 3, precision));
    return EncodingMap(Alphabet{kDna, true}, sys, {1, 2, 3, 4});
}

EncodingMap make_preset(const std::string& name, int precision) {
    if (name == "dd5") return preset_dd5(precision);
    if (name == "xk2") return preset_xk2(precision);
    if (name == "cyc2") return preset_cyc2(precision);
    if (name == "cyc7") return preset_cyc7(precision);
    throw Error("unknown preset: " + name);
}

std::vector<FastaRecord> read_fasta(std::istream& in) {
    std::vector<FastaRecord> records;
    std::string line;
    long lineno = 0;
    bool have_record = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // strip outer whitespace
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t");
        std::string trimmed = line.substr(b, e - b + 1);
        if (trimmed[0] == '>') {
            std::string header = trimmed.substr(1);
            size_t cut = header.find_first_of(" \t");
            std::string id = cut == std::string::npos ? header : header.substr(0, cut);
            if (id.empty())
                throw MalformedFasta("empty record id at line " + std::to_string(lineno));
            records.push_back(FastaRecord{id, ""});
            have_record = true;
        } else {
            if (!have_record)
                throw MalformedFasta("sequence before any '>' header at line " +
                                     std::to_string(lineno));
            for (char c : trimmed) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                records.back().sequence.push_back(
                    static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            }
        }
    }
    return records;
}

std::vector<Encoded> encode_batch(const EncodingMap& map,
                                  const std::vector<Symbols>& inputs, Exec exec) {
    std::vector<Encoded> out(inputs.size(), Encoded{PadicNumber(map.system()), false});
    if (exec == Exec::serial) {
        for (size_t i = 0; i < inputs.size(); ++i) out[i] = map.encode(inputs[i]);
        return out;
    }
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 16)
    for (size_t i = 0; i < inputs.size(); ++i) {
        try {
            out[i] = map.encode(inputs[i]);
        } catch (...) {
#pragma omp critical
            {
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace padico
