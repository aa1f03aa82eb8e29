#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sysrel/error.hpp"

namespace sysrel {

/// An ordered, duplicate-free set of tokens. Tokens are nonempty strings
/// without whitespace; multi-character tokens are allowed so that encoders
/// can use structured letters (stack symbols, control markers, pairs).
class TokenSet {
public:
    TokenSet() = default;
    explicit TokenSet(std::vector<std::string> tokens);

    const std::vector<std::string>& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }
    bool contains(const std::string& token) const;
    /// Index of a token in the declared order; throws Error for foreign tokens.
    int index(const std::string& token) const;

    bool operator==(const TokenSet&) const = default;

private:
    std::vector<std::string> tokens_;
};

/// An inner alphabet: a token set with a designated pad symbol and an
/// optional absorbing symbol. The spelling "!" is reserved for the
/// convolution filler and is rejected as a letter.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::vector<std::string> letters, const std::string& pad,
             const std::optional<std::string>& absorb = std::nullopt);

    const std::vector<std::string>& letters() const { return tokens_.tokens(); }
    std::size_t size() const { return tokens_.size(); }
    const TokenSet& tokens() const { return tokens_; }

    const std::string& pad() const;
    int pad_index() const { return pad_; }
    const std::optional<std::string>& absorb() const { return absorb_name_; }
    std::optional<int> absorb_index() const { return absorb_; }

    bool contains(const std::string& token) const { return tokens_.contains(token); }
    int index(const std::string& token) const;

    bool operator==(const Alphabet&) const = default;

private:
    TokenSet tokens_;
    int pad_ = -1;
    std::optional<int> absorb_;
    std::optional<std::string> absorb_name_;
};

/// The reserved filler spelling used by convolution.
inline const std::string kConvolutionFiller = "!";

/// A finite word in eta-normal form: the canonical representative of the
/// infinite padded word w . pad^omega. The last letter, if any, is never the
/// pad; interior pads are ordinary letters.
class Word {
public:
    Word() = default;

    const std::vector<std::string>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    /// Space-joined rendering; the empty word renders as "".
    std::string str() const;

    auto operator<=>(const Word&) const = default;

private:
    explicit Word(std::vector<std::string> letters) : letters_(std::move(letters)) {}
    friend Word eta_normalize(const Alphabet&, std::vector<std::string>);

    std::vector<std::string> letters_;
};

/// A pair of words over one alphabet, as stored in relations.
struct WordPair {
    Word left;
    Word right;

    auto operator<=>(const WordPair&) const = default;
};

/// Strips the maximal trailing block of pads from a raw letter sequence and
/// returns the eta-normal word. Idempotent. Throws Error on foreign tokens.
Word eta_normalize(const Alphabet& alphabet, std::vector<std::string> raw);

/// Splits whitespace-separated tokens and eta-normalizes.
Word parse_word(const Alphabet& alphabet, const std::string& text);

/// The first n letters of w . pad^omega; truncates when |w| > n.
std::vector<std::string> pad_to(const Alphabet& alphabet, const Word& w, std::size_t n);

/// Longest common prefix, returned in eta-normal form.
Word gcp(const Alphabet& alphabet, const Word& w, const Word& v);

/// Pairs (w_i, v_i) after the shorter word is right-filled with "!" to the
/// longer length.
std::vector<std::pair<std::string, std::string>> convolution(const Alphabet& alphabet,
                                                             const Word& w, const Word& v);

/// All eta-normal words over the alphabet of length at most max_len,
/// ordered by (length, lexicographic-by-declared-order).
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len);

/// A word over an outer alphabet (no pad semantics).
using OuterWord = std::vector<std::string>;

/// Splits a string into whitespace-separated tokens.
std::vector<std::string> split_tokens(const std::string& text);

/// Parses an outer word, checking every token against the outer token set.
OuterWord parse_outer_word(const TokenSet& outer, const std::string& text);

/// Space-joined rendering of an outer word.
std::string outer_str(const OuterWord& w);

/// All outer words of exactly the given length, lexicographic by declared order.
std::vector<OuterWord> outer_words_of_length(const TokenSet& outer, std::size_t len);

} // namespace sysrel
