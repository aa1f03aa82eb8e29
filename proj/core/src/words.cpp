#include "sysrel/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sysrel {

namespace {

bool has_whitespace(const std::string& s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

TokenSet::TokenSet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    std::set<std::string> seen;
    for (const auto& t : tokens_) {
        if (t.empty())
            throw Error("token set: empty token");
        if (has_whitespace(t))
            throw Error("token set: token contains whitespace: '" + t + "'");
        if (!seen.insert(t).second)
            throw Error("token set: duplicate token '" + t + "'");
    }
}

bool TokenSet::contains(const std::string& token) const {
    return std::find(tokens_.begin(), tokens_.end(), token) != tokens_.end();
}

int TokenSet::index(const std::string& token) const {
    auto it = std::find(tokens_.begin(), tokens_.end(), token);
    if (it == tokens_.end())
        throw Error("unknown token '" + token + "'");
    return static_cast<int>(it - tokens_.begin());
}

Alphabet::Alphabet(std::vector<std::string> letters, const std::string& pad,
                   const std::optional<std::string>& absorb)
    : tokens_(std::move(letters)) {
    for (const auto& t : tokens_.tokens())
        if (t == kConvolutionFiller)
            throw Error("alphabet: '" + kConvolutionFiller + "' is reserved for convolution");
    if (!tokens_.contains(pad))
        throw Error("alphabet: pad '" + pad + "' is not a letter");
    pad_ = tokens_.index(pad);
    if (absorb) {
        if (!tokens_.contains(*absorb))
            throw Error("alphabet: absorb '" + *absorb + "' is not a letter");
        if (*absorb == pad)
            throw Error("alphabet: absorb must differ from pad");
        absorb_ = tokens_.index(*absorb);
        absorb_name_ = *absorb;
    }
}

const std::string& Alphabet::pad() const {
    if (pad_ < 0)
        throw Error("alphabet: uninitialized");
    return tokens_.tokens()[static_cast<std::size_t>(pad_)];
}

int Alphabet::index(const std::string& token) const {
    if (!tokens_.contains(token))
        throw Error("letter '" + token + "' is not in the alphabet");
    return tokens_.index(token);
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letters_[i];
    }
    return out;
}

Word eta_normalize(const Alphabet& alphabet, std::vector<std::string> raw) {
    for (const auto& t : raw)
        if (!alphabet.contains(t))
            throw Error("letter '" + t + "' is not in the alphabet");
    while (!raw.empty() && raw.back() == alphabet.pad())
        raw.pop_back();
    return Word(std::move(raw));
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
    return eta_normalize(alphabet, split_tokens(text));
}

std::vector<std::string> pad_to(const Alphabet& alphabet, const Word& w, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(i < w.size() ? w.letters()[i] : alphabet.pad());
    return out;
}

Word gcp(const Alphabet& alphabet, const Word& w, const Word& v) {
    std::vector<std::string> out;
    std::size_t n = std::min(w.size(), v.size());
    for (std::size_t i = 0; i < n && w.letters()[i] == v.letters()[i]; ++i)
        out.push_back(w.letters()[i]);
    return eta_normalize(alphabet, std::move(out));
}

std::vector<std::pair<std::string, std::string>> convolution(const Alphabet& alphabet,
                                                             const Word& w, const Word& v) {
    (void)alphabet;
    std::size_t n = std::max(w.size(), v.size());
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(i < w.size() ? w.letters()[i] : kConvolutionFiller,
                         i < v.size() ? v.letters()[i] : kConvolutionFiller);
    return out;
}

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<Word> out;
    std::vector<std::vector<std::string>> frontier{{}};
    out.push_back(eta_normalize(alphabet, {}));
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<std::string>> next;
        for (const auto& stem : frontier) {
            for (const auto& letter : alphabet.letters()) {
                auto seq = stem;
                seq.push_back(letter);
                if (letter != alphabet.pad())
                    out.push_back(eta_normalize(alphabet, seq));
                next.push_back(std::move(seq));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

OuterWord parse_outer_word(const TokenSet& outer, const std::string& text) {
    OuterWord w = split_tokens(text);
    for (const auto& t : w)
        if (!outer.contains(t))
            throw Error("outer letter '" + t + "' is not in the outer alphabet");
    return w;
}

std::string outer_str(const OuterWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i];
    }
    return out;
}

std::vector<OuterWord> outer_words_of_length(const TokenSet& outer, std::size_t len) {
    std::vector<OuterWord> out{{}};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<OuterWord> next;
        for (const auto& stem : out) {
            for (const auto& letter : outer.tokens()) {
                auto w = stem;
                w.push_back(letter);
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace sysrel
