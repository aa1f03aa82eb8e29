#include "sysrel/distance.hpp"

#include <algorithm>

#include "sysrel/error.hpp"

namespace sysrel {

NormalDistance::NormalDistance(Alphabet alphabet,
                               std::optional<std::vector<std::string>> digit_order)
    : alphabet_(std::move(alphabet)) {
    if (digit_order) {
        order_ = *digit_order;
        if (order_.size() != alphabet_.size())
            throw Error("distance: digit order must list every letter once");
        auto sorted_order = order_;
        auto sorted_letters = alphabet_.letters();
        std::sort(sorted_order.begin(), sorted_order.end());
        std::sort(sorted_letters.begin(), sorted_letters.end());
        if (sorted_order != sorted_letters)
            throw Error("distance: digit order must be a permutation of the alphabet");
        if (order_.back() != alphabet_.pad())
            throw Error("distance: the pad must be the greatest digit");
    } else {
        for (const auto& letter : alphabet_.letters())
            if (letter != alphabet_.pad())
                order_.push_back(letter);
        order_.push_back(alphabet_.pad());
    }
    for (std::size_t i = 0; i < order_.size(); ++i)
        digit_.emplace(order_[i], static_cast<int>(i));
}

int NormalDistance::digit(const std::string& letter) const {
    auto it = digit_.find(letter);
    if (it == digit_.end())
        throw Error("distance: letter '" + letter + "' not in alphabet");
    return it->second;
}

Rational NormalDistance::val(const Word& w) const {
    // sum digit_i * base^-i as one fraction over base^|w|
    std::int64_t b = base();
    std::int64_t num = 0;
    for (const auto& letter : w.letters())
        num = num * b + digit(letter);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        den *= b;
    return Rational(num, den);
}

Rational NormalDistance::val_padded(const Word& w) const {
    std::int64_t den = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        den *= base();
    return val(w) + Rational(1, den);
}

Rational NormalDistance::dist(const Word& x, const Word& y) const {
    return (val(x) - val(y)).abs();
}

} // namespace sysrel
