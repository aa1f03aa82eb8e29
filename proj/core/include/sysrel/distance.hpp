#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sysrel/rational.hpp"
#include "sysrel/words.hpp"

namespace sysrel {

/// Positional valuation on eta-normal words with the pad as the greatest
/// digit; that digit order is the one making pad-prefix dominance hold. The
/// distance between two words is the absolute difference of their values.
///
/// val() sums digit_i * base^-i over the letters actually present, so
/// val("b") over {a, b, pad} is 1/3. val_padded() adds the contribution of
/// the infinite pad tail, i.e. it is the number denoted by w . pad^omega;
/// under it the level-n prefix balls are disjoint intervals, which is the
/// form in which ball convexity holds exactly.
class NormalDistance {
public:
    NormalDistance() = default;
    explicit NormalDistance(Alphabet alphabet,
                            std::optional<std::vector<std::string>> digit_order = std::nullopt);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::string>& digit_order() const { return order_; }
    int base() const { return static_cast<int>(order_.size()); }
    int digit(const std::string& letter) const;

    Rational val(const Word& w) const;
    Rational val_padded(const Word& w) const;
    Rational dist(const Word& x, const Word& y) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> order_;
    std::map<std::string, int> digit_;
};

} // namespace sysrel
