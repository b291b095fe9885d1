#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "freespec/errors.hpp"

namespace freespec {

/// Trace of a product of letters drawn from freely independent subalgebras.
///
/// Traits supplies the letter type and, per letter: `algebra` (index of the
/// subalgebra), `mul` (same algebra only), `tau`, `scalar` (the c with
/// letter = c 1, if any), `centered` (letter - tau(letter) 1), `scale` (a
/// norm used for the zero test) and `key` (exact serialization for memoing).
///
/// Words are normalized by fusing neighbours from the same algebra, cyclic
/// wrap-around included, and pulling scalars out. A normalized word whose
/// letters are all centered has trace zero; otherwise the first uncentered
/// letter a is split as tau(a) 1 + (a - tau(a) 1).
template <class Traits>
class FreeTraceEngine {
public:
    using Letter = typename Traits::Letter;
    using cplx = std::complex<double>;

    explicit FreeTraceEngine(std::size_t max_length, Traits traits = {})
        : max_length_(max_length), traits_(std::move(traits)) {}

    cplx trace(std::vector<Letter> word) {
        const cplx c = normalize(word);
        if (c == cplx{}) return {};
        if (word.size() > max_length_)
            throw ResourceError("word of length " + std::to_string(word.size()) +
                                " exceeds the bound " + std::to_string(max_length_));
        return c * eval(word);
    }

    /// Length of the word after normalization (0 for scalars).
    std::size_t reduced_length(std::vector<Letter> word) {
        normalize(word);
        return word.size();
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    bool is_centered(const Letter& l) const {
        return std::abs(traits_.tau(l)) <= 1e-13 * std::max(1.0, traits_.scale(l));
    }

    cplx normalize(std::vector<Letter>& w) const {
        cplx c{1.0, 0.0};
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < w.size();) {
                if (auto s = traits_.scalar(w[i])) {
                    c *= *s;
                    if (c == cplx{}) {
                        w.clear();
                        return {};
                    }
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                } else {
                    ++i;
                }
            }
            for (std::size_t i = 0; i + 1 < w.size();) {
                if (traits_.algebra(w[i]) == traits_.algebra(w[i + 1])) {
                    w[i] = traits_.mul(w[i], w[i + 1]);
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i + 1));
                    changed = true;
                } else {
                    ++i;
                }
            }
            if (w.size() >= 2 && traits_.algebra(w.front()) == traits_.algebra(w.back())) {
                w.front() = traits_.mul(w.back(), w.front());
                w.pop_back();
                changed = true;
            }
        }
        return c;
    }

    cplx eval(const std::vector<Letter>& w) {
        if (w.empty()) return {1.0, 0.0};
        if (w.size() == 1) return traits_.tau(w[0]);
        std::string key;
        for (const auto& l : w) key += traits_.key(l);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::size_t i = 0;
        while (i < w.size() && is_centered(w[i])) ++i;
        cplx value{};
        if (i < w.size()) {
            const cplx t = traits_.tau(w[i]);
            std::vector<Letter> rest = w;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            const cplx c1 = normalize(rest);
            if (c1 != cplx{}) value += t * c1 * eval(rest);
            std::vector<Letter> centered = w;
            centered[i] = traits_.centered(w[i]);
            const cplx c2 = normalize(centered);
            if (c2 != cplx{}) value += c2 * eval(centered);
        }
        memo_.emplace(std::move(key), value);
        return value;
    }

    std::size_t max_length_;
    Traits traits_;
    std::unordered_map<std::string, cplx> memo_;
};

}  // namespace freespec
