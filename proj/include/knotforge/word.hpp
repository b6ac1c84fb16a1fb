#ifndef KNOTFORGE_WORD_HPP
#define KNOTFORGE_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "knotforge/errors.hpp"

namespace knotforge::groups {

// Freely reduced word in generators x0, x1, ...: sequence of (generator,
// nonzero exponent) with distinct adjacent generators.
class Word {
public:
    struct Syllable {
        int gen;
        int64_t exp;
        bool operator==(const Syllable&) const = default;
    };

    Word() = default;
    Word(std::initializer_list<Syllable> syls) {
        for (const auto& s : syls) append(s.gen, s.exp);
    }

    static Word generator(int g, int64_t e = 1) {
        Word w;
        w.append(g, e);
        return w;
    }

    void append(int gen, int64_t exp);
    void append(const Word& w) {
        for (const auto& s : w.syls_) append(s.gen, s.exp);
    }

    bool empty() const { return syls_.empty(); }
    size_t size() const { return syls_.size(); }
    const std::vector<Syllable>& syllables() const { return syls_; }

    Word inverse() const;
    Word operator*(const Word& o) const {
        Word r = *this;
        r.append(o);
        return r;
    }
    static Word commutator(const Word& a, const Word& b) {
        return a * b * a.inverse() * b.inverse();
    }
    static Word conjugate(const Word& w, const Word& by) {
        return by * w * by.inverse();
    }
    bool operator==(const Word& o) const = default;

    int max_generator() const;
    int64_t exponent_sum(int gen) const;
    // total letter count (sum of |exp|)
    int64_t length() const;

    std::string str() const;             // "x1 x2^-1 x1^3" (1-based names)
    static Word parse(const std::string& s);

private:
    std::vector<Syllable> syls_;
};

} // namespace knotforge::groups

#endif
