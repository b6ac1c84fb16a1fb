#include "knotforge/word.hpp"

#include <sstream>

namespace knotforge::groups {

void Word::append(int gen, int64_t exp) {
    if (exp == 0) return;
    if (gen < 0) throw InvalidArgument("negative generator index");
    if (!syls_.empty() && syls_.back().gen == gen) {
        syls_.back().exp += exp;
        if (syls_.back().exp == 0) syls_.pop_back();
        return;
    }
    syls_.push_back({gen, exp});
}

Word Word::inverse() const {
    Word r;
    for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
        r.syls_.push_back({it->gen, -it->exp});
    return r;
}

int Word::max_generator() const {
    int m = -1;
    for (const auto& s : syls_) m = std::max(m, s.gen);
    return m;
}

int64_t Word::exponent_sum(int gen) const {
    int64_t t = 0;
    for (const auto& s : syls_)
        if (s.gen == gen) t += s.exp;
    return t;
}

int64_t Word::length() const {
    int64_t t = 0;
    for (const auto& s : syls_) t += s.exp < 0 ? -s.exp : s.exp;
    return t;
}

std::string Word::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syls_) {
        if (!first) os << " ";
        first = false;
        os << "x" << (s.gen + 1);
        if (s.exp != 1) os << "^" << s.exp;
    }
    return os.str();
}

Word Word::parse(const std::string& s) {
    Word w;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok[0] != 'x') throw ParseError("word syllable must start with x: " + tok);
        size_t i = 1;
        int gen = 0;
        bool any = false;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
            gen = gen * 10 + (tok[i] - '0');
            ++i;
            any = true;
        }
        if (!any || gen < 1) throw ParseError("bad generator in word: " + tok);
        int64_t exp = 1;
        if (i < tok.size()) {
            if (tok[i] != '^') throw ParseError("expected ^ in word syllable: " + tok);
            exp = std::stoll(tok.substr(i + 1));
            if (exp == 0) throw ParseError("zero exponent in word: " + tok);
        }
        w.append(gen - 1, exp);
    }
    return w;
}

} // namespace knotforge::groups
