#include "torusknot/word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tk {

GroupWord::GroupWord(std::initializer_list<Letter> ls) {
    for (const auto& l : ls) push(l.gen, l.exp);
}

void GroupWord::push(Gen g, long long e) {
    if (e == 0) return;
    if (!letters.empty() && letters.back().gen == g) {
        letters.back().exp += e;
        if (letters.back().exp == 0) letters.pop_back();
        return;
    }
    letters.push_back({g, e});
}

void GroupWord::append(const GroupWord& w) {
    for (const auto& l : w.letters) push(l.gen, l.exp);
}

std::size_t GroupWord::length() const {
    std::size_t n = 0;
    for (const auto& l : letters) n += static_cast<std::size_t>(std::llabs(l.exp));
    return n;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
    GroupWord w = u;
    w.append(v);
    return w;
}

GroupWord inverse(const GroupWord& w) {
    GroupWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push(it->gen, -it->exp);
    return out;
}

GroupWord power(const GroupWord& w, long long n) {
    GroupWord base = n >= 0 ? w : inverse(w);
    GroupWord out;
    for (long long k = 0; k < std::llabs(n); ++k) out.append(base);
    return out;
}

GroupWord commutator(const GroupWord& u, const GroupWord& v) { return u * v * inverse(u) * inverse(v); }

GroupWord alphaPow(long long e) {
    GroupWord w;
    w.push(Gen::A, e);
    return w;
}

GroupWord betaPow(long long e) {
    GroupWord w;
    w.push(Gen::B, e);
    return w;
}

GroupWord parseWord(const std::string& text) {
    GroupWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        Gen g;
        if (tok[0] == 'a')
            g = Gen::A;
        else if (tok[0] == 'b')
            g = Gen::B;
        else
            throw std::invalid_argument("parseWord: unknown generator in '" + tok + "'");
        long long e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() == 2) throw std::invalid_argument("parseWord: bad token '" + tok + "'");
            std::size_t used = 0;
            e = std::stoll(tok.substr(2), &used);
            if (used != tok.size() - 2) throw std::invalid_argument("parseWord: bad exponent in '" + tok + "'");
        }
        w.push(g, e);
    }
    return w;
}

std::string toString(const GroupWord& w) {
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += ' ';
        s += l.gen == Gen::A ? 'a' : 'b';
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

}  // namespace tk
