#pragma once

#include <string>
#include <vector>

namespace tk {

enum class Gen : unsigned char { A, B };

struct Letter {
    Gen gen;
    long long exp;
    bool operator==(const Letter&) const = default;
};

// Word in the abstract generators alpha (A) and beta (B). Adjacent letters on
// the same generator are merged on insertion; zero exponents are dropped.
struct GroupWord {
    std::vector<Letter> letters;

    GroupWord() = default;
    GroupWord(std::initializer_list<Letter> ls);

    void push(Gen g, long long e);
    void append(const GroupWord& w);
    std::size_t length() const;  // sum of |exponents|
    bool empty() const { return letters.empty(); }
    bool operator==(const GroupWord&) const = default;
};

GroupWord operator*(const GroupWord& u, const GroupWord& v);
GroupWord inverse(const GroupWord& w);
GroupWord power(const GroupWord& w, long long n);
GroupWord commutator(const GroupWord& u, const GroupWord& v);  // u v u^-1 v^-1
GroupWord alphaPow(long long e);
GroupWord betaPow(long long e);

// Syntax: letters a, b with optional ^exponent, whitespace separated ("a^2 b^-3 a").
GroupWord parseWord(const std::string& text);
std::string toString(const GroupWord& w);

}  // namespace tk
