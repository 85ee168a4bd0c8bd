#include "ncm/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncm {

namespace {

[[noreturn]] void bad_word(std::string_view text) {
    throw std::invalid_argument("bad word literal: " + std::string(text));
}

int parse_index(std::string_view text, size_t& pos, std::string_view whole) {
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) bad_word(whole);
    int v = 0;
    for (size_t t = start; t < pos; ++t) v = v * 10 + (text[t] - '0');
    if (v < 1) bad_word(whole);
    return v;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const Letter& l : letters_)
        if (l.row < 1 || l.col < 1)
            throw std::invalid_argument("letter indices must be >= 1");
}

Word Word::parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') compact.push_back(c);
    if (compact.empty() || compact == "1") return Word();

    std::vector<Letter> letters;
    size_t pos = 0;
    std::string_view s(compact);
    while (pos < s.size()) {
        if (s[pos] != 'a') bad_word(text);
        ++pos;
        Letter l;
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            l.row = parse_index(s, pos, text);
            if (pos >= s.size() || s[pos] != ',') bad_word(text);
            ++pos;
            l.col = parse_index(s, pos, text);
            if (pos >= s.size() || s[pos] != ')') bad_word(text);
            ++pos;
        } else {
            // compact form: exactly two single digits
            if (pos + 1 >= s.size() || s[pos] < '1' || s[pos] > '9' || s[pos + 1] < '1' ||
                s[pos + 1] > '9')
                bad_word(text);
            l.row = s[pos] - '0';
            l.col = s[pos + 1] - '0';
            pos += 2;
        }
        letters.push_back(l);
        if (pos < s.size()) {
            if (s[pos] != ',') bad_word(text);
            ++pos;
            if (pos == s.size()) bad_word(text);  // trailing comma
        }
    }
    return Word(std::move(letters));
}

std::vector<int> Word::row_word() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) out.push_back(l.row);
    return out;
}

std::vector<int> Word::col_word() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) out.push_back(l.col);
    return out;
}

std::vector<int> Word::row_content(int m) const {
    std::vector<int> out(static_cast<size_t>(m), 0);
    for (const Letter& l : letters_) {
        if (l.row > m) throw std::invalid_argument("letter row exceeds matrix size");
        ++out[static_cast<size_t>(l.row - 1)];
    }
    return out;
}

std::vector<int> Word::col_content(int m) const {
    std::vector<int> out(static_cast<size_t>(m), 0);
    for (const Letter& l : letters_) {
        if (l.col > m) throw std::invalid_argument("letter col exceeds matrix size");
        ++out[static_cast<size_t>(l.col - 1)];
    }
    return out;
}

bool Word::balanced(int m) const { return row_content(m) == col_content(m); }

int Word::max_index() const {
    int v = 0;
    for (const Letter& l : letters_) v = std::max({v, l.row, l.col});
    return v;
}

Word Word::concat(const Word& o) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(out));
}

Word Word::subword(size_t from, size_t count) const {
    if (from + count > letters_.size()) throw std::invalid_argument("subword out of range");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(from),
                                    letters_.begin() + static_cast<long>(from + count)));
}

Word Word::with_adjacent_swapped(size_t t) const {
    if (t + 1 >= letters_.size()) throw std::invalid_argument("swap position out of range");
    std::vector<Letter> out = letters_;
    std::swap(out[t], out[t + 1]);
    return Word(std::move(out));
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const Letter& l : letters_) {
        if (!out.empty()) out += ",";
        if (l.row <= 9 && l.col <= 9) {
            out += "a" + std::to_string(l.row) + std::to_string(l.col);
        } else {
            out += "a(" + std::to_string(l.row) + "," + std::to_string(l.col) + ")";
        }
    }
    return out;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    for (size_t t = 0; t < letters_.size(); ++t)
        if (auto c = letters_[t].row <=> o.letters_[t].row; c != 0) return c;
    for (size_t t = 0; t < letters_.size(); ++t)
        if (auto c = letters_[t].col <=> o.letters_[t].col; c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<std::pair<size_t, size_t>> inversion_pairs(const std::vector<int>& w) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t s = 0; s < w.size(); ++s)
        for (size_t t = s + 1; t < w.size(); ++t)
            if (w[s] > w[t]) out.emplace_back(s, t);
    return out;
}

long inv(const std::vector<int>& w) {
    long n = 0;
    for (size_t s = 0; s < w.size(); ++s)
        for (size_t t = s + 1; t < w.size(); ++t)
            if (w[s] > w[t]) ++n;
    return n;
}

std::vector<std::vector<int>> multiset_arrangements(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

std::vector<int> expand_content(const std::vector<int>& content) {
    std::vector<int> out;
    for (size_t i = 0; i < content.size(); ++i) {
        if (content[i] < 0) throw std::invalid_argument("content entries must be >= 0");
        out.insert(out.end(), static_cast<size_t>(content[i]), static_cast<int>(i) + 1);
    }
    return out;
}

std::string Bigrading::str() const {
    std::string out = "(";
    for (size_t t = 0; t < rows.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(rows[t]);
    }
    out += "|";
    for (size_t t = 0; t < cols.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(cols[t]);
    }
    return out + ")";
}

Bigrading bigrading_of(const Word& w, int m) {
    return Bigrading{w.row_content(m), w.col_content(m)};
}

}  // namespace ncm
