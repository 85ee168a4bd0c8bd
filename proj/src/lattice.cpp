#include "ncm/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncm {

namespace {

void validate_heights(const Word& w, int m) {
    if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
    if (w.max_index() > m)
        throw std::invalid_argument("word mentions heights beyond the matrix size");
}

// Deterministic parse of the longest prefix that is part of a p-sequence.
// State: base height h of the current closed path, current height cur.
// A letter (r, c) continues the parse iff
//   r == cur and c >= h            (next step of the current path), or
//   cur == h and r > h and c >= r  (close paths below r, open base r).
// The prefix is a complete p-sequence iff everything parses and cur == h.
struct PParse {
    size_t prefix_len = 0;
    int height = 1;  // path height at the end of the prefix
    bool complete = false;
};

PParse p_parse(const Word& w, int /*m*/) {
    int h = 1, cur = 1;
    size_t t = 0;
    for (; t < w.degree(); ++t) {
        const Letter& l = w[t];
        if (l.row == cur) {
            if (l.col < h) break;
            cur = l.col;
        } else if (cur == h && l.row > h) {
            if (l.col < l.row) break;  // a base-opening step may not dip below its base
            h = l.row;
            cur = l.col;
        } else {
            break;
        }
    }
    return {t, cur, t == w.degree() && cur == h};
}

// One switch on a trusted chain state: locate the first tail letter starting
// at the prefix-end height and move it one position left.  Identity on
// p-sequences.
Word switch_once(const Word& w, int m) {
    PParse parse = p_parse(w, m);
    if (parse.complete) return w;
    for (size_t t = parse.prefix_len; t < w.degree(); ++t) {
        if (w[t].row == parse.height) {
            // the letter right after the prefix never starts at the prefix-end
            // height (the parse would have continued through it)
            if (t == parse.prefix_len)
                throw std::logic_error("p-parse stopped in front of a continuing step");
            return w.with_adjacent_swapped(t - 1);
        }
    }
    throw std::logic_error("no step starts at the prefix-end height");
}

std::vector<std::vector<int>> multiset_arrangements(std::vector<int> values, Guard& guard) {
    std::sort(values.begin(), values.end());
    std::vector<std::vector<int>> out;
    do {
        guard.count();
        out.push_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

std::vector<int> type_to_letters(const TypeVector& type) {
    std::vector<int> out;
    for (size_t i = 0; i < type.size(); ++i) {
        if (type[i] < 0) throw std::invalid_argument("type entries must be >= 0");
        out.insert(out.end(), static_cast<size_t>(type[i]), static_cast<int>(i) + 1);
    }
    return out;
}

void p_sequence_dfs(int h, int cur, int m, std::vector<int>& budget, std::vector<Letter>& acc,
                    std::vector<Word>& out, Guard& guard) {
    bool spent = std::all_of(budget.begin(), budget.end(), [](int b) { return b == 0; });
    if (spent) {
        if (cur == h) {
            guard.count();
            out.push_back(Word(acc));
        }
        return;
    }
    // continue the current path
    if (budget[static_cast<size_t>(cur - 1)] > 0) {
        for (int c = h; c <= m; ++c) {
            --budget[static_cast<size_t>(cur - 1)];
            acc.push_back({cur, c});
            guard.count();
            p_sequence_dfs(h, c, m, budget, acc, out, guard);
            acc.pop_back();
            ++budget[static_cast<size_t>(cur - 1)];
        }
    }
    // close the base-h path and open a higher base; every height passed over
    // must have no steps left, since later paths never start below their base
    if (cur == h) {
        bool clear = budget[static_cast<size_t>(h - 1)] == 0;
        for (int r = h + 1; r <= m && clear; ++r) {
            if (budget[static_cast<size_t>(r - 1)] > 0) {
                for (int c = r; c <= m; ++c) {
                    --budget[static_cast<size_t>(r - 1)];
                    acc.push_back({r, c});
                    guard.count();
                    p_sequence_dfs(r, c, m, budget, acc, out, guard);
                    acc.pop_back();
                    ++budget[static_cast<size_t>(r - 1)];
                }
            }
            clear = budget[static_cast<size_t>(r - 1)] == 0;
        }
    }
}

}  // namespace

Word regroup_by_row(const Word& w, int m) {
    validate_heights(w, m);
    std::vector<Letter> letters = w.letters();
    std::stable_sort(letters.begin(), letters.end(),
                     [](const Letter& a, const Letter& b) { return a.row < b.row; });
    return Word(std::move(letters));
}

Classification classify(const Word& w, int m) {
    validate_heights(w, m);
    Classification cls;
    std::vector<int> rows = w.row_word();
    cls.rank = inv(rows);
    cls.balanced = w.balanced(m);
    if (!cls.balanced) return cls;
    cls.type = w.row_content(m);
    cls.o_sequence = std::is_sorted(rows.begin(), rows.end());
    cls.p_sequence = p_parse(w, m).complete;
    // A word is a chain state iff replaying the sorting process from its
    // row-regrouped origin for rank-many switches reproduces it.  This is the
    // honest definition ("the sequences the transformation passes through")
    // and automatically keeps every rank slice the size of the o-sequence set.
    Word state = regroup_by_row(w, m);
    for (long n = 0; n < cls.rank; ++n) {
        Word next = switch_once(state, m);
        if (next == state) break;  // reached the p-sequence early
        state = std::move(next);
    }
    cls.q_sequence = state == w;
    return cls;
}

Word psi_step(const Word& w, int m) {
    Classification cls = classify(w, m);
    if (!cls.q_sequence)
        throw std::invalid_argument("psi_step requires a q-sequence, got " + w.str());
    return switch_once(w, m);
}

PhiResult phi(const Word& o_sequence, int m) {
    Classification cls = classify(o_sequence, m);
    if (!cls.o_sequence)
        throw std::invalid_argument("phi requires an o-sequence, got " + o_sequence.str());
    PhiResult res{o_sequence, 0};
    while (true) {
        Word next = switch_once(res.p_sequence, m);
        if (next == res.p_sequence) break;
        res.p_sequence = std::move(next);
        ++res.switches;
    }
    return res;
}

Word phi_inverse(const Word& p_sequence, int m) {
    Classification cls = classify(p_sequence, m);
    if (!cls.p_sequence)
        throw std::invalid_argument("phi_inverse requires a p-sequence, got " + p_sequence.str());
    return regroup_by_row(p_sequence, m);
}

std::vector<Word> enumerate_sequences(SequenceKind kind, const TypeVector& type, int m, long rank,
                                      Guard guard) {
    if (static_cast<int>(type.size()) != m)
        throw std::invalid_argument("type vector length must equal the matrix size");
    if (rank < 0) throw std::invalid_argument("rank must be >= 0");
    std::vector<int> letters_of_type = type_to_letters(type);

    std::vector<Word> out;
    switch (kind) {
        case SequenceKind::Balanced:
        case SequenceKind::QSequence: {
            auto rows = multiset_arrangements(letters_of_type, guard);
            auto cols = rows;  // same multiset on both axes
            for (const auto& lambda : rows) {
                for (const auto& mu : cols) {
                    guard.count();
                    std::vector<Letter> ls(lambda.size());
                    for (size_t t = 0; t < lambda.size(); ++t) ls[t] = {lambda[t], mu[t]};
                    Word w{std::move(ls)};
                    if (kind == SequenceKind::Balanced) {
                        out.push_back(std::move(w));
                    } else {
                        Classification cls = classify(w, m);
                        if ((cls.q_sequence && cls.rank == rank) ||
                            (cls.p_sequence && cls.rank < rank))
                            out.push_back(std::move(w));
                    }
                }
            }
            break;
        }
        case SequenceKind::OSequence: {
            std::vector<int> lambda = letters_of_type;  // already sorted
            for (const auto& mu : multiset_arrangements(letters_of_type, guard)) {
                guard.count();
                std::vector<Letter> ls(lambda.size());
                for (size_t t = 0; t < lambda.size(); ++t) ls[t] = {lambda[t], mu[t]};
                out.push_back(Word(std::move(ls)));
            }
            break;
        }
        case SequenceKind::PSequence: {
            std::vector<int> budget = type;
            std::vector<Letter> acc;
            p_sequence_dfs(1, 1, m, budget, acc, out, guard);
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> primitive_parts(const Word& p_sequence, int m) {
    Classification cls = classify(p_sequence, m);
    if (!cls.p_sequence)
        throw std::invalid_argument("primitive decomposition requires a p-sequence");
    std::vector<Word> parts;
    int h = 1, cur = 1;
    size_t part_start = 0;
    for (size_t t = 0; t < p_sequence.degree(); ++t) {
        const Letter& l = p_sequence[t];
        if (l.row == cur) {
            cur = l.col;
        } else {  // base jump (validated by the parse above)
            h = l.row;
            cur = l.col;
        }
        if (cur == h) {  // the path is back at its base: a primitive part ends
            parts.push_back(p_sequence.subword(part_start, t + 1 - part_start));
            part_start = t + 1;
        }
    }
    return parts;
}

}  // namespace ncm
