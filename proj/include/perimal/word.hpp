#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perimal/intmath.hpp"

namespace perimal {

// One syllable of a group word: a named generator raised to a nonzero power.
struct Letter {
    std::string gen;
    i64 exp = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Words are kept freely reduced: adjacent letters never share a generator and
// no letter has exponent zero.  All constructors below maintain this.
using Word = std::vector<Letter>;

// Collapses adjacent same-generator letters and drops zero exponents.
Word reduced(Word w);

bool is_reduced(const Word& w);

Word wmul(const Word& a, const Word& b);
Word winv(const Word& w);
Word wpow(const Word& w, i64 n);

// g w g^-1
Word wconj(const Word& g, const Word& w);

// Letter count with multiplicity: sum of |exp|.
i64 word_length(const Word& w);

// Rewrites each generator via the given dictionary; generators absent from the
// dictionary raise UnknownGenerator.
Word wsubst(const Word& w, const std::map<std::string, Word>& images);

// Token format: space-separated "gen" or "gen^k" with nonzero integer k; the
// bare token "1" denotes the empty word.  render/parse round-trip bit-exactly
// on reduced words.
std::string render_word(const Word& w);
Word parse_word(const std::string& text);

// Like parse_word but additionally rejects generators outside the alphabet.
Word parse_word(const std::string& text, const std::vector<std::string>& alphabet);

} // namespace perimal
