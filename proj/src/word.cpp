#include "perimal/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "perimal/error.hpp"

namespace perimal {

Word reduced(Word w) {
    Word out;
    out.reserve(w.size());
    for (auto& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp = checked_add(out.back().exp, l.exp);
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(std::move(l));
        }
    }
    return out;
}

bool is_reduced(const Word& w) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].exp == 0) return false;
        if (i > 0 && w[i - 1].gen == w[i].gen) return false;
    }
    return true;
}

Word wmul(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduced(std::move(out));
}

Word winv(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->gen, -it->exp});
    return out;
}

Word wpow(const Word& w, i64 n) {
    if (n == 0 || w.empty()) return {};
    // A word of the shape u c u^-1 with c a single letter powers by scaling c;
    // the general case concatenates, which is fine at the sizes we use.
    if (w.size() == 1) return {{w[0].gen, checked_mul(w[0].exp, n)}};
    Word base = n < 0 ? winv(w) : w;
    i64 k = n < 0 ? -n : n;
    Word out;
    for (i64 i = 0; i < k; ++i) out = wmul(out, base);
    return out;
}

Word wconj(const Word& g, const Word& w) {
    return wmul(wmul(g, w), winv(g));
}

i64 word_length(const Word& w) {
    i64 n = 0;
    for (const auto& l : w) n = checked_add(n, l.exp < 0 ? -l.exp : l.exp);
    return n;
}

Word wsubst(const Word& w, const std::map<std::string, Word>& images) {
    Word out;
    for (const auto& l : w) {
        auto it = images.find(l.gen);
        if (it == images.end())
            fail(errc::unknown_generator, "no image for generator '" + l.gen + "'");
        out = wmul(out, wpow(it->second, l.exp));
    }
    return out;
}

std::string render_word(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i].gen;
        if (w[i].exp != 1) os << '^' << w[i].exp;
    }
    return os.str();
}

namespace {

bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

Word parse_word(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    if (tokens.empty())
        fail(errc::parse_error, "empty word text; use '1' for the identity");
    if (tokens.size() == 1 && tokens[0] == "1") return {};

    Word w;
    for (const auto& t : tokens) {
        std::string gen = t;
        i64 exp = 1;
        if (auto caret = t.find('^'); caret != std::string::npos) {
            gen = t.substr(0, caret);
            std::string e = t.substr(caret + 1);
            try {
                size_t used = 0;
                exp = std::stoll(e, &used);
                if (used != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception&) {
                fail(errc::parse_error, "bad exponent in token '" + t + "'");
            }
            if (exp == 0)
                fail(errc::parse_error, "zero exponent in token '" + t + "'");
        }
        if (!valid_ident(gen))
            fail(errc::parse_error, "bad generator name in token '" + t + "'");
        w.push_back({gen, exp});
    }
    return reduced(std::move(w));
}

Word parse_word(const std::string& text, const std::vector<std::string>& alphabet) {
    Word w = parse_word(text);
    for (const auto& l : w)
        if (std::find(alphabet.begin(), alphabet.end(), l.gen) == alphabet.end())
            fail(errc::unknown_generator, "generator '" + l.gen + "' not in alphabet");
    return w;
}

} // namespace perimal
