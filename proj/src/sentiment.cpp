#include "ballotwire/sentiment.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <unordered_set>
#include <vector>

#include "ballotwire/error.hpp"
#include "ballotwire/numeric.hpp"

namespace ballotwire {
namespace {

using namespace sentiment_rules;

// ------------------------------------------------------------------ unicode

std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    const auto* p = reinterpret_cast<const unsigned char*>(s.data());
    const auto* end = p + s.size();
    while (p < end) {
        const unsigned char c = *p;
        int extra = c < 0x80 ? 0 : (c & 0xE0) == 0xC0 ? 1 : (c & 0xF0) == 0xE0 ? 2 : (c & 0xF8) == 0xF0 ? 3 : -1;
        if (extra < 0 || end - p <= extra) {
            out.push_back(U'�');
            ++p;
            continue;
        }
        char32_t cp = extra == 0 ? c : (c & (0x3F >> extra));
        bool ok = true;
        for (int i = 1; i <= extra; ++i) {
            if ((p[i] & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (p[i] & 0x3F);
        }
        if (!ok) {
            out.push_back(U'�');
            ++p;
            continue;
        }
        out.push_back(cp);
        p += extra + 1;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Whitespace as understood by Python's str.split()/str.strip().
bool is_space(char32_t c) {
    return (c >= 0x09 && c <= 0x0D) || (c >= 0x1C && c <= 0x20) || c == 0x85 || c == 0xA0 ||
           c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
           c == 0x205F || c == 0x3000;
}

bool is_ascii_punct(char32_t c) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
           (c >= 0x7B && c <= 0x7E);
}

// Case tables cover Latin (basic, Latin-1, Extended-A), Greek and Cyrillic;
// other scripts are treated as uncased.
bool is_upper(char32_t c) {
    if (c >= U'A' && c <= U'Z')
        return true;
    if (c >= 0xC0 && c <= 0xDE)
        return c != 0xD7;
    if (c >= 0x100 && c <= 0x17F) {
        if (c == 0x178)
            return true;
        if (c == 0x138 || c == 0x149 || c == 0x17F)
            return false;
        if ((c >= 0x139 && c <= 0x148) || (c >= 0x179 && c <= 0x17E))
            return c % 2 == 1;
        return c % 2 == 0;
    }
    if (c >= 0x391 && c <= 0x3A9)
        return c != 0x3A2;
    if (c >= 0x400 && c <= 0x42F)
        return true;
    return false;
}

bool is_lower(char32_t c) {
    if (c >= U'a' && c <= U'z')
        return true;
    if (c == 0xB5 || (c >= 0xDF && c <= 0xFF))
        return c != 0xF7;
    if (c >= 0x100 && c <= 0x17F)
        return !is_upper(c);
    if (c >= 0x3AC && c <= 0x3CE)
        return true;
    if (c >= 0x430 && c <= 0x45F)
        return true;
    return false;
}

char32_t to_lower(char32_t c) {
    if (!is_upper(c))
        return c;
    if (c <= 0xDE)
        return c + 0x20;
    if (c == 0x178)
        return 0xFF;
    if (c == 0x130)
        return U'i';
    if (c <= 0x17F)
        return c + 1;
    if (c <= 0x3A9)
        return c + 0x20;
    if (c <= 0x40F)
        return c + 0x50;
    return c + 0x20;
}

/// Python's str.isupper(): at least one cased character, none lowercase.
bool py_isupper(std::u32string_view w) {
    bool cased = false;
    for (char32_t c : w) {
        if (is_lower(c))
            return false;
        if (is_upper(c))
            cased = true;
    }
    return cased;
}

std::string lower_utf8(std::u32string_view w) {
    std::string out;
    for (char32_t c : w)
        append_utf8(out, to_lower(c));
    return out;
}

// ------------------------------------------------------------------ word lists

const std::unordered_set<std::string_view>& negations() {
    static const std::unordered_set<std::string_view> words{
        "aint",    "arent",    "cannot",   "cant",     "couldnt",  "darent",  "didnt",    "doesnt",
        "ain't",   "aren't",   "can't",    "couldn't", "daren't",  "didn't",  "doesn't",  "dont",
        "hadnt",   "hasnt",    "havent",   "isnt",     "mightnt",  "mustnt",  "neither",  "don't",
        "hadn't",  "hasn't",   "haven't",  "isn't",    "mightn't", "mustn't", "neednt",   "needn't",
        "never",   "none",     "nope",     "nor",      "not",      "nothing", "nowhere",  "oughtnt",
        "shant",   "shouldnt", "uhuh",     "wasnt",    "werent",   "oughtn't", "shan't",  "shouldn't",
        "uh-uh",   "wasn't",   "weren't",  "without",  "wont",     "wouldnt", "won't",    "wouldn't",
        "rarely",  "seldom",   "despite"};
    return words;
}

const std::unordered_map<std::string_view, double>& boosters() {
    constexpr double up = kBoosterIncrement;
    constexpr double down = -kBoosterIncrement;
    static const std::unordered_map<std::string_view, double> words{
        {"absolutely", up},   {"amazingly", up},     {"awfully", up},       {"completely", up},
        {"considerable", up}, {"considerably", up},  {"decidedly", up},     {"deeply", up},
        {"effing", up},       {"enormous", up},      {"enormously", up},    {"entirely", up},
        {"especially", up},   {"exceptional", up},   {"exceptionally", up}, {"extreme", up},
        {"extremely", up},    {"fabulously", up},    {"flipping", up},      {"flippin", up},
        {"frackin", up},      {"fracking", up},      {"fricking", up},      {"frickin", up},
        {"frigging", up},     {"friggin", up},       {"fully", up},         {"fuckin", up},
        {"fucking", up},      {"fuggin", up},        {"fugging", up},       {"greatly", up},
        {"hella", up},        {"highly", up},        {"hugely", up},        {"incredible", up},
        {"incredibly", up},   {"intensely", up},     {"major", up},         {"majorly", up},
        {"more", up},         {"most", up},          {"particularly", up},  {"purely", up},
        {"quite", up},        {"really", up},        {"remarkably", up},    {"so", up},
        {"substantially", up}, {"thoroughly", up},   {"total", up},         {"totally", up},
        {"tremendous", up},   {"tremendously", up},  {"uber", up},          {"unbelievably", up},
        {"unusually", up},    {"utter", up},         {"utterly", up},       {"very", up},
        {"almost", down},     {"barely", down},      {"hardly", down},      {"just enough", down},
        {"kind of", down},    {"kinda", down},       {"kindof", down},      {"kind-of", down},
        {"less", down},       {"little", down},      {"marginal", down},    {"marginally", down},
        {"occasional", down}, {"occasionally", down}, {"partly", down},     {"scarce", down},
        {"scarcely", down},   {"slight", down},      {"slightly", down},    {"somewhat", down},
        {"sort of", down},    {"sorta", down},       {"sortof", down},      {"sort-of", down}};
    return words;
}

const std::unordered_map<std::string_view, double>& special_cases() {
    static const std::unordered_map<std::string_view, double> phrases{
        {"the shit", 3.0},     {"the bomb", 3.0},        {"bad ass", 1.5},    {"badass", 1.5},
        {"bus stop", 0.0},     {"yeah right", -2.0},     {"kiss of death", -1.5},
        {"to die for", 3.0},   {"beating heart", 3.5}};
    return phrases;
}

bool negated(std::string_view lower_word) {
    return negations().contains(lower_word) || lower_word.find("n't") != std::string_view::npos;
}

// ------------------------------------------------------------------ scoring

struct Token {
    std::string lower;
    bool upper = false;
};

struct Text {
    std::vector<Token> words;
    bool cap_differential = false;
    std::size_t exclamations = 0;
    std::size_t questions = 0;
};

Text tokenize(std::string_view raw, const Lexicon& lexicon) {
    const std::u32string cps = decode_utf8(raw);
    std::u32string text;
    bool prev_space = true;
    for (char32_t c : cps) {
        if (const std::string* desc = lexicon.emoji_description(c)) {
            if (!prev_space)
                text.push_back(U' ');
            text += decode_utf8(*desc);
            prev_space = false;
        } else {
            text.push_back(c);
            prev_space = c == U' ';
        }
    }

    std::size_t b = 0, e = text.size();
    while (b < e && is_space(text[b]))
        ++b;
    while (e > b && is_space(text[e - 1]))
        --e;
    const std::u32string_view body(text.data() + b, e - b);

    Text out;
    for (char32_t c : body) {
        out.exclamations += c == U'!';
        out.questions += c == U'?';
    }

    std::size_t i = 0;
    std::size_t upper_words = 0;
    while (i < body.size()) {
        while (i < body.size() && is_space(body[i]))
            ++i;
        const std::size_t start = i;
        while (i < body.size() && !is_space(body[i]))
            ++i;
        if (start == i)
            break;
        std::u32string_view token = body.substr(start, i - start);
        std::size_t pb = 0, pe = token.size();
        while (pb < pe && is_ascii_punct(token[pb]))
            ++pb;
        while (pe > pb && is_ascii_punct(token[pe - 1]))
            --pe;
        // two or fewer characters left: probably an emoticon, keep it whole
        if (pe - pb > 2)
            token = token.substr(pb, pe - pb);
        Token t{lower_utf8(token), py_isupper(token)};
        upper_words += t.upper;
        out.words.push_back(std::move(t));
    }
    const std::size_t differential = out.words.size() - upper_words;
    out.cap_differential = differential > 0 && differential < out.words.size();
    return out;
}

double scalar_inc_dec(const Token& word, double valence, bool cap_differential) {
    double scalar = 0.0;
    if (auto it = boosters().find(word.lower); it != boosters().end()) {
        scalar = it->second;
        if (valence < 0)
            scalar *= -1;
        if (word.upper && cap_differential)
            scalar += valence > 0 ? kCapsIncrement : -kCapsIncrement;
    }
    return scalar;
}

double negation_check(double valence, const std::vector<Token>& w, int start_i, std::size_t i) {
    auto lw = [&](std::size_t back) -> const std::string& { return w[i - back].lower; };
    if (start_i == 0) {
        if (negated(lw(1)))
            valence *= kNegationScalar;
    } else if (start_i == 1) {
        if (lw(2) == "never" && (lw(1) == "so" || lw(1) == "this"))
            valence *= kNeverSoBoost;
        else if (lw(2) == "without" && lw(1) == "doubt")
            ;
        else if (negated(lw(2)))
            valence *= kNegationScalar;
    } else {
        // mirrors the reference's and/or precedence: the second disjunct
        // does not require "never" three words back
        if ((lw(3) == "never" && (lw(2) == "so" || lw(2) == "this")) || (lw(1) == "so" || lw(1) == "this"))
            valence *= kNeverSoBoost;
        else if (lw(3) == "without" && (lw(2) == "doubt" || lw(1) == "doubt"))
            ;
        else if (negated(lw(3)))
            valence *= kNegationScalar;
    }
    return valence;
}

double special_idioms_check(double valence, const std::vector<Token>& w, std::size_t i) {
    auto lw = [&](std::size_t idx) -> const std::string& { return w[idx].lower; };
    const std::string onezero = lw(i - 1) + " " + lw(i);
    const std::string twoonezero = lw(i - 2) + " " + lw(i - 1) + " " + lw(i);
    const std::string twoone = lw(i - 2) + " " + lw(i - 1);
    const std::string threetwoone = lw(i - 3) + " " + lw(i - 2) + " " + lw(i - 1);
    const std::string threetwo = lw(i - 3) + " " + lw(i - 2);

    const auto& special = special_cases();
    for (const std::string* seq : {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
        if (auto it = special.find(*seq); it != special.end()) {
            valence = it->second;
            break;
        }
    }
    if (w.size() - 1 > i) {
        if (auto it = special.find(lw(i) + " " + lw(i + 1)); it != special.end())
            valence = it->second;
    }
    if (w.size() - 1 > i + 1) {
        if (auto it = special.find(lw(i) + " " + lw(i + 1) + " " + lw(i + 2)); it != special.end())
            valence = it->second;
    }
    for (const std::string* gram : {&threetwoone, &threetwo, &twoone}) {
        if (auto it = boosters().find(*gram); it != boosters().end())
            valence += it->second;
    }
    return valence;
}

double least_check(double valence, const std::vector<Token>& w, std::size_t i, const Lexicon& lexicon) {
    if (i > 1 && !lexicon.contains(w[i - 1].lower) && w[i - 1].lower == "least") {
        if (w[i - 2].lower != "at" && w[i - 2].lower != "very")
            valence *= kNegationScalar;
    } else if (i > 0 && !lexicon.contains(w[i - 1].lower) && w[i - 1].lower == "least") {
        valence *= kNegationScalar;
    }
    return valence;
}

double word_valence(const Text& text, std::size_t i, const Lexicon& lexicon) {
    const auto& w = text.words;
    const Token& item = w[i];
    auto base = lexicon.valence(item.lower);
    if (!base)
        return 0.0;
    double valence = *base;

    // "no" directly before another lexicon word acts as a negator, not a sentiment word
    if (item.lower == "no" && i != w.size() - 1 && lexicon.contains(w[i + 1].lower))
        valence = 0.0;
    if ((i > 0 && w[i - 1].lower == "no") || (i > 1 && w[i - 2].lower == "no") ||
        (i > 2 && w[i - 3].lower == "no" && (w[i - 1].lower == "or" || w[i - 1].lower == "nor")))
        valence = *base * kNegationScalar;

    if (item.upper && text.cap_differential)
        valence += valence > 0 ? kCapsIncrement : -kCapsIncrement;

    for (int start_i = 0; start_i < 3; ++start_i) {
        const auto back = static_cast<std::size_t>(start_i + 1);
        if (i > static_cast<std::size_t>(start_i) && !lexicon.contains(w[i - back].lower)) {
            double s = scalar_inc_dec(w[i - back], valence, text.cap_differential);
            if (start_i == 1 && s != 0)
                s *= kDecayDistance2;
            if (start_i == 2 && s != 0)
                s *= kDecayDistance3;
            valence += s;
            valence = negation_check(valence, w, start_i, i);
            if (start_i == 2)
                valence = special_idioms_check(valence, w, i);
        }
    }
    return least_check(valence, w, i, lexicon);
}

// Contrastive "but": clause before is damped, clause after amplified. The
// reference locates each value by its first equal occurrence, so repeated
// valences are rescaled at that first position; reproduced here.
void but_check(const std::vector<Token>& words, std::vector<double>& sentiments) {
    std::size_t bi = words.size();
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (words[k].lower == "but") {
            bi = k;
            break;
        }
    }
    if (bi == words.size())
        return;
    for (std::size_t k = 0; k < sentiments.size(); ++k) {
        const double value = sentiments[k];
        std::size_t si = 0;
        while (sentiments[si] != value)
            ++si;
        if (si < bi)
            sentiments[si] = value * kButBefore;
        else if (si > bi)
            sentiments[si] = value * kButAfter;
    }
}

double punctuation_emphasis(const Text& text) {
    const auto ep = static_cast<double>(std::min<std::size_t>(text.exclamations, kMaxExclamations));
    double amp = ep * kExclamationIncrement;
    if (text.questions > 1)
        amp += text.questions <= 3 ? static_cast<double>(text.questions) * kQuestionIncrement : kQuestionCap;
    return amp;
}

std::string_view strip_ascii_ws(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t tab = line.find('\t', pos);
        parts.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
        if (tab == std::string_view::npos)
            break;
        pos = tab + 1;
    }
    return parts;
}

}  // namespace

// ------------------------------------------------------------------ lexicon

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open lexicon " + path.string());
    Lexicon lex;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = strip_ascii_ws(line);
        if (body.empty())
            continue;
        const auto parts = split_tabs(body);
        std::optional<double> v;
        if (parts.size() >= 2)
            v = parse_number(parts[1]);
        if (!v || parts[0].empty() || *v < -4.0 || *v > 4.0)
            throw Error(ErrorKind::MalformedLexiconRow,
                        "malformed lexicon row at line " + std::to_string(lineno) + " of " + path.string());
        lex.entries_[std::string(parts[0])] = *v;
    }
    if (lex.entries_.empty())
        throw Error(ErrorKind::EmptyLexicon, "lexicon " + path.string() + " has no entries");
    return lex;
}

Lexicon Lexicon::from_entries(std::unordered_map<std::string, double> entries) {
    Lexicon lex;
    lex.entries_ = std::move(entries);
    return lex;
}

void Lexicon::load_emoji(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open emoji table " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        const auto parts = split_tabs(strip_ascii_ws(line));
        if (parts.size() < 2)
            continue;
        const std::u32string key = decode_utf8(parts[0]);
        if (key.size() == 1)
            emoji_[key.front()] = std::string(parts[1]);
    }
}

std::optional<double> Lexicon::valence(std::string_view token) const {
    if (auto it = entries_.find(std::string(token)); it != entries_.end())
        return it->second;
    return std::nullopt;
}

const std::string* Lexicon::emoji_description(char32_t cp) const {
    if (emoji_.empty())
        return nullptr;
    auto it = emoji_.find(cp);
    return it == emoji_.end() ? nullptr : &it->second;
}

// ------------------------------------------------------------------ scoring

double normalize_score(double s, double alpha) {
    const double norm = s / std::sqrt(s * s + alpha);
    return std::clamp(norm, -1.0, 1.0);
}

SentimentScore score_text(std::string_view raw, const Lexicon& lexicon) {
    const Text text = tokenize(raw, lexicon);
    const auto& words = text.words;

    std::vector<double> sentiments;
    sentiments.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (boosters().contains(words[i].lower) ||
            (i + 1 < words.size() && words[i].lower == "kind" && words[i + 1].lower == "of")) {
            sentiments.push_back(0.0);
            continue;
        }
        sentiments.push_back(word_valence(text, i, lexicon));
    }
    but_check(words, sentiments);

    SentimentScore score;
    if (sentiments.empty())
        return score;

    // plain left-to-right sum, as the reference does
    double sum = 0.0;
    for (double s : sentiments)
        sum += s;
    const double amp = punctuation_emphasis(text);
    if (sum > 0)
        sum += amp;
    else if (sum < 0)
        sum -= amp;
    score.compound = normalize_score(sum);

    double pos_sum = 0.0, neg_sum = 0.0, neu_count = 0.0;
    for (double s : sentiments) {
        if (s > 0)
            pos_sum += s + 1;
        if (s < 0)
            neg_sum += s - 1;
        if (s == 0)
            neu_count += 1;
    }
    if (pos_sum > std::fabs(neg_sum))
        pos_sum += amp;
    else if (pos_sum < std::fabs(neg_sum))
        neg_sum -= amp;
    const double total = pos_sum + std::fabs(neg_sum) + neu_count;
    score.pos = std::fabs(pos_sum / total);
    score.neg = std::fabs(neg_sum / total);
    score.neu = std::fabs(neu_count / total);
    return score;
}

}  // namespace ballotwire
