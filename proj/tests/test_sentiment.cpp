#include <chrono>
#include <cmath>

#include "ballotwire/error.hpp"
#include "ballotwire/rng.hpp"
#include "ballotwire/sentiment.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ballotwire;
using testsupport::TempDir;

namespace {

const Lexicon& reference_lexicon() {
    static const Lexicon lex = [] {
        Lexicon l = load_lexicon(testsupport::data_dir() / "vader_lexicon.txt");
        l.load_emoji(testsupport::data_dir() / "emoji_utf8_lexicon.txt");
        return l;
    }();
    return lex;
}

std::string random_unicode(Xoshiro256& rng, std::size_t max_len) {
    static const char32_t ranges[][2] = {{0x20, 0x7E},     {0xA0, 0x17F},   {0x370, 0x3FF},
                                         {0x400, 0x4FF},   {0x2000, 0x206F}, {0x1F300, 0x1F64F},
                                         {0x4E00, 0x4E80}, {0x09, 0x0D}};
    std::string out;
    const auto len = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(max_len)));
    for (std::size_t i = 0; i < len; ++i) {
        const auto& r = ranges[rng.uniform_int(0, 7)];
        auto cp = static_cast<char32_t>(rng.uniform_int(r[0], r[1]));
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
    return out;
}

}  // namespace

TEST_CASE("load_lexicon reads the shipped reference lexicon") {
    const Lexicon& lex = reference_lexicon();
    CHECK(lex.size() > 7000);
    REQUIRE(lex.valence("good"));
    CHECK(*lex.valence("good") == 1.9);
    CHECK_FALSE(lex.valence("#biden"));
}

TEST_CASE("load_lexicon error paths and duplicate handling") {
    TempDir dir;
    SUBCASE("empty file") {
        CHECK_THROWS_AS(load_lexicon(dir.write("empty.txt", "")), Error);
        try {
            load_lexicon(dir.write("empty2.txt", "\n\n"));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::EmptyLexicon);
        }
    }
    SUBCASE("duplicate tokens: last wins") {
        const Lexicon lex = load_lexicon(dir.write("dup.txt", "good\t1.9\t0.9\t[1]\ngood\t2.5\t0.1\n"));
        CHECK(lex.size() == 1);
        CHECK(*lex.valence("good") == 2.5);
    }
    SUBCASE("malformed row names its line") {
        try {
            load_lexicon(dir.write("bad.txt", "good\t1.9\nbad\tnotanumber\n"));
            FAIL("expected MalformedLexiconRow");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MalformedLexiconRow);
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("valence outside [-4, 4]") {
        CHECK_THROWS_AS(load_lexicon(dir.write("range.txt", "wow\t4.5\n")), Error);
    }
}

TEST_CASE("normalize_score") {
    CHECK(normalize_score(0.0) == 0.0);
    CHECK(normalize_score(std::sqrt(15.0)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(std::fabs(normalize_score(3.873) - 0.7071) < 1e-4);
    Xoshiro256 rng(11);
    for (int i = 0; i < 200; ++i) {
        const double s = (rng.uniform() - 0.5) * 100.0;
        CHECK(normalize_score(-s) == -normalize_score(s));
        CHECK(std::fabs(normalize_score(s)) < 1.0);
    }
}

TEST_CASE("score_text basic examples") {
    const Lexicon& lex = reference_lexicon();
    const auto empty = score_text("", lex);
    CHECK(empty.compound == 0.0);
    CHECK(empty.neu == 0.0);
    CHECK(empty.pos == 0.0);
    CHECK(empty.neg == 0.0);

    CHECK(std::fabs(score_text("good", lex).compound - 0.4404) < 1e-4);
    CHECK(score_text("The movie was GOOD!!", lex).compound > score_text("The movie was good.", lex).compound);

    // tokens but no lexicon hits: the reference reports neu = 1
    const auto neutral = score_text("the debate tonight", lex);
    CHECK(neutral.compound == 0.0);
    CHECK(neutral.neu == 1.0);
}

TEST_CASE("score_text agrees with the frozen reference outputs") {
    const Lexicon& lex = reference_lexicon();
    const auto oracle = testsupport::load_json(testsupport::test_data_dir() / "sentiment_oracle.json");
    const auto& cases = oracle.at("cases");
    REQUIRE(cases.size() == 200);
    double worst = 0.0;
    for (const auto& c : cases) {
        const std::string text = c.at("text");
        const SentimentScore s = score_text(text, lex);
        INFO("text: " << text);
        const double diff = std::fabs(s.compound - c.at("compound").get<double>());
        worst = std::max(worst, diff);
        CHECK(diff <= 1e-4);
        CHECK(s.pos == doctest::Approx(c.at("pos").get<double>()).epsilon(1e-9));
        CHECK(s.neu == doctest::Approx(c.at("neu").get<double>()).epsilon(1e-9));
        CHECK(s.neg == doctest::Approx(c.at("neg").get<double>()).epsilon(1e-9));
    }
    MESSAGE("max |compound - oracle| = " << worst);
}

TEST_CASE("proportions sum to one whenever a token matched") {
    const Lexicon& lex = reference_lexicon();
    for (const char* text : {"good", "bad but great", "VERY bad!!!", "not good at all", "I love it??"}) {
        const auto s = score_text(text, lex);
        CHECK(s.pos + s.neu + s.neg == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("compound stays in [-1, 1] on fuzzed input") {
    const Lexicon& lex = reference_lexicon();
    Xoshiro256 rng(2024);
    const std::vector<std::string> heavy{"great", "GREAT", "love", "hate", "worst", "!!!!", "???", "very", "😡", "😁"};
    for (int i = 0; i < 10000; ++i) {
        std::string text;
        if (i % 4 == 0) {
            // long repeats of strongly valenced tokens
            const auto n = rng.uniform_int(1, 200);
            for (std::int64_t k = 0; k < n; ++k)
                text += heavy[static_cast<std::size_t>(rng.uniform_int(0, 9))] + " ";
        } else {
            text = random_unicode(rng, 60);
        }
        const auto s = score_text(text, lex);
        REQUIRE(s.compound >= -1.0);
        REQUIRE(s.compound <= 1.0);
        REQUIRE(std::isfinite(s.compound));
    }
}

TEST_CASE("compound is antisymmetric under valence negation") {
    const Lexicon& lex = reference_lexicon();
    std::unordered_map<std::string, double> flipped;
    for (const auto& [k, v] : lex.entries())
        flipped.emplace(k, -v);
    const Lexicon neg = Lexicon::from_entries(std::move(flipped));

    const std::vector<std::string> vocab{"good", "great", "terrible", "hope", "weak", "love", "liar", "very",
                                         "extremely", "slightly", "kinda", "the", "vote", "#Biden", "today",
                                         "GOOD", "HATE", "Great", "rally", "America"};
    const std::vector<std::string> punct{"", "!", "!!", "??", "???", ".", "!!!!!"};
    Xoshiro256 rng(7);
    for (int i = 0; i < 500; ++i) {
        std::string text;
        const auto n = rng.uniform_int(1, 10);
        for (std::int64_t k = 0; k < n; ++k)
            text += (k ? " " : "") + vocab[static_cast<std::size_t>(rng.uniform_int(0, 19))];
        text += punct[static_cast<std::size_t>(rng.uniform_int(0, 6))];
        INFO(text);
        CHECK(std::fabs(score_text(text, lex).compound + score_text(text, neg).compound) <= 1e-9);
    }
}

TEST_CASE("appending exclamation marks never lowers a positive compound") {
    const Lexicon& lex = reference_lexicon();
    const std::vector<std::string> vocab{"good", "great", "bad", "hope", "very", "not", "the", "vote", "LOVE",
                                         "rally", "but", "win"};
    Xoshiro256 rng(99);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        std::string text;
        const auto n = rng.uniform_int(1, 8);
        for (std::int64_t k = 0; k < n; ++k)
            text += vocab[static_cast<std::size_t>(rng.uniform_int(0, 11))] + " ";
        text += "today";
        double prev = score_text(text, lex).compound;
        if (prev <= 0)
            continue;
        ++checked;
        for (int bang = 0; bang < 3; ++bang) {
            text += "!";
            const double next = score_text(text, lex).compound;
            CHECK(next >= prev);
            prev = next;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("scoring the oracle corpus is fast") {
    const Lexicon& lex = reference_lexicon();
    const auto oracle = testsupport::load_json(testsupport::test_data_dir() / "sentiment_oracle.json");
    std::vector<std::string> texts;
    for (const auto& c : oracle.at("cases"))
        texts.push_back(c.at("text"));
    const auto t0 = std::chrono::steady_clock::now();
    double acc = 0;
    for (const auto& t : texts)
        acc += score_text(t, lex).compound;
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(std::isfinite(acc));
    CHECK(elapsed < 1.0);
}
