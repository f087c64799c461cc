#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace ballotwire {

/// Rule constants of the reference lexicon-and-rules scorer.
namespace sentiment_rules {
inline constexpr double kNormalizationAlpha = 15.0;
inline constexpr double kBoosterIncrement = 0.293;
inline constexpr double kCapsIncrement = 0.733;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kDecayDistance2 = 0.95;
inline constexpr double kDecayDistance3 = 0.9;
inline constexpr double kExclamationIncrement = 0.292;
inline constexpr int kMaxExclamations = 4;
inline constexpr double kQuestionIncrement = 0.18;
inline constexpr double kQuestionCap = 0.96;
inline constexpr double kButBefore = 0.5;
inline constexpr double kButAfter = 1.5;
inline constexpr double kNeverSoBoost = 1.25;
}  // namespace sentiment_rules

/// Token -> mean valence in [-4, 4], plus an optional emoji -> description
/// table applied before tokenization. Immutable once loaded.
class Lexicon {
public:
    Lexicon() = default;

    /// Tab-separated `token<TAB>valence[<TAB>ignored...]`; later duplicates win.
    static Lexicon load(const std::filesystem::path& path);
    static Lexicon from_entries(std::unordered_map<std::string, double> entries);

    /// Tab-separated `emoji<TAB>description`; only single-code-point keys
    /// can ever match, as in the reference tool.
    void load_emoji(const std::filesystem::path& path);

    std::optional<double> valence(std::string_view token) const;
    bool contains(std::string_view token) const { return entries_.contains(std::string(token)); }
    std::size_t size() const { return entries_.size(); }
    const std::unordered_map<std::string, double>& entries() const { return entries_; }
    const std::string* emoji_description(char32_t cp) const;

private:
    std::unordered_map<std::string, double> entries_;
    std::unordered_map<char32_t, std::string> emoji_;
};

inline Lexicon load_lexicon(const std::filesystem::path& path) { return Lexicon::load(path); }

struct SentimentScore {
    double compound = 0.0;  // [-1, 1]
    double pos = 0.0;
    double neu = 0.0;
    double neg = 0.0;
};

/// s / sqrt(s^2 + alpha), clamped to [-1, 1].
double normalize_score(double s, double alpha = sentiment_rules::kNormalizationAlpha);

/// Unrounded scores. Empty text scores all-zero; text with tokens but no
/// lexicon hits has neu = 1, matching the reference tool.
SentimentScore score_text(std::string_view text, const Lexicon& lexicon);

}  // namespace ballotwire
