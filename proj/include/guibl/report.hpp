#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/error.hpp"
#include "guibl/gui_model.hpp"
#include "guibl/text.hpp"

namespace guibl {

enum class SentenceTag { OB, EB, S2R, OTHER };

std::string_view to_string(SentenceTag tag);
std::optional<SentenceTag> parse_tag(std::string_view name);

struct Sentence {
    std::string text;
    bool list_item = false;  // came from a numbered or bulleted list
    bool operator==(const Sentence&) const = default;
};

struct TaggedSentence {
    std::string text;
    SentenceTag tag = SentenceTag::OTHER;
    bool operator==(const TaggedSentence&) const = default;
};

struct BugReport {
    std::string report_id;
    std::string title;
    std::string body;
    std::vector<TaggedSentence> sentences;  // filled by analysis, not by parsing
    std::optional<std::set<std::string>> ground_truth;
};

// Report JSON: {"report_id", "title", "body", "ground_truth"?}.
BugReport parse_report(std::string_view json_text, std::string_view source_name = "<report>");
BugReport load_report(const std::filesystem::path& path);

// Splits on sentence punctuation, line breaks and list markers ("1.", "2)",
// "-", "*"). List items lose their marker; whitespace is trimmed and empty
// pieces dropped.
std::vector<Sentence> segment_sentences(std::string_view body);

class SentenceClassifier {
public:
    virtual ~SentenceClassifier() = default;
    // One tag per sentence. Implementations may throw on failure.
    virtual std::vector<SentenceTag> classify(std::span<const Sentence> sentences) const = 0;
    virtual std::string name() const = 0;
};

// Lexical rules: an imperative lead verb from the action vocabulary makes a
// step; expectation modals make EB; failure markers make OB; remaining list
// items are steps.
class HeuristicClassifier final : public SentenceClassifier {
public:
    std::vector<SentenceTag> classify(std::span<const Sentence> sentences) const override;
    std::string name() const override { return "heuristic"; }

    static SentenceTag tag(const Sentence& sentence);
};

struct Classification {
    std::vector<TaggedSentence> sentences;
    std::vector<std::string> warnings;
};

// Uses `classifier`; any failure or tag-count mismatch falls back to the
// heuristic rules and records a warning.
Classification classify_sentences(std::span<const Sentence> sentences, const SentenceClassifier& classifier);

// [subject][action][object][preposition][object2]
struct S2RStep {
    std::string subject = "user";
    std::string action;
    std::string object;
    std::optional<std::string> preposition;
    std::optional<std::string> object2;

    bool operator==(const S2RStep&) const = default;
};

class UnparseableStep : public InputError {
public:
    explicit UnparseableStep(std::string sentence)
        : InputError("no action verb found in step: " + sentence), sentence_(std::move(sentence)) {}
    const std::string& sentence() const { return sentence_; }

private:
    std::string sentence_;
};

// Maps a verb (any case, simple inflections allowed) to its canonical action,
// e.g. "Tapped" -> "click".
std::optional<std::string> canonical_action(std::string_view verb);

// Throws UnparseableStep when no action verb is present.
S2RStep parse_s2r(std::string_view sentence);
std::string render_step(const S2RStep& step);

enum class MatchStatus { matched, ambiguous, unmatched };
std::string_view to_string(MatchStatus status);

struct StepMatch {
    S2RStep step;
    std::optional<std::size_t> matched_edge;  // index into ExecutionModel::edges()
    double similarity = 0.0;
    MatchStatus status = MatchStatus::unmatched;
};

struct MatchOptions {
    double threshold = 0.5;
    double ambiguity_band = 0.05;
};

// |a ∩ b| / |a ∪ b|; 0 when both are empty.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

std::vector<StepMatch> map_steps_to_model(std::span<const S2RStep> steps, const ExecutionModel& model,
                                          const MatchOptions& options = {},
                                          const text::Analyzer& analyzer = text::default_analyzer());

struct StepGap {
    std::size_t after_step = 0;   // index of the earlier matched step
    std::size_t before_step = 0;  // index of the later matched step
    std::string from;             // dst of the earlier edge
    std::string to;               // src of the later edge
    std::vector<std::size_t> missing_edges;  // shortest path, edge indices
    bool feasible = true;
};

struct MissingStepReport {
    std::vector<StepGap> gaps;
    bool complete() const { return gaps.empty(); }
};

MissingStepReport detect_missing_steps(std::span<const StepMatch> matches, const ExecutionModel& model);

struct Suggestion {
    std::string action;
    ComponentDescriptor component;
    std::string dst;
    bool operator==(const Suggestion&) const = default;
};

// Outgoing interactions of a screen ordered by action, then resource id.
// Throws LookupError for unknown fingerprints.
std::vector<Suggestion> suggest_next_steps(const ExecutionModel& model, std::string_view fingerprint);

}  // namespace guibl
