#include "guibl/report.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>

#include "guibl/gui_mapping.hpp"
#include "guibl/json_io.hpp"

namespace guibl {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

bool has_alnum(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

// Length of a list marker starting at `p` (including trailing whitespace), or 0.
std::size_t list_marker_length(std::string_view line, std::size_t p, bool at_line_start) {
    if (p > 0 && !is_space(line[p - 1])) return 0;
    std::size_t q = p;
    if (line[q] == '-' || line[q] == '*') {
        if (!at_line_start) return 0;
        ++q;
    } else {
        while (q < line.size() && is_digit(line[q]) && q - p < 3) ++q;
        if (q == p || q >= line.size() || (line[q] != '.' && line[q] != ')')) return 0;
        ++q;
    }
    if (q < line.size() && !is_space(line[q])) return 0;
    while (q < line.size() && is_space(line[q])) ++q;
    return q - p;
}

void split_punctuation(std::string_view segment, bool list_item, std::vector<Sentence>& out) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < segment.size(); ++i) {
        char c = segment[i];
        if (c != '.' && c != '!' && c != '?') continue;
        std::size_t end = i + 1;
        while (end < segment.size() && (segment[end] == '.' || segment[end] == '!' || segment[end] == '?')) ++end;
        if (end < segment.size() && !is_space(segment[end])) {
            i = end - 1;
            continue;
        }
        auto piece = trim(segment.substr(start, end - start));
        if (has_alnum(piece)) out.push_back({std::string(piece), list_item});
        start = end;
        i = end - 1;
    }
    auto piece = trim(segment.substr(start));
    if (has_alnum(piece)) out.push_back({std::string(piece), list_item});
}

std::vector<std::string> lower_words(std::string_view s) {
    std::vector<std::string> words;
    std::string cur;
    for (char c : s) {
        auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || c == '\'' || c == '-') {
            cur.push_back(static_cast<char>(std::tolower(u)));
        } else if (!cur.empty()) {
            words.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    for (auto& w : words) {
        while (!w.empty() && (w.front() == '\'' || w.front() == '-')) w.erase(0, 1);
        while (!w.empty() && (w.back() == '\'' || w.back() == '-')) w.pop_back();
    }
    std::erase_if(words, [](const std::string& w) { return w.empty(); });
    return words;
}

const std::map<std::string, std::string, std::less<>>& verb_table() {
    static const std::map<std::string, std::string, std::less<>> table{
        {"click", "click"},       {"tap", "click"},        {"press", "click"},     {"push", "click"},
        {"hit", "click"},         {"type", "type"},        {"enter", "type"},      {"input", "type"},
        {"write", "type"},        {"long-click", "long-click"}, {"longclick", "long-click"},
        {"long-press", "long-click"}, {"longpress", "long-click"}, {"long-tap", "long-click"},
        {"swipe", "swipe"},       {"scroll", "swipe"},     {"fling", "swipe"},     {"pinch", "pinch"},
        {"zoom", "pinch"},        {"open", "open"},        {"launch", "open"},     {"select", "select"},
        {"choose", "select"},     {"pick", "select"},      {"back", "back"},
    };
    return table;
}

bool is_filler(std::string_view w) {
    static constexpr std::array<std::string_view, 12> kFillers{
        "then", "now", "next", "first", "firstly", "finally", "and", "please", "also", "again", "afterwards", "just"};
    return std::find(kFillers.begin(), kFillers.end(), w) != kFillers.end();
}

bool is_article(std::string_view w) { return w == "a" || w == "an" || w == "the"; }

bool is_preposition(std::string_view w) {
    return w == "in" || w == "on" || w == "into" || w == "from" || w == "to" || w == "at";
}

bool starts_with_word(const std::vector<std::string>& words, std::size_t i, std::string_view w) {
    return i < words.size() && words[i] == w;
}

bool contains_phrase(const std::string& padded, std::string_view phrase, bool prefix) {
    std::string needle = " " + std::string(phrase);
    if (!prefix) needle += ' ';
    return padded.find(needle) != std::string::npos;
}

// Word-level markers; `prefix` markers also match inflections ("crash" -> "crashes").
struct Marker {
    std::string_view phrase;
    bool prefix;
};

constexpr std::array<Marker, 8> kExpectationMarkers{{
    {"should", false}, {"shouldn't", false}, {"expected", false}, {"expect", true},
    {"supposed to", false}, {"ought to", false}, {"would like", false}, {"must", false},
}};

constexpr std::array<Marker, 26> kFailureMarkers{{
    {"crash", true},      {"error", true},       {"instead", false},    {"fail", true},
    {"does not", false},  {"doesn't", false},    {"did not", false},    {"didn't", false},
    {"is not", false},    {"isn't", false},      {"not", false},        {"cannot", false},
    {"can't", false},     {"unable", false},     {"exception", true},   {"freez", true},
    {"stuck", false},     {"wrong", false},      {"incorrect", true},   {"missing", false},
    {"disappear", true},  {"nothing happens", false}, {"broken", false}, {"stopped", false},
    {"hang", true},       {"blank", false},
}};

template <std::size_t N>
bool any_marker(const std::string& padded, const std::array<Marker, N>& markers) {
    return std::any_of(markers.begin(), markers.end(),
                       [&](const Marker& m) { return contains_phrase(padded, m.phrase, m.prefix); });
}

// Tokens of a step sentence; quoted spans stay whole.
std::vector<std::string> step_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        if (is_space(s[i])) {
            ++i;
            continue;
        }
        std::size_t end = i;
        if (s[i] == '\'' || s[i] == '"') {
            auto close = s.find(s[i], i + 1);
            end = close == std::string_view::npos ? s.size() : close + 1;
            while (end < s.size() && !is_space(s[end])) ++end;
        } else {
            while (end < s.size() && !is_space(s[end])) ++end;
        }
        std::string tok(s.substr(i, end - i));
        while (!tok.empty() && std::string_view(".,;:!?").find(tok.back()) != std::string_view::npos) tok.pop_back();
        if (!tok.empty()) tokens.push_back(std::move(tok));
        i = end;
    }
    return tokens;
}

std::string join_words(const std::vector<std::string>& tokens, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to; ++i) {
        if (is_article(text::to_lower(tokens[i]))) continue;
        if (!out.empty()) out += ' ';
        out += tokens[i];
    }
    return out;
}

}  // namespace

std::string_view to_string(SentenceTag tag) {
    switch (tag) {
        case SentenceTag::OB: return "OB";
        case SentenceTag::EB: return "EB";
        case SentenceTag::S2R: return "S2R";
        case SentenceTag::OTHER: return "OTHER";
    }
    return "OTHER";
}

std::optional<SentenceTag> parse_tag(std::string_view name) {
    auto upper = std::string(trim(name));
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "OB") return SentenceTag::OB;
    if (upper == "EB") return SentenceTag::EB;
    if (upper == "S2R") return SentenceTag::S2R;
    if (upper == "OTHER") return SentenceTag::OTHER;
    return std::nullopt;
}

BugReport parse_report(std::string_view json_text, std::string_view source_name) {
    auto j = parse_json(json_text, source_name);
    BugReport report;
    try {
        if (!j.is_object()) throw ParseError(std::string(source_name) + ": report must be a JSON object");
        report.report_id = j.at("report_id").get<std::string>();
        report.title = j.value("title", std::string());
        report.body = j.value("body", std::string());
        if (auto it = j.find("ground_truth"); it != j.end() && !it->is_null()) {
            std::set<std::string> truth;
            for (const auto& p : *it) truth.insert(p.get<std::string>());
            report.ground_truth = std::move(truth);
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string(source_name) + ": unexpected report structure: " + e.what());
    }
    if (report.report_id.empty()) throw ValidationError(std::string(source_name) + ": empty report_id");
    return report;
}

BugReport load_report(const std::filesystem::path& path) {
    return parse_report(read_text_file(path), path.string());
}

std::vector<Sentence> segment_sentences(std::string_view body) {
    std::vector<Sentence> out;
    std::size_t line_start = 0;
    while (line_start <= body.size()) {
        auto nl = body.find('\n', line_start);
        auto line = body.substr(line_start, nl == std::string_view::npos ? std::string_view::npos : nl - line_start);

        auto first = line.find_first_not_of(" \t\r");
        std::size_t seg_start = 0;
        bool seg_is_item = false;
        for (std::size_t p = 0; p < line.size(); ++p) {
            if (is_space(line[p])) continue;
            auto len = list_marker_length(line, p, p == first);
            if (len == 0) continue;
            split_punctuation(line.substr(seg_start, p - seg_start), seg_is_item, out);
            seg_start = p + len;
            seg_is_item = true;
            p = seg_start - 1;
        }
        split_punctuation(line.substr(seg_start), seg_is_item, out);

        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }
    return out;
}

SentenceTag HeuristicClassifier::tag(const Sentence& sentence) {
    auto words = lower_words(sentence.text);
    std::size_t lead = 0;
    while (lead < words.size() && (is_filler(words[lead]) || std::all_of(words[lead].begin(), words[lead].end(), [](char c) { return is_digit(c); })))
        ++lead;

    bool imperative = false;
    if (lead < words.size()) {
        const auto& w = words[lead];
        imperative = verb_table().count(w) > 0 ||
                     ((w == "go" || w == "navigate") && starts_with_word(words, lead + 1, "back")) ||
                     (w == "long" && lead + 1 < words.size() && verb_table().count(words[lead + 1]) > 0);
    }
    if (imperative) return SentenceTag::S2R;

    std::string padded = " ";
    for (const auto& w : words) padded += w + ' ';
    if (any_marker(padded, kExpectationMarkers)) return SentenceTag::EB;
    if (any_marker(padded, kFailureMarkers)) return SentenceTag::OB;
    if (sentence.list_item) return SentenceTag::S2R;
    return SentenceTag::OTHER;
}

std::vector<SentenceTag> HeuristicClassifier::classify(std::span<const Sentence> sentences) const {
    std::vector<SentenceTag> tags;
    tags.reserve(sentences.size());
    for (const auto& s : sentences) tags.push_back(tag(s));
    return tags;
}

Classification classify_sentences(std::span<const Sentence> sentences, const SentenceClassifier& classifier) {
    Classification out;
    std::vector<SentenceTag> tags;
    try {
        tags = classifier.classify(sentences);
        if (tags.size() != sentences.size()) {
            out.warnings.push_back(classifier.name() + " classifier returned " + std::to_string(tags.size()) +
                                   " tags for " + std::to_string(sentences.size()) +
                                   " sentences; using heuristic rules");
            tags.clear();
        }
    } catch (const std::exception& e) {
        out.warnings.push_back(classifier.name() + " classifier failed (" + e.what() + "); using heuristic rules");
        tags.clear();
    }
    if (tags.empty() && !sentences.empty()) tags = HeuristicClassifier{}.classify(sentences);
    for (std::size_t i = 0; i < sentences.size(); ++i) out.sentences.push_back({sentences[i].text, tags[i]});
    return out;
}

std::optional<std::string> canonical_action(std::string_view verb) {
    auto w = text::to_lower(verb);
    const auto& table = verb_table();
    auto lookup = [&table](std::string_view v) -> std::optional<std::string> {
        auto it = table.find(v);
        if (it == table.end()) return std::nullopt;
        return it->second;
    };
    if (auto a = lookup(w)) return a;

    auto try_stem = [&](std::string stem) -> std::optional<std::string> {
        if (stem.size() < 2) return std::nullopt;
        if (auto a = lookup(stem)) return a;
        if (auto a = lookup(stem + "e")) return a;
        auto n = stem.size();
        if (n >= 3 && stem[n - 1] == stem[n - 2]) {
            if (auto a = lookup(stem.substr(0, n - 1))) return a;
        }
        return std::nullopt;
    };
    auto ends = [&w](std::string_view suffix) {
        return w.size() > suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends("ing")) return try_stem(w.substr(0, w.size() - 3));
    if (ends("ed")) return try_stem(w.substr(0, w.size() - 2));
    if (ends("es")) {
        if (auto a = lookup(w.substr(0, w.size() - 2))) return a;
    }
    if (ends("s")) return lookup(w.substr(0, w.size() - 1));
    return std::nullopt;
}

S2RStep parse_s2r(std::string_view sentence) {
    auto tokens = step_tokens(sentence);
    std::vector<std::string> lower;
    lower.reserve(tokens.size());
    for (const auto& t : tokens) lower.push_back(text::to_lower(t));

    std::optional<std::string> action;
    std::size_t verb_begin = 0;
    std::size_t rest = 0;
    for (std::size_t i = 0; i < tokens.size() && !action; ++i) {
        const auto& w = lower[i];
        if ((w == "go" || w == "navigate" || w == "return") && starts_with_word(lower, i + 1, "back")) {
            action = "back";
            verb_begin = i;
            rest = i + 2;
        } else if (w == "long" && i + 1 < tokens.size()) {
            auto a = canonical_action(lower[i + 1]);
            if (a && *a == "click") {
                action = "long-click";
                verb_begin = i;
                rest = i + 2;
            }
        }
        if (action) break;
        if (auto a = canonical_action(w)) {
            action = a;
            verb_begin = i;
            rest = i + 1;
            // "Press back" with nothing after it is the back action.
            if (*a == "click" && starts_with_word(lower, i + 1, "back") &&
                (i + 2 == tokens.size() || is_preposition(lower[i + 2]))) {
                action = "back";
                rest = i + 2;
            }
        }
    }
    if (!action) throw UnparseableStep(std::string(sentence));

    S2RStep step;
    step.action = *action;

    std::size_t subject_begin = 0;
    while (subject_begin < verb_begin && is_filler(lower[subject_begin])) ++subject_begin;
    auto subject = join_words(tokens, subject_begin, verb_begin);
    if (!subject.empty()) step.subject = subject;

    if (rest < tokens.size() && lower[rest] == "on") ++rest;  // phrasal "click on"
    std::size_t prep = rest;
    while (prep < tokens.size() && !is_preposition(lower[prep])) ++prep;
    step.object = join_words(tokens, rest, prep);
    if (prep < tokens.size()) {
        step.preposition = lower[prep];
        auto object2 = join_words(tokens, prep + 1, tokens.size());
        if (!object2.empty()) step.object2 = std::move(object2);
    }
    return step;
}

std::string render_step(const S2RStep& step) {
    std::string out = step.subject + " " + step.action;
    if (!step.object.empty()) out += " " + step.object;
    if (step.preposition) out += " " + *step.preposition;
    if (step.object2) out += " " + *step.object2;
    return out;
}

std::string_view to_string(MatchStatus status) {
    switch (status) {
        case MatchStatus::matched: return "matched";
        case MatchStatus::ambiguous: return "ambiguous";
        case MatchStatus::unmatched: return "unmatched";
    }
    return "unmatched";
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::size_t common = 0;
    for (const auto& t : a) common += b.count(t);
    return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

std::vector<StepMatch> map_steps_to_model(std::span<const S2RStep> steps, const ExecutionModel& model,
                                          const MatchOptions& options, const text::Analyzer& analyzer) {
    std::vector<std::set<std::string>> edge_terms;
    std::vector<std::string> edge_actions;
    for (const auto& e : model.edges()) {
        edge_terms.push_back(component_terms(e.component.resource_id, e.component.text, e.component.content_desc, analyzer));
        edge_actions.push_back(canonical_action(e.action).value_or(e.action));
    }

    std::vector<StepMatch> out;
    for (const auto& step : steps) {
        StepMatch m;
        m.step = step;
        std::set<std::string> terms;
        for (auto& t : analyzer.analyze(step.object)) terms.insert(std::move(t));
        if (step.object2)
            for (auto& t : analyzer.analyze(*step.object2)) terms.insert(std::move(t));

        std::vector<std::pair<std::size_t, double>> scored;
        for (std::size_t i = 0; i < edge_terms.size(); ++i) {
            if (edge_actions[i] != step.action) continue;
            scored.emplace_back(i, jaccard(terms, edge_terms[i]));
        }
        std::optional<std::size_t> best;
        for (std::size_t k = 0; k < scored.size(); ++k)
            if (!best || scored[k].second > scored[*best].second) best = k;

        if (best) {
            m.matched_edge = scored[*best].first;
            m.similarity = scored[*best].second;
            bool close_rival = false;
            for (std::size_t k = 0; k < scored.size(); ++k)
                if (k != *best && scored[k].second >= m.similarity - options.ambiguity_band) close_rival = true;
            if (m.similarity < options.threshold) {
                m.status = MatchStatus::unmatched;
                m.matched_edge.reset();
            } else {
                m.status = close_rival ? MatchStatus::ambiguous : MatchStatus::matched;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

MissingStepReport detect_missing_steps(std::span<const StepMatch> matches, const ExecutionModel& model) {
    MissingStepReport report;
    const auto& edges = model.edges();
    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < matches.size(); ++i) {
        if (matches[i].status != MatchStatus::matched || !matches[i].matched_edge) continue;
        if (prev) {
            const auto& from = edges[*matches[*prev].matched_edge].dst;
            const auto& to = edges[*matches[i].matched_edge].src;
            if (from != to) {
                StepGap gap{*prev, i, from, to, {}, false};
                // Breadth-first search; edges are expanded in insertion order.
                std::map<std::string, std::size_t> via;  // node -> edge that reached it
                std::deque<std::string> queue{from};
                std::set<std::string> seen{from};
                while (!queue.empty() && !seen.count(to)) {
                    auto node = queue.front();
                    queue.pop_front();
                    for (auto e : model.outgoing(node)) {
                        if (seen.insert(edges[e].dst).second) {
                            via[edges[e].dst] = e;
                            queue.push_back(edges[e].dst);
                        }
                    }
                }
                if (seen.count(to)) {
                    gap.feasible = true;
                    for (auto node = to; node != from; node = edges[via.at(node)].src)
                        gap.missing_edges.push_back(via.at(node));
                    std::reverse(gap.missing_edges.begin(), gap.missing_edges.end());
                }
                report.gaps.push_back(std::move(gap));
            }
        }
        prev = i;
    }
    return report;
}

std::vector<Suggestion> suggest_next_steps(const ExecutionModel& model, std::string_view fingerprint) {
    if (!model.has_node(fingerprint)) throw LookupError("unknown screen fingerprint: " + std::string(fingerprint));
    std::vector<Suggestion> out;
    for (auto e : model.outgoing(fingerprint)) {
        const auto& edge = model.edges()[e];
        out.push_back({edge.action, edge.component, edge.dst});
    }
    std::stable_sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
        if (a.action != b.action) return a.action < b.action;
        if (a.component.resource_id != b.component.resource_id) return a.component.resource_id < b.component.resource_id;
        return a.dst < b.dst;
    });
    return out;
}

}  // namespace guibl
