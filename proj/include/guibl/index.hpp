#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/corpus.hpp"
#include "guibl/text.hpp"

namespace guibl {

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
    bool operator==(const Bm25Params&) const = default;
};

struct Posting {
    DocId doc = 0;
    int tf = 0;
    bool operator==(const Posting&) const = default;
};

// Corpus-level statistics the scorers read. Can be captured from one index
// and replayed against another (see score_bm25 overload).
struct CorpusStats {
    int doc_count = 0;
    double avg_length = 0.0;
    std::map<std::string, int, std::less<>> doc_freq;
    bool operator==(const CorpusStats&) const = default;
};

// Inverted index over a scanned corpus. Immutable after build.
class CorpusIndex {
public:
    // Throws InputError when docs is empty or doc ids are not 0..n-1 in order.
    static CorpusIndex build(std::vector<SourceDocument> docs, Bm25Params params = {},
                             text::Analyzer analyzer = text::default_analyzer());

    const std::vector<SourceDocument>& documents() const { return documents_; }
    int doc_count() const { return stats_.doc_count; }
    double avg_length() const { return stats_.avg_length; }
    int doc_freq(std::string_view term) const;
    const std::vector<Posting>& postings(std::string_view term) const;
    const std::map<std::string, std::vector<Posting>, std::less<>>& all_postings() const { return postings_; }
    const CorpusStats& stats() const { return stats_; }
    const Bm25Params& params() const { return params_; }
    const text::Analyzer& analyzer() const { return analyzer_; }

    const SourceDocument* find(std::string_view path) const;

    // Euclidean norm of the document's tf-idf vector (rVSM weighting).
    double tfidf_norm(DocId doc) const { return tfidf_norms_[static_cast<std::size_t>(doc)]; }
    int min_length() const { return min_length_; }
    int max_length() const { return max_length_; }

private:
    CorpusIndex() = default;

    std::vector<SourceDocument> documents_;
    std::map<std::string, std::vector<Posting>, std::less<>> postings_;
    std::map<std::string, DocId, std::less<>> by_path_;
    std::vector<double> tfidf_norms_;
    CorpusStats stats_;
    Bm25Params params_;
    text::Analyzer analyzer_;
    int min_length_ = 0;
    int max_length_ = 0;
};

inline constexpr std::string_view kFlagActivity = "activity";
inline constexpr std::string_view kFlagListener = "listener";
inline constexpr std::string_view kFlagComponent = "component";

struct RankedEntry {
    std::string path;
    double score = 0.0;
    std::set<std::string> gui_flags;
    bool operator==(const RankedEntry&) const = default;
};

// Entries sorted by score descending, ties by path ascending; no duplicates.
struct RankedList {
    std::vector<RankedEntry> entries;
    std::vector<std::string> query_terms_used;
    std::vector<std::string> flags;  // e.g. "empty_query", fallback markers
    bool operator==(const RankedList&) const = default;
};

// Restores the RankedList ordering invariant in place.
void sort_entries(std::vector<RankedEntry>& entries);

enum class Scorer { bm25, rvsm };

Scorer parse_scorer(std::string_view name);  // throws ConfigError
std::string_view to_string(Scorer scorer);

RankedList score_bm25(const CorpusIndex& index, std::span<const std::string> query);
// Scores with externally supplied corpus statistics.
RankedList score_bm25(const CorpusIndex& index, std::span<const std::string> query, const CorpusStats& stats);
RankedList score_rvsm(const CorpusIndex& index, std::span<const std::string> query);

RankedList rank(const CorpusIndex& index, std::span<const std::string> query, Scorer scorer);
RankedList rank(const CorpusIndex& index, std::span<const std::string> query, std::string_view scorer);

inline constexpr std::string_view kFlagEmptyQuery = "empty_query";

}  // namespace guibl
