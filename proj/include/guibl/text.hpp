#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace guibl::text {

// Multiset of normalized terms, term -> multiplicity. Ordered for determinism.
using TermBag = std::map<std::string, int>;
using StopwordSet = std::set<std::string, std::less<>>;

struct AnalyzerOptions {
    std::size_t min_length = 2;
    bool stem = false;
};

StopwordSet english_stopwords();
// Java and Kotlin hard keywords.
StopwordSet code_keywords();
// english_stopwords() + code_keywords().
StopwordSet default_stopwords();

// One term per line; blank lines and lines starting with '#' are ignored.
// Entries are lowercased. Throws InputError when the file cannot be read.
StopwordSet load_stopword_file(const std::filesystem::path& path);

// Splits text into raw identifier pieces: non-alphanumeric boundaries,
// camelCase humps, acronym runs (HTMLParser -> HTML, Parser) and
// letter/digit boundaries. Pieces are lowercased but not filtered.
std::vector<std::string> split_identifiers(std::string_view text);

// Text normalization shared by corpus documents, queries and GUI terms.
class Analyzer {
public:
    Analyzer();
    Analyzer(AnalyzerOptions options, StopwordSet stopwords);

    std::vector<std::string> analyze(std::string_view text) const;
    TermBag analyze_bag(std::string_view text) const;

    bool is_stopword(std::string_view term) const;

    const AnalyzerOptions& options() const { return options_; }
    const StopwordSet& stopwords() const { return stopwords_; }

private:
    AnalyzerOptions options_;
    StopwordSet stopwords_;
};

// Default analyzer: min length 2, no stemming, default_stopwords().
const Analyzer& default_analyzer();

std::vector<std::string> preprocess(std::string_view text);

TermBag make_bag(std::span<const std::string> terms);
int bag_size(const TermBag& bag);
void merge_into(TermBag& into, const TermBag& from);

// Classic Porter (1980) suffix stripping. Expects a lowercase ASCII word.
std::string porter_stem(std::string_view word);

// Replaces invalid UTF-8 sequences with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

std::string to_lower(std::string_view s);

}  // namespace guibl::text
