#include "guibl/index.hpp"

#include <algorithm>
#include <cmath>

#include "guibl/error.hpp"

namespace guibl {

CorpusIndex CorpusIndex::build(std::vector<SourceDocument> docs, Bm25Params params, text::Analyzer analyzer) {
    if (docs.empty()) throw InputError("cannot build an index over an empty corpus");
    CorpusIndex index;
    index.params_ = params;
    index.analyzer_ = std::move(analyzer);

    long long total_length = 0;
    index.min_length_ = docs.front().length;
    index.max_length_ = docs.front().length;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto& doc = docs[i];
        if (doc.doc_id != static_cast<DocId>(i))
            throw InputError("document ids must be contiguous from 0; got " + std::to_string(doc.doc_id) +
                             " at position " + std::to_string(i));
        if (doc.length != text::bag_size(doc.terms))
            throw InputError("document length does not match its term bag: " + doc.path);
        if (!index.by_path_.emplace(doc.path, doc.doc_id).second)
            throw InputError("duplicate document path: " + doc.path);
        total_length += doc.length;
        index.min_length_ = std::min(index.min_length_, doc.length);
        index.max_length_ = std::max(index.max_length_, doc.length);
        for (const auto& [term, tf] : doc.terms) index.postings_[term].push_back({doc.doc_id, tf});
    }

    index.stats_.doc_count = static_cast<int>(docs.size());
    index.stats_.avg_length = static_cast<double>(total_length) / static_cast<double>(docs.size());
    for (const auto& [term, list] : index.postings_)
        index.stats_.doc_freq.emplace(term, static_cast<int>(list.size()));

    const double n = index.stats_.doc_count;
    index.tfidf_norms_.assign(docs.size(), 0.0);
    for (const auto& [term, list] : index.postings_) {
        double idf = std::log(n / static_cast<double>(list.size()));
        for (const auto& p : list) {
            double w = (1.0 + std::log(static_cast<double>(p.tf))) * idf;
            index.tfidf_norms_[static_cast<std::size_t>(p.doc)] += w * w;
        }
    }
    for (auto& v : index.tfidf_norms_) v = std::sqrt(v);

    index.documents_ = std::move(docs);
    return index;
}

int CorpusIndex::doc_freq(std::string_view term) const {
    auto it = stats_.doc_freq.find(term);
    return it == stats_.doc_freq.end() ? 0 : it->second;
}

const std::vector<Posting>& CorpusIndex::postings(std::string_view term) const {
    static const std::vector<Posting> kEmpty;
    auto it = postings_.find(term);
    return it == postings_.end() ? kEmpty : it->second;
}

const SourceDocument* CorpusIndex::find(std::string_view path) const {
    auto it = by_path_.find(path);
    return it == by_path_.end() ? nullptr : &documents_[static_cast<std::size_t>(it->second)];
}

void sort_entries(std::vector<RankedEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.path < b.path;
    });
}

Scorer parse_scorer(std::string_view name) {
    if (name == "bm25") return Scorer::bm25;
    if (name == "rvsm") return Scorer::rvsm;
    throw ConfigError("unknown scorer '" + std::string(name) + "' (valid: bm25, rvsm)");
}

std::string_view to_string(Scorer scorer) {
    return scorer == Scorer::bm25 ? "bm25" : "rvsm";
}

namespace {

RankedList collect(const CorpusIndex& index, const std::vector<double>& scores,
                   std::span<const std::string> query) {
    RankedList out;
    out.query_terms_used.assign(query.begin(), query.end());
    for (std::size_t d = 0; d < scores.size(); ++d) {
        if (scores[d] > 0.0) out.entries.push_back({index.documents()[d].path, scores[d], {}});
    }
    sort_entries(out.entries);
    return out;
}

RankedList empty_query_result() {
    RankedList out;
    out.flags.emplace_back(kFlagEmptyQuery);
    return out;
}

}  // namespace

RankedList score_bm25(const CorpusIndex& index, std::span<const std::string> query, const CorpusStats& stats) {
    if (query.empty()) return empty_query_result();
    const auto& params = index.params();
    const double n = stats.doc_count;
    std::vector<double> scores(index.documents().size(), 0.0);
    for (const auto& term : query) {
        auto df_it = stats.doc_freq.find(term);
        if (df_it == stats.doc_freq.end()) continue;
        const double df = df_it->second;
        const double idf = std::log(1.0 + (n - df + 0.5) / (df + 0.5));
        for (const auto& p : index.postings(term)) {
            const double len = index.documents()[static_cast<std::size_t>(p.doc)].length;
            const double f = p.tf;
            const double norm = params.k1 * (1.0 - params.b + params.b * len / stats.avg_length);
            scores[static_cast<std::size_t>(p.doc)] += idf * f * (params.k1 + 1.0) / (f + norm);
        }
    }
    return collect(index, scores, query);
}

RankedList score_bm25(const CorpusIndex& index, std::span<const std::string> query) {
    return score_bm25(index, query, index.stats());
}

RankedList score_rvsm(const CorpusIndex& index, std::span<const std::string> query) {
    if (query.empty()) return empty_query_result();
    const double n = index.doc_count();

    std::map<std::string_view, int> query_tf;
    for (const auto& t : query) ++query_tf[t];

    std::vector<double> dot(index.documents().size(), 0.0);
    double query_norm_sq = 0.0;
    for (const auto& [term, count] : query_tf) {
        const int df = index.doc_freq(term);
        if (df == 0) continue;
        const double idf = std::log(n / df);
        const double wq = (1.0 + std::log(static_cast<double>(count))) * idf;
        query_norm_sq += wq * wq;
        for (const auto& p : index.postings(term)) {
            const double wd = (1.0 + std::log(static_cast<double>(p.tf))) * idf;
            dot[static_cast<std::size_t>(p.doc)] += wq * wd;
        }
    }

    const double query_norm = std::sqrt(query_norm_sq);
    const double span = index.max_length() - index.min_length();
    std::vector<double> scores(dot.size(), 0.0);
    for (std::size_t d = 0; d < dot.size(); ++d) {
        const double doc_norm = index.tfidf_norm(static_cast<DocId>(d));
        if (dot[d] <= 0.0 || query_norm == 0.0 || doc_norm == 0.0) continue;
        const double len = index.documents()[d].length;
        const double norm_len = span > 0.0 ? (len - index.min_length()) / span : 0.0;
        const double length_factor = 1.0 / (1.0 + std::exp(-norm_len));
        scores[d] = length_factor * dot[d] / (query_norm * doc_norm);
    }
    return collect(index, scores, query);
}

RankedList rank(const CorpusIndex& index, std::span<const std::string> query, Scorer scorer) {
    switch (scorer) {
        case Scorer::bm25: return score_bm25(index, query);
        case Scorer::rvsm: return score_rvsm(index, query);
    }
    throw ConfigError("unhandled scorer");
}

RankedList rank(const CorpusIndex& index, std::span<const std::string> query, std::string_view scorer) {
    return rank(index, query, parse_scorer(scorer));
}

}  // namespace guibl
