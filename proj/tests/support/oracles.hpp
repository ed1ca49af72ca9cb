#pragma once
// Reference implementations used as test oracles. Deliberately naive: dense
// vectors, full rescans, no shared code with the library scorers or metrics.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Ranking = std::vector<std::string>;
using Truth = std::set<std::string>;

inline int hits_at_k(const Ranking& ranking, const Truth& truth, int k) {
    for (int i = 0; i < k && i < static_cast<int>(ranking.size()); ++i) {
        for (const auto& t : truth) {
            if (ranking[static_cast<std::size_t>(i)] == t) return 1;
        }
    }
    return 0;
}

inline double reciprocal_rank(const Ranking& ranking, const Truth& truth) {
    for (std::size_t p = 1; p <= ranking.size(); ++p) {
        // Prefix of length p contains a relevant item for the first time?
        int found = 0;
        for (std::size_t i = 0; i < p; ++i) found += static_cast<int>(truth.count(ranking[i]));
        if (found > 0) return 1.0 / static_cast<double>(p);
    }
    return 0.0;
}

// Precision of every prefix that ends in a relevant item, each prefix counted
// from scratch.
inline double average_precision(const Ranking& ranking, const Truth& truth) {
    if (truth.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t p = 1; p <= ranking.size(); ++p) {
        if (!truth.count(ranking[p - 1])) continue;
        int relevant = 0;
        for (std::size_t i = 0; i < p; ++i) relevant += static_cast<int>(truth.count(ranking[i]));
        sum += static_cast<double>(relevant) / static_cast<double>(p);
    }
    return sum / static_cast<double>(truth.size());
}

struct Doc {
    std::string path;
    std::vector<std::string> tokens;
};

struct Dense {
    std::vector<std::string> vocab;
    std::vector<std::vector<double>> tf;  // doc x term
    std::vector<double> length;
};

inline Dense densify(const std::vector<Doc>& docs) {
    Dense d;
    std::set<std::string> v;
    for (const auto& doc : docs) v.insert(doc.tokens.begin(), doc.tokens.end());
    d.vocab.assign(v.begin(), v.end());
    for (const auto& doc : docs) {
        std::vector<double> row(d.vocab.size(), 0.0);
        for (const auto& t : doc.tokens) {
            auto it = std::find(d.vocab.begin(), d.vocab.end(), t);
            row[static_cast<std::size_t>(it - d.vocab.begin())] += 1.0;
        }
        d.tf.push_back(row);
        d.length.push_back(static_cast<double>(doc.tokens.size()));
    }
    return d;
}

inline double df_of(const Dense& d, std::size_t term) {
    double df = 0;
    for (const auto& row : d.tf) df += row[term] > 0 ? 1 : 0;
    return df;
}

inline int term_index(const Dense& d, const std::string& t) {
    for (std::size_t i = 0; i < d.vocab.size(); ++i) {
        if (d.vocab[i] == t) return static_cast<int>(i);
    }
    return -1;
}

using Scores = std::vector<std::pair<std::string, double>>;

inline Scores sorted_nonzero(const std::vector<Doc>& docs, const std::vector<double>& s) {
    Scores out;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (s[i] > 0) out.emplace_back(docs[i].path, s[i]);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

inline Scores bm25(const std::vector<Doc>& docs, const std::vector<std::string>& query, double k1 = 1.2,
                   double b = 0.75) {
    Dense d = densify(docs);
    const double n = static_cast<double>(docs.size());
    double total = 0;
    for (double l : d.length) total += l;
    const double avg = total / n;
    std::vector<double> s(docs.size(), 0.0);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        for (const auto& q : query) {
            int t = term_index(d, q);
            if (t < 0) continue;
            double f = d.tf[i][static_cast<std::size_t>(t)];
            if (f == 0) continue;
            double df = df_of(d, static_cast<std::size_t>(t));
            double idf = std::log(1.0 + (n - df + 0.5) / (df + 0.5));
            s[i] += idf * f * (k1 + 1) / (f + k1 * (1 - b + b * d.length[i] / avg));
        }
    }
    return sorted_nonzero(docs, s);
}

inline Scores rvsm(const std::vector<Doc>& docs, const std::vector<std::string>& query) {
    Dense d = densify(docs);
    const double n = static_cast<double>(docs.size());
    const std::size_t m = d.vocab.size();
    std::vector<double> idf(m);
    for (std::size_t t = 0; t < m; ++t) idf[t] = std::log(n / df_of(d, t));

    std::vector<double> qv(m, 0.0);
    for (std::size_t t = 0; t < m; ++t) {
        double f = static_cast<double>(std::count(query.begin(), query.end(), d.vocab[t]));
        if (f > 0) qv[t] = (1 + std::log(f)) * idf[t];
    }
    double lo = *std::min_element(d.length.begin(), d.length.end());
    double hi = *std::max_element(d.length.begin(), d.length.end());

    std::vector<double> s(docs.size(), 0.0);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        std::vector<double> dv(m, 0.0);
        for (std::size_t t = 0; t < m; ++t) {
            if (d.tf[i][t] > 0) dv[t] = (1 + std::log(d.tf[i][t])) * idf[t];
        }
        double dot = 0, nd = 0, nq = 0;
        for (std::size_t t = 0; t < m; ++t) {
            dot += dv[t] * qv[t];
            nd += dv[t] * dv[t];
            nq += qv[t] * qv[t];
        }
        if (dot <= 0 || nd == 0 || nq == 0) continue;
        double norm_len = hi > lo ? (d.length[i] - lo) / (hi - lo) : 0.0;
        s[i] = dot / (std::sqrt(nd) * std::sqrt(nq)) / (1 + std::exp(-norm_len));
    }
    return sorted_nonzero(docs, s);
}

}  // namespace oracle
