#include "guibl/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "guibl/error.hpp"
#include "stopword_data.inc"

namespace guibl::text {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

StopwordSet parse_word_list(std::string_view data) {
    StopwordSet out;
    std::istringstream in{std::string(data)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        out.insert(to_lower(std::string_view(line).substr(first, last - first + 1)));
    }
    return out;
}

// Boundary inside an alphanumeric run, between run[i-1] and run[i].
bool is_boundary(std::string_view run, std::size_t i) {
    char prev = run[i - 1];
    char cur = run[i];
    if (is_digit(prev) != is_digit(cur)) return true;
    if (is_lower(prev) && is_upper(cur)) return true;
    // Acronym followed by a capitalized word: "HTMLParser" splits before 'P'.
    if (is_upper(prev) && is_upper(cur) && i + 1 < run.size() && is_lower(run[i + 1])) return true;
    return false;
}

}  // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

StopwordSet english_stopwords() { return parse_word_list(kEnglishStopwords); }

StopwordSet code_keywords() { return parse_word_list(kCodeKeywords); }

StopwordSet default_stopwords() {
    auto out = english_stopwords();
    out.merge(code_keywords());
    return out;
}

StopwordSet load_stopword_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read stopword file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_word_list(sanitize_utf8(buf.str()));
}

std::vector<std::string> split_identifiers(std::string_view text) {
    std::vector<std::string> pieces;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_alnum(text[i])) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && is_alnum(text[end])) ++end;
        std::string_view run = text.substr(i, end - i);
        std::size_t start = 0;
        for (std::size_t k = 1; k < run.size(); ++k) {
            if (is_boundary(run, k)) {
                pieces.push_back(to_lower(run.substr(start, k - start)));
                start = k;
            }
        }
        pieces.push_back(to_lower(run.substr(start)));
        i = end;
    }
    return pieces;
}

Analyzer::Analyzer() : Analyzer(AnalyzerOptions{}, default_stopwords()) {}

Analyzer::Analyzer(AnalyzerOptions options, StopwordSet stopwords)
    : options_(options), stopwords_(std::move(stopwords)) {}

bool Analyzer::is_stopword(std::string_view term) const {
    return stopwords_.find(term) != stopwords_.end();
}

std::vector<std::string> Analyzer::analyze(std::string_view text) const {
    std::vector<std::string> terms;
    for (auto& piece : split_identifiers(text)) {
        if (piece.size() < options_.min_length || is_stopword(piece)) continue;
        if (options_.stem) {
            piece = porter_stem(piece);
            if (piece.size() < options_.min_length) continue;
        }
        terms.push_back(std::move(piece));
    }
    return terms;
}

TermBag Analyzer::analyze_bag(std::string_view text) const {
    auto terms = analyze(text);
    return make_bag(terms);
}

const Analyzer& default_analyzer() {
    static const Analyzer analyzer;
    return analyzer;
}

std::vector<std::string> preprocess(std::string_view text) {
    return default_analyzer().analyze(text);
}

TermBag make_bag(std::span<const std::string> terms) {
    TermBag bag;
    for (const auto& t : terms) ++bag[t];
    return bag;
}

int bag_size(const TermBag& bag) {
    int n = 0;
    for (const auto& [term, count] : bag) n += count;
    return n;
}

void merge_into(TermBag& into, const TermBag& from) {
    for (const auto& [term, count] : from) into[term] += count;
}

std::string sanitize_utf8(std::string_view bytes) {
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    const auto n = bytes.size();
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(bytes[k]); };
    while (i < n) {
        unsigned char c = byte(i);
        std::size_t len = 0;
        if (c < 0x80) len = 1;
        else if (c >= 0xC2 && c <= 0xDF) len = 2;
        else if (c >= 0xE0 && c <= 0xEF) len = 3;
        else if (c >= 0xF0 && c <= 0xF4) len = 4;
        // Count the bytes that form a valid prefix of a sequence; a broken
        // prefix becomes a single replacement character.
        std::size_t good = len > 0 ? 1 : 0;
        while (good > 0 && good < len && i + good < n) {
            unsigned char b = byte(i + good);
            unsigned char lo = 0x80, hi = 0xBF;
            if (good == 1) {
                // Reject overlongs, surrogates and code points above U+10FFFF.
                if (c == 0xE0) lo = 0xA0;
                if (c == 0xED) hi = 0x9F;
                if (c == 0xF0) lo = 0x90;
                if (c == 0xF4) hi = 0x8F;
            }
            if (b < lo || b > hi) break;
            ++good;
        }
        if (len > 0 && good == len) {
            out.append(bytes.substr(i, len));
            i += len;
        } else {
            out.append(kReplacement);
            i += std::max<std::size_t>(good, 1);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Porter stemmer

namespace {

class PorterStemmer {
public:
    explicit PorterStemmer(std::string_view word) : b_(word), k_(static_cast<int>(word.size()) - 1) {}

    std::string run() {
        if (k_ <= 1) return b_;
        step1ab();
        if (k_ > 0) {
            step1c();
            step2();
            step3();
            step4();
            step5();
        }
        return b_.substr(0, static_cast<std::size_t>(k_ + 1));
    }

private:
    std::string b_;
    int k_;
    int j_ = 0;

    bool cons(int i) const {
        switch (b_[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u': return false;
            case 'y': return i == 0 ? true : !cons(i - 1);
            default: return true;
        }
    }

    // Number of VC sequences in b_[0..j_].
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool doublec(int j) const { return j >= 1 && b_[j] == b_[j - 1] && cons(j); }

    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char ch = b_[i];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        int len = static_cast<int>(s.size());
        if (len > k_ + 1) return false;
        if (std::string_view(b_).substr(static_cast<std::size_t>(k_ - len + 1), s.size()) != s) return false;
        j_ = k_ - len;
        return true;
    }

    void setto(std::string_view s) {
        b_.replace(static_cast<std::size_t>(j_ + 1), static_cast<std::size_t>(k_ - j_), s);
        k_ = j_ + static_cast<int>(s.size());
        b_.resize(static_cast<std::size_t>(k_ + 1));
    }

    void r(std::string_view s) {
        if (m() > 0) setto(s);
    }

    void step1ab() {
        if (b_[k_] == 's') {
            if (ends("sses")) k_ -= 2;
            else if (ends("ies")) setto("i");
            else if (b_[k_ - 1] != 's') --k_;
        }
        if (ends("eed")) {
            if (m() > 0) --k_;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k_ = j_;
            if (ends("at")) setto("ate");
            else if (ends("bl")) setto("ble");
            else if (ends("iz")) setto("ize");
            else if (doublec(k_)) {
                --k_;
                char ch = b_[k_];
                if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
            } else if (m_at(k_) == 1 && cvc(k_)) {
                j_ = k_;
                setto_append("e");
            }
        }
        b_.resize(static_cast<std::size_t>(k_ + 1));
    }

    int m_at(int j) {
        int saved = j_;
        j_ = j;
        int out = m();
        j_ = saved;
        return out;
    }

    void setto_append(std::string_view s) {
        b_.resize(static_cast<std::size_t>(k_ + 1));
        b_.append(s);
        k_ += static_cast<int>(s.size());
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
    }

    void step2() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
            case 'a':
                if (ends("ational")) { r("ate"); break; }
                if (ends("tional")) { r("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { r("ence"); break; }
                if (ends("anci")) { r("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { r("ize"); break; }
                break;
            case 'l':
                if (ends("bli")) { r("ble"); break; }
                if (ends("alli")) { r("al"); break; }
                if (ends("entli")) { r("ent"); break; }
                if (ends("eli")) { r("e"); break; }
                if (ends("ousli")) { r("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { r("ize"); break; }
                if (ends("ation")) { r("ate"); break; }
                if (ends("ator")) { r("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { r("al"); break; }
                if (ends("iveness")) { r("ive"); break; }
                if (ends("fulness")) { r("ful"); break; }
                if (ends("ousness")) { r("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { r("al"); break; }
                if (ends("iviti")) { r("ive"); break; }
                if (ends("biliti")) { r("ble"); break; }
                break;
            case 'g':
                if (ends("logi")) { r("log"); break; }
                break;
            default:
                break;
        }
    }

    void step3() {
        switch (b_[k_]) {
            case 'e':
                if (ends("icate")) { r("ic"); break; }
                if (ends("ative")) { r(""); break; }
                if (ends("alize")) { r("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { r("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { r("ic"); break; }
                if (ends("ful")) { r(""); break; }
                break;
            case 's':
                if (ends("ness")) { r(""); break; }
                break;
            default:
                break;
        }
    }

    void step4() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
            case 'a':
                if (ends("al")) break;
                return;
            case 'c':
                if (ends("ance")) break;
                if (ends("ence")) break;
                return;
            case 'e':
                if (ends("er")) break;
                return;
            case 'i':
                if (ends("ic")) break;
                return;
            case 'l':
                if (ends("able")) break;
                if (ends("ible")) break;
                return;
            case 'n':
                if (ends("ant")) break;
                if (ends("ement")) break;
                if (ends("ment")) break;
                if (ends("ent")) break;
                return;
            case 'o':
                if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) break;
                if (ends("ou")) break;
                return;
            case 's':
                if (ends("ism")) break;
                return;
            case 't':
                if (ends("ate")) break;
                if (ends("iti")) break;
                return;
            case 'u':
                if (ends("ous")) break;
                return;
            case 'v':
                if (ends("ive")) break;
                return;
            case 'z':
                if (ends("ize")) break;
                return;
            default:
                return;
        }
        if (m() > 1) k_ = j_;
    }

    void step5() {
        j_ = k_;
        if (b_[k_] == 'e') {
            int a = m();
            if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
        }
        if (b_[k_] == 'l' && doublec(k_) && m() > 1) --k_;
    }
};

}  // namespace

std::string porter_stem(std::string_view word) {
    if (word.size() <= 2) return std::string(word);
    return PorterStemmer(word).run();
}

}  // namespace guibl::text
