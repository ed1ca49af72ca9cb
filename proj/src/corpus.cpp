#include "guibl/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "guibl/error.hpp"

namespace guibl {

namespace fs = std::filesystem;

namespace {

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string basename_without_extension(std::string_view path) {
    auto slash = path.find_last_of("/\\");
    std::string_view base = slash == std::string_view::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    if (dot != std::string_view::npos && dot > 0) base = base.substr(0, dot);
    return std::string(base);
}

std::string extension_of(const fs::path& p) {
    auto ext = p.extension().string();
    if (!ext.empty() && ext.front() == '.') ext.erase(0, 1);
    return ext;
}

}  // namespace

CodeFacets extract_code_facets(std::string_view raw_text, std::string_view path,
                               const std::set<std::string>& known_ids) {
    CodeFacets facets;
    facets.class_name = basename_without_extension(path);

    static constexpr std::string_view kPattern = "R.id.";
    for (auto pos = raw_text.find(kPattern); pos != std::string_view::npos;
         pos = raw_text.find(kPattern, pos + 1)) {
        // "XR.id." is a different identifier.
        if (pos > 0 && is_ident_char(raw_text[pos - 1])) continue;
        auto start = pos + kPattern.size();
        if (start >= raw_text.size() || !is_ident_start(raw_text[start])) continue;
        auto end = start;
        while (end < raw_text.size() && is_ident_char(raw_text[end])) ++end;
        facets.resource_id_refs.insert(text::to_lower(raw_text.substr(start, end - start)));
    }

    if (!known_ids.empty()) {
        std::size_t i = 0;
        while (i < raw_text.size()) {
            char c = raw_text[i];
            if (c == '"' || c == '\'') {
                auto close = raw_text.find(c, i + 1);
                if (close == std::string_view::npos) break;
                std::string literal(raw_text.substr(i + 1, close - i - 1));
                if (known_ids.count(literal)) facets.resource_id_refs.insert(text::to_lower(literal));
                i = close + 1;
            } else if (is_ident_start(c) && (i == 0 || !is_ident_char(raw_text[i - 1]))) {
                auto end = i;
                while (end < raw_text.size() && is_ident_char(raw_text[end])) ++end;
                std::string ident(raw_text.substr(i, end - i));
                if (known_ids.count(ident)) facets.resource_id_refs.insert(text::to_lower(ident));
                i = end;
            } else {
                ++i;
            }
        }
    }
    return facets;
}

SourceDocument make_document(DocId id, std::string path, std::string_view raw_text,
                             const text::Analyzer& analyzer,
                             const std::set<std::string>& known_ids) {
    SourceDocument doc;
    doc.doc_id = id;
    auto facets = extract_code_facets(raw_text, path, known_ids);
    doc.path = std::move(path);
    doc.class_name = std::move(facets.class_name);
    doc.resource_id_refs = std::move(facets.resource_id_refs);
    doc.terms = analyzer.analyze_bag(raw_text);
    doc.length = text::bag_size(doc.terms);
    return doc;
}

CorpusScan scan_corpus(const fs::path& root, const ScanOptions& options,
                       const text::Analyzer& analyzer) {
    if (options.extensions.empty()) throw ConfigError("scan_corpus: extension set is empty");
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw InputError("corpus root is not a readable directory: " + root.string());

    std::vector<std::string> rel_paths;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw InputError("cannot read corpus root " + root.string() + ": " + ec.message());
    for (auto end = fs::recursive_directory_iterator(); it != end; it.increment(ec)) {
        if (ec) break;
        if (!it->is_regular_file(ec)) continue;
        if (!options.extensions.count(extension_of(it->path()))) continue;
        rel_paths.push_back(fs::relative(it->path(), root).generic_string());
    }
    std::sort(rel_paths.begin(), rel_paths.end());

    struct Loaded {
        std::string path;
        std::string text;
        bool ok = false;
    };
    auto load = [&root](std::string rel) {
        Loaded out{std::move(rel), {}, false};
        std::ifstream in(root / out.path, std::ios::binary);
        if (!in) return out;
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) return out;
        out.text = text::sanitize_utf8(buf.str());
        out.ok = true;
        return out;
    };

    CorpusScan scan;
    for (auto& rel : rel_paths) {
        auto loaded = load(std::move(rel));
        if (!loaded.ok) {
            scan.warnings.push_back("skipping unreadable file: " + loaded.path);
            continue;
        }
        auto id = static_cast<DocId>(scan.documents.size());
        scan.documents.push_back(make_document(id, std::move(loaded.path), loaded.text, analyzer, options.known_ids));
    }
    return scan;
}

}  // namespace guibl
