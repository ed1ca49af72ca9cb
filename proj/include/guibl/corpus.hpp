#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/text.hpp"

namespace guibl {

using DocId = int;

struct SourceDocument {
    DocId doc_id = 0;
    std::string path;        // relative to the corpus root, '/' separated
    std::string class_name;  // basename without extension
    text::TermBag terms;
    int length = 0;          // sum of multiplicities in terms
    std::set<std::string> resource_id_refs;  // lowercase

    bool operator==(const SourceDocument&) const = default;
};

struct CodeFacets {
    std::string class_name;
    std::set<std::string> resource_id_refs;
};

// Lexical facet extraction. Resource ids come from `R.id.<identifier>`
// references; additionally any quoted string or identifier in the text that
// equals one of `known_ids` exactly is recorded. All refs are lowercased.
CodeFacets extract_code_facets(std::string_view raw_text, std::string_view path,
                               const std::set<std::string>& known_ids = {});

struct ScanOptions {
    std::set<std::string> extensions{"java"};  // without the leading dot
    std::set<std::string> known_ids;
};

struct CorpusScan {
    std::vector<SourceDocument> documents;
    std::vector<std::string> warnings;  // unreadable files, one line each
};

// Walks `root` recursively. Documents are ordered lexicographically by
// relative path and numbered from 0. Throws InputError if root is missing or
// not a readable directory and ConfigError if `extensions` is empty.
CorpusScan scan_corpus(const std::filesystem::path& root, const ScanOptions& options,
                       const text::Analyzer& analyzer = text::default_analyzer());

// Builds one document from already loaded text.
SourceDocument make_document(DocId id, std::string path, std::string_view raw_text,
                             const text::Analyzer& analyzer,
                             const std::set<std::string>& known_ids = {});

}  // namespace guibl
