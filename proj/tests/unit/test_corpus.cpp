#include <doctest.h>

#include <fstream>

#include "guibl/corpus.hpp"
#include "guibl/error.hpp"
#include "guibl/json_io.hpp"
#include "helpers.hpp"

using namespace guibl;
using support::TempDir;

namespace {

void write(const support::fs::path& p, std::string_view text) {
    support::fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("extract_code_facets") {
    auto f = extract_code_facets("btn = findViewById(R.id.save_button);", "a/Editor.java");
    CHECK(f.class_name == "Editor");
    CHECK(f.resource_id_refs == std::set<std::string>{"save_button"});

    CHECK(extract_code_facets("class A {}", "A.java").resource_id_refs.empty());

    auto both = extract_code_facets("R.id.saveButton ... R.id.save_button", "X.java");
    CHECK(both.resource_id_refs == std::set<std::string>{"savebutton", "save_button"});

    // Known ids are picked up from string literals and bare identifiers, exact matches only.
    auto known = extract_code_facets("view.findViewWithTag(\"share_button\"); int share_button_x; menu_item",
                                     "K.java", {"share_button", "menu_item"});
    CHECK(known.resource_id_refs == std::set<std::string>{"menu_item", "share_button"});
}

TEST_CASE("scan_corpus filters by extension and orders by path") {
    TempDir dir;
    write(dir / "B.java", "class B {}");
    write(dir / "A.java", "class A { void saveNote() {} }");
    write(dir / "C.kt", "class C");
    auto scan = scan_corpus(dir.path(), {});
    REQUIRE(scan.documents.size() == 2);
    CHECK(scan.documents[0].path == "A.java");
    CHECK(scan.documents[0].doc_id == 0);
    CHECK(scan.documents[1].path == "B.java");
    CHECK(scan.documents[1].doc_id == 1);
    CHECK(scan.documents[0].terms == text::TermBag{{"note", 1}, {"save", 1}});

    ScanOptions kt;
    kt.extensions = {"java", "kt"};
    CHECK(scan_corpus(dir.path(), kt).documents.size() == 3);
}

TEST_CASE("scan_corpus nested paths, empty trees and errors") {
    TempDir dir;
    CHECK(scan_corpus(dir.path(), {}).documents.empty());
    write(dir / "x" / "A.java", "class A {}");
    auto scan = scan_corpus(dir.path(), {});
    REQUIRE(scan.documents.size() == 1);
    CHECK(scan.documents[0].path == "x/A.java");
    CHECK(scan.documents[0].class_name == "A");

    CHECK_THROWS_AS(scan_corpus(dir / "nope", {}), InputError);
    ScanOptions none;
    none.extensions.clear();
    CHECK_THROWS_AS(scan_corpus(dir.path(), none), ConfigError);
}

TEST_CASE("scanning the fixture app is deterministic and documents are consistent") {
    auto a = scan_corpus(support::notepad_src(), {});
    auto b = scan_corpus(support::notepad_src(), {});
    CHECK(a.documents == b.documents);
    REQUIRE(a.documents.size() >= 30);
    for (std::size_t i = 0; i < a.documents.size(); ++i) {
        const auto& d = a.documents[i];
        CHECK(d.doc_id == static_cast<int>(i));
        CHECK_FALSE(d.class_name.empty());
        CHECK(d.length == text::bag_size(d.terms));
        if (i > 0) CHECK(a.documents[i - 1].path < d.path);
        // every recorded id occurs in the lowercased source text
        auto raw = text::to_lower(read_text_file(support::notepad_src() / d.path));
        for (const auto& ref : d.resource_id_refs) CHECK(raw.find(ref) != std::string::npos);
    }
}

TEST_CASE("unreadable bytes do not stop a scan") {
    TempDir dir;
    write(dir / "A.java", "class A { String s = \"caf\xe9 menu\"; }");
    auto scan = scan_corpus(dir.path(), {});
    REQUIRE(scan.documents.size() == 1);
    CHECK(scan.documents[0].terms.count("menu") == 1);
}
