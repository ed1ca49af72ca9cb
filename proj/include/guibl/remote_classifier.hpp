#pragma once

#include <optional>
#include <string>

#include "guibl/report.hpp"

namespace guibl {

// Wire schema identifier carried in both request and response bodies.
inline constexpr std::string_view kClassifyWireSchema = "guibl.classify.v1";

struct RemoteClassifierConfig {
    std::string endpoint;  // http://host[:port]/path
    std::string model;
    int timeout_ms = 10000;
};

// GUIBL_CLASSIFIER_URL (required), GUIBL_CLASSIFIER_MODEL,
// GUIBL_CLASSIFIER_TIMEOUT_MS.
std::optional<RemoteClassifierConfig> remote_config_from_env();

// Sends the sentence list to a text-generation service:
//
//   POST <endpoint>
//   {"schema": "guibl.classify.v1", "model": "...",
//    "labels": ["OB", "EB", "S2R", "OTHER"], "sentences": ["...", ...]}
//
//   200 {"schema": "guibl.classify.v1", "tags": ["S2R", ...]}
//
// Throws InputError on transport errors, timeouts, non-200 replies and
// malformed bodies; classify_sentences() turns that into a heuristic fallback.
class RemoteClassifier final : public SentenceClassifier {
public:
    explicit RemoteClassifier(RemoteClassifierConfig config);

    std::vector<SentenceTag> classify(std::span<const Sentence> sentences) const override;
    std::string name() const override { return "remote"; }

private:
    RemoteClassifierConfig config_;
    std::string scheme_host_port_;
    std::string path_;
};

}  // namespace guibl
