#include "guibl/remote_classifier.hpp"

#include <cstdlib>

#include <httplib.h>

#include "guibl/json_io.hpp"

namespace guibl {

std::optional<RemoteClassifierConfig> remote_config_from_env() {
    const char* url = std::getenv("GUIBL_CLASSIFIER_URL");
    if (!url || !*url) return std::nullopt;
    RemoteClassifierConfig config;
    config.endpoint = url;
    if (const char* model = std::getenv("GUIBL_CLASSIFIER_MODEL")) config.model = model;
    if (const char* timeout = std::getenv("GUIBL_CLASSIFIER_TIMEOUT_MS")) {
        char* end = nullptr;
        long v = std::strtol(timeout, &end, 10);
        if (end && *end == '\0' && v > 0) config.timeout_ms = static_cast<int>(v);
    }
    return config;
}

RemoteClassifier::RemoteClassifier(RemoteClassifierConfig config) : config_(std::move(config)) {
    const auto& url = config_.endpoint;
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos || url.compare(0, scheme_end, "http") != 0)
        throw ConfigError("remote classifier endpoint must be an http:// URL: " + url);
    auto path_start = url.find('/', scheme_end + 3);
    scheme_host_port_ = url.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
    if (config_.timeout_ms <= 0) throw ConfigError("remote classifier timeout must be positive");
}

std::vector<SentenceTag> RemoteClassifier::classify(std::span<const Sentence> sentences) const {
    Json request;
    request["schema"] = kClassifyWireSchema;
    request["model"] = config_.model;
    request["labels"] = {"OB", "EB", "S2R", "OTHER"};
    request["sentences"] = Json::array();
    for (const auto& s : sentences) request["sentences"].push_back(s.text);

    httplib::Client client(scheme_host_port_);
    auto sec = config_.timeout_ms / 1000;
    auto usec = (config_.timeout_ms % 1000) * 1000;
    client.set_connection_timeout(sec, usec);
    client.set_read_timeout(sec, usec);
    client.set_write_timeout(sec, usec);

    auto res = client.Post(path_, request.dump(), "application/json");
    if (!res) throw InputError("request to " + config_.endpoint + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw InputError("classifier service replied HTTP " + std::to_string(res->status));

    Json reply;
    try {
        reply = Json::parse(res->body);
    } catch (const Json::exception& e) {
        throw InputError(std::string("classifier reply is not JSON: ") + e.what());
    }
    if (!reply.is_object() || reply.value("schema", std::string()) != kClassifyWireSchema)
        throw InputError("classifier reply has an unexpected schema");
    auto it = reply.find("tags");
    if (it == reply.end() || !it->is_array()) throw InputError("classifier reply lacks a 'tags' array");

    std::vector<SentenceTag> tags;
    for (const auto& t : *it) {
        if (!t.is_string()) throw InputError("classifier tag is not a string");
        auto tag = parse_tag(t.get<std::string>());
        if (!tag) throw InputError("classifier returned unknown tag '" + t.get<std::string>() + "'");
        tags.push_back(*tag);
    }
    return tags;
}

}  // namespace guibl
