#include <doctest.h>

#include <httplib.h>

#include <cstdlib>
#include <thread>

#include "guibl/json_io.hpp"
#include "guibl/remote_classifier.hpp"
#include "guibl/report.hpp"

using namespace guibl;

namespace {

// Local stand-in for a classification service; the reply is chosen per test.
class FakeService {
public:
    explicit FakeService(std::function<void(const Json&, httplib::Response&)> reply) {
        server_.Post("/classify", [reply, this](const httplib::Request& req, httplib::Response& res) {
            last_request_ = Json::parse(req.body);
            reply(last_request_, res);
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~FakeService() {
        server_.stop();
        thread_.join();
    }
    std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/classify"; }
    const Json& last_request() const { return last_request_; }

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    Json last_request_;
};

const std::vector<Sentence> kSentences{{"Tap save", true}, {"It crashes", false}};

}  // namespace

TEST_CASE("remote classifier happy path") {
    FakeService svc([](const Json& req, httplib::Response& res) {
        Json tags = Json::array();
        for (std::size_t i = 0; i < req["sentences"].size(); ++i) tags.push_back(i == 0 ? "S2R" : "OB");
        res.set_content(Json{{"schema", kClassifyWireSchema}, {"tags", tags}}.dump(), "application/json");
    });
    RemoteClassifier remote({svc.url(), "tiny-model", 2000});
    auto result = classify_sentences(kSentences, remote);
    CHECK(result.warnings.empty());
    REQUIRE(result.sentences.size() == 2);
    CHECK(result.sentences[0].tag == SentenceTag::S2R);
    CHECK(result.sentences[1].tag == SentenceTag::OB);
    CHECK(svc.last_request()["schema"] == kClassifyWireSchema);
    CHECK(svc.last_request()["model"] == "tiny-model");
    CHECK(svc.last_request()["sentences"][1] == "It crashes");
}

TEST_CASE("remote classifier failures fall back to the heuristic") {
    SUBCASE("malformed body") {
        FakeService svc([](const Json&, httplib::Response& res) { res.set_content("not json", "text/plain"); });
        auto result = classify_sentences(kSentences, RemoteClassifier({svc.url(), "m", 2000}));
        CHECK(result.warnings.size() == 1);
        CHECK(result.sentences[0].tag == SentenceTag::S2R);
        CHECK(result.sentences[1].tag == SentenceTag::OB);
    }
    SUBCASE("wrong tag count") {
        FakeService svc([](const Json&, httplib::Response& res) {
            res.set_content(Json{{"schema", kClassifyWireSchema}, {"tags", {"OB"}}}.dump(), "application/json");
        });
        auto result = classify_sentences(kSentences, RemoteClassifier({svc.url(), "m", 2000}));
        CHECK(result.warnings.size() == 1);
        CHECK(result.sentences.size() == 2);
    }
    SUBCASE("unknown label") {
        FakeService svc([](const Json&, httplib::Response& res) {
            res.set_content(Json{{"schema", kClassifyWireSchema}, {"tags", {"BUG", "OB"}}}.dump(), "application/json");
        });
        CHECK(classify_sentences(kSentences, RemoteClassifier({svc.url(), "m", 2000})).warnings.size() == 1);
    }
    SUBCASE("server error") {
        FakeService svc([](const Json&, httplib::Response& res) { res.status = 503; });
        CHECK(classify_sentences(kSentences, RemoteClassifier({svc.url(), "m", 2000})).warnings.size() == 1);
    }
    SUBCASE("nothing listening") {
        std::string url;
        {
            FakeService gone([](const Json&, httplib::Response&) {});
            url = gone.url();
        }
        auto result = classify_sentences(kSentences, RemoteClassifier({url, "m", 500}));
        CHECK(result.warnings.size() == 1);
        CHECK(result.sentences[0].tag == SentenceTag::S2R);
    }
}

TEST_CASE("remote configuration from the environment") {
    ::unsetenv("GUIBL_CLASSIFIER_URL");
    CHECK_FALSE(remote_config_from_env().has_value());
    ::setenv("GUIBL_CLASSIFIER_URL", "http://localhost:9/x", 1);
    ::setenv("GUIBL_CLASSIFIER_MODEL", "m1", 1);
    ::setenv("GUIBL_CLASSIFIER_TIMEOUT_MS", "1234", 1);
    auto cfg = remote_config_from_env();
    REQUIRE(cfg.has_value());
    CHECK(cfg->endpoint == "http://localhost:9/x");
    CHECK(cfg->model == "m1");
    CHECK(cfg->timeout_ms == 1234);
    ::unsetenv("GUIBL_CLASSIFIER_URL");
    ::unsetenv("GUIBL_CLASSIFIER_MODEL");
    ::unsetenv("GUIBL_CLASSIFIER_TIMEOUT_MS");
}
