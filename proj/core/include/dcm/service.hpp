#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "dcm/pipeline.hpp"

namespace dcm {

struct Request {
  std::string method;
  std::string path;
  std::string body;
};

struct Response {
  int status = 200;
  json body;
};

int http_status(ErrorCode code);

// JSON-over-HTTP front end for the elicitation workflow. `handle` is the
// transport-independent dispatcher; `listen` serves it over HTTP.
class SessionService {
 public:
  explicit SessionService(SolverOptions opts = {});
  ~SessionService();
  SessionService(const SessionService&) = delete;
  SessionService& operator=(const SessionService&) = delete;

  Response handle(const Request& req);

  // Binds and returns the port (an ephemeral one when `port` is 0).
  int bind(const std::string& host, int port);
  // Serves until stop(); call after bind().
  void listen();
  void stop();

  // Largest page a completions request may ask for.
  std::size_t page_cap = 1000;

 private:
  struct Stored {
    std::uint64_t revision = 0;
    json repairs;  // array as returned to the client
    std::vector<PairwiseTable> results;
  };
  struct Entry {
    std::shared_mutex mu;
    Project project;
    std::map<std::string, std::uint64_t> revisions;
    std::map<std::string, Stored> repairs;
  };
  struct Transport;

  std::shared_ptr<Entry> find(const std::string& id);
  Response dispatch(const Request& req);
  Response criterion_call(Entry& e, const std::string& id, const std::string& crit,
                          const std::vector<std::string>& rest, const Request& req);

  SolverOptions opts_;
  std::shared_mutex index_mu_;
  std::map<std::string, std::shared_ptr<Entry>> projects_;
  std::uint64_t next_id_ = 1;
  std::unique_ptr<Transport> transport_;
};

}  // namespace dcm
