#include <csignal>
#include <iostream>

#include <CLI11.hpp>

#include "dcm/service.hpp"

namespace {
dcm::SessionService* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"JSON-over-HTTP session service for comparison-table projects"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<dcm::Cards> card_limit;
  app.add_option("--host", host, "Address to bind");
  app.add_option("--port", port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  app.add_option("--card-limit", card_limit, "Bound on card counts (env DCM_CARD_LIMIT)")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  dcm::SolverOptions opts = dcm::solver_options_from_env();
  if (card_limit) opts.card_limit = *card_limit;
  dcm::SessionService service(opts);
  try {
    int bound = service.bind(host, port);
    std::cout << "listening on " << host << ":" << bound << std::endl;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  service.listen();
  return 0;
}
