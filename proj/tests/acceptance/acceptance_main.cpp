// Runs every promised end-to-end check and prints one verdict line per
// item.  Exits 0 when everything holds and 3 when anything fails, so the
// harness can tell a broken build from a broken promise.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "glnq/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"end-to-end checks with one verdict per line"};
  glnq::accept::options opt;
  opt.fixtures = "tests/fixtures/acceptance_fixtures.json";
  std::string fixtures = opt.fixtures.string();
  app.add_option("--fixtures", fixtures, "growth-constant fixture file")
      ->capture_default_str();
  app.add_flag("--record", opt.record, "measure growth constants and rewrite the fixture file");
  app.add_flag("--slow", opt.slow, "include the long transporter cross-check");
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  opt.fixtures = fixtures;

  glnq::accept::report rep = glnq::accept::run_all(opt);
  for (const glnq::accept::criterion_result& r : rep.results)
    std::printf("%2d %s %s: %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
  return rep.all_pass() ? 0 : 3;
}
