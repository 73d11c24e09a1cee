#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <atomic>
#include <thread>

#include "doctest.h"
#include "renflow/birkhoff.hpp"
#include "renflow/toy.hpp"
#include "test_helpers.hpp"

using namespace renflow;

// The memo caches behind the Hopf structure and the lazy characters are
// shared mutable state; these cases hammer them from several threads and
// compare against serially computed values.

TEST_CASE("hopf caches under concurrent access") {
  auto forests = enumerate_forests(5);
  std::map<std::string, TensorSum> serial;
  for (const auto& f : forests) serial.emplace(f.key(), coproduct(f));

  std::atomic<bool> ok{true};
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (int round = 0; round < 3; ++round) {
        for (const auto& f : forests) {
          if (!(coproduct(f) == serial.at(f.key()))) ok = false;
          if (!f.is_empty()) {
            ForestPolynomial s = antipode(f);
            ForestPolynomial again = antipode(f);
            if (!(s == again)) ok = false;
          }
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(ok.load());
}

TEST_CASE("lazy character values under concurrent access") {
  ToyConfig cfg{4, 3};
  Character phi = toy_character(cfg);
  Character serial_phi = toy_character(cfg);
  auto trees = enumerate_trees(4);
  std::map<std::string, LaurentSeries> serial;
  for (const auto& t : trees) serial.emplace(t.encoding(), serial_phi(t));

  BirkhoffPair pair = birkhoff(phi);
  BirkhoffPair serial_pair = birkhoff(serial_phi);
  std::map<std::string, LaurentSeries> serial_minus;
  for (const auto& t : trees) serial_minus.emplace(t.encoding(), serial_pair.minus(t));

  std::atomic<bool> ok{true};
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (const auto& t : trees) {
        if (!(phi(t) == serial.at(t.encoding()))) ok = false;
        if (!(pair.minus(t) == serial_minus.at(t.encoding()))) ok = false;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(ok.load());
}
