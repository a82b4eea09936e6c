#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bq/rational.hpp"

namespace bq::report {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

struct CheckRecord {
  std::string check_id;
  std::string anchor;
  json params = json::object();
  bool passed = false;
  json payload = json::object();
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<CheckRecord> records;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.passed ? 0 : 1;
    return n;
  }
  bool ok() const { return failures() == 0; }
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// One generator per suite, seeded from the run seed and the suite id.
/// Rationals have numerator and denominator in [-9, 9] \ {0}.
class Sampler {
 public:
  Sampler(std::uint64_t seed, const std::string& suite) : rng_(seed ^ fnv1a(suite)) {}

  int digit() { return static_cast<int>(rng_() % 9) + 1; }
  int signed_digit() { return (rng_() & 1u) ? digit() : -digit(); }
  Rational nonzero() {
    Rational q(signed_digit(), signed_digit());
    q.canonicalize();
    return q;
  }
  /// Zero one time in five, otherwise nonzero().
  Rational any() { return index(5) == 0 ? Rational(0) : nonzero(); }
  /// Nonzero rational different from every value in `avoid`.
  Rational nonzero_except(const std::vector<Rational>& avoid) {
    for (;;) {
      const Rational q = nonzero();
      bool clash = false;
      for (const auto& v : avoid) clash = clash || q == v;
      if (!clash) return q;
    }
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  std::mt19937_64 rng_;
};

/// Collects check records for one suite.
class Recorder {
 public:
  Recorder(std::string suite, std::uint64_t seed, std::size_t samples) : sampler_(seed, suite) {
    result_.suite = std::move(suite);
    result_.seed = seed;
    result_.samples = samples;
  }

  Sampler& rng() { return sampler_; }
  std::size_t samples() const { return result_.samples; }

  void check(std::string id, std::string anchor, json params, bool passed, json payload = json::object()) {
    result_.records.push_back({std::move(id), std::move(anchor), std::move(params), passed, std::move(payload)});
  }

  SuiteResult take() { return std::move(result_); }

 private:
  Sampler sampler_;
  SuiteResult result_;
};

inline json to_json(const CheckRecord& r) {
  return {{"check_id", r.check_id},
          {"anchor", r.anchor},
          {"params", r.params},
          {"status", r.passed ? "pass" : "fail"},
          {"payload", r.payload}};
}

inline json to_json(const SuiteResult& s) {
  json recs = json::array();
  for (const auto& r : s.records) recs.push_back(to_json(r));
  return {{"suite", s.suite},
          {"seed", s.seed},
          {"samples", s.samples},
          {"records", recs},
          {"summary", {{"checks", s.records.size()}, {"failed", s.failures()}}}};
}

inline json to_json(const std::vector<SuiteResult>& suites) {
  json arr = json::array();
  std::size_t checks = 0, failed = 0;
  for (const auto& s : suites) {
    arr.push_back(to_json(s));
    checks += s.records.size();
    failed += s.failures();
  }
  return {{"schema_version", schema_version},
          {"suites", arr},
          {"summary", {{"checks", checks}, {"failed", failed}, {"passed", checks - failed}}}};
}

}  // namespace bq::report
