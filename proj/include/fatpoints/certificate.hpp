#pragma once

/**
 * Replayable run certificates. One line per case: every seed, rank, and
 * verdict field needed for a third party to regenerate the same matrices
 * and confirm (or refute) the recorded outcome. Files are line-oriented
 * UTF-8 with a versioned header; values containing spaces are quoted and
 * contain no quote characters themselves.
 */

#include "fatpoints/checker.hpp"
#include "fatpoints/interpolation.hpp"
#include "fatpoints/rank.hpp"
#include "fatpoints/rng.hpp"
#include "fatpoints/scheme.hpp"
#include "fatpoints/version.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace fatpoints {

inline constexpr const char* kCertificateHeader = "fatpoints-cert v1";

struct CertificateRecord {
  std::string config_text;
  std::string tool = kToolId;
  std::string generator = kGeneratorId;
  uint32_t prime = 0;
  uint64_t base_seed = 0;
  std::vector<uint64_t> attempt_seeds;
  std::vector<long long> attempt_ranks;
  PostulationVerdict verdict;
  bool oracle_run = false;
  long long oracle_rank = -1;
  std::vector<std::string> events;
  std::string trace;
  uint64_t duration_ms = 0;
};

inline CertificateRecord make_record(const CaseOutcome& o, const CheckPolicy& policy, std::string trace = {}) {
  CertificateRecord r;
  r.config_text = o.config.to_string();
  r.prime = policy.field.p();
  r.base_seed = policy.base_seed;
  r.attempt_seeds = o.attempt_seeds;
  r.attempt_ranks = o.attempt_ranks;
  r.verdict = o.verdict;
  r.oracle_run = o.oracle_run;
  r.oracle_rank = o.oracle_rank;
  r.events = o.events;
  r.trace = std::move(trace);
  r.duration_ms = o.duration_ms;
  return r;
}

namespace detail {

inline std::string hex64(uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

template <typename T, typename Fmt>
std::string join(const std::vector<T>& xs, Fmt&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += fmt(xs[i]);
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

// key=value tokens separated by single spaces; a value starting with '"'
// runs to the closing '"'.
inline std::vector<std::pair<std::string, std::string>> parse_tokens(const std::string& line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ') {
      ++pos;
      continue;
    }
    const std::size_t eq = line.find('=', pos);
    if (eq == std::string::npos) throw std::invalid_argument("certificate: token without '='");
    const std::string key = line.substr(pos, eq - pos);
    std::size_t vbeg = eq + 1, vend;
    std::string value;
    if (vbeg < line.size() && line[vbeg] == '"') {
      vend = line.find('"', vbeg + 1);
      if (vend == std::string::npos) throw std::invalid_argument("certificate: unterminated quote");
      value = line.substr(vbeg + 1, vend - vbeg - 1);
      ++vend;
    } else {
      vend = line.find(' ', vbeg);
      if (vend == std::string::npos) vend = line.size();
      value = line.substr(vbeg, vend - vbeg);
    }
    out.emplace_back(key, value);
    pos = vend;
  }
  return out;
}

}  // namespace detail

inline std::string to_line(const CertificateRecord& r) {
  std::ostringstream os;
  os << "config=\"" << r.config_text << '"';
  os << " tool=" << r.tool << " generator=" << r.generator;
  os << " prime=" << r.prime << " base_seed=" << detail::hex64(r.base_seed);
  os << " attempts=" << r.attempt_seeds.size();
  os << " attempt_seeds=" << detail::join(r.attempt_seeds, [](uint64_t v) { return detail::hex64(v); });
  os << " attempt_ranks=" << detail::join(r.attempt_ranks, [](long long v) { return std::to_string(v); });
  const auto& v = r.verdict;
  os << " length=" << v.length << " series=" << v.series << " expected=" << v.expected_rank << " rank=" << v.rank;
  os << " special=" << (v.special ? 1 : 0) << " dim=" << v.dim << " vdim=" << v.vdim << " edim=" << v.edim;
  os << " oracle_run=" << (r.oracle_run ? 1 : 0);
  if (r.oracle_run) os << " oracle_rank=" << r.oracle_rank;
  if (!r.events.empty()) os << " events=" << detail::join(r.events, [](const std::string& s) { return s; });
  if (!r.trace.empty()) os << " trace=\"" << r.trace << '"';
  os << " duration_ms=" << r.duration_ms;
  return os.str();
}

inline CertificateRecord parse_line(const std::string& line) {
  CertificateRecord r;
  std::size_t attempts = 0;
  for (const auto& [key, value] : detail::parse_tokens(line)) {
    if (key == "config")
      r.config_text = value;
    else if (key == "tool")
      r.tool = value;
    else if (key == "generator")
      r.generator = value;
    else if (key == "prime")
      r.prime = static_cast<uint32_t>(std::stoul(value));
    else if (key == "base_seed")
      r.base_seed = std::stoull(value, nullptr, 0);
    else if (key == "attempts")
      attempts = std::stoull(value);
    else if (key == "attempt_seeds")
      for (const auto& s : detail::split(value, ',')) r.attempt_seeds.push_back(std::stoull(s, nullptr, 0));
    else if (key == "attempt_ranks")
      for (const auto& s : detail::split(value, ',')) r.attempt_ranks.push_back(std::stoll(s));
    else if (key == "length")
      r.verdict.length = std::stoll(value);
    else if (key == "series")
      r.verdict.series = std::stoll(value);
    else if (key == "expected")
      r.verdict.expected_rank = std::stoll(value);
    else if (key == "rank")
      r.verdict.rank = std::stoll(value);
    else if (key == "special")
      r.verdict.special = value != "0";
    else if (key == "dim")
      r.verdict.dim = std::stoll(value);
    else if (key == "vdim")
      r.verdict.vdim = std::stoll(value);
    else if (key == "edim")
      r.verdict.edim = std::stoll(value);
    else if (key == "oracle_run")
      r.oracle_run = value != "0";
    else if (key == "oracle_rank")
      r.oracle_rank = std::stoll(value);
    else if (key == "events")
      r.events = detail::split(value, ',');
    else if (key == "trace")
      r.trace = value;
    else if (key == "duration_ms")
      r.duration_ms = std::stoull(value);
    // unknown keys are carried by future versions; ignore them
  }
  if (r.config_text.empty()) throw std::invalid_argument("certificate: record without config");
  if (attempts != r.attempt_seeds.size() || attempts != r.attempt_ranks.size())
    throw std::invalid_argument("certificate: attempt count mismatch");
  return r;
}

// Appends records to a file, writing the header only when starting fresh.
class CertificateWriter {
 public:
  explicit CertificateWriter(const std::string& path) {
    bool fresh = true;
    {
      std::ifstream probe(path);
      std::string first;
      if (probe && std::getline(probe, first)) {
        if (first != kCertificateHeader) throw std::invalid_argument("certificate: existing file has a foreign header");
        fresh = false;
      }
    }
    out_.open(path, std::ios::app);
    if (!out_) throw std::runtime_error("certificate: cannot open " + path);
    if (fresh) out_ << kCertificateHeader << '\n' << std::flush;
  }

  void append(const CertificateRecord& r) { out_ << to_line(r) << '\n' << std::flush; }

 private:
  std::ofstream out_;
};

inline std::vector<CertificateRecord> read_certificates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("certificate: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCertificateHeader)
    throw std::invalid_argument("certificate: missing or foreign header");
  std::vector<CertificateRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_line(line));
  }
  return out;
}

// Config texts already present, for resuming an interrupted scan. A missing
// file resumes from nothing.
inline std::unordered_set<std::string> existing_config_keys(const std::string& path) {
  std::unordered_set<std::string> keys;
  std::ifstream in(path);
  if (!in) return keys;
  std::string line;
  if (!std::getline(in, line) || line != kCertificateHeader)
    throw std::invalid_argument("certificate: existing file has a foreign header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    keys.insert(parse_line(line).config_text);
  }
  return keys;
}

enum class VerifyStatus { match, mismatch, unverifiable };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::unverifiable;
  std::string detail;
};

// Replays a record from its seeds: re-derives every attempt seed, rebuilds
// every matrix, recomputes every rank (and the exact rank if recorded) and
// compares all verdict fields. Nothing in the record is trusted.
inline VerifyResult verify_record(const CertificateRecord& r) {
  if (r.generator != kGeneratorId)
    return {VerifyStatus::unverifiable, "unknown generator " + r.generator};

  FatPointConfig config;
  try {
    config = FatPointConfig::parse(r.config_text);
  } catch (const std::exception& e) {
    return {VerifyStatus::mismatch, std::string("config does not parse: ") + e.what()};
  }
  PrimeField field{kDefaultPrime};
  try {
    field = PrimeField(r.prime);
  } catch (const std::exception& e) {
    return {VerifyStatus::unverifiable, std::string("prime rejected: ") + e.what()};
  }
  if (r.attempt_seeds.empty()) return {VerifyStatus::mismatch, "record has no attempts"};

  const uint64_t case_seed = case_seed_for(config, r.base_seed);
  long long best = -1;
  for (std::size_t i = 0; i < r.attempt_seeds.size(); ++i) {
    const uint64_t seed = derive_seed(case_seed, static_cast<uint64_t>(i));
    if (seed != r.attempt_seeds[i])
      return {VerifyStatus::mismatch, "attempt seed " + std::to_string(i) + " does not re-derive"};
    auto ev = build_matrix(config, field, seed);
    const long long got = static_cast<long long>(rank_destructive(ev.matrix, field));
    if (got != r.attempt_ranks[i])
      return {VerifyStatus::mismatch, "attempt " + std::to_string(i) + " rank recomputes to " + std::to_string(got) +
                                          ", recorded " + std::to_string(r.attempt_ranks[i])};
    best = std::max(best, got);
  }
  if (r.oracle_run) {
    auto ev = build_matrix(config, field, r.attempt_seeds.front());
    const long long got = static_cast<long long>(rank_exact(lift_to_exact(ev.matrix)));
    if (got != r.oracle_rank)
      return {VerifyStatus::mismatch,
              "exact rank recomputes to " + std::to_string(got) + ", recorded " + std::to_string(r.oracle_rank)};
    best = std::max(best, got);
  }

  PostulationVerdict v;
  try {
    v = classify(best, config);
  } catch (const std::exception& e) {
    return {VerifyStatus::mismatch, std::string("verdict does not classify: ") + e.what()};
  }
  if (!(v == r.verdict)) return {VerifyStatus::mismatch, "verdict fields do not match the replay"};
  return {VerifyStatus::match, ""};
}

}  // namespace fatpoints
