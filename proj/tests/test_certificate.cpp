/*
 * Certificate checks: line round-trip, file header handling, resume keys,
 * and the replay verifier against genuine and tampered records.
 */

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include "fatpoints/certificate.hpp"
#include "fatpoints/checker.hpp"
#include "fatpoints/scheme.hpp"

using fatpoints::CertificateRecord;
using fatpoints::CertificateWriter;
using fatpoints::CheckPolicy;
using fatpoints::check_exact;
using fatpoints::existing_config_keys;
using fatpoints::make_record;
using fatpoints::OracleMode;
using fatpoints::parse_line;
using fatpoints::quadruple_config;
using fatpoints::read_certificates;
using fatpoints::to_line;
using fatpoints::verify_record;
using fatpoints::VerifyStatus;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

CertificateRecord sample_record(std::string trace = {}) {
  const CheckPolicy policy;
  return make_record(check_exact(quadruple_config(3, 0, 0, 0, 5), policy), policy, std::move(trace));
}

}  // namespace

TEST_CASE("record lines round-trip through text") {
  const CertificateRecord r = sample_record("d=40 start=0,0,0,300,633,2 steps= final=0,0,0,300,633,2 few5=1");
  const CertificateRecord back = parse_line(to_line(r));
  REQUIRE(back.config_text == r.config_text);
  REQUIRE(back.tool == r.tool);
  REQUIRE(back.generator == r.generator);
  REQUIRE(back.prime == r.prime);
  REQUIRE(back.base_seed == r.base_seed);
  REQUIRE(back.attempt_seeds == r.attempt_seeds);
  REQUIRE(back.attempt_ranks == r.attempt_ranks);
  REQUIRE(back.verdict == r.verdict);
  REQUIRE(back.oracle_run == r.oracle_run);
  REQUIRE(back.oracle_rank == r.oracle_rank);
  REQUIRE(back.events == r.events);
  REQUIRE(back.trace == r.trace);
  REQUIRE(back.duration_ms == r.duration_ms);
}

TEST_CASE("parse_line rejects malformed records") {
  const std::string good = to_line(sample_record());
  REQUIRE_THROWS_AS(parse_line("tool=x attempts=0"), std::invalid_argument);  // no config
  REQUIRE_THROWS_AS(parse_line("config=\"d=3 n=3 2^5\" attempts=2 attempt_seeds=0x1 attempt_ranks=20"),
                    std::invalid_argument);  // count mismatch
  REQUIRE_THROWS_AS(parse_line("config=\"d=3 n=3 2^5"), std::invalid_argument);  // unterminated quote
  REQUIRE_THROWS_AS(parse_line("config"), std::invalid_argument);               // token without '='
  REQUIRE_NOTHROW(parse_line(good + " future_key=ignored"));
}

TEST_CASE("writer appends under one header and reader returns all records") {
  const auto path = temp_file("fatpoints_cert_roundtrip.txt");
  const CertificateRecord r = sample_record();
  {
    CertificateWriter w(path.string());
    w.append(r);
    w.append(r);
  }
  {
    CertificateWriter again(path.string());  // append mode, no second header
    again.append(r);
  }
  const auto records = read_certificates(path.string());
  REQUIRE(records.size() == 3);
  for (const auto& rec : records) REQUIRE(rec.config_text == "d=3 n=3 2^5");

  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  REQUIRE(first == fatpoints::kCertificateHeader);

  const auto keys = existing_config_keys(path.string());
  REQUIRE(keys.size() == 1);
  REQUIRE(keys.count("d=3 n=3 2^5") == 1);
  std::filesystem::remove(path);
}

TEST_CASE("foreign headers are refused") {
  const auto path = temp_file("fatpoints_cert_foreign.txt");
  std::ofstream(path) << "some other format v9\n";
  REQUIRE_THROWS_AS(CertificateWriter(path.string()), std::invalid_argument);
  REQUIRE_THROWS_AS(read_certificates(path.string()), std::invalid_argument);
  REQUIRE_THROWS_AS(existing_config_keys(path.string()), std::invalid_argument);
  std::filesystem::remove(path);

  REQUIRE(existing_config_keys(path.string()).empty());  // missing file resumes from nothing
  REQUIRE_THROWS_AS(read_certificates(path.string()), std::runtime_error);
}

TEST_CASE("verifier accepts genuine records") {
  const auto r = sample_record();
  const auto res = verify_record(r);
  REQUIRE(res.status == VerifyStatus::match);
  REQUIRE(res.detail.empty());
}

TEST_CASE("verifier replays the exact oracle when recorded") {
  CheckPolicy policy;
  policy.oracle = OracleMode::forced;
  const auto out = check_exact(quadruple_config(3, 0, 0, 0, 5), policy);
  REQUIRE(out.oracle_run);
  REQUIRE(out.oracle_rank == 20);
  const auto r = make_record(out, policy);
  REQUIRE(verify_record(r).status == VerifyStatus::match);

  auto bad = r;
  bad.oracle_rank = 19;
  REQUIRE(verify_record(bad).status == VerifyStatus::mismatch);
}

TEST_CASE("verifier flags every tampered field") {
  const auto r = sample_record();

  auto rank_up = r;
  rank_up.attempt_ranks[0] -= 1;
  REQUIRE(verify_record(rank_up).status == VerifyStatus::mismatch);

  auto seed_flip = r;
  seed_flip.attempt_seeds[0] ^= 1;
  REQUIRE(verify_record(seed_flip).status == VerifyStatus::mismatch);

  auto special_flip = r;
  special_flip.verdict.special = !special_flip.verdict.special;
  special_flip.verdict.rank -= 1;
  REQUIRE(verify_record(special_flip).status == VerifyStatus::mismatch);

  auto no_attempts = r;
  no_attempts.attempt_seeds.clear();
  no_attempts.attempt_ranks.clear();
  REQUIRE(verify_record(no_attempts).status == VerifyStatus::mismatch);

  auto alien = r;
  alien.generator = "splitmix64-v2";
  REQUIRE(verify_record(alien).status == VerifyStatus::unverifiable);

  auto bad_prime = r;
  bad_prime.prime = 100;
  REQUIRE(verify_record(bad_prime).status == VerifyStatus::unverifiable);

  auto bad_config = r;
  bad_config.config_text = "not a config";
  REQUIRE(verify_record(bad_config).status == VerifyStatus::mismatch);
}
