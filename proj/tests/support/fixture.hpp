#pragma once

// Synthetic corpora with hand-built 4-d sense embeddings, written to disk in
// the library's input formats.

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"

namespace scd::testing {

struct FixtureLemma {
  std::string lemma;
  std::vector<std::pair<std::string, std::vector<float>>> senses;  // with embeddings
  std::vector<std::string> unembedded;  // listed in the inventory only
  std::vector<std::vector<float>> corpus1;
  std::vector<std::vector<float>> corpus2;

  OracleSenses oracle_senses() const;
  std::vector<std::vector<double>> oracle_corpus1() const;
  std::vector<std::vector<double>> oracle_corpus2() const;
};

struct Fixture {
  std::uint32_t dim = 4;
  std::vector<FixtureLemma> lemmas;
};

// Ten lemmas with 2-4 senses each and 3-8 occurrences per corpus.
Fixture synthetic_fixture();

// synthetic_fixture() plus a lemma seen only in corpus 1 and a lemma whose
// senses have no embeddings.
Fixture synthetic_fixture_with_gaps();

// "shift" flips its dominant sense between corpora, "steady" does not.
Fixture planted_change_fixture();

struct FixtureFiles {
  std::filesystem::path occurrences1;
  std::filesystem::path occurrences2;
  std::filesystem::path embeddings;
  std::filesystem::path inventory;
  std::filesystem::path targets;
};

FixtureFiles write_fixture(const Fixture& fixture, const std::filesystem::path& dir,
                           bool binary_embeddings = false);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "scd_test");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace scd::testing
