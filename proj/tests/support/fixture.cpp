#include "fixture.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "scd/sense_model.hpp"

namespace scd::testing {

namespace {

std::vector<std::vector<double>> widen(const std::vector<std::vector<float>>& v) {
  std::vector<std::vector<double>> out;
  for (const auto& row : v) out.emplace_back(row.begin(), row.end());
  return out;
}

// Occurrence vectors drawn around one sense's embedding, rounded to 1/100.
std::vector<std::vector<float>> draw(std::mt19937& rng, const FixtureLemma& lemma,
                                     const std::vector<std::size_t>& sense_picks) {
  std::uniform_int_distribution<int> noise(-30, 30);
  std::vector<std::vector<float>> out;
  for (auto pick : sense_picks) {
    const auto& z = lemma.senses[pick].second;
    std::vector<float> f(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      f[i] = static_cast<float>(std::round(z[i] * 100.0 + noise(rng)) / 100.0);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

OracleSenses FixtureLemma::oracle_senses() const {
  OracleSenses out;
  for (const auto& [id, v] : senses) out.emplace_back(id, std::vector<double>(v.begin(), v.end()));
  return out;
}

std::vector<std::vector<double>> FixtureLemma::oracle_corpus1() const { return widen(corpus1); }
std::vector<std::vector<double>> FixtureLemma::oracle_corpus2() const { return widen(corpus2); }

Fixture synthetic_fixture() {
  Fixture fx;
  using S = std::vector<std::pair<std::string, std::vector<float>>>;
  struct Spec {
    std::string lemma;
    S senses;
    std::vector<std::size_t> picks1;
    std::vector<std::size_t> picks2;
  };
  // Embeddings are hand-built; some components are negative so that the
  // clamp path is exercised.
  std::vector<Spec> specs = {
      {"attack", S{{"attack%1:04:00", {1.0f, 0.2f, 0.0f, 0.1f}},
                   {"attack%1:04:01", {0.1f, 1.0f, 0.3f, 0.0f}},
                   {"attack%1:26:00", {0.0f, -0.2f, 1.0f, 0.4f}}},
       {0, 0, 0, 1, 2}, {1, 1, 2, 2, 0, 1}},
      {"bag", S{{"bag%1:06:00", {0.9f, 0.0f, 0.4f, 0.0f}},
                {"bag%1:23:00", {0.0f, 0.8f, 0.0f, 0.5f}}},
       {0, 0, 1}, {0, 1, 0, 0}},
      {"ball", S{{"ball%1:06:00", {1.0f, 0.0f, 0.0f, 0.0f}},
                 {"ball%1:14:00", {0.0f, 1.0f, 0.0f, 0.0f}},
                 {"ball%1:25:00", {0.0f, 0.0f, 1.0f, 0.0f}},
                 {"ball%1:04:00", {0.0f, 0.0f, 0.0f, 1.0f}}},
       {0, 1, 2, 3, 0, 1, 2, 3}, {0, 0, 0, 0, 1, 1}},
      {"bit", S{{"bit%1:23:00", {0.5f, 0.5f, 0.0f, 0.0f}},
                {"bit%1:06:00", {0.0f, 0.5f, 0.5f, 0.0f}},
                {"bit%1:10:00", {-0.3f, 0.0f, 0.5f, 0.6f}}},
       {0, 1, 2}, {2, 2, 2, 1}},
      {"chairman", S{{"chairman%1:18:00", {0.7f, 0.7f, 0.1f, 0.1f}},
                     {"chairman%1:18:01", {0.6f, 0.8f, 0.0f, 0.2f}}},
       {0, 0, 1, 1}, {0, 1, 1, 0, 1}},
      {"edge", S{{"edge%1:25:00", {1.0f, 0.0f, 0.5f, 0.0f}},
                 {"edge%1:07:00", {0.0f, 1.0f, 0.0f, 0.5f}},
                 {"edge%1:26:00", {0.5f, 0.0f, 1.0f, 0.0f}}},
       {0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 2, 2, 2, 2, 2}},
      {"graft", S{{"graft%1:04:00", {0.2f, 0.9f, 0.0f, 0.0f}},
                  {"graft%1:08:00", {0.9f, 0.1f, 0.3f, 0.0f}},
                  {"graft%1:06:00", {0.0f, 0.0f, 0.2f, 1.0f}}},
       {1, 1, 1, 2}, {0, 0, 0, 0, 2, 2}},
      {"lass", S{{"lass%1:18:00", {0.3f, 0.3f, 0.3f, 0.3f}},
                 {"lass%1:18:01", {0.4f, 0.2f, 0.4f, 0.2f}}},
       {0, 1, 0}, {1, 0, 1}},
      {"plane", S{{"plane%1:06:01", {1.0f, 0.1f, 0.0f, 0.0f}},
                  {"plane%1:25:00", {0.0f, 1.0f, 0.2f, 0.0f}},
                  {"plane%1:06:00", {0.0f, 0.0f, 1.0f, 0.1f}},
                  {"plane%1:06:02", {0.1f, 0.0f, 0.0f, 1.0f}}},
       {1, 1, 2, 2, 3}, {0, 0, 0, 0, 0, 3, 3}},
      {"stab", S{{"stab%1:04:00", {0.8f, -0.1f, 0.2f, 0.0f}},
                 {"stab%1:04:01", {0.1f, 0.7f, 0.0f, 0.3f}},
                 {"stab%1:07:00", {0.2f, 0.0f, 0.9f, -0.2f}}},
       {0, 1, 2, 0, 1, 2}, {0, 1, 2, 0, 1}},
  };
  std::mt19937 rng(20200901u);
  for (auto& spec : specs) {
    FixtureLemma lemma;
    lemma.lemma = spec.lemma;
    lemma.senses = spec.senses;
    lemma.corpus1 = draw(rng, lemma, spec.picks1);
    lemma.corpus2 = draw(rng, lemma, spec.picks2);
    fx.lemmas.push_back(std::move(lemma));
  }
  return fx;
}

Fixture synthetic_fixture_with_gaps() {
  auto fx = synthetic_fixture();
  FixtureLemma one_sided;
  one_sided.lemma = "ghost";
  one_sided.senses = {{"ghost%1:18:00", {1, 0, 0, 0}}, {"ghost%1:09:00", {0, 1, 0, 0}}};
  one_sided.corpus1 = {{0.8f, 0.2f, 0, 0}, {0.6f, 0.4f, 0, 0}};
  fx.lemmas.push_back(one_sided);

  FixtureLemma unresolvable;
  unresolvable.lemma = "orphan";
  unresolvable.unembedded = {"orphan%1:18:00", "orphan%1:18:01"};
  fx.lemmas.push_back(unresolvable);
  return fx;
}

Fixture planted_change_fixture() {
  Fixture fx;
  FixtureLemma shift;
  shift.lemma = "shift";
  shift.senses = {{"shift%1:01", {1, 0, 0, 0}}, {"shift%1:02", {0, 1, 0, 0}},
                  {"shift%1:03", {0, 0, 1, 0}}};
  // p = (0.9, 0.1, 0) in corpus 1 and (0.1, 0.9, 0) in corpus 2
  shift.corpus1 = {{0.9f, 0.1f, 0, 0}, {1.8f, 0.2f, 0, 0}, {0.45f, 0.05f, 0, 0}};
  shift.corpus2 = {{0.1f, 0.9f, 0, 0}, {0.2f, 1.8f, 0, 0}, {0.05f, 0.45f, 0, 0},
                   {0.1f, 0.9f, 0, 0}};
  fx.lemmas.push_back(shift);

  FixtureLemma steady;
  steady.lemma = "steady";
  steady.senses = {{"steady%1:01", {1, 0, 0, 0}}, {"steady%1:02", {0, 1, 0, 0}}};
  // p = (0.7, 0.3) in corpus 1 and (0.65, 0.35) in corpus 2
  steady.corpus1 = {{0.7f, 0.3f, 0, 0}, {1.4f, 0.6f, 0, 0}};
  steady.corpus2 = {{0.65f, 0.35f, 0, 0}, {1.3f, 0.7f, 0, 0}, {0.65f, 0.35f, 0, 0}};
  fx.lemmas.push_back(steady);
  return fx;
}

FixtureFiles write_fixture(const Fixture& fixture, const std::filesystem::path& dir,
                           bool binary_embeddings) {
  FixtureFiles files{dir / "c1.sscd", dir / "c2.sscd",
                     dir / (binary_embeddings ? "senses.sseb" : "senses.txt"),
                     dir / "inventory.jsonl", dir / "targets.txt"};
  std::filesystem::create_directories(dir);

  SenseEmbeddings embeddings(fixture.dim);
  std::ofstream inventory(files.inventory);
  std::ofstream targets(files.targets);
  std::vector<OccurrenceEmbedding> occ1;
  std::vector<OccurrenceEmbedding> occ2;
  for (const auto& lemma : fixture.lemmas) {
    nlohmann::json senses = nlohmann::json::array();
    for (const auto& [id, v] : lemma.senses) {
      embeddings.add(SenseId(id), v);
      senses.push_back(id);
    }
    for (const auto& id : lemma.unembedded) senses.push_back(id);
    inventory << nlohmann::json{{"lemma", lemma.lemma}, {"senses", senses}}.dump() << '\n';
    targets << lemma.lemma << '\n';
    std::uint64_t sentence = 0;
    for (const auto& f : lemma.corpus1) occ1.push_back({lemma.lemma, "C1", sentence++, f});
    sentence = 0;
    for (const auto& f : lemma.corpus2) occ2.push_back({lemma.lemma, "C2", sentence++, f});
  }
  write_occurrences(files.occurrences1, "C1", fixture.dim, occ1, 1000);
  write_occurrences(files.occurrences2, "C2", fixture.dim, occ2, 1200);
  write_sense_embeddings(files.embeddings, embeddings,
                         binary_embeddings ? EmbeddingFormat::binary : EmbeddingFormat::text);
  return files;
}

TempDir::TempDir(const std::string& prefix) {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          (prefix + "_" + std::to_string(rd()) + "_" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace scd::testing
