#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scd {

// Opaque sense key, e.g. "cell%1:06:04" (WordNet) or "bn:00015267n" (BabelNet).
struct SenseId {
  std::string value;

  SenseId() = default;
  explicit SenseId(std::string v) : value(std::move(v)) {}

  const std::string& str() const { return value; }
  bool empty() const { return value.empty(); }

  friend auto operator<=>(const SenseId&, const SenseId&) = default;
  friend bool operator==(const SenseId&, const SenseId&) = default;
};

struct SenseIdHash {
  std::size_t operator()(const SenseId& id) const noexcept {
    return std::hash<std::string>{}(id.value);
  }
};

// Pre-trained static sense vectors of a fixed dimensionality. Vectors are kept
// in one contiguous f32 buffer; rows are addressed through an id index.
class SenseEmbeddings {
 public:
  explicit SenseEmbeddings(std::size_t dim);

  // Throws ValidationError on an empty or duplicate id, a length other than
  // dim(), or a non-finite component.
  void add(SenseId id, std::span<const float> vector);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  bool contains(const SenseId& id) const { return index_.contains(id); }
  std::optional<std::span<const float>> find(const SenseId& id) const;

  // Ids in load order.
  const std::vector<SenseId>& ids() const { return ids_; }

  // Map equality: same dim and same id -> vector pairs, regardless of order.
  friend bool operator==(const SenseEmbeddings& a, const SenseEmbeddings& b);

 private:
  std::span<const float> row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

  std::size_t dim_;
  std::vector<float> data_;
  std::vector<SenseId> ids_;
  std::unordered_map<SenseId, std::size_t, SenseIdHash> index_;
};

enum class EmbeddingFormat { text, binary };

std::optional<EmbeddingFormat> parse_embedding_format(std::string_view name);

// Text:   "<count> <dim>" header, then "<sense_id> <v1> ... <v_dim>" per line.
// Binary: "SSEB", u32 version=1, u32 dim, u64 count, then per record
//         u16 id length, id bytes, dim x f32 (all little-endian).
SenseEmbeddings load_sense_embeddings(const std::filesystem::path& path,
                                      EmbeddingFormat format);
void write_sense_embeddings(const std::filesystem::path& path,
                            const SenseEmbeddings& embeddings,
                            EmbeddingFormat format);

// lemma -> ordered candidate senses (Z_w). Lemmas are kept sorted.
class SenseInventory {
 public:
  using Entries = std::map<std::string, std::vector<SenseId>, std::less<>>;

  // Throws ValidationError on an empty lemma, an empty or duplicated sense
  // list entry, or a lemma that is already present.
  void add(std::string lemma, std::vector<SenseId> senses);

  const std::vector<SenseId>* find(std::string_view lemma) const;
  bool contains(std::string_view lemma) const { return find(lemma) != nullptr; }
  std::size_t size() const { return entries_.size(); }
  const Entries& entries() const { return entries_; }

 private:
  Entries entries_;
};

// JSONL, one {"lemma": ..., "senses": [...]} object per line. Blank lines are
// ignored.
SenseInventory load_inventory(const std::filesystem::path& path);

struct LemmaCoverage {
  std::string lemma;
  std::vector<SenseId> missing;
  std::size_t resolvable = 0;
};

struct ValidationReport {
  // Lemmas with at least one sense lacking an embedding, in lemma order.
  std::vector<LemmaCoverage> incomplete;
  // Lemmas with no resolvable sense at all (subset of `incomplete`).
  std::vector<std::string> unusable;
  std::size_t lemmas_checked = 0;

  bool complete() const { return incomplete.empty(); }
  bool usable(std::string_view lemma) const;
};

ValidationReport validate_pair(const SenseInventory& inventory,
                               const SenseEmbeddings& embeddings);

struct OccurrenceEmbedding {
  std::string lemma;
  std::string corpus_id;
  std::uint64_t sentence_index = 0;
  std::vector<float> vector;
};

struct CorpusInfo {
  std::string corpus_id;
  std::uint64_t sentence_count = 0;
  std::map<std::string, std::uint64_t, std::less<>> occurrence_counts;

  std::uint64_t count(std::string_view lemma) const;
};

// Streaming reader for the SSCD occurrence format:
//   "SSCD", u32 version=1, u32 dim, u16 corpus-id length, corpus-id bytes,
//   u64 record count, records (u16 lemma length, lemma bytes,
//   u64 sentence_index, dim x f32), trailing u64 sentence_count.
class OccurrenceReader {
 public:
  explicit OccurrenceReader(const std::filesystem::path& path);

  std::uint32_t dim() const { return dim_; }
  const std::string& corpus_id() const { return info_.corpus_id; }
  std::uint64_t record_count() const { return record_count_; }

  // Reads the next record. Returns false once all records are consumed, at
  // which point the trailer has been read and info() is complete.
  bool next(OccurrenceEmbedding& out);

  const CorpusInfo& info() const { return info_; }

 private:
  void read_exact(void* dst, std::size_t n, const char* what);
  void finish();

  std::filesystem::path path_;
  std::ifstream in_;
  std::uint64_t offset_ = 0;
  std::uint32_t dim_ = 0;
  std::uint64_t record_count_ = 0;
  std::uint64_t records_read_ = 0;
  bool finished_ = false;
  CorpusInfo info_;
  std::vector<char> buffer_;
};

struct OccurrenceFile {
  std::uint32_t dim = 0;
  CorpusInfo info;
  std::vector<OccurrenceEmbedding> records;
};

OccurrenceFile read_occurrences(const std::filesystem::path& path);

// Writes records in the given order. Every record's vector must have length
// `dim` and finite components.
void write_occurrences(const std::filesystem::path& path,
                       std::string_view corpus_id, std::uint32_t dim,
                       std::span<const OccurrenceEmbedding> records,
                       std::uint64_t sentence_count);

}  // namespace scd
