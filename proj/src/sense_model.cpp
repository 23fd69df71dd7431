#include "scd/sense_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>

#include <json.hpp>

#include "binary_io.hpp"
#include "scd/error.hpp"

namespace scd {

namespace {

constexpr std::string_view kEmbeddingMagic = "SSEB";
constexpr std::string_view kOccurrenceMagic = "SSCD";
constexpr std::uint32_t kFormatVersion = 1;

std::string where(const std::filesystem::path& path) { return path.string() + ": "; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool all_finite(std::span<const float> v) {
  return std::all_of(v.begin(), v.end(), [](float x) { return std::isfinite(x); });
}

std::ifstream open_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(where(path) + "cannot open file");
  return in;
}

SenseEmbeddings load_text_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(where(path) + "cannot open file");

  std::string line;
  if (!std::getline(in, line)) throw FormatError(where(path) + "missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split_fields(line);
  std::uint64_t count = 0;
  std::size_t dim = 0;
  if (header.size() != 2 || !parse_number(header[0], count) ||
      !parse_number(header[1], dim) || dim == 0) {
    throw FormatError(where(path) + "malformed header, expected \"<count> <dim>\"");
  }

  SenseEmbeddings embeddings(dim);
  std::vector<float> values(dim);
  std::uint64_t record = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    ++record;
    if (fields.size() - 1 != dim) {
      throw FormatError(where(path) + "inconsistent dimension at record " +
                        std::to_string(record) + " (expected " + std::to_string(dim) +
                        " values, found " + std::to_string(fields.size() - 1) + ")");
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (!parse_number(fields[i + 1], values[i])) {
        throw FormatError(where(path) + "unparsable value \"" + std::string(fields[i + 1]) +
                          "\" at record " + std::to_string(record));
      }
    }
    try {
      embeddings.add(SenseId(std::string(fields[0])), values);
    } catch (const ValidationError& e) {
      throw FormatError(where(path) + e.what() + " at record " + std::to_string(record));
    }
  }
  if (record != count) {
    throw FormatError(where(path) + "header declares " + std::to_string(count) +
                      " records, found " + std::to_string(record));
  }
  return embeddings;
}

// Reads from a binary stream while tracking the byte offset for messages.
class ByteSource {
 public:
  ByteSource(std::istream& in, const std::filesystem::path& path) : in_(in), path_(path) {}

  void read(void* dst, std::size_t n, const char* what) {
    in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw FormatError(where(path_) + "truncated " + what + " at byte offset " +
                        std::to_string(offset_));
    }
    offset_ += n;
  }

  template <typename T>
  T read_le(const char* what) {
    unsigned char buf[sizeof(T)];
    read(buf, sizeof(T), what);
    return detail::decode_le<T>(buf);
  }

  std::string read_short_string(const char* what) {
    auto len = read_le<std::uint16_t>(what);
    std::string s(len, '\0');
    read(s.data(), len, what);
    return s;
  }

  bool at_eof() { return in_.peek() == std::char_traits<char>::eof(); }
  std::uint64_t offset() const { return offset_; }

 private:
  std::istream& in_;
  const std::filesystem::path& path_;
  std::uint64_t offset_ = 0;
};

SenseEmbeddings load_binary_embeddings(const std::filesystem::path& path) {
  auto in = open_binary(path);
  ByteSource src(in, path);
  char magic[4];
  src.read(magic, 4, "header");
  if (std::string_view(magic, 4) != kEmbeddingMagic) {
    throw FormatError(where(path) + "bad magic, expected SSEB");
  }
  auto version = src.read_le<std::uint32_t>("header");
  if (version != kFormatVersion) {
    throw FormatError(where(path) + "unsupported version " + std::to_string(version));
  }
  auto dim = src.read_le<std::uint32_t>("header");
  auto count = src.read_le<std::uint64_t>("header");
  if (dim == 0) throw FormatError(where(path) + "malformed header, dim is 0");

  SenseEmbeddings embeddings(dim);
  std::vector<unsigned char> raw(std::size_t{dim} * 4);
  std::vector<float> values(dim);
  for (std::uint64_t r = 0; r < count; ++r) {
    auto record_offset = src.offset();
    auto id = src.read_short_string("record");
    src.read(raw.data(), raw.size(), "record");
    detail::decode_f32_array(raw, values);
    try {
      embeddings.add(SenseId(std::move(id)), values);
    } catch (const ValidationError& e) {
      throw FormatError(where(path) + e.what() + " at record " + std::to_string(r + 1) +
                        " (byte offset " + std::to_string(record_offset) + ")");
    }
  }
  if (!src.at_eof()) {
    throw FormatError(where(path) + "trailing bytes after " + std::to_string(count) +
                      " records at byte offset " + std::to_string(src.offset()));
  }
  return embeddings;
}

}  // namespace

SenseEmbeddings::SenseEmbeddings(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw ValidationError("sense embedding dim must be positive");
}

void SenseEmbeddings::add(SenseId id, std::span<const float> vector) {
  if (id.empty()) throw ValidationError("empty sense id");
  if (vector.size() != dim_) {
    throw ValidationError("inconsistent dimension for sense \"" + id.str() + "\" (expected " +
                          std::to_string(dim_) + ", found " + std::to_string(vector.size()) +
                          ")");
  }
  if (!all_finite(vector)) {
    throw ValidationError("non-finite component in sense \"" + id.str() + "\"");
  }
  if (index_.contains(id)) throw ValidationError("duplicate sense id \"" + id.str() + "\"");
  index_.emplace(id, ids_.size());
  ids_.push_back(std::move(id));
  data_.insert(data_.end(), vector.begin(), vector.end());
}

std::optional<std::span<const float>> SenseEmbeddings::find(const SenseId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return row(it->second);
}

bool operator==(const SenseEmbeddings& a, const SenseEmbeddings& b) {
  if (a.dim_ != b.dim_ || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.ids_.size(); ++i) {
    auto other = b.find(a.ids_[i]);
    if (!other) return false;
    auto mine = a.row(i);
    if (!std::equal(mine.begin(), mine.end(), other->begin())) return false;
  }
  return true;
}

std::optional<EmbeddingFormat> parse_embedding_format(std::string_view name) {
  if (name == "text" || name == "txt") return EmbeddingFormat::text;
  if (name == "binary" || name == "bin" || name == "sseb") return EmbeddingFormat::binary;
  return std::nullopt;
}

SenseEmbeddings load_sense_embeddings(const std::filesystem::path& path,
                                      EmbeddingFormat format) {
  return format == EmbeddingFormat::text ? load_text_embeddings(path)
                                         : load_binary_embeddings(path);
}

void write_sense_embeddings(const std::filesystem::path& path,
                            const SenseEmbeddings& embeddings, EmbeddingFormat format) {
  if (format == EmbeddingFormat::text) {
    std::ofstream out(path);
    if (!out) throw FormatError(where(path) + "cannot open file for writing");
    out << embeddings.size() << ' ' << embeddings.dim() << '\n';
    out.precision(std::numeric_limits<float>::max_digits10);
    for (const auto& id : embeddings.ids()) {
      out << id.str();
      const auto row = *embeddings.find(id);
      for (float v : row) out << ' ' << v;
      out << '\n';
    }
    if (!out) throw FormatError(where(path) + "write failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(where(path) + "cannot open file for writing");
  out.write(kEmbeddingMagic.data(), 4);
  detail::write_le(out, kFormatVersion);
  detail::write_le(out, static_cast<std::uint32_t>(embeddings.dim()));
  detail::write_le(out, static_cast<std::uint64_t>(embeddings.size()));
  for (const auto& id : embeddings.ids()) {
    detail::write_short_string(out, id.str(), "sense id");
    detail::write_f32_array(out, *embeddings.find(id));
  }
  if (!out) throw FormatError(where(path) + "write failed");
}

void SenseInventory::add(std::string lemma, std::vector<SenseId> senses) {
  if (lemma.empty()) throw ValidationError("empty lemma");
  if (senses.empty()) throw ValidationError("empty sense list for lemma \"" + lemma + "\"");
  std::set<SenseId> seen;
  for (const auto& s : senses) {
    if (s.empty()) throw ValidationError("empty sense id for lemma \"" + lemma + "\"");
    if (!seen.insert(s).second) {
      throw ValidationError("duplicate sense id \"" + s.str() + "\" for lemma \"" + lemma + "\"");
    }
  }
  if (entries_.contains(lemma)) throw ValidationError("duplicate lemma \"" + lemma + "\"");
  entries_.emplace(std::move(lemma), std::move(senses));
}

const std::vector<SenseId>* SenseInventory::find(std::string_view lemma) const {
  auto it = entries_.find(lemma);
  return it == entries_.end() ? nullptr : &it->second;
}

SenseInventory load_inventory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(where(path) + "cannot open file");
  SenseInventory inventory;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto at = [&] { return where(path) + "line " + std::to_string(line_no) + ": "; };
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(at() + "invalid JSON (" + e.what() + ")");
    }
    if (!record.is_object() || !record.contains("lemma") || !record["lemma"].is_string() ||
        !record.contains("senses") || !record["senses"].is_array()) {
      throw FormatError(at() + "expected {\"lemma\": string, \"senses\": [string, ...]}");
    }
    std::vector<SenseId> senses;
    for (const auto& s : record["senses"]) {
      if (!s.is_string()) throw FormatError(at() + "sense ids must be strings");
      senses.emplace_back(s.get<std::string>());
    }
    try {
      inventory.add(record["lemma"].get<std::string>(), std::move(senses));
    } catch (const ValidationError& e) {
      throw FormatError(at() + e.what());
    }
  }
  return inventory;
}

bool ValidationReport::usable(std::string_view lemma) const {
  return std::find(unusable.begin(), unusable.end(), lemma) == unusable.end();
}

ValidationReport validate_pair(const SenseInventory& inventory,
                               const SenseEmbeddings& embeddings) {
  ValidationReport report;
  for (const auto& [lemma, senses] : inventory.entries()) {
    ++report.lemmas_checked;
    LemmaCoverage coverage{lemma, {}, 0};
    for (const auto& s : senses) {
      if (embeddings.contains(s)) {
        ++coverage.resolvable;
      } else {
        coverage.missing.push_back(s);
      }
    }
    if (coverage.missing.empty()) continue;
    if (coverage.resolvable == 0) report.unusable.push_back(lemma);
    report.incomplete.push_back(std::move(coverage));
  }
  return report;
}

std::uint64_t CorpusInfo::count(std::string_view lemma) const {
  auto it = occurrence_counts.find(lemma);
  return it == occurrence_counts.end() ? 0 : it->second;
}

OccurrenceReader::OccurrenceReader(const std::filesystem::path& path)
    : path_(path), in_(open_binary(path)) {
  char magic[4];
  read_exact(magic, 4, "header");
  if (std::string_view(magic, 4) != kOccurrenceMagic) {
    throw FormatError(where(path_) + "bad magic, expected SSCD");
  }
  unsigned char buf[8];
  read_exact(buf, 4, "header");
  auto version = detail::decode_le<std::uint32_t>(buf);
  if (version != kFormatVersion) {
    throw FormatError(where(path_) + "unsupported version " + std::to_string(version));
  }
  read_exact(buf, 4, "header");
  dim_ = detail::decode_le<std::uint32_t>(buf);
  if (dim_ == 0) throw FormatError(where(path_) + "malformed header, dim is 0");
  read_exact(buf, 2, "header");
  info_.corpus_id.resize(detail::decode_le<std::uint16_t>(buf));
  read_exact(info_.corpus_id.data(), info_.corpus_id.size(), "header");
  read_exact(buf, 8, "header");
  record_count_ = detail::decode_le<std::uint64_t>(buf);
  buffer_.resize(std::size_t{dim_} * 4);
  if (record_count_ == 0) finish();
}

void OccurrenceReader::read_exact(void* dst, std::size_t n, const char* what) {
  in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in_.gcount()) != n) {
    throw FormatError(where(path_) + "truncated " + what + " at byte offset " +
                      std::to_string(offset_ + static_cast<std::uint64_t>(in_.gcount())));
  }
  offset_ += n;
}

bool OccurrenceReader::next(OccurrenceEmbedding& out) {
  if (finished_) return false;
  auto record_offset = offset_;
  std::string record_label = "record " + std::to_string(records_read_ + 1);
  unsigned char buf[8];
  read_exact(buf, 2, record_label.c_str());
  out.lemma.resize(detail::decode_le<std::uint16_t>(buf));
  read_exact(out.lemma.data(), out.lemma.size(), record_label.c_str());
  read_exact(buf, 8, record_label.c_str());
  out.sentence_index = detail::decode_le<std::uint64_t>(buf);
  read_exact(buffer_.data(), buffer_.size(), record_label.c_str());
  out.vector.resize(dim_);
  detail::decode_f32_array(std::span<const unsigned char>(
                               reinterpret_cast<const unsigned char*>(buffer_.data()),
                               buffer_.size()),
                           out.vector);
  if (!all_finite(out.vector)) {
    throw FormatError(where(path_) + "non-finite component in " + record_label +
                      " at byte offset " + std::to_string(record_offset));
  }
  if (out.lemma.empty()) {
    throw FormatError(where(path_) + "empty lemma in " + record_label + " at byte offset " +
                      std::to_string(record_offset));
  }
  out.corpus_id = info_.corpus_id;
  ++info_.occurrence_counts[out.lemma];
  if (++records_read_ == record_count_) finish();
  return true;
}

void OccurrenceReader::finish() {
  unsigned char buf[8];
  read_exact(buf, 8, "trailer (sentence count)");
  info_.sentence_count = detail::decode_le<std::uint64_t>(buf);
  if (info_.sentence_count == 0) {
    throw FormatError(where(path_) + "sentence count in trailer must be positive");
  }
  if (in_.peek() != std::char_traits<char>::eof()) {
    throw FormatError(where(path_) + "trailing bytes at byte offset " + std::to_string(offset_));
  }
  finished_ = true;
}

OccurrenceFile read_occurrences(const std::filesystem::path& path) {
  OccurrenceReader reader(path);
  OccurrenceFile file;
  file.dim = reader.dim();
  file.records.reserve(reader.record_count());
  OccurrenceEmbedding occ;
  while (reader.next(occ)) file.records.push_back(occ);
  file.info = reader.info();
  return file;
}

void write_occurrences(const std::filesystem::path& path, std::string_view corpus_id,
                       std::uint32_t dim, std::span<const OccurrenceEmbedding> records,
                       std::uint64_t sentence_count) {
  if (dim == 0) throw ValidationError("occurrence dim must be positive");
  if (sentence_count == 0) throw ValidationError("sentence count must be positive");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(where(path) + "cannot open file for writing");
  out.write(kOccurrenceMagic.data(), 4);
  detail::write_le(out, kFormatVersion);
  detail::write_le(out, dim);
  detail::write_short_string(out, corpus_id, "corpus id");
  detail::write_le(out, static_cast<std::uint64_t>(records.size()));
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.vector.size() != dim) {
      throw ValidationError("record " + std::to_string(i + 1) + " has dimension " +
                            std::to_string(r.vector.size()) + ", expected " +
                            std::to_string(dim));
    }
    if (r.lemma.empty()) throw ValidationError("record " + std::to_string(i + 1) + " has an empty lemma");
    if (!all_finite(r.vector)) {
      throw ValidationError("record " + std::to_string(i + 1) + " has a non-finite component");
    }
    detail::write_short_string(out, r.lemma, "lemma");
    detail::write_le(out, r.sentence_index);
    detail::write_f32_array(out, r.vector);
  }
  detail::write_le(out, sentence_count);
  if (!out) throw FormatError(where(path) + "write failed");
}

}  // namespace scd
