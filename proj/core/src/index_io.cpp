#include "wkr/index_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numeric>

namespace wkr {

namespace {

constexpr char kMagic[4] = {'W', 'K', 'R', 'I'};
constexpr std::uint32_t kEmptyLo = 0xFFFFFFFFu;

class Writer {
 public:
  void raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::byte*>(p);
    out_.insert(out_.end(), b, b + n);
  }
  template <typename T>
  void le(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
      out_.push_back(static_cast<std::byte>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF));
  }
  std::vector<std::byte>& bytes() { return out_; }

 private:
  std::vector<std::byte> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::byte> in) : in_(in) {}

  void raw(void* p, std::size_t n) {
    need(n);
    std::memcpy(p, in_.data() + pos_, n);
    pos_ += n;
  }
  template <typename T>
  T le() {
    need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
      v |= static_cast<std::uint64_t>(std::to_integer<std::uint8_t>(in_[pos_ + i])) << (8 * i);
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw FormatError("index data truncated");
  }
  std::span<const std::byte> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint32_t crc32_of(std::span<const std::byte> bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  const auto* p = reinterpret_cast<const Bytef*>(bytes.data());
  std::size_t left = bytes.size();
  while (left > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(left, 1u << 30));
    crc = ::crc32(crc, p, chunk);
    p += chunk;
    left -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

std::vector<std::byte> serialize(const LabelIndex& index) {
  Writer w;
  const std::size_t n = index.vertex_count();
  w.raw(kMagic, sizeof kMagic);
  w.le<std::uint16_t>(kIndexFormatVersion);
  w.le<std::uint8_t>(static_cast<std::uint8_t>(index.variant()));
  w.le<std::uint64_t>(n);
  for (VertexId v : index.order().sequence()) w.le<std::uint32_t>(v);
  if (index.variant() != Variant::Wkri) {
    std::vector<std::uint8_t> bitmap((n + 7) / 8, 0);
    for (VertexId v = 0; v < n; ++v)
      if (index.is_hop(v)) bitmap[v / 8] |= static_cast<std::uint8_t>(1u << (v % 8));
    w.raw(bitmap.data(), bitmap.size());
  }
  for (VertexId v = 0; v < n; ++v) {
    auto label = index.label(v);
    w.le<std::uint32_t>(static_cast<std::uint32_t>(label.size()));
    for (const LabelEntry& e : label) {
      w.le<std::uint32_t>(e.hop_rank);
      w.le<std::uint32_t>(e.interval.is_empty() ? kEmptyLo : e.interval.lo());
      w.le<std::uint32_t>(e.interval.is_empty() ? 0 : e.interval.hi());
      w.le<std::uint32_t>(e.dist);
    }
  }
  if (const Adjacency* adj = index.embedded_adjacency(); adj && index.variant() == Variant::Lwkri) {
    for (std::uint64_t off : adj->offsets()) w.le<std::uint64_t>(off);
    for (const Arc& a : adj->all_arcs()) {
      w.le<std::uint32_t>(a.target);
      w.le<std::uint32_t>(a.weight);
    }
  }
  const std::uint32_t crc = crc32_of(w.bytes());
  w.le<std::uint32_t>(crc);
  return std::move(w.bytes());
}

LabelIndex deserialize(std::span<const std::byte> bytes) {
  if (bytes.size() < sizeof kMagic + 4) throw FormatError("index data truncated");
  char magic[4];
  std::memcpy(magic, bytes.data(), 4);
  if (std::memcmp(magic, kMagic, 4) != 0) throw FormatError("bad magic: not a WKRI index file");

  const auto body = bytes.first(bytes.size() - 4);
  Reader trailer(bytes.subspan(bytes.size() - 4));
  if (trailer.le<std::uint32_t>() != crc32_of(body)) throw FormatError("checksum mismatch");

  Reader r(body);
  r.raw(magic, 4);
  const auto version = r.le<std::uint16_t>();
  if (version != kIndexFormatVersion)
    throw FormatError("unsupported index format version " + std::to_string(version));
  const auto raw_variant = r.le<std::uint8_t>();
  if (raw_variant > static_cast<std::uint8_t>(Variant::Lwkri)) throw FormatError("unknown index variant");
  const auto variant = static_cast<Variant>(raw_variant);
  const auto n64 = r.le<std::uint64_t>();
  if (n64 >= kNoVertex || n64 * 4 > r.remaining()) throw FormatError("vertex count out of range");
  const auto n = static_cast<std::size_t>(n64);

  std::vector<VertexId> seq(n);
  for (auto& v : seq) v = r.le<std::uint32_t>();
  VertexOrder order;
  try {
    order = VertexOrder::from_sequence(std::move(seq));
  } catch (const std::invalid_argument&) {
    throw FormatError("stored vertex order is not a permutation");
  }

  std::size_t hops = n;
  if (variant != Variant::Wkri) {
    std::vector<std::uint8_t> bitmap((n + 7) / 8);
    r.raw(bitmap.data(), bitmap.size());
    hops = 0;
    for (VertexId v = 0; v < n; ++v) hops += (bitmap[v / 8] >> (v % 8)) & 1u;
    for (VertexId v = 0; v < n; ++v) {
      const bool member = (bitmap[v / 8] >> (v % 8)) & 1u;
      if (member != (order.rank(v) < hops)) throw FormatError("cover bitmap disagrees with vertex order");
    }
  }

  std::vector<VertexLabel> labels(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto count = r.le<std::uint32_t>();
    if (static_cast<std::uint64_t>(count) * 16 > r.remaining()) throw FormatError("index data truncated");
    auto& label = labels[v];
    label.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
      LabelEntry e;
      e.hop_rank = r.le<std::uint32_t>();
      const auto lo = r.le<std::uint32_t>();
      const auto hi = r.le<std::uint32_t>();
      e.dist = r.le<std::uint32_t>();
      if (e.hop_rank >= hops) throw FormatError("label references a non-hop vertex");
      if (lo == kEmptyLo) {
        e.interval = WeightInterval::empty();
      } else {
        if (lo > hi || hi > kMaxWeight) throw FormatError("malformed label interval");
        e.interval = WeightInterval::closed(lo, hi);
      }
      if ((e.dist == 0) != e.interval.is_empty()) throw FormatError("malformed self-entry");
      if (!label.empty() && label.back().hop_rank > e.hop_rank) throw FormatError("label not sorted by hop");
      label.push_back(e);
    }
  }

  std::optional<Adjacency> embedded;
  if (variant == Variant::Lwkri) {
    std::vector<std::uint64_t> offsets(n + 1);
    for (auto& o : offsets) o = r.le<std::uint64_t>();
    if (offsets.back() > r.remaining() / 8) throw FormatError("index data truncated");
    std::vector<Arc> arcs(static_cast<std::size_t>(offsets.back()));
    for (auto& a : arcs) {
      a.target = r.le<std::uint32_t>();
      a.weight = r.le<std::uint32_t>();
    }
    try {
      embedded = Adjacency(std::move(offsets), std::move(arcs));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  if (r.remaining() != 0) throw FormatError("trailing bytes after index data");

  LabelIndex index(variant, std::move(order), hops, std::move(embedded));
  for (VertexId v = 0; v < n; ++v) {
    if (!labels[v].empty() && !index.is_labeled(v)) throw FormatError("label stored for unlabeled vertex");
    index.mutable_label(v) = std::move(labels[v]);
  }
  return index;
}

void save_index(const LabelIndex& index, const std::string& path) {
  const auto bytes = serialize(index);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

LabelIndex load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(std::as_bytes(std::span<const char>(raw)));
}

std::string id_map_path(const std::string& index_path) { return index_path + ".ids"; }

void save_id_map(const std::vector<std::int64_t>& ids, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  for (std::int64_t id : ids) out << id << '\n';
}

std::vector<std::int64_t> load_id_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::int64_t> ids;
  std::int64_t id = 0;
  while (in >> id) ids.push_back(id);
  if (!in.eof()) throw std::runtime_error("malformed id map '" + path + "'");
  return ids;
}

void dump_text(const LabelIndex& index, const std::vector<std::int64_t>& external_ids, std::ostream& out,
               const std::string& vertex_prefix) {
  auto ext = [&](VertexId v) {
    return external_ids.empty() ? static_cast<std::int64_t>(v) : external_ids[v];
  };
  std::vector<VertexId> rows(index.vertex_count());
  std::iota(rows.begin(), rows.end(), VertexId{0});
  std::sort(rows.begin(), rows.end(), [&](VertexId a, VertexId b) { return ext(a) < ext(b); });
  for (VertexId u : rows) {
    if (!index.is_labeled(u)) continue;
    std::vector<LabelEntry> entries(index.label(u).begin(), index.label(u).end());
    std::sort(entries.begin(), entries.end(), [](const LabelEntry& a, const LabelEntry& b) {
      if (a.hop_rank != b.hop_rank) return a.hop_rank < b.hop_rank;
      if (a.dist != b.dist) return a.dist < b.dist;
      if (a.interval.is_empty() || b.interval.is_empty()) return a.interval.is_empty() && !b.interval.is_empty();
      return a.interval.lo() != b.interval.lo() ? a.interval.lo() < b.interval.lo()
                                                : a.interval.hi() < b.interval.hi();
    });
    out << "L(" << vertex_prefix << ext(u) << "):";
    for (const LabelEntry& e : entries) {
      out << " (" << vertex_prefix << ext(index.order().vertex(e.hop_rank)) << ',';
      if (e.interval.is_empty())
        out << "0,0";
      else
        out << e.interval.lo() << ',' << e.interval.hi();
      out << ',' << e.dist << ')';
    }
    out << '\n';
  }
}

}  // namespace wkr
