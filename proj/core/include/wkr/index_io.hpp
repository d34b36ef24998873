#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wkr/graph.hpp"
#include "wkr/label_index.hpp"

namespace wkr {

// Binary layout, all integers little-endian:
//   "WKRI"  magic
//   u16     format version
//   u8      variant
//   u64     vertex count n
//   u32 x n vertex order (hops first)
//   bytes   cover bitmap, ceil(n/8), bit v%8 of byte v/8  (GWKRI / LWKRI only)
//   per vertex: u32 entry count, then entries as u32 (hop_rank, lo, hi, dist);
//               the empty interval is lo = 0xFFFFFFFF, hi = 0
//   LWKRI only: u64 x (n+1) adjacency offsets, then u32 (neighbor, weight) pairs
//   u32     CRC-32 of every preceding byte
inline constexpr std::uint16_t kIndexFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::byte> serialize(const LabelIndex& index);
/// Throws FormatError on bad magic/version, truncation, or checksum mismatch.
LabelIndex deserialize(std::span<const std::byte> bytes);

void save_index(const LabelIndex& index, const std::string& path);
LabelIndex load_index(const std::string& path);

/// CRC-32 (IEEE) as stored in the trailer.
std::uint32_t crc32_of(std::span<const std::byte> bytes);

/// External-id table stored beside an index file: one id per line in dense order.
void save_id_map(const std::vector<std::int64_t>& ids, const std::string& path);
std::vector<std::int64_t> load_id_map(const std::string& path);
std::string id_map_path(const std::string& index_path);

/// Text dump, one line per labeled vertex:
///   L(v1): (v3,3,3,1) (v3,4,5,2) ... (v1,0,0,0)
/// Vertices and hops are printed through `external_ids` (dense ids when empty).
/// Self-entries print as (v,0,0,0). Entries are ordered by hop rank, then
/// distance, then interval.
void dump_text(const LabelIndex& index, const std::vector<std::int64_t>& external_ids, std::ostream& out,
               const std::string& vertex_prefix = "v");

}  // namespace wkr
