#include "udgroute/bits.hpp"

#include "udgroute/errors.hpp"

namespace udgroute {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::kEpsilonTooSmall: return "EpsilonTooSmall";
    case ErrorKind::kIncompatibleLabels: return "IncompatibleLabels";
    case ErrorKind::kNotANeighbor: return "NotANeighbor";
    case ErrorKind::kNoCommonPortal: return "NoCommonPortal";
    case ErrorKind::kNoCommonLevel: return "NoCommonLevel";
    case ErrorKind::kSpannerPropertyViolated: return "SpannerPropertyViolated";
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
    case ErrorKind::kDepthLimitExceeded: return "DepthLimitExceeded";
    case ErrorKind::kCalibrationFailed: return "CalibrationFailed";
    case ErrorKind::kGenerationFailed: return "GenerationFailed";
    case ErrorKind::kNonTermination: return "NonTermination";
    case ErrorKind::kAssertionViolation: return "AssertionViolation";
    case ErrorKind::kMalformedData: return "MalformedData";
  }
  return "Unknown";
}

void BitWriter::write(std::uint64_t value, unsigned width) {
  // MSB first, so encodings read naturally in hex dumps.
  for (unsigned i = width; i-- > 0;) {
    if (bits_ % 8 == 0) bytes_.push_back(0);
    if ((value >> i) & 1U) bytes_.back() |= static_cast<std::uint8_t>(0x80U >> (bits_ % 8));
    ++bits_;
  }
}

std::uint64_t BitReader::read(unsigned width) {
  if (pos_ + width > bytes_.size() * 8) {
    throw Error(ErrorKind::kMalformedData, "bit stream truncated");
  }
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i, ++pos_) {
    const bool bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1U;
    value = (value << 1) | (bit ? 1U : 0U);
  }
  return value;
}

}  // namespace udgroute
