#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monomatch {

// Immutable byte string with O(1) length and O(1) slicing.
//
// A ByteText is a window (offset, length) onto a shared, never-mutated
// buffer. Slices share the buffer; appending two slices that are adjacent in
// the same buffer produces a wider slice without copying. All other appends
// copy into a fresh buffer. Observable behaviour is plain value semantics.
class ByteText {
 public:
  ByteText() = default;
  explicit ByteText(std::string_view text);
  explicit ByteText(std::span<const std::uint8_t> bytes);
  explicit ByteText(std::vector<std::uint8_t>&& bytes);

  static ByteText from_file(const std::filesystem::path& path);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  const std::uint8_t* data() const noexcept;
  std::span<const std::uint8_t> bytes() const noexcept { return {data(), size_}; }
  std::string_view view() const noexcept;
  std::string str() const { return std::string(view()); }

  std::uint8_t operator[](std::size_t i) const noexcept { return data()[i]; }

  // First i bytes. Throws PreconditionViolation if i > size().
  ByteText take(std::size_t i) const;
  // Bytes from position i onward. Throws PreconditionViolation if i > size().
  ByteText drop(std::size_t i) const;
  // len bytes starting at offset; equivalent to drop(offset).take(len).
  ByteText substring(std::size_t offset, std::size_t len) const;

  // True when both values are windows onto the same buffer and this one ends
  // exactly where `next` begins.
  bool adjacent_to(const ByteText& next) const noexcept;

  friend bool operator==(const ByteText& a, const ByteText& b) noexcept;
  friend std::strong_ordering operator<=>(const ByteText& a, const ByteText& b) noexcept;

 private:
  ByteText(std::shared_ptr<const std::vector<std::uint8_t>> buffer, std::size_t offset,
           std::size_t size) noexcept
      : buffer_(std::move(buffer)), offset_(offset), size_(size) {}

  friend ByteText append(const ByteText& x, const ByteText& y);

  std::shared_ptr<const std::vector<std::uint8_t>> buffer_;
  std::size_t offset_ = 0;
  std::size_t size_ = 0;
};

std::size_t length(const ByteText& x) noexcept;
ByteText append(const ByteText& x, const ByteText& y);
ByteText take(std::size_t i, const ByteText& x);
ByteText drop(std::size_t i, const ByteText& x);
ByteText substring(const ByteText& x, std::size_t offset, std::size_t len);

// Splits x into pieces of j bytes; the last piece may be shorter. A text of at
// most j bytes (including the empty text) yields the single piece [x].
// Throws InvalidArgument if j == 0.
std::vector<ByteText> chunk(std::size_t j, const ByteText& x);

// Parses a hex string ("616263", case-insensitive) into bytes.
// Throws InvalidArgument on odd length or a non-hex digit.
ByteText from_hex(std::string_view hex);

// Printable rendering for diagnostics: printable ASCII verbatim, everything
// else as \xNN.
std::string escape(const ByteText& x);

}  // namespace monomatch
