#include "monomatch/byte_text.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>

#include "monomatch/error.hpp"

namespace monomatch {

namespace {

constexpr std::uint8_t kEmpty[1] = {0};

using Buffer = std::vector<std::uint8_t>;

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

ByteText::ByteText(std::string_view text)
    : ByteText(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()),
                                             text.size())) {}

ByteText::ByteText(std::span<const std::uint8_t> bytes)
    : ByteText(Buffer(bytes.begin(), bytes.end())) {}

ByteText::ByteText(std::vector<std::uint8_t>&& bytes) : size_(bytes.size()) {
  if (size_ != 0) buffer_ = std::make_shared<const Buffer>(std::move(bytes));
}

ByteText ByteText::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Buffer bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("error reading " + path.string());
  return ByteText(std::move(bytes));
}

const std::uint8_t* ByteText::data() const noexcept {
  return buffer_ ? buffer_->data() + offset_ : kEmpty;
}

std::string_view ByteText::view() const noexcept {
  return {reinterpret_cast<const char*>(data()), size_};
}

ByteText ByteText::take(std::size_t i) const {
  if (i > size_) {
    throw PreconditionViolation("take: " + std::to_string(i) + " exceeds length " +
                                std::to_string(size_));
  }
  if (i == 0) return {};
  return {buffer_, offset_, i};
}

ByteText ByteText::drop(std::size_t i) const {
  if (i > size_) {
    throw PreconditionViolation("drop: " + std::to_string(i) + " exceeds length " +
                                std::to_string(size_));
  }
  if (i == size_) return {};
  return {buffer_, offset_ + i, size_ - i};
}

ByteText ByteText::substring(std::size_t offset, std::size_t len) const {
  if (offset > size_ || len > size_ - offset) {
    throw PreconditionViolation("substring: window [" + std::to_string(offset) + ", " +
                                std::to_string(offset) + "+" + std::to_string(len) +
                                ") exceeds length " + std::to_string(size_));
  }
  if (len == 0) return {};
  return {buffer_, offset_ + offset, len};
}

bool ByteText::adjacent_to(const ByteText& next) const noexcept {
  return buffer_ && buffer_ == next.buffer_ && offset_ + size_ == next.offset_;
}

bool operator==(const ByteText& a, const ByteText& b) noexcept {
  if (a.size_ != b.size_) return false;
  if (a.buffer_ == b.buffer_ && a.offset_ == b.offset_) return true;
  return std::memcmp(a.data(), b.data(), a.size_) == 0;
}

std::strong_ordering operator<=>(const ByteText& a, const ByteText& b) noexcept {
  return std::lexicographical_compare_three_way(a.data(), a.data() + a.size_, b.data(),
                                                b.data() + b.size_);
}

std::size_t length(const ByteText& x) noexcept { return x.size(); }

ByteText append(const ByteText& x, const ByteText& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (x.adjacent_to(y)) return {x.buffer_, x.offset_, x.size_ + y.size_};
  Buffer joined;
  joined.reserve(x.size_ + y.size_);
  joined.insert(joined.end(), x.data(), x.data() + x.size_);
  joined.insert(joined.end(), y.data(), y.data() + y.size_);
  return ByteText(std::move(joined));
}

ByteText take(std::size_t i, const ByteText& x) { return x.take(i); }
ByteText drop(std::size_t i, const ByteText& x) { return x.drop(i); }

ByteText substring(const ByteText& x, std::size_t offset, std::size_t len) {
  return x.substring(offset, len);
}

std::vector<ByteText> chunk(std::size_t j, const ByteText& x) {
  if (j == 0) throw InvalidArgument("chunk: size must be positive");
  std::vector<ByteText> pieces;
  pieces.reserve(x.size() <= j ? 1 : (x.size() + j - 1) / j);
  ByteText rest = x;
  while (rest.size() > j) {
    pieces.push_back(rest.take(j));
    rest = rest.drop(j);
  }
  pieces.push_back(std::move(rest));
  return pieces;
}

ByteText from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw InvalidArgument("hex string has odd length");
  Buffer bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_value(hex[i]);
    const int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) throw InvalidArgument("invalid hex digit in '" + std::string(hex) + "'");
    bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return ByteText(std::move(bytes));
}

std::string escape(const ByteText& x) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(x.size());
  for (std::uint8_t b : x.bytes()) {
    if (b >= 0x20 && b < 0x7f && b != '\\' && b != '"') {
      out.push_back(static_cast<char>(b));
    } else {
      out += "\\x";
      out.push_back(kDigits[b >> 4]);
      out.push_back(kDigits[b & 0xf]);
    }
  }
  return out;
}

}  // namespace monomatch
