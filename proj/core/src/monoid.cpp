#include "monomatch/monoid.hpp"

#include <array>

namespace monomatch {

ChunkableOps<ByteText> byte_text_ops() {
  ChunkableOps<ByteText> ops;
  ops.identity = [] { return ByteText{}; };
  ops.combine = [](const ByteText& a, const ByteText& b) { return append(a, b); };
  ops.equal = [](const ByteText& a, const ByteText& b) { return a == b; };
  ops.show = [](const ByteText& x) { return "\"" + escape(x) + "\""; };
  ops.length = [](const ByteText& x) { return x.size(); };
  ops.take = [](std::size_t i, const ByteText& x) { return x.take(i); };
  ops.drop = [](std::size_t i, const ByteText& x) { return x.drop(i); };
  return ops;
}

ByteText random_byte_text_exact(Rng& rng, std::size_t len, unsigned alphabet) {
  std::vector<std::uint8_t> bytes(len);
  if (alphabet >= 256 || alphabet == 0) {
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(byte(rng));
  } else {
    std::uniform_int_distribution<unsigned> letter(0, alphabet - 1);
    for (auto& b : bytes) b = static_cast<std::uint8_t>('a' + letter(rng));
  }
  return ByteText(std::move(bytes));
}

ByteText random_byte_text(Rng& rng, std::size_t max_len, unsigned alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return random_byte_text_exact(rng, len(rng), alphabet);
}

Generator<ByteText> byte_text_generator(std::size_t max_len) {
  return [max_len](Rng& rng) {
    static constexpr std::array<unsigned, 3> kAlphabets = {2, 4, 256};
    std::uniform_int_distribution<std::size_t> pick(0, kAlphabets.size() - 1);
    return random_byte_text(rng, max_len, kAlphabets[pick(rng)]);
  };
}

}  // namespace monomatch
