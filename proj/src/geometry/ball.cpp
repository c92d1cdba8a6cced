#include "wreath/ball.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>

#include "wreath/parallel.hpp"

namespace wreath {

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
constexpr std::string_view kMagic = "WREATHBALL v1\n";

std::size_t hash_key(std::string_view key) { return std::hash<std::string_view>{}(key); }

void write_u64(std::ostream& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t read_u64(std::istream& in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw InputError("ball cache: truncated");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

void write_string(std::ostream& out, std::string_view s) {
  write_u64(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::istream& in, std::uint64_t limit) {
  const auto n = read_u64(in);
  if (n > limit) throw InputError("ball cache: implausible length");
  std::string s(n, '\0');
  in.read(s.data(), static_cast<std::streamsize>(n));
  if (!in) throw InputError("ball cache: truncated");
  return s;
}

}  // namespace

Ball::Ball(WreathGroup group, GeneratorSet gens) : group_(std::move(group)), gens_(std::move(gens)) {
  rehash(16);
  insert(group_.canonical_key(group_.identity()));
  close_shell();
}

std::vector<WreathElement> Ball::elements() const {
  std::vector<WreathElement> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

std::uint32_t Ball::length(std::size_t i) const {
  auto it = std::upper_bound(shell_starts_.begin(), shell_starts_.end(), i);
  return static_cast<std::uint32_t>(it - shell_starts_.begin() - 1);
}

std::size_t Ball::slot_for(std::string_view k) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash_key(k) & mask;; s = (s + 1) & mask) {
    if (slots_[s] == kEmpty || key(slots_[s]) == k) return s;
  }
}

std::optional<std::size_t> Ball::find(std::string_view k) const {
  const auto s = slot_for(k);
  if (slots_[s] == kEmpty) return std::nullopt;
  return slots_[s];
}

std::optional<std::size_t> Ball::find(const WreathElement& g) const {
  if (g.group_id() != group_.id()) throw SpecMismatchError("element is not in the ball's group");
  return find(group_.canonical_key(g));
}

std::optional<std::uint32_t> Ball::distance(const WreathElement& g) const {
  const auto i = find(g);
  if (!i) return std::nullopt;
  return length(*i);
}

std::size_t Ball::insert(std::string_view k) {
  if (size() >= kEmpty - 1) throw ResourceError("ball index exhausted", radius());
  if (2 * (size() + 1) > slots_.size()) rehash(slots_.size() * 2);
  const std::size_t index = size();
  arena_.append(k);
  offsets_.push_back(arena_.size());
  slots_[slot_for(k)] = static_cast<std::uint32_t>(index);
  return index;
}

void Ball::rehash(std::size_t capacity) {
  slots_.assign(capacity, kEmpty);
  const std::size_t mask = capacity - 1;
  for (std::size_t i = 0; i < size(); ++i) {
    std::size_t s = hash_key(key(i)) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = static_cast<std::uint32_t>(i);
  }
}

void Ball::truncate(std::size_t count) {
  offsets_.resize(count + 1);
  arena_.resize(offsets_.back());
  rehash(slots_.size());
}

void Ball::save(std::ostream& out) const {
  out.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
  write_string(out, group_.name());
  write_string(out, gens_.describe());
  write_u64(out, shell_starts_.size());
  for (auto s : shell_starts_) write_u64(out, s);
  for (auto o : offsets_) write_u64(out, o);
  write_string(out, arena_);
}

Ball Ball::load(std::istream& in, const WreathGroup& group, const GeneratorSet& gens) {
  std::string magic(kMagic.size(), '\0');
  in.read(magic.data(), static_cast<std::streamsize>(magic.size()));
  if (!in || magic != kMagic) throw InputError("ball cache: bad header or unsupported version");
  if (read_string(in, 1 << 16) != group.name()) throw InputError("ball cache: built for a different group");
  if (read_string(in, 1 << 16) != gens.describe()) throw InputError("ball cache: built for a different generating set");
  Ball ball(group, gens);
  const auto shells = read_u64(in);
  if (shells < 2 || shells > (1u << 20)) throw InputError("ball cache: bad shell table");
  ball.shell_starts_.resize(shells);
  for (auto& s : ball.shell_starts_) s = read_u64(in);
  const std::size_t count = ball.shell_starts_.back();
  if (count > std::numeric_limits<std::uint32_t>::max() - 2) throw InputError("ball cache: too many elements");
  ball.offsets_.resize(count + 1);
  for (auto& o : ball.offsets_) o = read_u64(in);
  ball.arena_ = read_string(in, std::uint64_t{1} << 40);
  if (ball.offsets_.back() != ball.arena_.size()) throw InputError("ball cache: inconsistent offsets");
  std::size_t capacity = 16;
  while (capacity < 2 * count) capacity *= 2;
  ball.rehash(capacity);
  return ball;
}

Ball build_ball(const WreathGroup& group, const GeneratorSet& gens, std::size_t radius, const BallOptions& options) {
  Ball ball(group, gens);
  const auto alphabet = gens.alphabet();
  if (options.element_budget < 1) throw ResourceError("element budget must be positive", 0);

  // Shells are expanded in batches so candidate buffers stay bounded.
  constexpr std::size_t kBatch = 1 << 16;
  constexpr std::size_t kChunks = 64;
  std::vector<std::string> keys(kChunks);
  std::vector<std::vector<std::uint32_t>> ends(kChunks);

  for (std::size_t r = 0; r < radius; ++r) {
    const std::size_t shell_begin = ball.shell_begin(r), shell_end = ball.shell_end(r);
    for (std::size_t begin = shell_begin; begin < shell_end; begin += kBatch) {
      const std::size_t count = std::min(kBatch, shell_end - begin);
      const std::size_t chunks = std::min(kChunks, default_chunks(count));
      for (std::size_t c = 0; c < chunks; ++c) {
        keys[c].clear();
        ends[c].clear();
      }
      parallel_chunks(count, chunks, options.workers, [&](std::size_t c, std::size_t b, std::size_t e) {
        for (std::size_t i = begin + b; i < begin + e; ++i) {
          const WreathElement g = ball.element(i);
          for (const auto& letter : alphabet) {
            group.append_key(group.multiply(g, letter.element), keys[c]);
            ends[c].push_back(static_cast<std::uint32_t>(keys[c].size()));
          }
        }
      });
      for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t from = 0;
        for (const std::size_t to : ends[c]) {
          const std::string_view k = std::string_view(keys[c]).substr(from, to - from);
          from = to;
          if (ball.find(k)) continue;
          if (ball.size() >= options.element_budget) {
            ball.truncate(shell_end);
            const std::string what = "element budget " + std::to_string(options.element_budget) +
                                     " exhausted while building radius " + std::to_string(r + 1) +
                                     "; last complete radius " + std::to_string(r);
            throw BallBudgetExceeded(what, std::make_shared<const Ball>(std::move(ball)));
          }
          ball.insert(k);
        }
      }
    }
    ball.close_shell();
  }
  return ball;
}

}  // namespace wreath
