#pragma once

// State keys and memo tables for the solver.
//
// A state (weights, token) is encoded as a mixed-radix integer whenever the
// full key space fits in 64 bits; child keys are then derived arithmetically
// from the parent key without materialising the child state. Small key spaces
// use a directly indexed array, larger ones an open-addressing hash table.
// Graphs whose key space overflows 64 bits fall back to byte-string keys.

#include <bit>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nimgraph/graph.hpp"

namespace nimgraph::memo {

// Packed entry: 0 = absent; bit 15 = mover wins; bits 0..14 = grundy + 1.
using Entry = std::uint16_t;
inline constexpr std::uint32_t max_grundy = 0x7FFE;

inline constexpr Entry make_entry(std::uint32_t grundy, bool mover_wins) {
  return static_cast<Entry>((mover_wins ? 0x8000u : 0u) | (grundy + 1));
}
inline constexpr std::uint32_t entry_grundy(Entry e) { return (e & 0x7FFFu) - 1; }
inline constexpr bool entry_wins(Entry e) { return (e & 0x8000u) != 0; }

// Mixed-radix codec: digit e has radix initial_weight(e)+1, the token digit
// has radix vertex_count and sits on top.
class PackedCodec {
 public:
  using key_type = std::uint64_t;

  // Returns nullopt when the key space does not fit in 64 bits.
  static std::optional<PackedCodec> try_make(const GameGraph& g) {
    PackedCodec c;
    unsigned __int128 stride = 1;
    c.strides_.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      c.strides_.push_back(static_cast<std::uint64_t>(stride));
      stride *= static_cast<unsigned __int128>(e.weight) + 1;
      if (stride > UINT64_MAX) return std::nullopt;
    }
    const unsigned __int128 space = stride * g.vertex_count();
    if (space >= UINT64_MAX) return std::nullopt;
    c.token_stride_ = static_cast<std::uint64_t>(stride);
    c.key_space_ = static_cast<std::uint64_t>(space);
    return c;
  }

  std::uint64_t key_space() const { return key_space_; }

  key_type encode(const GameState& s) const {
    std::uint64_t key = s.token * token_stride_;
    for (std::size_t i = 0; i < s.weights.size(); ++i) key += s.weights[i] * strides_[i];
    return key;
  }

  GameState decode(key_type key) const {
    GameState s;
    s.token = static_cast<Vertex>(key / token_stride_);
    key %= token_stride_;
    s.weights.resize(strides_.size());
    for (std::size_t i = strides_.size(); i-- > 0;) {
      s.weights[i] = static_cast<Weight>(key / strides_[i]);
      key %= strides_[i];
    }
    return s;
  }

  // Unsigned wrap-around makes the signed differences come out right.
  key_type child(key_type parent, std::size_t edge, Weight old_w, Weight new_w, Vertex from, Vertex to) const {
    return parent - static_cast<std::uint64_t>(old_w - new_w) * strides_[edge] +
           (static_cast<std::uint64_t>(to) - from) * token_stride_;
  }

 private:
  std::vector<std::uint64_t> strides_;
  std::uint64_t token_stride_ = 1;
  std::uint64_t key_space_ = 1;
};

class WideCodec {
 public:
  using key_type = std::string;

  explicit WideCodec(const GameGraph& g) : edges_(g.edge_count()) {}

  key_type encode(const GameState& s) const {
    key_type key((edges_ + 1) * sizeof(std::uint32_t), '\0');
    std::memcpy(key.data(), s.weights.data(), edges_ * sizeof(std::uint32_t));
    std::memcpy(key.data() + edges_ * sizeof(std::uint32_t), &s.token, sizeof(std::uint32_t));
    return key;
  }

  GameState decode(const key_type& key) const {
    GameState s;
    s.weights.resize(edges_);
    std::memcpy(s.weights.data(), key.data(), edges_ * sizeof(std::uint32_t));
    std::memcpy(&s.token, key.data() + edges_ * sizeof(std::uint32_t), sizeof(std::uint32_t));
    return s;
  }

  key_type child(const key_type& parent, std::size_t edge, Weight, Weight new_w, Vertex, Vertex to) const {
    key_type key = parent;
    std::memcpy(key.data() + edge * sizeof(std::uint32_t), &new_w, sizeof(std::uint32_t));
    std::memcpy(key.data() + edges_ * sizeof(std::uint32_t), &to, sizeof(std::uint32_t));
    return key;
  }

 private:
  std::size_t edges_;
};

class DenseTable {
 public:
  using codec_type = PackedCodec;
  using key_type = std::uint64_t;

  explicit DenseTable(const PackedCodec& codec) : slots_(codec.key_space(), 0) {}

  Entry find(key_type key) const { return slots_[key]; }
  void insert(key_type key, Entry e) {
    if (slots_[key] == 0) ++size_;
    slots_[key] = e;
  }
  std::size_t size() const { return size_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < slots_.size(); ++k)
      if (slots_[k] != 0) fn(static_cast<key_type>(k), slots_[k]);
  }

 private:
  std::vector<Entry> slots_;
  std::size_t size_ = 0;
};

// Linear probing, power-of-two capacity, load factor at most 1/2.
class HashTable {
 public:
  using codec_type = PackedCodec;
  using key_type = std::uint64_t;
  static constexpr key_type empty_key = UINT64_MAX;

  explicit HashTable(const PackedCodec&) { rehash(1u << 16); }

  Entry find(key_type key) const {
    for (std::size_t i = slot(key);; i = (i + 1) & mask_) {
      if (keys_[i] == key) return values_[i];
      if (keys_[i] == empty_key) return 0;
    }
  }

  void insert(key_type key, Entry e) {
    if ((size_ + 1) * 2 > keys_.size()) rehash(keys_.size() * 2);
    place(key, e);
  }

  std::size_t size() const { return size_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] != empty_key) fn(keys_[i], values_[i]);
  }

 private:
  std::size_t slot(key_type key) const {
    // splitmix64 finaliser
    key ^= key >> 30;
    key *= 0xbf58476d1ce4e5b9ULL;
    key ^= key >> 27;
    key *= 0x94d049bb133111ebULL;
    key ^= key >> 31;
    return static_cast<std::size_t>(key) & mask_;
  }

  void place(key_type key, Entry e) {
    std::size_t i = slot(key);
    while (keys_[i] != empty_key && keys_[i] != key) i = (i + 1) & mask_;
    if (keys_[i] == empty_key) ++size_;
    keys_[i] = key;
    values_[i] = e;
  }

  void rehash(std::size_t capacity) {
    std::vector<key_type> old_keys(capacity, empty_key);
    std::vector<Entry> old_values(capacity, 0);
    old_keys.swap(keys_);
    old_values.swap(values_);
    mask_ = capacity - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i] != empty_key) place(old_keys[i], old_values[i]);
  }

  std::vector<key_type> keys_;
  std::vector<Entry> values_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

class WideTable {
 public:
  using codec_type = WideCodec;
  using key_type = std::string;

  explicit WideTable(const WideCodec&) {}

  Entry find(const key_type& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? 0 : it->second;
  }
  void insert(const key_type& key, Entry e) { map_[key] = e; }
  std::size_t size() const { return map_.size(); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [k, v] : map_) fn(k, v);
  }

 private:
  std::unordered_map<key_type, Entry> map_;
};

// Key spaces up to this many slots are stored densely (2 bytes per slot).
inline constexpr std::uint64_t dense_limit = std::uint64_t{1} << 26;

}  // namespace nimgraph::memo
