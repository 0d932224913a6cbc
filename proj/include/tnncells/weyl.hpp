#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "tnncells/bitset.hpp"
#include "tnncells/cartan.hpp"

namespace tnn {

class WeylGroup;

// Element of a fixed WeylGroup. Elements are hash-consed: the id is the
// index into the group's shortlex enumeration, so equality is an integer
// compare. Valid as long as the owning group lives.
struct WeylElt {
  const WeylGroup* group = nullptr;
  std::uint32_t id = 0;

  friend bool operator==(WeylElt a, WeylElt b) {
    return a.group == b.group && a.id == b.id;
  }
  // id order within one group; useful for deterministic sorting.
  friend bool operator<(WeylElt a, WeylElt b) { return a.id < b.id; }
};

// Finite Weyl group, fully enumerated at construction. Elements act on the
// root lattice by exact integer matrices during enumeration; afterwards all
// queries run off precomputed tables (canonical shortlex words, lengths,
// inverses, descent masks, Cayley graph). Immutable once built: concurrent
// readers are safe, and the lazily filled Bruhat down-set cache is guarded
// by a mutex.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  explicit WeylGroup(CartanType type, std::size_t cap = kDefaultCap);
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  std::size_t size() const { return lengths_.size(); }

  WeylElt identity() const { return {this, 0}; }
  WeylElt simple(int i) const;  // s_i, 0-based generator index
  WeylElt element(std::uint32_t id) const;
  std::vector<WeylElt> elements() const;  // all of W, shortlex order
  WeylElt longest() const { return {this, w0_}; }

  int length(WeylElt w) const;
  WeylElt inverse(WeylElt w) const;
  WeylElt multiply(WeylElt a, WeylElt b) const;
  WeylElt multiply_simple(WeylElt a, int i) const;  // a * s_i
  WeylElt simple_multiply(int i, WeylElt a) const;  // s_i * a

  // Canonical word: the lexicographically least reduced word, 0-based letters.
  std::span<const std::uint8_t> word(WeylElt w) const;
  std::vector<int> word_vec(WeylElt w) const;
  WeylElt from_word(std::span<const int> letters) const;
  bool is_reduced(std::span<const int> letters) const;

  std::uint32_t right_descent_mask(WeylElt w) const;
  std::uint32_t left_descent_mask(WeylElt w) const;
  bool has_right_descent(WeylElt w, int i) const;
  bool has_left_descent(WeylElt w, int i) const;
  std::vector<int> right_descents(WeylElt w) const;
  std::vector<int> left_descents(WeylElt w) const;

  bool bruhat_leq(WeylElt v, WeylElt w) const;
  // {v : v <= w} as a bitset over element ids; cached per w.
  const Bitset& bruhat_downset(WeylElt w) const;

  // All reduced words of w; throws CapExceededError if more than word_cap.
  std::vector<std::vector<int>> reduced_words(WeylElt w,
                                              std::size_t word_cap = 1u << 20) const;

  std::string to_string(WeylElt w) const;  // "e" or "s1 s2 s1"

 private:
  void check(WeylElt w) const;

  CartanType type_;
  std::uint32_t w0_ = 0;
  std::vector<std::uint8_t> lengths_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> right_mult_;  // id * rank + i -> id of w s_i
  std::vector<std::uint32_t> right_desc_;
  std::vector<std::uint32_t> left_desc_;
  std::vector<std::uint32_t> word_off_;  // into word_pool_, size |W|+1
  std::vector<std::uint8_t> word_pool_;

  mutable std::mutex downset_mutex_;
  mutable std::vector<std::unique_ptr<Bitset>> downsets_;
};

}  // namespace tnn
