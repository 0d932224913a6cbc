#include "tnncells/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tnncells/error.hpp"

namespace tnn {

namespace {

// Root-lattice matrix with column j = image of alpha_j, coordinates in the
// simple-root basis. Entries stay tiny (bounded by the largest root
// coefficient), so int16 is more than enough.
using RootMat = std::vector<std::int16_t>;

struct RootMatHash {
  std::size_t operator()(const RootMat& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : m) {
      h ^= static_cast<std::uint16_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

RootMat mat_identity(int n) {
  RootMat m(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) m[std::size_t(i) * n + i] = 1;
  return m;
}

RootMat mat_mul(const RootMat& a, const RootMat& b, int n) {
  RootMat c(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[std::size_t(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        c[std::size_t(i) * n + j] =
            std::int16_t(c[std::size_t(i) * n + j] + aik * b[std::size_t(k) * n + j]);
    }
  return c;
}

// i is a right descent iff w(alpha_i) is a negative root, i.e. column i <= 0.
bool column_negative(const RootMat& m, int n, int i) {
  for (int r = 0; r < n; ++r)
    if (m[std::size_t(r) * n + i] > 0) return false;
  return true;
}

}  // namespace

WeylGroup::WeylGroup(CartanType type, std::size_t cap) : type_(type) {
  const std::uint64_t order = type_.group_order();
  if (order > cap)
    throw CapExceededError("group " + type_.to_string() + " has order " +
                           std::to_string(order) + " which exceeds the cap " +
                           std::to_string(cap));
  const int n = rank();

  std::vector<RootMat> refl(n);
  for (int i = 0; i < n; ++i) {
    refl[i] = mat_identity(n);
    for (int j = 0; j < n; ++j)
      refl[i][std::size_t(i) * n + j] =
          std::int16_t(refl[i][std::size_t(i) * n + j] - type_.cartan(i, j));
  }

  // BFS over right multiplication; Cayley distance = length.
  std::vector<RootMat> mats;
  std::unordered_map<RootMat, std::uint32_t, RootMatHash> index;
  mats.reserve(order);
  mats.push_back(mat_identity(n));
  index.emplace(mats[0], 0);

  std::vector<std::uint8_t> len{0};
  std::vector<std::uint32_t> rmult;
  std::vector<std::uint32_t> bfs_word_off{0, 0};
  std::vector<std::uint8_t> bfs_word_pool;

  for (std::uint32_t w = 0; w < mats.size(); ++w) {
    rmult.resize(std::size_t(w + 1) * n);
    for (int i = 0; i < n; ++i) {
      RootMat prod = mat_mul(mats[w], refl[i], n);
      auto [it, fresh] = index.emplace(std::move(prod), std::uint32_t(mats.size()));
      if (fresh) {
        mats.push_back(it->first);
        len.push_back(std::uint8_t(len[w] + 1));
        bfs_word_pool.insert(bfs_word_pool.end(),
                             bfs_word_pool.begin() + bfs_word_off[w],
                             bfs_word_pool.begin() + bfs_word_off[w + 1]);
        bfs_word_pool.push_back(std::uint8_t(i));
        bfs_word_off.push_back(std::uint32_t(bfs_word_pool.size()));
      }
      rmult[std::size_t(w) * n + i] = it->second;
    }
  }
  const std::uint32_t N = std::uint32_t(mats.size());
  if (N != order)
    throw ClassificationError("enumeration produced " + std::to_string(N) +
                              " elements, expected " + std::to_string(order));

  // Inverses: follow the reversed BFS word from the identity.
  std::vector<std::uint32_t> inv(N);
  for (std::uint32_t w = 0; w < N; ++w) {
    std::uint32_t x = 0;
    for (std::uint32_t k = bfs_word_off[w + 1]; k > bfs_word_off[w]; --k)
      x = rmult[std::size_t(x) * n + bfs_word_pool[k - 1]];
    inv[w] = x;
  }

  std::vector<std::uint32_t> rdesc(N, 0), ldesc(N, 0);
  for (std::uint32_t w = 0; w < N; ++w)
    for (int i = 0; i < n; ++i)
      if (column_negative(mats[w], n, i)) rdesc[w] |= 1u << i;
  for (std::uint32_t w = 0; w < N; ++w) ldesc[w] = rdesc[inv[w]];

  // Canonical words: repeatedly strip the least left descent. BFS order is
  // sorted by length, so s_i * w has already been processed.
  std::vector<std::vector<std::uint8_t>> canon(N);
  std::vector<std::uint32_t> by_len(N);
  std::iota(by_len.begin(), by_len.end(), 0);
  std::stable_sort(by_len.begin(), by_len.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return len[a] < len[b]; });
  for (std::uint32_t w : by_len) {
    if (w == 0) continue;
    int i = std::countr_zero(ldesc[w]);
    std::uint32_t rest = inv[rmult[std::size_t(inv[w]) * n + i]];  // s_i * w
    canon[w].reserve(canon[rest].size() + 1);
    canon[w].push_back(std::uint8_t(i));
    canon[w].insert(canon[w].end(), canon[rest].begin(), canon[rest].end());
  }

  // Re-index by shortlex canonical word so ids are stable and meaningful.
  std::vector<std::uint32_t> sorted(N);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (canon[a].size() != canon[b].size()) return canon[a].size() < canon[b].size();
    return canon[a] < canon[b];
  });
  std::vector<std::uint32_t> new_id(N);
  for (std::uint32_t k = 0; k < N; ++k) new_id[sorted[k]] = k;

  lengths_.resize(N);
  inverse_.resize(N);
  right_mult_.resize(std::size_t(N) * n);
  right_desc_.resize(N);
  left_desc_.resize(N);
  word_off_.assign(1, 0);
  word_pool_.clear();
  for (std::uint32_t k = 0; k < N; ++k) {
    std::uint32_t old = sorted[k];
    lengths_[k] = len[old];
    inverse_[k] = new_id[inv[old]];
    right_desc_[k] = rdesc[old];
    left_desc_[k] = ldesc[old];
    for (int i = 0; i < n; ++i)
      right_mult_[std::size_t(k) * n + i] = new_id[rmult[std::size_t(old) * n + i]];
    word_pool_.insert(word_pool_.end(), canon[old].begin(), canon[old].end());
    word_off_.push_back(std::uint32_t(word_pool_.size()));
  }
  w0_ = N - 1;  // shortlex puts the longest element last
  downsets_.resize(N);
}

void WeylGroup::check(WeylElt w) const {
  if (w.group != this || w.id >= size())
    throw InvalidInputError("element does not belong to this Weyl group");
}

WeylElt WeylGroup::simple(int i) const {
  if (i < 0 || i >= rank()) throw InvalidInputError("generator index out of range");
  return multiply_simple(identity(), i);
}

WeylElt WeylGroup::element(std::uint32_t id) const {
  if (id >= size()) throw InvalidInputError("element id out of range");
  return {this, id};
}

std::vector<WeylElt> WeylGroup::elements() const {
  std::vector<WeylElt> out;
  out.reserve(size());
  for (std::uint32_t id = 0; id < size(); ++id) out.push_back({this, id});
  return out;
}

int WeylGroup::length(WeylElt w) const {
  check(w);
  return lengths_[w.id];
}

WeylElt WeylGroup::inverse(WeylElt w) const {
  check(w);
  return {this, inverse_[w.id]};
}

WeylElt WeylGroup::multiply_simple(WeylElt a, int i) const {
  check(a);
  if (i < 0 || i >= rank()) throw InvalidInputError("generator index out of range");
  return {this, right_mult_[std::size_t(a.id) * rank() + i]};
}

WeylElt WeylGroup::simple_multiply(int i, WeylElt a) const {
  return inverse(multiply_simple(inverse(a), i));
}

WeylElt WeylGroup::multiply(WeylElt a, WeylElt b) const {
  check(a);
  check(b);
  std::uint32_t x = a.id;
  for (std::uint8_t i : word(b)) x = right_mult_[std::size_t(x) * rank() + i];
  return {this, x};
}

std::span<const std::uint8_t> WeylGroup::word(WeylElt w) const {
  check(w);
  return {word_pool_.data() + word_off_[w.id],
          word_pool_.data() + word_off_[w.id + 1]};
}

std::vector<int> WeylGroup::word_vec(WeylElt w) const {
  auto s = word(w);
  return std::vector<int>(s.begin(), s.end());
}

WeylElt WeylGroup::from_word(std::span<const int> letters) const {
  std::uint32_t x = 0;
  for (int i : letters) {
    if (i < 0 || i >= rank()) throw InvalidInputError("word letter out of range");
    x = right_mult_[std::size_t(x) * rank() + i];
  }
  return {this, x};
}

bool WeylGroup::is_reduced(std::span<const int> letters) const {
  return std::size_t(length(from_word(letters))) == letters.size();
}

std::uint32_t WeylGroup::right_descent_mask(WeylElt w) const {
  check(w);
  return right_desc_[w.id];
}

std::uint32_t WeylGroup::left_descent_mask(WeylElt w) const {
  check(w);
  return left_desc_[w.id];
}

bool WeylGroup::has_right_descent(WeylElt w, int i) const {
  return (right_descent_mask(w) >> i) & 1;
}

bool WeylGroup::has_left_descent(WeylElt w, int i) const {
  return (left_descent_mask(w) >> i) & 1;
}

std::vector<int> WeylGroup::right_descents(WeylElt w) const {
  std::vector<int> out;
  std::uint32_t m = right_descent_mask(w);
  for (int i = 0; i < rank(); ++i)
    if ((m >> i) & 1) out.push_back(i);
  return out;
}

std::vector<int> WeylGroup::left_descents(WeylElt w) const {
  std::vector<int> out;
  std::uint32_t m = left_descent_mask(w);
  for (int i = 0; i < rank(); ++i)
    if ((m >> i) & 1) out.push_back(i);
  return out;
}

// D(w s) determines D(w) via the lifting property:
// v <= w  iff  v <= ws or vs <= ws, for any right descent s of w.
const Bitset& WeylGroup::bruhat_downset(WeylElt w) const {
  check(w);
  std::lock_guard<std::mutex> lock(downset_mutex_);
  if (downsets_[w.id]) return *downsets_[w.id];

  const int n = rank();
  const bool cache_prefixes = size() <= 10000;
  Bitset cur(size());
  cur.set(0);
  std::uint32_t x = 0;
  if (cache_prefixes && !downsets_[0]) downsets_[0] = std::make_unique<Bitset>(cur);
  for (std::uint8_t i : word(w)) {
    x = right_mult_[std::size_t(x) * n + i];
    if (downsets_[x]) {
      cur = *downsets_[x];
      continue;
    }
    Bitset next = cur;
    for (std::uint32_t v = 0; v < size(); ++v)
      if (cur.test(v)) next.set(right_mult_[std::size_t(v) * n + i]);
    cur = std::move(next);
    if (cache_prefixes) downsets_[x] = std::make_unique<Bitset>(cur);
  }
  if (!downsets_[w.id]) downsets_[w.id] = std::make_unique<Bitset>(std::move(cur));
  return *downsets_[w.id];
}

bool WeylGroup::bruhat_leq(WeylElt v, WeylElt w) const {
  check(v);
  check(w);
  if (v.id == w.id) return true;
  if (lengths_[v.id] >= lengths_[w.id]) return false;
  return bruhat_downset(w).test(v.id);
}

std::vector<std::vector<int>> WeylGroup::reduced_words(WeylElt w,
                                                       std::size_t word_cap) const {
  check(w);
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;  // letters collected right-to-left
  auto dfs = [&](auto&& self, std::uint32_t x) -> void {
    if (x == 0) {
      if (out.size() >= word_cap)
        throw CapExceededError("reduced word enumeration exceeds cap");
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    std::uint32_t m = right_desc_[x];
    for (int i = 0; i < rank(); ++i)
      if ((m >> i) & 1) {
        suffix.push_back(i);
        self(self, right_mult_[std::size_t(x) * rank() + i]);
        suffix.pop_back();
      }
  };
  dfs(dfs, w.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::string WeylGroup::to_string(WeylElt w) const {
  auto ltrs = word(w);
  if (ltrs.empty()) return "e";
  std::string s;
  for (std::uint8_t i : ltrs) {
    if (!s.empty()) s += ' ';
    s += 's';
    s += std::to_string(int(i) + 1);
  }
  return s;
}

}  // namespace tnn
