#pragma once

// Pottier-style completion over a lattice given by a generating set.
//
// Elements are stored once per sign class (first nonzero entry positive);
// reduction tests both x and -x. The result is a superset of the Graver
// basis; minimal_elements() filters it down.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "graver/bigint.hpp"

namespace graver::detail {

struct arithmetic_overflow : std::overflow_error {
  arithmetic_overflow() : std::overflow_error("int64 overflow in completion") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow();
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow();
  return r;
}
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }

inline std::int64_t magnitude(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw arithmetic_overflow();
  return a < 0 ? -a : a;
}
inline BigInt magnitude(const BigInt& a) { return graver::abs(a); }

// Bit masks of the positive and negative supports, W 64-bit words.
template <std::size_t W>
struct SignMask {
  std::array<std::uint64_t, W> pos{};
  std::array<std::uint64_t, W> neg{};

  void set(std::size_t i, int s) {
    auto& words = s > 0 ? pos : neg;
    words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  // supp+(this) within supp+(o) and supp-(this) within supp-(o).
  bool fits_in(const SignMask& o) const {
    for (std::size_t w = 0; w < W; ++w) {
      if ((pos[w] & ~o.pos[w]) | (neg[w] & ~o.neg[w])) return false;
    }
    return true;
  }
  // Same test against -o.
  bool fits_in_negated(const SignMask& o) const {
    for (std::size_t w = 0; w < W; ++w) {
      if ((pos[w] & ~o.neg[w]) | (neg[w] & ~o.pos[w])) return false;
    }
    return true;
  }
  // True when this and sign*o disagree in sign at some coordinate.
  bool clashes(const SignMask& o, int sign) const {
    for (std::size_t w = 0; w < W; ++w) {
      const auto op = sign > 0 ? o.pos[w] : o.neg[w];
      const auto on = sign > 0 ? o.neg[w] : o.pos[w];
      if ((pos[w] & on) | (neg[w] & op)) return true;
    }
    return false;
  }
  bool empty() const {
    for (std::size_t w = 0; w < W; ++w) {
      if (pos[w] | neg[w]) return false;
    }
    return true;
  }
};

template <class Scalar, std::size_t W>
class Completion {
 public:
  using Vec = std::vector<Scalar>;

  explicit Completion(std::size_t dim) : dim_(dim) {}

  /// Runs completion from a generating set of the lattice.
  void run(const std::vector<Vec>& generators) {
    std::set<Vec> seen;
    for (Vec v : generators) {
      if (!canonicalize(v)) continue;
      if (seen.insert(v).second) push(std::move(v));
    }
    // Pairs are formed in FIFO order of element insertion: element i is
    // paired with every j < i once it becomes the head of the queue.
    for (std::size_t i = 1; i < elements_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        for (int s : {1, -1}) {
          if (!masks_[i].clashes(masks_[j], s)) continue;
          Vec sum(dim_);
          for (std::size_t k = 0; k < dim_; ++k) {
            sum[k] = s > 0 ? checked_add(elements_[i][k], elements_[j][k])
                           : checked_add(elements_[i][k], -elements_[j][k]);
          }
          reduce(sum);
          if (canonicalize(sum)) push(std::move(sum));
        }
      }
    }
  }

  /// The sign-class representatives that no other element conforms to.
  std::vector<Vec> minimal_elements() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < elements_.size() && minimal; ++j) {
        if (j == i) continue;
        if (conforms_to(j, elements_[i], masks_[i]) != 0) minimal = false;
      }
      if (minimal) out.push_back(elements_[i]);
    }
    return out;
  }

  std::size_t size() const { return elements_.size(); }

 private:
  SignMask<W> mask_of(const Vec& v) const {
    SignMask<W> m;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (v[k] > 0) m.set(k, 1);
      else if (v[k] < 0) m.set(k, -1);
    }
    return m;
  }

  // Flips v so its first nonzero entry is positive; false when v is zero.
  static bool canonicalize(Vec& v) {
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0) {
        for (auto& y : v) y = -y;
      }
      return true;
    }
    return false;
  }

  void push(Vec v) {
    masks_.push_back(mask_of(v));
    elements_.push_back(std::move(v));
  }

  // Returns +1 if element g conforms to v, -1 if -g does, 0 otherwise.
  int conforms_to(std::size_t g, const Vec& v, const SignMask<W>& vm) const {
    int s = 0;
    if (masks_[g].fits_in(vm)) s = 1;
    else if (masks_[g].fits_in_negated(vm)) s = -1;
    if (s == 0) return 0;
    const Vec& e = elements_[g];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (e[k] != 0 && magnitude(e[k]) > magnitude(v[k])) return 0;
    }
    return s;
  }

  // Normal form: subtract the largest conforming multiple of a conforming
  // element until none conforms.
  void reduce(Vec& v) const {
    auto vm = mask_of(v);
    bool changed = true;
    while (changed && !vm.empty()) {
      changed = false;
      for (std::size_t g = 0; g < elements_.size(); ++g) {
        const int s = conforms_to(g, v, vm);
        if (s == 0) continue;
        const Vec& e = elements_[g];
        Scalar lambda = -1;
        for (std::size_t k = 0; k < dim_; ++k) {
          if (e[k] == 0) continue;
          Scalar q = magnitude(v[k]) / magnitude(e[k]);
          if (lambda < 0 || q < lambda) lambda = q;
        }
        const Scalar step = s > 0 ? lambda : Scalar(-lambda);
        for (std::size_t k = 0; k < dim_; ++k) {
          if (e[k] != 0) v[k] = checked_add(v[k], -checked_mul(step, e[k]));
        }
        vm = mask_of(v);
        changed = true;
        break;
      }
    }
  }

  std::size_t dim_;
  std::vector<Vec> elements_;
  std::vector<SignMask<W>> masks_;
};

}  // namespace graver::detail
