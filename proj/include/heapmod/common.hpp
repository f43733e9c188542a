// Shared basics: element ids, diagnostics, errors, deterministic parallel sweeps.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace heapmod {

using i64 = std::int64_t;

// Elements of finite carriers are dense ids 0..n-1.
using Elem = int;

// Witness of a failed law: the offending tuple plus the law name.
struct Violation {
  std::string law;           // e.g. "H1", "T2", "M3", "HM2", "unit"
  std::vector<i64> witness;  // offending tuple, in the law's argument order
  std::string detail;        // optional free-form note

  std::string to_string() const;
};

struct HeapmodError : std::runtime_error {
  explicit HeapmodError(const std::string& msg) : std::runtime_error(msg) {}
};

struct AxiomViolation : HeapmodError {
  Violation violation;
  explicit AxiomViolation(Violation v)
      : HeapmodError("axiom violation: " + v.to_string()), violation(std::move(v)) {}
};

struct EmptyHeapError : HeapmodError {
  EmptyHeapError() : HeapmodError("operation requires a non-empty heap") {}
};

struct ElementNotInCarrier : HeapmodError {
  ElementNotInCarrier(Elem e, int size)
      : HeapmodError("element " + std::to_string(e) + " not in carrier of size " +
                     std::to_string(size)) {}
};

struct NotASubheap : HeapmodError {
  Violation violation;
  explicit NotASubheap(Violation v)
      : HeapmodError("not a subheap: " + v.to_string()), violation(std::move(v)) {}
};

struct NotAMorphism : HeapmodError {
  Violation violation;
  explicit NotAMorphism(Violation v)
      : HeapmodError("not a morphism: " + v.to_string()), violation(std::move(v)) {}
};

struct SizeMismatch : HeapmodError {
  explicit SizeMismatch(const std::string& msg) : HeapmodError("size mismatch: " + msg) {}
};

struct VerificationFailure : HeapmodError {
  Violation violation;
  explicit VerificationFailure(Violation v)
      : HeapmodError("verification failure: " + v.to_string()), violation(std::move(v)) {}
};

namespace detail {
inline unsigned sweep_workers(i64 n) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (n < 256) return 1;  // outer loops are usually heavy per item
  return hw;
}
}  // namespace detail

// Deterministic parallel search over [0, n): returns the smallest index on which
// `bad` is true, or nullopt. Each worker scans a contiguous block and records its
// first hit; the global minimum does not depend on scheduling.
template <class F>
std::optional<i64> parallel_find(i64 n, F&& bad) {
  if (n <= 0) return std::nullopt;
  unsigned workers = detail::sweep_workers(n);
  if (workers == 1) {
    for (i64 i = 0; i < n; ++i)
      if (bad(i)) return i;
    return std::nullopt;
  }
  std::atomic<i64> cap{n};  // prunes blocks past a known hit
  std::vector<i64> hits(workers, n);
  std::vector<std::thread> pool;
  i64 chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      i64 lo = static_cast<i64>(w) * chunk;
      i64 hi = std::min(n, lo + chunk);
      if (lo >= hi) return;
      for (i64 i = lo; i < hi; ++i) {
        if ((i & 0xff) == 0 && i >= cap.load(std::memory_order_relaxed)) return;
        if (bad(i)) {
          hits[w] = i;
          i64 prev = cap.load();
          while (i < prev && !cap.compare_exchange_weak(prev, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  i64 best = n;
  for (i64 h : hits) best = std::min(best, h);
  if (best == n) return std::nullopt;
  return best;
}

}  // namespace heapmod
