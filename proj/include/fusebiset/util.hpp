#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fusebiset {

// Group elements are dense indices into a multiplication table.
using Elem = std::uint16_t;

// Malformed or out-of-contract input (bad table, unknown subgroup, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical assertion that should be unreachable failed; signals a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// A stabilization pass hit a negative or non-integral coefficient.  That can
// only happen when the input fusion system is not saturated; the witness
// names the source subgroup where it happened.
struct NotSaturatedError : std::runtime_error {
  NotSaturatedError(std::string msg, std::vector<Elem> witness_elems)
      : std::runtime_error(std::move(msg)), witness(std::move(witness_elems)) {}
  std::vector<Elem> witness;
};

struct Caps {
  int table_max = 1000;         // largest multiplication table we build
  int lattice_max = 256;        // full subgroup lattice only below this order
  int fusion_s_max = 128;       // largest p-group carrying a fusion system
  int aut_max = 64;             // automorphism enumeration cap
  long long hom_set_max = 100000;   // per-source morphism set guard
  long long point_max = 1000000;    // point-level biset materialization guard
};

inline const Caps& default_caps() {
  static const Caps caps;
  return caps;
}

// Splits [0, n) across `threads` workers.  Serial when threads <= 1.  The
// body must be safe to run concurrently on disjoint indices.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline long long p_valuation(long long n, int p) {
  if (n == 0) return -1;  // conventionally infinite; callers treat specially
  long long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Largest power of p dividing n.
inline long long p_part(long long n, int p) {
  long long q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

inline bool is_p_power(long long n, int p) { return p_part(n, p) == n; }

}  // namespace fusebiset
