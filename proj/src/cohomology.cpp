#include "dcover/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <tuple>

namespace dcover {

namespace {

// h^0(O_{P^2}(d)) = C(d+2, 2).
Integer plane_h0(const Integer& d) {
  if (d < 0) return 0;
  return (d + 1) * (d + 2) / 2;
}

// Sum of the arithmetic progression c, c + step, ... over k = lo..hi.
Integer progression(const Integer& lo, const Integer& hi, const Integer& c, const Integer& step) {
  if (hi < lo) return 0;
  const Integer n = hi - lo + 1;
  return n * c + step * (lo + hi) * n / 2;
}

Integer ceil_div(const Integer& p, const Integer& q) { return -floor_div(-p, q); }

CohomologyTable reversed(const CohomologyTable& t) {
  return {t.h2, t.h1, t.h0, t.chi};
}

CohomologyTable compute(const DivisorClass& d) {
  CohomologyTable t;
  if (d.base().is_plane()) {
    if (d.degree() <= -3) return reversed(compute(serre_dual(d)));
    t.h0 = plane_h0(d.degree());
    t.h1 = 0;
    t.h2 = 0;
  } else {
    if (d.alpha() <= -2) return reversed(compute(serre_dual(d)));
    // The twists beta - k e, k = 0..alpha, contribute max(0, t + 1) to h0
    // and max(0, -t - 1) to h1; sum both in closed form.
    const Integer& alpha = d.alpha();
    const Integer& beta = d.beta();
    const Integer e = d.base().e();
    t.h2 = 0;
    if (e == 0) {
      t.h0 = (alpha + 1) * (beta >= 0 ? beta + 1 : Integer(0));
      t.h1 = (alpha + 1) * (beta <= -2 ? -beta - 1 : Integer(0));
    } else {
      // t >= 0 iff k <= beta / e;  t <= -2 iff k >= (beta + 2) / e
      const Integer last_h0 = beta < 0 ? Integer(-1) : std::min(alpha, floor_div(beta, e));
      t.h0 = progression(0, last_h0, beta + 1, -e);
      const Integer first_h1 = std::max(Integer(0), ceil_div(beta + 2, e));
      t.h1 = progression(first_h1, alpha, -beta - 1, e);
    }
  }
  t.chi = t.h0 - t.h1 + t.h2;
  return t;
}

using CacheKey = std::tuple<int, Integer, Integer, Integer>;

// Bounded memo table; the oldest entries are evicted first.
class CohomologyCache {
 public:
  static constexpr std::size_t kCapacity = 1 << 15;

  std::optional<CohomologyTable> find(const CacheKey& key) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const CacheKey& key, const CohomologyTable& value) {
    std::lock_guard lock(mutex_);
    if (!table_.emplace(key, value).second) return;
    order_.push_back(key);
    if (order_.size() > kCapacity) {
      table_.erase(order_.front());
      order_.pop_front();
    }
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
    order_.clear();
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

 private:
  std::mutex mutex_;
  std::map<CacheKey, CohomologyTable> table_;
  std::deque<CacheKey> order_;
};

CohomologyCache& cache() {
  static CohomologyCache instance;
  return instance;
}

CacheKey key_of(const DivisorClass& d) {
  return {static_cast<int>(d.base().kind()), d.base().e(), d.alpha(), d.beta()};
}

}  // namespace

CohomologyTable cohomology(const DivisorClass& d) {
  const CacheKey key = key_of(d);
  if (auto hit = cache().find(key)) return *hit;
  CohomologyTable t = compute(d);
  cache().insert(key, t);
  return t;
}

DivisorClass serre_dual(const DivisorClass& d) { return canonical_class(d.base()) - d; }

Integer h0_lattice_oracle(const DivisorClass& d) {
  Integer count = 0;
  if (d.base().is_plane()) {
    // lattice points of the simplex {i, j >= 0, i + j <= d}
    for (Integer i = 0; i <= d.degree(); ++i)
      for (Integer j = 0; i + j <= d.degree(); ++j) ++count;
    return count;
  }
  // lattice points of {0 <= k <= alpha, 0 <= j <= beta - k*e}
  const Integer& e = d.base().e();
  for (Integer k = 0; k <= d.alpha(); ++k)
    for (Integer j = 0; j <= d.beta() - k * e; ++j) ++count;
  return count;
}

Integer riemann_roch_chi(const DivisorClass& d) {
  const Integer twice = intersect(d, d - canonical_class(d.base()));
  return 1 + twice / 2;
}

std::vector<Integer> pushforward_twists(const DivisorClass& d) {
  std::vector<Integer> twists;
  if (d.base().is_plane()) return twists;
  for (Integer k = 0; k <= d.alpha(); ++k) twists.push_back(d.beta() - k * d.base().e());
  return twists;
}

void clear_cohomology_cache() { cache().clear(); }

std::size_t cohomology_cache_size() { return cache().size(); }

}  // namespace dcover
