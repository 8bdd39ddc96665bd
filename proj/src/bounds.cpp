#include "rx3/bounds.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "rx3/errors.hpp"

namespace rx3 {

void BoundParams::validate() const {
  if (r < 3 || s < 3 || l < 5) {
    throw InputError("bound parameters need r >= 3, s >= 3, l >= 5 (got r=" + std::to_string(r) +
                     ", s=" + std::to_string(s) + ", l=" + std::to_string(l) + ")");
  }
}

namespace {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// alpha0 arguments feed back into ramsey_upper as the second parameter, and
// they explode past any int after two steps. This overload takes the big one.
BigInt ramsey_upper_big(int a, const BigInt& b) {
  // binomial(a+b-2, a-1) with b huge: product form over the small index.
  const BigInt n = BigInt(a) + b - 2;
  BigInt result = 1;
  for (int i = 1; i <= a - 1; ++i) {
    result *= n - (a - 1) + i;
    result /= i;
  }
  return result;
}

class Alpha0Table {
 public:
  BigInt get(int r, int s, int i) {
    const auto key = std::make_tuple(r, s, i);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    BigInt value = i == 1 ? BigInt(r) : (r - 2) * ramsey_upper_big(s * (2 * r - 3), get(r, s, i - 1));
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int>, BigInt> table_;
};

Alpha0Table& alpha0_table() {
  static Alpha0Table table;
  return table;
}

}  // namespace

BigInt ramsey_upper(int a, int b) {
  if (a < 1 || b < 1) throw InputError("Ramsey arguments must be positive");
  return binomial(static_cast<long long>(a) + b - 2, a - 1);
}

BigInt alpha0_bound(int r, int s, int i) {
  if (r < 3 || s < 3 || i < 1) throw InputError("alpha0 needs r >= 3, s >= 3, i >= 1");
  return alpha0_table().get(r, s, i);
}

BigInt ramsey_layer_sum(const BoundParams& p) {
  p.validate();
  BigInt sum = 0;
  for (int i = 2; i <= p.l - 2; ++i)
    sum += ramsey_upper_big(p.s * (2 * p.r - 3), alpha0_bound(p.r, p.s, i - 1));
  return sum;
}

BigInt steiner_rainbow_constant(const BoundParams& p) {
  return (p.r - 2) * (ramsey_layer_sum(p) + 1) + 2 * (p.l - 1);
}

BigInt steiner_rainbow_intermediate(const BoundParams& p) {
  return p.r + (p.r - 2) * ramsey_layer_sum(p) + 2 * (p.l - 2);
}

}  // namespace rx3
