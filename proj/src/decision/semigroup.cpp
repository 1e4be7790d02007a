#include "kfin/decision.hpp"

#include <algorithm>
#include <set>

#include "kfin/errors.hpp"

namespace kfin {

SemigroupReport value_semigroup(const FormSpace& l, const ProjPoint& q, int k_max) {
  if (k_max < 1) throw InvalidInput("value_semigroup: k_max must be positive");
  SemigroupReport rep;
  const long d = l.degree();
  rep.degree = static_cast<int>(d);
  rep.k_max = k_max;
  PowerTower tower(l);
  std::vector<std::set<long>> lambda(static_cast<std::size_t>(k_max) + 1);
  int last_new = 0;
  for (int k = 1; k <= k_max; ++k) {
    const FormSpace& lk = tower.power(k);
    auto orders = orders_at(lk, q);
    rep.orders.push_back(orders);
    lambda[static_cast<std::size_t>(k)].insert(orders.begin(), orders.end());
    if (!rep.kf_witness && std::find(orders.begin(), orders.end(), d * k) != orders.end()) rep.kf_witness = k;
    for (long m : orders) {
      bool decomposable = false;
      for (int i = 1; i <= k / 2 && !decomposable; ++i) {
        const auto& left = lambda[static_cast<std::size_t>(i)];
        const auto& right = lambda[static_cast<std::size_t>(k - i)];
        for (long m1 : left) {
          if (right.count(m - m1)) {
            decomposable = true;
            break;
          }
        }
      }
      if (!decomposable) {
        rep.generators.emplace_back(d * k, m);
        last_new = k;
      }
    }
  }
  rep.truncated = !(rep.kf_witness && last_new < k_max);
  // Rank of the lattice spanned by the pairs: 2 as soon as two pairs have
  // different slopes m / (dk).
  if (!rep.generators.empty()) {
    rep.group_rank = 1;
    const auto [k0, m0] = rep.generators.front();
    for (const auto& [k1, m1] : rep.generators) {
      if (k0 * m1 != k1 * m0) {
        rep.group_rank = 2;
        break;
      }
    }
  }
  return rep;
}

}  // namespace kfin
