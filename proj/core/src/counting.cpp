#include "idemgen/counting.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace idemgen::counting {

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigCount result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigCount factorial(std::size_t n) {
  BigCount result = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigCount multinomial(std::size_t total, const std::vector<std::size_t>& parts) {
  std::size_t sum = 0;
  BigCount denom = 1;
  for (std::size_t p : parts) {
    sum += p;
    denom *= factorial(p);
  }
  if (sum != total) {
    throw std::invalid_argument("multinomial parts must sum to total");
  }
  return factorial(total) / denom;
}

BigCount ipow(const BigCount& base, std::size_t exp) {
  BigCount result = 1;
  BigCount b = base;
  while (exp > 0) {
    if (exp & 1) {
      result *= b;
    }
    exp >>= 1;
    if (exp > 0) {
      b *= b;
    }
  }
  return result;
}

namespace {

void compositions_rec(std::size_t remaining, std::size_t index,
                      std::vector<std::size_t>& current,
                      const std::function<void(const std::vector<std::size_t>&)>&
                          fn) {
  if (index + 1 == current.size()) {
    current[index] = remaining;
    fn(current);
    return;
  }
  for (std::size_t v = 0; v <= remaining; ++v) {
    current[index] = v;
    compositions_rec(remaining - v, index + 1, current, fn);
  }
}

}  // namespace

void for_each_composition(
    std::size_t total, std::size_t parts,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (parts == 0) {
    if (total == 0) {
      fn({});
    }
    return;
  }
  std::vector<std::size_t> current(parts, 0);
  compositions_rec(total, 0, current, fn);
}

BigCount composition_count(std::size_t total, std::size_t parts) {
  if (parts == 0) {
    return total == 0 ? 1 : 0;
  }
  return binomial(total + parts - 1, parts - 1);
}

BigCount idempotent_count_by_rank(std::size_t n, std::size_t k) {
  if (k > n || (n > 0 && k == 0)) {
    return 0;
  }
  return binomial(n, k) * ipow(k, n - k);
}

BigCount idempotent_count(std::size_t n) {
  if (n == 0) {
    return 1;  // the empty map
  }
  BigCount total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    total += idempotent_count_by_rank(n, k);
  }
  return total;
}

BigCount partition_idempotent_count_direct(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) {
    return 1;  // only the empty map
  }
  // Group the idempotents by the set of k base-fixed blocks and by how many
  // of the remaining blocks land on each of them (an ordered split of m - k);
  // each base-fixed block with a extra blocks attached contributes a choice
  // of a rank-l idempotent footprint fed by (a+1)n - l free points.
  BigCount total = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    for_each_composition(m - k, k, [&](const std::vector<std::size_t>& a) {
      std::vector<std::size_t> parts;
      parts.reserve(k + 1);
      parts.push_back(k);
      parts.insert(parts.end(), a.begin(), a.end());
      const BigCount coeff = multinomial(m, parts);

      BigCount tuple_sum = 0;
      std::vector<std::size_t> l(k, 1);
      while (true) {
        BigCount prod = 1;
        for (std::size_t i = 0; i < k; ++i) {
          prod *= binomial(n, l[i]) * ipow(l[i], (a[i] + 1) * n - l[i]);
        }
        tuple_sum += prod;
        std::size_t pos = k;
        bool done = true;
        while (pos > 0) {
          --pos;
          if (l[pos] < n) {
            ++l[pos];
            for (std::size_t rest = pos + 1; rest < k; ++rest) {
              l[rest] = 1;
            }
            done = false;
            break;
          }
        }
        if (done) {
          break;
        }
      }
      total += coeff * tuple_sum;
    });
  }
  return total;
}

BigCount partition_idempotent_count(std::size_t m, std::size_t n) {
  if (n == 0) {
    return 1;  // only the empty map
  }
  // Condition on the k blocks grouped with the lexicographically first one:
  // e(m) = sum_k C(m-1, k-1) * k * e(m-k) * sum_l C(n,l) l^(k n - l).
  std::vector<BigCount> e(m + 1);
  e[0] = 1;
  std::vector<BigCount> cluster(m + 1);  // index k: sum over footprints
  for (std::size_t k = 1; k <= m; ++k) {
    BigCount s = 0;
    for (std::size_t l = 1; l <= n; ++l) {
      s += binomial(n, l) * ipow(l, k * n - l);
    }
    cluster[k] = s;
  }
  for (std::size_t t = 1; t <= m; ++t) {
    BigCount s = 0;
    for (std::size_t k = 1; k <= t; ++k) {
      s += binomial(t - 1, k - 1) * k * e[t - k] * cluster[k];
    }
    e[t] = s;
  }
  return e[m];
}

BigCount idempotent_generated_size(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) {
    return 1;
  }
  const BigCount local = ipow(n, n) - factorial(n) + 1;
  return ipow(local, m) + ipow(n, m * n) * (ipow(m, m) - factorial(m));
}

BigCount rank_singular(std::size_t n) {
  if (n <= 1) {
    return 0;
  }
  if (n == 2) {
    return 2;
  }
  return binomial(n, 2);
}

BigCount idempotent_generated_rank(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) {
    return 0;
  }
  if (m == 2 && n == 1) {
    return 2;  // rank of the 2-block unit-size case, above its formula value
  }
  return m * rank_singular(n) + factorial(n) * binomial(m, 2);
}

namespace {

// Shared memo for the strongly-connected complete digraph counts.
class ScCountTable {
 public:
  // Number with exactly k double edges on n labelled vertices.
  BigCount at(std::size_t n, std::size_t k) {
    std::scoped_lock lock(mutex_);
    grow(n);
    const auto& row = rows_[n];
    return k < row.size() ? row[k] : 0;
  }

  BigCount row_total(std::size_t n) {
    std::scoped_lock lock(mutex_);
    grow(n);
    BigCount total = 0;
    for (const BigCount& v : rows_[n]) {
      total += v;
    }
    return total;
  }

 private:
  static std::size_t pairs(std::size_t n) { return n * (n - 1) / 2; }

  // Complete digraphs with k double edges: choose the doubled pairs, then
  // orient the rest.
  static BigCount free_count(std::size_t n, std::size_t k) {
    if (k > pairs(n)) {
      return 0;
    }
    return binomial(pairs(n), k) * ipow(2, pairs(n) - k);
  }

  void grow(std::size_t n) {
    while (rows_.size() <= n) {
      const std::size_t t = rows_.size();
      std::vector<BigCount> row(pairs(t) + 1);
      for (std::size_t k = 0; k < row.size(); ++k) {
        // Subtract the graphs whose source component is proper: pick its
        // vertex set and its own double-edge load, the rest unconstrained.
        BigCount v = free_count(t, k);
        for (std::size_t s = 1; s < t; ++s) {
          BigCount inner = 0;
          for (std::size_t l = 0; l <= k; ++l) {
            const auto& prev = rows_[s];
            if (l < prev.size()) {
              inner += prev[l] * free_count(t - s, k - l);
            }
          }
          v -= binomial(t, s) * inner;
        }
        row[k] = v;
      }
      rows_.push_back(std::move(row));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<BigCount>> rows_;
};

ScCountTable& sc_table() {
  static ScCountTable table;
  return table;
}

}  // namespace

BigCount sc_tournament_count(std::size_t n) {
  // Independent of the two-index table: condition on the source component.
  std::vector<BigCount> w(n + 1);
  w[0] = 1;
  for (std::size_t t = 1; t <= n; ++t) {
    BigCount v = ipow(2, t * (t - 1) / 2);
    for (std::size_t s = 1; s < t; ++s) {
      v -= binomial(t, s) * w[s] * ipow(2, (t - s) * (t - s - 1) / 2);
    }
    w[t] = v;
  }
  return w[n];
}

BigCount sc_complete_digraph_count(std::size_t n, std::size_t k) {
  return sc_table().at(n, k);
}

BigCount sc_complete_digraph_total(std::size_t n) {
  return sc_table().row_total(n);
}

BigCount min_genset_count(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) {
    return 1;  // the empty set generates the trivial monoid
  }
  if (m == 2 && n == 1) {
    return 1;  // unique minimal set; the closed form has a zero here
  }
  const BigCount sigma = n <= 2 ? 1 : sc_tournament_count(n);
  const BigCount split_choices = ipow(2, factorial(n).convert_to<std::size_t>()) - 2;
  BigCount total = 0;
  const std::size_t top = m * (m - 1) / 2;
  for (std::size_t k = 0; k <= top; ++k) {
    total += sc_complete_digraph_count(m, k) * ipow(split_choices, k);
  }
  return ipow(sigma, m) * total;
}

BigCount idempotent_genset_count(std::size_t n, bool semigroup) {
  BigCount lower_layers = 0;  // idempotents of rank at most n - 2
  for (std::size_t l = 1; l + 2 <= n; ++l) {
    lower_layers += idempotent_count_by_rank(n, l);
  }
  const BigCount monoid =
      sc_complete_digraph_total(n) *
      ipow(2, (1 + lower_layers).convert_to<std::size_t>());
  return semigroup ? monoid / 2 : monoid;
}

}  // namespace idemgen::counting
