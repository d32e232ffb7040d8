#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace idemgen::counting {

//! Exact arbitrary-precision integer used by every counting routine.
using BigCount = boost::multiprecision::cpp_int;

BigCount binomial(std::size_t n, std::size_t k);  // 0 when k > n
BigCount factorial(std::size_t n);
//! total! / (parts[0]! * parts[1]! * ...); parts must sum to total.
BigCount multinomial(std::size_t total, const std::vector<std::size_t>& parts);
BigCount ipow(const BigCount& base, std::size_t exp);  // 0^0 == 1

//! Visit every way of writing `total` as an ordered sum of `parts`
//! non-negative integers, lexicographically. C(total+parts-1, parts-1) calls.
void for_each_composition(
    std::size_t total, std::size_t parts,
    const std::function<void(const std::vector<std::size_t>&)>& fn);
BigCount composition_count(std::size_t total, std::size_t parts);

//! Idempotents of rank k among maps of degree n: C(n,k) * k^(n-k).
BigCount idempotent_count_by_rank(std::size_t n, std::size_t k);
//! All idempotents among maps of degree n (1 at n == 0, the empty map).
BigCount idempotent_count(std::size_t n);

//! Idempotents of the block-respecting monoid (m blocks of size n):
//! closed-form sum over base-image data. Independent of the recurrence.
BigCount partition_idempotent_count_direct(std::size_t m, std::size_t n);
//! Same count by recurrence over the number of base-image blocks.
BigCount partition_idempotent_count(std::size_t m, std::size_t n);

//! Order of the subsemigroup generated by the non-identity idempotents
//! of the block-respecting monoid: (n^n - n! + 1)^m + n^(m n) (m^m - m!).
BigCount idempotent_generated_size(std::size_t m, std::size_t n);

//! Rank of the idempotent-generated part of the degree-n full
//! transformation monoid: 0, 0, 2, C(n,2), ... (n = 0, 1, 2, >= 3).
BigCount rank_singular(std::size_t n);

//! Rank (= idempotent rank) of the idempotent-generated subsemigroup:
//! m * rank_singular(n) + n! * C(m,2), with the true value 2 at (2,1).
BigCount idempotent_generated_rank(std::size_t m, std::size_t n);

//! Strongly connected tournaments on n labelled vertices.
BigCount sc_tournament_count(std::size_t n);
//! Strongly connected complete digraphs on n labelled vertices with
//! exactly k double edges.
BigCount sc_complete_digraph_count(std::size_t n, std::size_t k);
//! All strongly connected complete digraphs on n labelled vertices.
BigCount sc_complete_digraph_total(std::size_t n);

//! Number of minimal idempotent generating sets of the idempotent-generated
//! subsemigroup for m blocks of size n.
BigCount min_genset_count(std::size_t m, std::size_t n);

//! Number of idempotent generating sets (all sizes) of the
//! idempotent-generated part of the degree-n full transformation monoid.
//! Monoid sense by default; the semigroup sense is exactly half.
BigCount idempotent_genset_count(std::size_t n, bool semigroup = false);

//! Domain on which the structural formulas above are derived (m, n >= 2).
//! Outside it the functions still return the true desk-checked values.
inline bool in_structural_domain(std::size_t m, std::size_t n) {
  return m >= 2 && n >= 2;
}

}  // namespace idemgen::counting
