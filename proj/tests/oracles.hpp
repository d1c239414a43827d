#pragma once

// Naive reference computations used to cross-check the library.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

/// Product in GF(2^m) by shift-and-add with reduction by `modulus`.
int gf_mul(int a, int b, int modulus, int m);

/// Number of blocks through each unordered point pair, keyed by pair.
std::map<std::pair<int, int>, int> pair_counts(int v, const Matrix& blocks);
std::set<int> lambda_values(int v, const Matrix& blocks);
std::set<int> intersection_numbers(const Matrix& blocks);

/// counts[w] over all p^k messages, computed by direct encoding.
std::vector<std::uint64_t> weight_distribution(const Matrix& rows, int p, int n);

/// Min distance as the smallest distance between two distinct codewords.
int pairwise_min_distance(const Matrix& rows, int n);

/// True when every line ax + by = c of AG(2,q) meets `points` (index x*q + y)
/// in 0 or `degree` points.
bool is_maximal_arc(int q, int modulus, int m, const std::vector<int>& points, int degree);

/// The 28 vectors x of GF(2)^6 with x1x2 + x3x4 + x5x6 = 1, ascending, as the
/// columns of a 6 x 28 matrix.
Matrix quadric_generator();

/// Random binary code of the given length whose basis is pairwise orthogonal:
/// a random column permutation and row mixing of a direct sum of small
/// self-orthogonal blocks. `doubly_even` picks blocks with weights 0 mod 4.
Matrix random_self_orthogonal(std::mt19937_64& rng, int n, bool doubly_even);

/// Random k x n 0/1 matrix.
Matrix random_binary(std::mt19937_64& rng, int k, int n);

}  // namespace oracle
