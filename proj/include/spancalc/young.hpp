#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace spancalc {

// Weakly decreasing positive parts; the empty vector is the partition of 0.
// Lists of partitions are always in descending lexicographic order.
using Partition = std::vector<int>;

// Multiplicities keyed by partition, iterated in descending lexicographic
// order to match partitions_of.
using PartitionMap = std::map<Partition, long long, std::greater<Partition>>;

using IntMatrix = std::vector<std::vector<long long>>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
std::string partition_str(const Partition& p);  // "(3,1)", "()" for empty
bool partition_contains(const Partition& outer, const Partition& inner);
Partition conjugate_partition(const Partition& p);

std::vector<Partition> partitions_of(int n);
// Position of p within partitions_of(|p|).
int partition_index(const Partition& p);

// Single-box removals / additions, descending lexicographic.
std::vector<Partition> branch_down(const Partition& p);
std::vector<Partition> branch_up(const Partition& p);

// Saturated chains mu -> lambda in Young's lattice; 0 unless mu is contained
// in lambda.
long long path_count(const Partition& mu, const Partition& lambda);

// Conjugacy class sizes of S_k, indexed like partitions_of(k).
std::vector<long long> class_sizes(int k);
long long factorial(int n);

// 1-based labels of adjacent transpositions s_w whose product (in either
// order) has the given cycle type.
std::vector<int> adjacent_word_for_class(const Partition& cls);

// Character of the skew Specht module S^{lambda/mu} at the given class, by
// border-strip peeling (memoized).  mu = {} gives the irreducible character.
// Throws if |lambda| - |mu| != |cls| or mu is not contained in lambda.
long long mn_character(const Partition& lambda, const Partition& mu,
                       const Partition& cls);
long long mn_character(const Partition& lambda, const Partition& cls);

// A class function of S_k: values on partitions_of(k), in that order.
struct CharacterVector {
  int degree = 0;
  std::vector<long long> values;
};

CharacterVector irreducible_character(const Partition& lambda);
CharacterVector skew_character(const Partition& lambda, const Partition& mu);
long long character_dim(const CharacterVector& chi);

// Multiplicity of every irreducible; throws "not a genuine character" if
// some inner product is negative or non-integral.
PartitionMap decompose_character(const CharacterVector& chi);

enum class StripKind { Horizontal, Vertical };

// Is outer/inner a horizontal (no two boxes in a column) or vertical strip?
bool is_strip(const Partition& outer, const Partition& inner, StripKind kind);
// All lambda with |lambda/mu| = k and lambda/mu a strip of the given kind.
std::vector<Partition> pieri_strips(const Partition& mu, int k,
                                    StripKind kind);

// Multiplicities of each mu |- n in lambda tensor C^n (the permutation
// representation; its character counts fixed points).
PartitionMap tensor_with_permutation_rep(const Partition& lambda);

// Rows of a tableau of shape lambda, entries 1..n.
using Tableau = std::vector<std::vector<int>>;

// Integer matrices of the adjacent transpositions s_1..s_{n-1} on the
// standard-polytabloid basis of the Specht module S^lambda.
struct SpechtGenerators {
  Partition lambda;
  std::vector<Tableau> basis;       // standard tableaux, deterministic order
  std::vector<IntMatrix> matrices;  // matrices[i] is the action of s_{i+1}
};

// Throws beyond the size bound; the linear algebra is exact.
SpechtGenerators specht_generators(const Partition& lambda,
                                   int max_size = 6);

}  // namespace spancalc
