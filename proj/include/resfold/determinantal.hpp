#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "resfold/matrix.hpp"

namespace resfold {

class NotAlternating : public Error {
 public:
  NotAlternating() : Error("matrix is not alternating on the chosen rows") {}
};

/// Strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

Poly determinant(const PolyMatrix& m);
/// Minor on the given rows and columns.
Poly minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Calls f(rows, cols, minor) for every k x k minor, ordered
/// lexicographically by (rows, cols). Stops when f returns false.
void for_each_minor(const PolyMatrix& m, int k,
                    const std::function<bool(const std::vector<int>&, const std::vector<int>&, const Poly&)>& f);

/// Nonzero k x k minors in lexicographic order; I_0 = {1}.
std::vector<Poly> minors_ideal(const PolyMatrix& m, int k);

/// Pfaffian of the principal submatrix on `rows` (sorted, even size).
Poly pfaffian(const PolyMatrix& m, const std::vector<int>& rows);
Poly pfaffian(const PolyMatrix& m);

PolyMatrix adjugate(const PolyMatrix& m);

/// Rank over the fraction field by random specialization, best of 3.
int generic_rank(const PolyMatrix& m, std::uint64_t seed = 1);

/// Matrix of k x k minors; rows and columns indexed by combinations().
PolyMatrix exterior_power(const PolyMatrix& m, int k);

/// Random point with coordinates in {-1000..1000}\{0} over QQ, nonzero over F_p.
std::vector<Scalar> random_point(const PolyRing& ring, std::mt19937_64& rng);

}  // namespace resfold
