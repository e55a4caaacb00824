#pragma once

#include <cstdint>
#include <vector>

#include "realcert/interlace.hpp"
#include "realcert/matrix.hpp"
#include "realcert/multipoly.hpp"

namespace realcert {

// Deterministic 64-bit generator (splitmix64). All randomized searches go
// through this so that a seed pins every verdict and witness bit-for-bit,
// independent of the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational next_rational(long max_num, long max_den) {
        long d = next_int(1, max_den);
        long n = next_int(-max_num, max_num);
        return rat(n, d);
    }

    // Derive an independent stream (for per-task determinism).
    Rng fork(std::uint64_t salt) {
        return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x1234567887654321ULL));
    }

private:
    std::uint64_t state_;
};

std::vector<Rational> random_point(Rng& rng, int n, long height = 9);
std::vector<Rational> random_nonzero_point(Rng& rng, int n, long height = 9);

SymMatrix random_symmetric(Rng& rng, int n, long height = 5);
QMat random_invertible(Rng& rng, int n, long height = 5);

// Rational orthogonal matrix from the Cayley transform of a random skew
// matrix; always defined since skew matrices have no eigenvalue -1.
QMat random_orthogonal(Rng& rng, int n, long height = 3);

// Monic polynomial of given degree with small rational coefficients.
UniPoly random_monic(Rng& rng, int degree, long height = 9);

// Product of (t - r_i) over distinct random rationals: real-rooted by
// construction with known distinct-root count.
UniPoly random_real_rooted_monic(Rng& rng, int degree, long height = 9);

// Strictly interlacing pair of degree-n binary forms built from 2n sorted
// distinct rational roots (odd-indexed vs even-indexed).
RationalMapP1 random_interlacing_map(Rng& rng, int degree, long height = 19);

// Commuting symmetric matrices of linear forms in z_0..z_d:
// T_i = z_i * I - sum_{j in {0, c+1..d}} z_j * Q D_{ij} Q^T  (i = 1..c).
// Shared Q keeps all coefficient matrices simultaneously diagonalizable.
std::vector<Mat<MultiPoly>> random_commuting_symmetric_system(Rng& rng, int n, int c, int d,
                                                              long height = 3);

}  // namespace realcert
