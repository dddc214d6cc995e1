#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "motivecalc/motive.hpp"
#include "motivecalc/rational.hpp"

namespace motivecalc {

enum class Parity : std::uint8_t { Odd, Even };

inline Parity parity_of_degree(long d) {
    return (d % 2 == 0) ? Parity::Even : Parity::Odd;
}

// Normalized rank-2 parabolic weight: alpha_{i,1} = 0, alpha_i = alpha_{i,2},
// strictly inside the open hypercube (0,1)^N.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
        for (const auto& a : alpha_)
            if (a <= 0 || a >= 1)
                throw std::invalid_argument(
                    "weight coordinates must lie strictly in (0,1)");
    }

    long size() const { return static_cast<long>(alpha_.size()); }
    const Rational& operator[](long i) const { return alpha_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coords() const { return alpha_; }

    friend bool operator==(const Weight&, const Weight&) = default;

    std::string to_string() const;

private:
    std::vector<Rational> alpha_;
};

// The hyperplane W_{s,I}. For odd parity: 2s+1 = sum_{i in I} a_i - sum_{i not
// in I} a_i, enumerated with 2s+1 < N, |I| > 2s+1 (even parity analogously
// with 2s). I is a bitmask over marked points 0..N-1.
struct Wall {
    long s = 0;
    std::uint32_t I = 0;
    Parity parity = Parity::Odd;

    long level() const { return parity == Parity::Odd ? 2 * s + 1 : 2 * s; }
    int card() const { return __builtin_popcount(I); }
    std::vector<int> members(long N) const;  // 1-based point indices

    friend auto operator<=>(const Wall&, const Wall&) = default;
    std::string to_string(long N) const;
};

struct NotGenericError : std::runtime_error {
    NotGenericError(const Wall& w, long N)
        : std::runtime_error("weight lies on wall " + w.to_string(N)), wall(w) {}
    Wall wall;
};

struct DegeneratePathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flip data across one wall: fibre dimensions over the centre on the H^- and
// H^+ sides, and the centre motive itself (Jac^2, or Jac with fixed
// determinant).
struct FlipData {
    long n_minus = 0;
    long n_plus = 0;
    MotiveExpr center;
    bool is_flop = false;
    bool small_genus_warning = false;  // g < 2 can push a fibre dimension below 1
};

struct ChamberSignature {
    std::vector<int> signs;  // +1/-1 per enumerated wall, in enumeration order
    friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

enum class ChamberClass : std::uint8_t { Minimal, Maximal, Intermediate };

enum class CrossingDirection : std::uint8_t { PlusToMinus, MinusToPlus };

struct Crossing {
    Rational t;  // position on the segment, in (0,1)
    Wall wall;
    CrossingDirection direction;
};

// Coordinate flips at an even-size point set followed by a permutation; the
// symmetries of the arrangement generated by Hecke involutions and S_N.
struct WeightSymmetry {
    std::uint32_t flips = 0;      // bitmask, even popcount
    std::vector<int> perm;        // perm[i] = image of point i (0-based)

    Weight apply(const Weight& a) const;
    Wall apply(const Wall& w, long N) const;
};

// All walls for the given parity, ordered by (s, I as bitmask).
std::vector<Wall> enumerate_walls(long N, Parity parity);

// level + sum_{i not in I} a_i - sum_{i in I} a_i; positive means a in H^+
// (the subbundle invariant has larger slope there). The origin limit is in
// H^+ for every odd-parity wall.
Rational wall_eval(const Wall& w, const Weight& alpha);

bool is_generic(const Weight& alpha, long N, Parity parity);

// Sign vector over the full arrangement; equal signatures mean same chamber.
ChamberSignature chamber_signature(const Weight& alpha, long N, Parity parity);

// n_- = g+|I|-2s-3, n_+ = g+N-|I|+2s-1 and the centre motive.
FlipData flip_type(const Wall& w, long g, long N, bool fixed_det = false);

// Parabolic Euler characteristic
//   -n_F d_E + n_E d_F + n_E n_F (1-g) - sum_i sum_{j>k} m_{i,j}(E) m_{i,k}(F)
// with multiplicity tables m[i][j] (any matching shapes).
long chi_par(long n_e, long d_e, const std::vector<std::vector<long>>& m_e,
             long n_f, long d_f, const std::vector<std::vector<long>>& m_f,
             long g);

// Hecke involution at points (i, i+1), 1-based i in 1..N-1.
Weight hecke_action(const Weight& alpha, int i);

// Coordinate permutation; the wall image is (s, sigma(I)).
Weight perm_action(const Weight& alpha, const std::vector<int>& sigma);
Wall perm_wall(const Wall& w, const std::vector<int>& sigma);

// Reduces an odd-parity wall to the standard representative W(l),
// 1 = -sum_{i<=l} a_i + sum_{i>l} a_i with 0 <= l <= N/2-1, and returns the
// witnessing symmetry. flip_type(W(l)) equals flip_type(w) up to swapping.
std::pair<long, WeightSymmetry> canonical_wall(const Wall& w, long N);

// W(l) as a Wall value.
Wall standard_wall(long l, long N);

// minimal: an even vertex of {0,1}^N lies in the chamber closure;
// maximal: the hypercube centre does. A chamber that is both (N = 2) reports
// minimal. Decided exactly: v is in the closure iff no wall strictly
// separates it from alpha.
ChamberClass classify_chamber(const Weight& alpha, long N, Parity parity = Parity::Odd);

// Wall crossings along the straight segment from alpha_from to alpha_to,
// ordered by the exact rational parameter t. Throws DegeneratePathError when
// two walls cross at the same t or a wall contains the segment.
std::vector<Crossing> segment_crossings(const Weight& alpha_from,
                                        const Weight& alpha_to, long N,
                                        Parity parity);

// Deterministic dyadic perturbation: adds sign_i / 2^{k+i} offsets derived
// from the seed, growing k until the result is generic.
Weight perturb(const Weight& alpha, long N, Parity parity, std::uint64_t seed);

// The reference start weight for wall-crossing paths: alpha_i = 1/2^{2+i},
// inside the minimal chamber whose closure contains the origin.
Weight near_origin_weight(long N);

std::string direction_to_string(CrossingDirection d);

}  // namespace motivecalc
