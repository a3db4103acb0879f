#ifndef QHOLO_SPIN_HPP
#define QHOLO_SPIN_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "qholo/rng.hpp"

namespace qholo {

/// Symmetric matrix of commutation signs: sign(i,j) in {-1,+1},
/// sign(i,j) == sign(j,i), and -1 on the diagonal (which forces the
/// generators to square to 1 and keeps the algebra finite dimensional).
class SpinMatrix {
  public:
    static constexpr int kMaxGenerators = 64;

    SpinMatrix(int size, std::vector<int8_t> entries) : size_(size), s_(std::move(entries)) {
        if (size < 0 || size > kMaxGenerators) throw std::invalid_argument("SpinMatrix: size out of range");
        if (s_.size() != static_cast<size_t>(size) * size) throw std::invalid_argument("SpinMatrix: bad entry count");
        for (int i = 0; i < size; ++i) {
            if (s_[idx(i, i)] != -1) throw std::invalid_argument("SpinMatrix: diagonal must be -1");
            for (int j = 0; j < i; ++j) {
                int8_t e = s_[idx(i, j)];
                if (e != 1 && e != -1) throw std::invalid_argument("SpinMatrix: entries must be +-1");
                if (e != s_[idx(j, i)]) throw std::invalid_argument("SpinMatrix: must be symmetric");
            }
        }
    }

    /// All off-diagonal entries equal to `off`.  off = -1 gives the Clifford
    /// algebra; off = +1 the commuting (toy Fock) case.
    static SpinMatrix constant(int size, int off) {
        std::vector<int8_t> e(static_cast<size_t>(size) * size, static_cast<int8_t>(off));
        for (int i = 0; i < size; ++i) e[static_cast<size_t>(i) * size + i] = -1;
        return SpinMatrix(size, std::move(e));
    }

    /// Independent off-diagonal signs with P(+1) = prob_plus.
    static SpinMatrix random(int size, double prob_plus, Rng& rng) {
        std::vector<int8_t> e(static_cast<size_t>(size) * size, int8_t{-1});
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) {
                int8_t s = static_cast<int8_t>(rng.sign(prob_plus));
                e[static_cast<size_t>(i) * size + j] = s;
                e[static_cast<size_t>(j) * size + i] = s;
            }
        return SpinMatrix(size, std::move(e));
    }

    int size() const { return size_; }
    int sign(int i, int j) const { return s_[idx(i, j)]; }

    friend bool operator==(const SpinMatrix& a, const SpinMatrix& b) {
        return a.size_ == b.size_ && a.s_ == b.s_;
    }

  private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * size_ + j; }
    int size_;
    std::vector<int8_t> s_;  // row-major, +-1
};

using SpinRef = std::shared_ptr<const SpinMatrix>;

inline SpinRef make_spin(SpinMatrix m) { return std::make_shared<const SpinMatrix>(std::move(m)); }

/// A strictly increasing multi-index over at most 64 generators, stored as a
/// bitmask.  Bit i set means generator i occurs.  The empty mask is the
/// identity basis element.
using Mask = std::uint64_t;

inline Mask mask_of(std::initializer_list<int> gens) {
    Mask m = 0;
    for (int g : gens) m |= Mask{1} << g;
    return m;
}

inline std::vector<int> mask_indices(Mask m) {
    std::vector<int> v;
    while (m) {
        int g = std::countr_zero(m);
        v.push_back(g);
        m &= m - 1;
    }
    return v;
}

inline Mask mask_below(int g) { return (Mask{1} << g) - 1; }

inline Mask mask_above(int g) { return g >= 63 ? Mask{0} : ~Mask{0} << (g + 1); }

/// x_A * x_B = sign * x_{A xor B}.  The sign is obtained by normal-ordering
/// the concatenated word with adjacent transpositions: each swap of distinct
/// generators u,v contributes sign(u,v), each equal adjacent pair deletes
/// to 1 (x_i^2 = 1).
inline std::pair<int, Mask> basis_product(Mask a, Mask b, const SpinMatrix& spin) {
    int sign = 1;
    Mask cur = a;
    Mask rest = b;
    while (rest) {
        int g = std::countr_zero(rest);
        rest &= rest - 1;
        Mask passed = cur & mask_above(g);
        while (passed) {
            int u = std::countr_zero(passed);
            passed &= passed - 1;
            sign *= spin.sign(u, g);
        }
        cur ^= Mask{1} << g;
    }
    return {sign, cur};
}

/// Sign s with x_A^* = s * x_A: the cost of reversing the word, i.e. the
/// product of sign(i_s, i_t) over all pairs s < t in A.
inline int reversal_sign(Mask a, const SpinMatrix& spin) {
    int sign = 1;
    Mask rest = a;
    while (rest) {
        int g = std::countr_zero(rest);
        rest &= rest - 1;
        Mask later = rest;
        while (later) {
            int h = std::countr_zero(later);
            later &= later - 1;
            sign *= spin.sign(g, h);
        }
    }
    return sign;
}

}  // namespace qholo

#endif
