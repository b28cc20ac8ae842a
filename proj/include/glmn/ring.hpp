#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glmn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Elements from rings with different (m, n) were mixed.
struct DimensionError : Error {
    using Error::Error;
};

/// Scalars or elements of different characteristic were mixed.
struct CharacteristicError : Error {
    using Error::Error;
};

/// A row or column index fell outside the block it must lie in.
struct IndexError : Error {
    using Error::Error;
};

/// invert_even_unit was handed an element that is not a unit.
struct NotAUnitError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

/// The four blocks of the generic (m+n) x (m+n) matrix. Variables in the
/// off-diagonal blocks I12 and I21 are odd, the rest are even.
enum class Block : std::uint8_t { I11, I12, I21, I22 };

inline const char* block_name(Block b) {
    switch (b) {
        case Block::I11: return "I11";
        case Block::I12: return "I12";
        case Block::I21: return "I21";
        case Block::I22: return "I22";
    }
    return "?";
}

/// Coordinate ring parameters: the superdimension (m|n) and the coefficient
/// characteristic (0 for the rationals, otherwise a prime).
struct RingSpec {
    int m = 1;
    int n = 1;
    unsigned characteristic = 0;

    RingSpec() = default;
    RingSpec(int m_, int n_, unsigned p = 0) : m(m_), n(n_), characteristic(p) {
        if (m < 1 || n < 1) throw DimensionError("RingSpec requires m, n >= 1");
    }

    int dim() const { return m + n; }

    bool operator==(const RingSpec&) const = default;

    Block block(int i, int j) const {
        check_index(i, j);
        if (i <= m) return j <= m ? Block::I11 : Block::I12;
        return j <= m ? Block::I21 : Block::I22;
    }

    bool odd(int i, int j) const {
        Block b = block(i, j);
        return b == Block::I12 || b == Block::I21;
    }

    void check_index(int i, int j) const {
        if (i < 1 || j < 1 || i > dim() || j > dim())
            throw IndexError("variable index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside 1.." + std::to_string(dim()));
    }

    std::string str() const {
        std::string s = "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
        if (characteristic) s += " char " + std::to_string(characteristic);
        return s;
    }
};

/// Packed variable identifier. Row and column are 1-based and fit in 5 bits
/// each, so plain numeric order on the code is row-major order. For odd
/// variables row-major code order coincides with the canonical odd order
/// (all of I12 precedes all of I21, row-major within each block).
using VarCode = std::uint16_t;

inline VarCode var_code(int i, int j) { return static_cast<VarCode>((i << 5) | j); }
inline int var_row(VarCode c) { return c >> 5; }
inline int var_col(VarCode c) { return c & 31; }

inline std::string var_str(VarCode c) {
    return "x[" + std::to_string(var_row(c)) + "," + std::to_string(var_col(c)) + "]";
}

}  // namespace glmn
